//! Output documents and text renderings.
//!
//! JSON documents keep a fixed field order (the struct order below) and
//! carry multiplicities as decimal strings, since they outgrow 64 bits;
//! parsing a document and re-serializing it reproduces the bytes exactly.

use arrspec_core::{Spectrum, VerificationReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub n: u32,
    pub k: u32,
    pub lines: Vec<LineDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineDoc {
    pub eigenvalue: i64,
    pub multiplicity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
}

impl SpectrumDoc {
    pub fn new(spectrum: &Spectrum, with_witnesses: bool) -> Self {
        SpectrumDoc {
            n: spectrum.n,
            k: spectrum.k,
            lines: spectrum
                .lines
                .iter()
                .map(|line| LineDoc {
                    eigenvalue: line.eigenvalue,
                    multiplicity: line.multiplicity.to_string(),
                    witnesses: with_witnesses.then(|| {
                        line.witnesses
                            .iter()
                            .map(|(lambda, mu)| WitnessDoc {
                                lambda: lambda.parts().to_vec(),
                                mu: mu.parts().to_vec(),
                            })
                            .collect()
                    }),
                })
                .collect(),
        }
    }
}

pub fn spectrum_json(spectrum: &Spectrum, with_witnesses: bool) -> String {
    serde_json::to_string(&SpectrumDoc::new(spectrum, with_witnesses))
        .expect("spectrum serialization cannot fail")
}

pub fn spectrum_csv(spectrum: &Spectrum) -> String {
    let mut out = String::from("eigenvalue,multiplicity\n");
    for line in &spectrum.lines {
        out.push_str(&format!("{},{}\n", line.eigenvalue, line.multiplicity));
    }
    out
}

pub fn spectrum_table(spectrum: &Spectrum, show_witnesses: bool) -> String {
    let degree = u64::from(spectrum.k) * u64::from(spectrum.n - spectrum.k);
    let mut out = format!(
        "A({},{}): {} vertices, degree {}\n",
        spectrum.n,
        spectrum.k,
        spectrum.vertex_count(),
        degree
    );
    let rows: Vec<(String, String, String)> = spectrum
        .lines
        .iter()
        .map(|line| {
            let witnesses = if show_witnesses {
                line.witnesses
                    .iter()
                    .map(|(lambda, mu)| format!("{lambda}\u{227a}{mu}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            } else {
                String::new()
            };
            (
                line.eigenvalue.to_string(),
                line.multiplicity.to_string(),
                witnesses,
            )
        })
        .collect();
    let e_width = width("eigenvalue", rows.iter().map(|r| r.0.len()));
    let m_width = width("multiplicity", rows.iter().map(|r| r.1.len()));
    if show_witnesses {
        out.push_str(&format!(
            "{:>e_width$}  {:>m_width$}  witnesses\n",
            "eigenvalue", "multiplicity"
        ));
    } else {
        out.push_str(&format!(
            "{:>e_width$}  {:>m_width$}\n",
            "eigenvalue", "multiplicity"
        ));
    }
    for (e, m, w) in &rows {
        if show_witnesses {
            out.push_str(&format!("{e:>e_width$}  {m:>m_width$}  {w}\n"));
        } else {
            out.push_str(&format!("{e:>e_width$}  {m:>m_width$}\n"));
        }
    }
    out
}

fn width(header: &str, cells: impl Iterator<Item = usize>) -> usize {
    cells.fold(header.len(), usize::max)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub n: u32,
    pub k: u32,
    pub vertex_count: u64,
    pub pass: bool,
    pub lines: Vec<VerifyLineDoc>,
    pub moments: Vec<MomentDoc>,
    pub unaccounted: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyLineDoc {
    pub eigenvalue: i64,
    pub predicted: String,
    pub oracle: String,
    pub method: String,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentDoc {
    pub power: u32,
    pub graph: String,
    pub spectrum: String,
    pub matched: bool,
}

impl VerifyDoc {
    pub fn new(report: &VerificationReport) -> Self {
        VerifyDoc {
            n: report.n,
            k: report.k,
            vertex_count: report.vertex_count,
            pass: report.pass,
            lines: report
                .lines
                .iter()
                .map(|l| VerifyLineDoc {
                    eigenvalue: l.eigenvalue,
                    predicted: l.predicted.to_string(),
                    oracle: l.oracle.to_string(),
                    method: l.method.to_string(),
                    matched: l.matched(),
                })
                .collect(),
            moments: report
                .moments
                .iter()
                .map(|m| MomentDoc {
                    power: m.power,
                    graph: m.graph_value.to_string(),
                    spectrum: m.spectrum_value.to_string(),
                    matched: m.matched(),
                })
                .collect(),
            unaccounted: report.unaccounted.to_string(),
        }
    }
}

pub fn verify_json(report: &VerificationReport) -> String {
    serde_json::to_string(&VerifyDoc::new(report)).expect("report serialization cannot fail")
}

pub fn verify_table(report: &VerificationReport) -> String {
    let mut out = format!(
        "A({},{}): {} vertices\n",
        report.n, report.k, report.vertex_count
    );
    let rows: Vec<(String, String, String, String, &str)> = report
        .lines
        .iter()
        .map(|l| {
            (
                l.eigenvalue.to_string(),
                l.predicted.to_string(),
                l.oracle.to_string(),
                l.method.to_string(),
                if l.matched() { "ok" } else { "MISMATCH" },
            )
        })
        .collect();
    let e_width = width("eigenvalue", rows.iter().map(|r| r.0.len()));
    let p_width = width("predicted", rows.iter().map(|r| r.1.len()));
    let o_width = width("oracle", rows.iter().map(|r| r.2.len()));
    let m_width = width("method", rows.iter().map(|r| r.3.len()));
    out.push_str(&format!(
        "{:>e_width$}  {:>p_width$}  {:>o_width$}  {:<m_width$}  status\n",
        "eigenvalue", "predicted", "oracle", "method"
    ));
    for (e, p, o, m, status) in &rows {
        out.push_str(&format!(
            "{e:>e_width$}  {p:>p_width$}  {o:>o_width$}  {m:<m_width$}  {status}\n"
        ));
    }
    for m in &report.moments {
        out.push_str(&format!(
            "trace(A^{}): graph {} vs spectrum {} ({})\n",
            m.power,
            m.graph_value,
            m.spectrum_value,
            if m.matched() { "ok" } else { "MISMATCH" }
        ));
    }
    out.push_str(&format!("unaccounted dimensions: {}\n", report.unaccounted));
    out.push_str(&format!(
        "result: {}\n",
        if report.pass { "PASS" } else { "FAIL" }
    ));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureDoc {
    pub k: u32,
    pub threshold: u64,
    pub n_start: u32,
    pub n_end: u32,
    pub pass: bool,
    pub rows: Vec<ConjectureRowDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRowDoc {
    pub n: u32,
    pub negatives: Vec<NegativeDoc>,
    pub only_minus_k: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_multiplicity: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeDoc {
    pub eigenvalue: i64,
    pub multiplicity: String,
}

pub fn conjecture_json(doc: &ConjectureDoc) -> String {
    serde_json::to_string(doc).expect("scan serialization cannot fail")
}

pub fn conjecture_table(doc: &ConjectureDoc) -> String {
    let mut out = format!("threshold p({}) = {}\n", doc.k, doc.threshold);
    out.push_str(&format!("scanning n = {}..={}\n", doc.n_start, doc.n_end));
    let rows: Vec<(String, String, String)> = doc
        .rows
        .iter()
        .map(|row| {
            let negatives = if row.negatives.is_empty() {
                "none".to_string()
            } else {
                row.negatives
                    .iter()
                    .map(|l| format!("{}:{}", l.eigenvalue, l.multiplicity))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut status = if row.only_minus_k { "yes" } else { "no" }.to_string();
            if let Some(formula) = &row.formula_multiplicity {
                let agrees = row.only_minus_k
                    && row.negatives.first().map(|l| &l.multiplicity) == Some(formula);
                status.push_str(&format!(
                    " (formula {formula} {})",
                    if agrees { "ok" } else { "MISMATCH" }
                ));
            }
            (row.n.to_string(), negatives, status)
        })
        .collect();
    let n_width = width("n", rows.iter().map(|r| r.0.len()));
    let neg_width = width("negative lines", rows.iter().map(|r| r.1.len()));
    out.push_str(&format!(
        "{:>n_width$}  {:<neg_width$}  only -{}?\n",
        "n", "negative lines", doc.k
    ));
    for (n, negatives, status) in &rows {
        out.push_str(&format!("{n:>n_width$}  {negatives:<neg_width$}  {status}\n"));
    }
    if u64::from(doc.n_end) > doc.threshold {
        out.push_str(&format!(
            "above-threshold claim (n = {}..={}): {}\n",
            doc.threshold + 1,
            doc.n_end,
            if doc.pass { "PASS" } else { "FAIL" }
        ));
    } else {
        out.push_str("above-threshold claim: nothing scanned past p(k)\n");
    }
    out
}
