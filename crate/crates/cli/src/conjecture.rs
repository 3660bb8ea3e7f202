//! The negative-eigenvalue scan behind `arrspec conjecture`.

use arrspec_core::{minus_k_multiplicity, negative_lines, threshold, Limits, Result};

use crate::output::{ConjectureDoc, ConjectureRowDoc, NegativeDoc};

/// Scan n from k+1 to `n_max` (default: p(k)+10), listing every negative
/// eigenvalue of A(n,k) with its multiplicity. Rows at or below the
/// threshold are informational; the scan passes iff every row above p(k)
/// has −k as its only negative eigenvalue with the closed-form multiplicity.
pub fn scan(k: u32, n_max: Option<u32>, limits: &Limits) -> Result<ConjectureDoc> {
    let t = threshold(k);
    let n_end = n_max.unwrap_or_else(|| {
        u32::try_from(t)
            .unwrap_or(u32::MAX - 10)
            .saturating_add(10)
    });
    let mut rows = Vec::new();
    let mut pass = true;
    let mut n = k.saturating_add(1);
    while n <= n_end {
        let negatives = negative_lines(n, k, limits)?;
        let only_minus_k = negatives.len() == 1 && negatives[0].eigenvalue == -i64::from(k);
        let formula = if u64::from(n) > t {
            let expected = minus_k_multiplicity(n, k)?;
            pass &= only_minus_k && negatives[0].multiplicity == expected;
            Some(expected.to_string())
        } else {
            None
        };
        rows.push(ConjectureRowDoc {
            n,
            negatives: negatives
                .iter()
                .map(|l| NegativeDoc {
                    eigenvalue: l.eigenvalue,
                    multiplicity: l.multiplicity.to_string(),
                })
                .collect(),
            only_minus_k,
            formula_multiplicity: formula,
        });
        n += 1;
    }
    Ok(ConjectureDoc {
        k,
        threshold: t,
        n_start: k.saturating_add(1),
        n_end,
        pass,
        rows,
    })
}
