//! Brute-force verification of the formula spectrum.
//!
//! [`build_graph`] realizes A(n,k) explicitly: vertices are the injective
//! maps I_k → I_n as lexicographically ordered k-tuples, with an edge where
//! two tuples agree in exactly k−1 positions. [`verify`] then confirms every
//! predicted (eigenvalue, multiplicity) against the graph itself — by exact
//! integer nullity of A − eI on small instances, by a dense floating-point
//! eigendecomposition with an integrality check on medium ones — and checks
//! the first four trace moments computed straight off the adjacency
//! structure. Vertex order is canonical so adjacency data is reproducible
//! bit for bit across runs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{self, Write};

use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::integer_nullity;
use crate::partitions::falling_factorial;
use crate::spectrum::spectrum;
use crate::Limits;

/// Explicit vertex/edge realization of A(n,k).
#[derive(Debug, Clone)]
pub struct ArrangementGraph {
    n: u32,
    k: u32,
    vertices: Vec<Vec<u32>>,
    neighbors: Vec<Vec<u32>>,
}

impl ArrangementGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The k-tuples, lexicographically sorted; indices elsewhere refer to
    /// positions in this list.
    pub fn vertices(&self) -> &[Vec<u32>] {
        &self.vertices
    }

    /// Neighbor indices of vertex `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn edge_count(&self) -> u64 {
        let degree_sum: u64 = self.neighbors.iter().map(|n| n.len() as u64).sum();
        degree_sum / 2
    }

    /// trace(A) computed from the structure: the number of self-loops.
    pub fn loop_count(&self) -> u64 {
        (0..self.vertex_count())
            .filter(|&v| self.adjacent(v, v))
            .count() as u64
    }

    /// Bit-packed adjacency rows; row v has bit u set iff u ~ v.
    pub fn bit_rows(&self) -> Vec<Vec<u64>> {
        let words = self.vertex_count().div_ceil(64);
        self.neighbors
            .iter()
            .map(|row| {
                let mut bits = vec![0u64; words];
                for &u in row {
                    bits[u as usize / 64] |= 1 << (u % 64);
                }
                bits
            })
            .collect()
    }

    /// trace(A³): closed walks of length three, via bit-row intersections.
    pub fn triangle_trace(&self) -> u64 {
        let rows = self.bit_rows();
        let mut total = 0u64;
        for (v, nbrs) in self.neighbors.iter().enumerate() {
            for &u in nbrs {
                total += rows[v]
                    .iter()
                    .zip(&rows[u as usize])
                    .map(|(a, b)| (a & b).count_ones() as u64)
                    .sum::<u64>();
            }
        }
        total
    }

    /// Debug dump: a line "n k |V|", then one line per vertex with its
    /// neighbor indices (0-based, ascending, space-separated).
    pub fn write_adjacency_dump<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{} {} {}", self.n, self.k, self.vertex_count())?;
        for row in &self.neighbors {
            let mut first = true;
            for &u in row {
                if first {
                    write!(out, "{u}")?;
                    first = false;
                } else {
                    write!(out, " {u}")?;
                }
            }
            writeln!(out)?;
        }
        Ok(())
    }

    fn dense_f64(&self) -> DMatrix<f64> {
        let size = self.vertex_count();
        let mut m = DMatrix::zeros(size, size);
        for (v, nbrs) in self.neighbors.iter().enumerate() {
            for &u in nbrs {
                m[(v, u as usize)] = 1.0;
            }
        }
        m
    }
}

/// Build A(n,k) from the definition, rejecting sizes whose vertex count
/// exceeds the construction limit.
pub fn build_graph(n: u32, k: u32, limits: &Limits) -> Result<ArrangementGraph> {
    if k < 1 || k > n {
        return Err(Error::InvalidPair { n, k });
    }
    let count_exact = falling_factorial(u64::from(n), u64::from(k));
    let count = u64::try_from(&count_exact)
        .ok()
        .filter(|&c| c <= limits.float_vertex_limit)
        .ok_or(Error::GraphTooLarge {
            n,
            k,
            vertices: count_exact.to_string(),
            kind: "construction",
            limit: limits.float_vertex_limit,
        })? as usize;

    let mut vertices = Vec::with_capacity(count);
    let mut tuple = Vec::with_capacity(k as usize);
    let mut used = vec![false; n as usize + 1];
    enumerate_tuples(n, k as usize, &mut tuple, &mut used, &mut vertices);
    debug_assert_eq!(vertices.len(), count);

    let mut index = HashMap::with_capacity(count);
    for (i, v) in vertices.iter().enumerate() {
        index.insert(v.clone(), i as u32);
    }

    let degree = (k as usize) * (n - k) as usize;
    let mut neighbors = vec![Vec::with_capacity(degree); count];
    for (i, vertex) in vertices.iter().enumerate() {
        let mut probe = vertex.clone();
        for pos in 0..k as usize {
            let original = probe[pos];
            for value in 1..=n {
                if value != original && !vertex.contains(&value) {
                    probe[pos] = value;
                    neighbors[i].push(index[&probe]);
                }
            }
            probe[pos] = original;
        }
        neighbors[i].sort_unstable();
        debug_assert_eq!(neighbors[i].len(), degree);
    }

    Ok(ArrangementGraph {
        n,
        k,
        vertices,
        neighbors,
    })
}

fn enumerate_tuples(
    n: u32,
    k: usize,
    tuple: &mut Vec<u32>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<u32>>,
) {
    if tuple.len() == k {
        out.push(tuple.clone());
        return;
    }
    for value in 1..=n {
        if !used[value as usize] {
            used[value as usize] = true;
            tuple.push(value);
            enumerate_tuples(n, k, tuple, used, out);
            tuple.pop();
            used[value as usize] = false;
        }
    }
}

/// Dense symmetric eigendecomposition in floating point, rounded to the
/// integer spectrum. Returns (eigenvalue, multiplicity) pairs in descending
/// order, and fails loudly if any computed eigenvalue sits farther from an
/// integer than `float_tolerance` scaled by the matrix size.
pub fn float_spectrum(g: &ArrangementGraph, limits: &Limits) -> Result<Vec<(i64, u64)>> {
    let count = g.vertex_count() as u64;
    if count > limits.float_vertex_limit {
        return Err(Error::GraphTooLarge {
            n: g.n,
            k: g.k,
            vertices: count.to_string(),
            kind: "float-eig",
            limit: limits.float_vertex_limit,
        });
    }
    let eigenvalues = g.dense_f64().symmetric_eigenvalues();
    let allowed = limits.float_tolerance * count as f64;
    let mut grouped: BTreeMap<i64, u64> = BTreeMap::new();
    for &x in eigenvalues.iter() {
        if !x.is_finite() {
            return Err(Error::NonConvergence);
        }
        let rounded = x.round();
        let deviation = (x - rounded).abs();
        if deviation > allowed {
            return Err(Error::IntegralityViolation {
                value: x,
                deviation,
                allowed,
            });
        }
        *grouped.entry(rounded as i64).or_insert(0) += 1;
    }
    Ok(grouped.into_iter().rev().collect())
}

/// Multiplicity of `e` as an eigenvalue: the exact nullity of A − eI over
/// the integers, via fraction-free elimination. Zero when e is not in the
/// spectrum.
pub fn exact_multiplicity(g: &ArrangementGraph, e: i64, limits: &Limits) -> Result<u64> {
    let count = g.vertex_count();
    if count as u64 > limits.exact_vertex_limit {
        return Err(Error::GraphTooLarge {
            n: g.n,
            k: g.k,
            vertices: count.to_string(),
            kind: "exact-nullity",
            limit: limits.exact_vertex_limit,
        });
    }
    let mut m = vec![vec![0i64; count]; count];
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = -e;
        for &u in g.neighbors(v) {
            row[u as usize] = 1;
        }
    }
    Ok(integer_nullity(&m) as u64)
}

/// How an eigenvalue line was confirmed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactNullity,
    FloatEig,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ExactNullity => "exact-nullity",
            Method::FloatEig => "float-eig",
        })
    }
}

/// One eigenvalue compared between formula and oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCheck {
    pub eigenvalue: i64,
    pub predicted: BigUint,
    pub oracle: BigUint,
    pub method: Method,
}

impl LineCheck {
    pub fn matched(&self) -> bool {
        self.predicted == self.oracle
    }
}

/// One trace moment compared between the adjacency structure and the
/// predicted spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentCheck {
    pub power: u32,
    pub graph_value: BigInt,
    pub spectrum_value: BigInt,
}

impl MomentCheck {
    pub fn matched(&self) -> bool {
        self.graph_value == self.spectrum_value
    }
}

/// Outcome of checking spectrum(n,k) against the explicit graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: u32,
    pub k: u32,
    pub vertex_count: u64,
    pub lines: Vec<LineCheck>,
    pub moments: Vec<MomentCheck>,
    /// vertex count minus the oracle multiplicity total; nonzero means some
    /// eigenvalue escaped the predicted set.
    pub unaccounted: BigInt,
    pub pass: bool,
}

/// Compute the formula spectrum, rebuild the graph from scratch, and compare
/// them line by line. A mismatch is a failed report, not an error.
pub fn verify(n: u32, k: u32, limits: &Limits) -> Result<VerificationReport> {
    let predicted = spectrum(n, k, limits)?;
    let graph = build_graph(n, k, limits)?;
    let count = graph.vertex_count() as u64;

    let mut lines = Vec::with_capacity(predicted.lines.len());
    if count <= limits.exact_vertex_limit {
        for line in &predicted.lines {
            let nullity = exact_multiplicity(&graph, line.eigenvalue, limits)?;
            lines.push(LineCheck {
                eigenvalue: line.eigenvalue,
                predicted: line.multiplicity.clone(),
                oracle: BigUint::from(nullity),
                method: Method::ExactNullity,
            });
        }
    } else {
        let mut observed: BTreeMap<i64, u64> =
            float_spectrum(&graph, limits)?.into_iter().collect();
        for line in &predicted.lines {
            let oracle = observed.remove(&line.eigenvalue).unwrap_or(0);
            lines.push(LineCheck {
                eigenvalue: line.eigenvalue,
                predicted: line.multiplicity.clone(),
                oracle: BigUint::from(oracle),
                method: Method::FloatEig,
            });
        }
        // Whatever the eigensolver saw that the formula did not predict.
        for (eigenvalue, oracle) in observed {
            lines.push(LineCheck {
                eigenvalue,
                predicted: BigUint::zero(),
                oracle: BigUint::from(oracle),
                method: Method::FloatEig,
            });
        }
        lines.sort_by_key(|l| std::cmp::Reverse(l.eigenvalue));
    }

    let moments = vec![
        MomentCheck {
            power: 0,
            graph_value: BigInt::from(count),
            spectrum_value: predicted.moment(0),
        },
        MomentCheck {
            power: 1,
            graph_value: BigInt::from(graph.loop_count()),
            spectrum_value: predicted.moment(1),
        },
        MomentCheck {
            power: 2,
            graph_value: BigInt::from(2 * graph.edge_count()),
            spectrum_value: predicted.moment(2),
        },
        MomentCheck {
            power: 3,
            graph_value: BigInt::from(graph.triangle_trace()),
            spectrum_value: predicted.moment(3),
        },
    ];

    let oracle_total: BigUint = lines.iter().map(|l| l.oracle.clone()).sum();
    let unaccounted = BigInt::from(count) - BigInt::from(oracle_total);
    let pass = lines.iter().all(LineCheck::matched)
        && moments.iter().all(MomentCheck::matched)
        && unaccounted.is_zero();

    Ok(VerificationReport {
        n,
        k,
        vertex_count: count,
        lines,
        moments,
        unaccounted,
        pass,
    })
}
