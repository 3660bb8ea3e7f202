//! Exact spectra of (n,k)-arrangement graphs.
//!
//! The arrangement graph A(n,k) has the injective maps I_k → I_n as vertices,
//! with an edge wherever two maps agree on exactly k−1 points. Its adjacency
//! operator acts on a representation of S_n induced from the regular
//! representation of S_k, which pins every eigenvalue to a pair of partitions
//! λ ⊢ k ≺ μ ⊢ n through normalized character values on transpositions:
//!
//! ```text
//! e(λ, μ) = content(μ) − content(λ) − C(n−k, 2),    multiplicity dim(λ)·dim(μ)
//! ```
//!
//! [`spectrum()`] assembles the full integer spectrum exactly from that rule;
//! [`oracle::verify`] rebuilds the graph explicitly and confirms each line by
//! exact integer nullity or a floating eigensolve; [`threshold`] and
//! [`minus_k_multiplicity`] cover the regime n > p(k) where −k is the only
//! negative eigenvalue.
//!
//! All computation is exact except the clearly marked floating-point oracle
//! tier, which must round to integers within a strict tolerance or fail.

pub mod error;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod pieri;
pub mod spectrum;

pub use error::{Error, Result};
pub use oracle::{
    build_graph, exact_multiplicity, float_spectrum, verify, ArrangementGraph, LineCheck,
    Method, MomentCheck, VerificationReport,
};
pub use partitions::{
    binom2, dimension, enumerate_partitions, factorial, falling_factorial,
    transposition_content, Partition,
};
pub use pieri::{extensions, is_extension, mu_of_lambda};
pub use spectrum::{
    eigenvalue, minus_k_multiplicity, minus_k_multiplicity_relaxed, negative_lines, spectrum,
    threshold, SpectralLine, Spectrum,
};

/// Operational caps and tolerances. Every field has the library default;
/// the CLI maps each to a flag with an `ARRSPEC_*` environment override.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest n accepted by [`spectrum()`].
    pub max_n: u32,
    /// Largest weight accepted for partition enumeration (so largest k).
    pub max_partition_weight: u32,
    /// Largest vertex count for the exact-nullity oracle tier.
    pub exact_vertex_limit: u64,
    /// Largest vertex count for graph construction and the float tier.
    pub float_vertex_limit: u64,
    /// Distance-to-integer tolerance for float eigenvalues, scaled by the
    /// matrix size.
    pub float_tolerance: f64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: 500,
            max_partition_weight: 200,
            exact_vertex_limit: 400,
            float_vertex_limit: 10_000,
            float_tolerance: 1e-6,
        }
    }
}
