use thiserror::Error;

/// Errors reported by the formula and oracle layers.
///
/// Mismatches found during verification are not errors; they come back as a
/// failed [`crate::oracle::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and non-increasing")]
    InvalidPartition(Vec<u32>),

    #[error("expected a partition of {expected}, got one of {actual}")]
    WeightMismatch { expected: u64, actual: u64 },

    #[error("cannot extend a partition of {weight} to weight {n}")]
    ExtensionTargetTooSmall { weight: u64, n: u32 },

    #[error("(n-k, …) = ({head}, …) is not a partition: n-k < first part {first}")]
    HeadPartTooSmall { head: u64, first: u32 },

    #[error("({lambda}, {mu}) is not a horizontal-strip extension pair")]
    NotAnExtension { lambda: String, mu: String },

    #[error("need 1 <= k <= n, got k = {k}, n = {n}")]
    InvalidPair { n: u32, k: u32 },

    #[error("need k < n for this operation, got k = {k}, n = {n}")]
    EdgelessCase { n: u32, k: u32 },

    #[error("n = {n} exceeds the configured limit {limit} (ARRSPEC_N_LIMIT)")]
    NOverLimit { n: u32, limit: u32 },

    #[error("k = {k} exceeds the partition enumeration limit {limit} (ARRSPEC_PARTITION_LIMIT)")]
    PartitionWeightOverLimit { k: u32, limit: u32 },

    #[error(
        "A({n},{k}) has {vertices} vertices, over the {kind} limit {limit}; \
         raise the limit to spend the required memory/time"
    )]
    GraphTooLarge {
        n: u32,
        k: u32,
        vertices: String,
        kind: &'static str,
        limit: u64,
    },

    #[error(
        "n = {n} is not above the threshold p({k}) = {threshold}; the closed-form \
         multiplicity of -k is only established for n > p(k)"
    )]
    BelowThreshold { n: u32, k: u32, threshold: u64 },

    #[error(
        "eigenvalue {value} is {deviation:.3e} away from the nearest integer \
         (allowed {allowed:.3e}): numerical failure or pathological size"
    )]
    IntegralityViolation {
        value: f64,
        deviation: f64,
        allowed: f64,
    },

    #[error("eigensolver produced a non-finite value (did not converge)")]
    NonConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;
