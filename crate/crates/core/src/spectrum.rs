//! The exact spectrum of the arrangement graph A(n,k).
//!
//! Every eigenvalue arises from a pair λ ⊢ k, μ ⊢ n with λ ≺ μ as
//!
//! ```text
//! e(λ, μ) = C(n,2)·χ_μ(τ_n)/χ_μ(1) − C(k,2)·χ_λ(τ_k)/χ_λ(1) − C(n−k,2)
//! ```
//!
//! and the pair contributes dim S^λ · dim S^μ to its multiplicity. Distinct
//! pairs can collide on the same integer; they are merged into one
//! [`SpectralLine`] that keeps every witnessing pair, so multiplicity
//! provenance stays auditable.
//!
//! The module also carries the negative-eigenvalue machinery: the threshold
//! p(k) = k(k+1)(k+5)/6 past which −k is the only negative eigenvalue, and
//! the closed form for its multiplicity.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{
    binom2, dimension, enumerate_partitions, falling_factorial, transposition_content,
    Partition,
};
use crate::pieri::{extensions, is_extension, mu_of_lambda};
use crate::Limits;

/// One distinct eigenvalue with its exact multiplicity and every (λ, μ) pair
/// producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralLine {
    pub eigenvalue: i64,
    pub multiplicity: BigUint,
    pub witnesses: Vec<(Partition, Partition)>,
}

/// The full spectrum of A(n,k): distinct eigenvalues in descending order,
/// multiplicities summing to n!/(n−k)!.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub n: u32,
    pub k: u32,
    pub lines: Vec<SpectralLine>,
}

impl Spectrum {
    /// n!/(n−k)!, the number of vertices of A(n,k).
    pub fn vertex_count(&self) -> BigUint {
        falling_factorial(u64::from(self.n), u64::from(self.k))
    }

    pub fn line(&self, eigenvalue: i64) -> Option<&SpectralLine> {
        self.lines.iter().find(|l| l.eigenvalue == eigenvalue)
    }

    /// Multiplicity of `eigenvalue`, zero if absent.
    pub fn multiplicity_of(&self, eigenvalue: i64) -> BigUint {
        self.line(eigenvalue)
            .map(|l| l.multiplicity.clone())
            .unwrap_or_default()
    }

    /// Σ e^power · multiplicity over all lines, i.e. trace(A^power).
    pub fn moment(&self, power: u32) -> BigInt {
        self.lines
            .iter()
            .map(|l| BigInt::from(l.eigenvalue).pow(power) * BigInt::from(l.multiplicity.clone()))
            .sum()
    }

    /// Largest eigenvalue; equals k(n−k) whenever k ≤ n.
    pub fn max_eigenvalue(&self) -> Option<i64> {
        self.lines.first().map(|l| l.eigenvalue)
    }

    /// The lines with negative eigenvalue, descending (closest to 0 first).
    pub fn negative_lines(&self) -> Vec<SpectralLine> {
        self.lines
            .iter()
            .filter(|l| l.eigenvalue < 0)
            .cloned()
            .collect()
    }
}

fn raw_eigenvalue(lambda: &Partition, mu: &Partition, n: u32, k: u32) -> i64 {
    transposition_content(mu) - transposition_content(lambda) - binom2(i64::from(n) - i64::from(k))
}

/// The eigenvalue contributed by a witnessing pair λ ⊢ k ≺ μ ⊢ n, k < n:
/// content(μ) − content(λ) − C(n−k, 2).
pub fn eigenvalue(lambda: &Partition, mu: &Partition, n: u32, k: u32) -> Result<i64> {
    if k < 1 || k > n {
        return Err(Error::InvalidPair { n, k });
    }
    if k == n {
        return Err(Error::EdgelessCase { n, k });
    }
    if lambda.weight() != u64::from(k) {
        return Err(Error::WeightMismatch {
            expected: u64::from(k),
            actual: lambda.weight(),
        });
    }
    if mu.weight() != u64::from(n) {
        return Err(Error::WeightMismatch {
            expected: u64::from(n),
            actual: mu.weight(),
        });
    }
    if !is_extension(lambda, mu) {
        return Err(Error::NotAnExtension {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
        });
    }
    Ok(raw_eigenvalue(lambda, mu, n, k))
}

#[derive(Default)]
struct DimensionCache {
    memo: HashMap<Partition, BigUint>,
}

impl DimensionCache {
    fn get(&mut self, lambda: &Partition) -> BigUint {
        if let Some(d) = self.memo.get(lambda) {
            return d.clone();
        }
        let d = dimension(lambda);
        self.memo.insert(lambda.clone(), d.clone());
        d
    }
}

/// Assemble the exact spectrum of A(n,k).
///
/// For k < n this walks every λ ⊢ k and every Pieri extension μ of λ to
/// weight n, accumulating dim(λ)·dim(μ) on the pair's eigenvalue. Pair
/// evaluation is pure and the accumulation is commutative, so the result is
/// deterministic. For k = n the graph is edgeless and the spectrum is the
/// single eigenvalue 0 with multiplicity n!, witnessed by the pairs (λ, λ).
pub fn spectrum(n: u32, k: u32, limits: &Limits) -> Result<Spectrum> {
    if k < 1 || k > n {
        return Err(Error::InvalidPair { n, k });
    }
    if n > limits.max_n {
        return Err(Error::NOverLimit {
            n,
            limit: limits.max_n,
        });
    }
    if k > limits.max_partition_weight {
        return Err(Error::PartitionWeightOverLimit {
            k,
            limit: limits.max_partition_weight,
        });
    }

    let mut acc: BTreeMap<i64, (BigUint, Vec<(Partition, Partition)>)> = BTreeMap::new();
    let mut dims = DimensionCache::default();

    if k == n {
        for lambda in enumerate_partitions(k) {
            let d = dims.get(&lambda);
            let entry = acc.entry(0).or_default();
            entry.0 += &d * &d;
            entry.1.push((lambda.clone(), lambda));
        }
    } else {
        for lambda in enumerate_partitions(k) {
            let dim_lambda = dims.get(&lambda);
            for mu in extensions(&lambda, n)? {
                let e = raw_eigenvalue(&lambda, &mu, n, k);
                let entry = acc.entry(e).or_default();
                entry.0 += &dim_lambda * dims.get(&mu);
                entry.1.push((lambda.clone(), mu));
            }
        }
    }

    let lines = acc
        .into_iter()
        .rev()
        .map(|(eigenvalue, (multiplicity, witnesses))| SpectralLine {
            eigenvalue,
            multiplicity,
            witnesses,
        })
        .collect();
    Ok(Spectrum { n, k, lines })
}

/// The threshold p(k) = k(k+1)(k+5)/6: for n > p(k) the only negative
/// eigenvalue of A(n,k) is −k.
pub fn threshold(k: u32) -> u64 {
    let k = u128::from(k);
    let prod = k * (k + 1) * (k + 5);
    assert!(prod % 6 == 0, "k(k+1)(k+5) is always divisible by 6");
    u64::try_from(prod / 6).expect("threshold exceeds u64")
}

/// The lines of spectrum(n,k) with negative eigenvalue, descending.
pub fn negative_lines(n: u32, k: u32, limits: &Limits) -> Result<Vec<SpectralLine>> {
    Ok(spectrum(n, k, limits)?.negative_lines())
}

/// Multiplicity of the eigenvalue −k via the closed form
/// Σ_{λ⊢k} dim S^{μ(λ)} · dim S^λ, valid for n > p(k).
///
/// Below the threshold the formula is unproven and this returns
/// [`Error::BelowThreshold`]; use [`minus_k_multiplicity_relaxed`] to
/// evaluate it there anyway.
pub fn minus_k_multiplicity(n: u32, k: u32) -> Result<BigUint> {
    let t = threshold(k);
    if u64::from(n) <= t {
        return Err(Error::BelowThreshold {
            n,
            k,
            threshold: t,
        });
    }
    minus_k_multiplicity_relaxed(n, k)
}

/// The −k multiplicity formula without the threshold guard. Still requires
/// every μ(λ) to exist, i.e. n − k ≥ k.
pub fn minus_k_multiplicity_relaxed(n: u32, k: u32) -> Result<BigUint> {
    if k < 1 || k > n {
        return Err(Error::InvalidPair { n, k });
    }
    let mut total = BigUint::zero();
    for lambda in enumerate_partitions(k) {
        let mu = mu_of_lambda(&lambda, n)?;
        total += dimension(&mu) * dimension(&lambda);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    fn lines_of(n: u32, k: u32) -> Vec<(i64, u64)> {
        spectrum(n, k, &limits())
            .unwrap()
            .lines
            .iter()
            .map(|l| {
                (
                    l.eigenvalue,
                    u64::try_from(&l.multiplicity).expect("multiplicity fits u64"),
                )
            })
            .collect()
    }

    #[test]
    fn eigenvalue_of_trivial_pair_is_the_degree() {
        assert_eq!(eigenvalue(&p(&[2]), &p(&[4]), 4, 2).unwrap(), 4);
        for k in 1..=8u32 {
            for n in k + 1..=16 {
                assert_eq!(
                    eigenvalue(&p(&[k]), &p(&[n]), n, k).unwrap(),
                    i64::from(k) * i64::from(n - k),
                    "degree mismatch at n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalue(&p(&[1]), &p(&[3, 1]), 4, 1).unwrap(), -1);
        assert_eq!(eigenvalue(&p(&[2]), &p(&[2, 2]), 4, 2).unwrap(), -2);
    }

    #[test]
    fn eigenvalue_rejects_bad_pairs() {
        assert!(matches!(
            eigenvalue(&p(&[1]), &p(&[3, 1]), 4, 2),
            Err(Error::WeightMismatch { .. })
        ));
        assert!(matches!(
            eigenvalue(&p(&[1, 1]), &p(&[4]), 4, 2),
            Err(Error::NotAnExtension { .. })
        ));
        assert!(matches!(
            eigenvalue(&p(&[4]), &p(&[4]), 4, 4),
            Err(Error::EdgelessCase { .. })
        ));
    }

    #[test]
    fn complete_graph_spectrum() {
        // A(n,1) is K_n: eigenvalue n-1 once, -1 with multiplicity n-1.
        assert_eq!(lines_of(4, 1), vec![(3, 1), (-1, 3)]);
        for n in 2..=12u32 {
            assert_eq!(
                lines_of(n, 1),
                vec![(i64::from(n) - 1, 1), (-1, u64::from(n) - 1)]
            );
        }
    }

    #[test]
    fn six_cycle_spectrum() {
        // A(3,2) is the 6-cycle.
        assert_eq!(lines_of(3, 2), vec![(2, 1), (1, 2), (-1, 2), (-2, 1)]);
    }

    #[test]
    fn a42_spectrum() {
        assert_eq!(lines_of(4, 2), vec![(4, 1), (2, 3), (0, 3), (-2, 5)]);
    }

    #[test]
    fn edgeless_case_has_single_zero_line() {
        let s = spectrum(4, 4, &limits()).unwrap();
        assert_eq!(s.lines.len(), 1);
        assert_eq!(s.lines[0].eigenvalue, 0);
        assert_eq!(s.lines[0].multiplicity, BigUint::from(24u32));
        // Witness multiplicities must still account for the whole line.
        let from_witnesses: BigUint = s.lines[0]
            .witnesses
            .iter()
            .map(|(l, m)| dimension(l) * dimension(m))
            .sum();
        assert_eq!(from_witnesses, s.lines[0].multiplicity);
    }

    #[test]
    fn spectrum_rejects_bad_input() {
        assert!(matches!(
            spectrum(2, 3, &limits()),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            spectrum(2, 0, &limits()),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            spectrum(501, 2, &limits()),
            Err(Error::NOverLimit { .. })
        ));
    }

    #[test]
    fn line_invariants_hold() {
        for (n, k) in [(5, 2), (6, 3), (7, 4), (8, 2)] {
            let s = spectrum(n, k, &limits()).unwrap();
            for line in &s.lines {
                let total: BigUint = line
                    .witnesses
                    .iter()
                    .map(|(l, m)| dimension(l) * dimension(m))
                    .sum();
                assert_eq!(total, line.multiplicity);
                for (lambda, mu) in &line.witnesses {
                    assert_eq!(lambda.weight(), u64::from(k));
                    assert_eq!(mu.weight(), u64::from(n));
                    assert!(is_extension(lambda, mu));
                    assert_eq!(
                        eigenvalue(lambda, mu, n, k).unwrap(),
                        line.eigenvalue
                    );
                }
            }
            let eigs: Vec<i64> = s.lines.iter().map(|l| l.eigenvalue).collect();
            for w in eigs.windows(2) {
                assert!(w[0] > w[1], "lines not strictly descending");
            }
        }
    }

    #[test]
    fn moment_identities_small_range() {
        // Full range up to n = 30 runs in the acceptance suite.
        for n in 2..=12u32 {
            for k in 1..n {
                let s = spectrum(n, k, &limits()).unwrap();
                let count = BigInt::from(s.vertex_count());
                assert_eq!(s.moment(0), count, "vertex count at ({n},{k})");
                assert_eq!(s.moment(1), BigInt::zero(), "trace at ({n},{k})");
                assert_eq!(
                    s.moment(2),
                    count * i64::from(k) * i64::from(n - k),
                    "edge count at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn extremal_lines() {
        for n in 2..=14u32 {
            for k in 1..n {
                let s = spectrum(n, k, &limits()).unwrap();
                let degree = i64::from(k) * i64::from(n - k);
                assert_eq!(s.max_eigenvalue(), Some(degree));
                let top = s.line(degree).unwrap();
                assert!(top
                    .witnesses
                    .contains(&(p(&[k]), p(&[n]))));
                for line in &s.lines {
                    assert!(line.eigenvalue >= -degree, "regular-graph lower bound");
                }
            }
        }
    }

    #[test]
    fn threshold_values() {
        assert_eq!(threshold(1), 2);
        assert_eq!(threshold(2), 7);
        assert_eq!(threshold(3), 16);
        assert_eq!(threshold(4), 30);
        assert_eq!(threshold(5), 50);
        assert_eq!(threshold(6), 77);
    }

    #[test]
    fn negative_lines_examples() {
        let neg = negative_lines(4, 2, &limits()).unwrap();
        assert_eq!(neg.len(), 1);
        assert_eq!(neg[0].eigenvalue, -2);
        assert_eq!(neg[0].multiplicity, BigUint::from(5u32));

        let neg = negative_lines(4, 3, &limits()).unwrap();
        let pairs: Vec<(i64, u32)> = neg
            .iter()
            .map(|l| (l.eigenvalue, u32::try_from(&l.multiplicity).unwrap()))
            .collect();
        assert_eq!(pairs, vec![(-1, 3), (-2, 6), (-3, 1)]);

        // n = 10 > p(2) = 7: the only negative eigenvalue is -2.
        let neg = negative_lines(10, 2, &limits()).unwrap();
        assert_eq!(neg.len(), 1);
        assert_eq!(neg[0].eigenvalue, -2);
        assert_eq!(
            neg[0].multiplicity,
            minus_k_multiplicity(10, 2).unwrap()
        );
    }

    #[test]
    fn minus_k_multiplicity_values() {
        assert_eq!(minus_k_multiplicity(4, 1).unwrap(), BigUint::from(3u32));
        // dim S^(6,2) = 20 and dim S^(6,1,1) = 21.
        assert_eq!(dimension(&p(&[6, 2])), BigUint::from(20u32));
        assert_eq!(dimension(&p(&[6, 1, 1])), BigUint::from(21u32));
        assert_eq!(minus_k_multiplicity(8, 2).unwrap(), BigUint::from(41u32));
        assert_eq!(
            minus_k_multiplicity(9, 2).unwrap(),
            dimension(&p(&[7, 2])) + dimension(&p(&[7, 1, 1]))
        );
    }

    #[test]
    fn minus_k_multiplicity_threshold_guard() {
        assert!(matches!(
            minus_k_multiplicity(7, 2),
            Err(Error::BelowThreshold { threshold: 7, .. })
        ));
        // Relaxed evaluation below the threshold: K_2 has -1 once.
        assert_eq!(
            minus_k_multiplicity_relaxed(2, 1).unwrap(),
            BigUint::one()
        );
        // But mu(lambda) must exist.
        assert!(minus_k_multiplicity_relaxed(3, 2).is_err());
    }

    #[test]
    fn minus_k_line_matches_formula_above_threshold() {
        for k in 1..=4u32 {
            let t = u32::try_from(threshold(k)).unwrap();
            for n in t + 1..=t + 6 {
                let neg = negative_lines(n, k, &limits()).unwrap();
                assert_eq!(neg.len(), 1, "extra negatives at ({n},{k})");
                assert_eq!(neg[0].eigenvalue, -i64::from(k));
                assert_eq!(neg[0].multiplicity, minus_k_multiplicity(n, k).unwrap());
            }
        }
    }

    #[test]
    fn distinguished_pair_yields_minus_k() {
        // Adding one box to every column of lambda plus a first row of
        // leftovers always lands on exactly -k (checked across the
        // acceptance range in the acceptance suite).
        for k in 1..=6u32 {
            for n in 2 * k + 1..=24 {
                for lambda in enumerate_partitions(k) {
                    let mu = mu_of_lambda(&lambda, n).unwrap();
                    assert_eq!(
                        eigenvalue(&lambda, &mu, n, k).unwrap(),
                        -i64::from(k),
                        "lambda = {lambda}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn positive_bound_for_wide_witnesses_above_threshold() {
        // Witnesses with mu_1 > n-k sit at eigenvalues at least
        // n - k - C(k+2,3) - C(k,2), which is positive past the threshold.
        for k in 1..=5u32 {
            let t = u32::try_from(threshold(k)).unwrap();
            for n in t + 1..=t + 8 {
                let s = spectrum(n, k, &limits()).unwrap();
                let c3 = i64::from(k + 2) * i64::from(k + 1) * i64::from(k) / 6;
                let bound = i64::from(n) - i64::from(k) - c3 - binom2(i64::from(k));
                assert!(bound > 0, "bound not positive at ({n},{k})");
                for line in &s.lines {
                    for (_, mu) in &line.witnesses {
                        if u64::from(mu.first()) > u64::from(n - k) {
                            assert!(
                                line.eigenvalue >= bound,
                                "({n},{k}): {} < {bound}",
                                line.eigenvalue
                            );
                        }
                    }
                }
            }
        }
    }
}
