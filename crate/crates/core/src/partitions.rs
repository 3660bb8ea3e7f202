//! Integer partitions and the character data attached to them.
//!
//! A partition λ ⊢ m labels an irreducible representation S^λ of the
//! symmetric group S_m. This module provides:
//!
//! - [`enumerate_partitions`]: all partitions of m in reverse-lexicographic
//!   order, (m) first and (1,…,1) last;
//! - [`dimension`]: dim S^λ, the number of standard Young tableaux of shape
//!   λ, by the hook length formula;
//! - [`transposition_content`]: the integer C(m,2)·χ_λ(τ)/χ_λ(1) for a
//!   transposition τ, by Frobenius's formula
//!   Σ_j [C(λ_j − j + 1, 2) − C(j, 2)];
//! - [`binom2`]: the generalized binomial C(p,2) = p(p−1)/2 for any integer p.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! any number of threads.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A partition: a non-increasing sequence of positive parts.
///
/// The empty sequence is the unique partition of 0. The derived `Ord` is
/// lexicographic on the part vector, so sorting in descending order yields
/// the reverse-lexicographic enumeration order used throughout this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is non-increasing with every part >= 1.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let valid =
            parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if valid {
            Ok(Self { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// The partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(
            parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]),
            "not a partition: {parts:?}"
        );
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows of the Young diagram.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts: the m in λ ⊢ m.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// The part in `row` (0-based), or 0 past the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// The first (largest) part; 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Transpose of the Young diagram: column lengths become parts.
    pub fn conjugate(&self) -> Self {
        let cols = self.first() as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

// Debug delegates to Display so assertion failures print (3,1) rather than
// a struct dump.
impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `m` in reverse-lexicographic order: largest first part
/// first, so (m) leads and (1,…,1) closes. For m = 0 the list holds exactly
/// the empty partition.
pub fn enumerate_partitions(m: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(stack.clone()));
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// The generalized binomial coefficient C(p,2) = p(p−1)/2, defined for any
/// integer p (so C(−1,2) = 1). Panics on the (input-limit-excluded) overflow.
pub fn binom2(p: i64) -> i64 {
    let prod = p
        .checked_sub(1)
        .and_then(|q| p.checked_mul(q))
        .expect("binom2 overflow: input out of supported range");
    // p(p-1) is a product of consecutive integers, hence even.
    prod / 2
}

/// Frobenius's formula for the normalized character value on a transposition:
/// for λ ⊢ m this returns C(m,2)·χ_λ(τ)/χ_λ(1) = Σ_j [C(λ_j−j+1,2) − C(j,2)],
/// always an integer. The empty partition yields 0.
pub fn transposition_content(lambda: &Partition) -> i64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| {
            let j = i as i64 + 1;
            binom2(i64::from(part) - j + 1) - binom2(j)
        })
        .fold(0i64, |acc, term| {
            acc.checked_add(term).expect("transposition content overflow")
        })
}

/// dim S^λ: the number of standard Young tableaux of shape λ, computed by
/// the hook length formula m! / ∏ hooks.
///
/// Panics if the hook product fails to divide m! exactly, which would
/// indicate a bug rather than bad input.
pub fn dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm_leg = u64::from(row) + u64::from(conj.part(j));
            let hook = arm_leg - (i as u64 + j as u64 + 1);
            hooks *= hook;
        }
    }
    let (dim, rem) = factorial(lambda.weight()).div_rem(&hooks);
    assert!(
        rem.is_zero(),
        "internal error: hook product does not divide {}! for {lambda}",
        lambda.weight()
    );
    dim
}

/// m! as an arbitrary-precision integer.
pub fn factorial(m: u64) -> BigUint {
    (2..=m).fold(BigUint::one(), |acc, i| acc * i)
}

/// n·(n−1)···(n−k+1) = n!/(n−k)!, the number of injective maps from a k-set
/// into an n-set. Requires k <= n.
pub fn falling_factorial(n: u64, k: u64) -> BigUint {
    assert!(k <= n, "falling_factorial requires k <= n");
    (n - k + 1..=n).fold(BigUint::one(), |acc, i| acc * i)
}
