//! The horizontal-strip relation λ ≺ μ and Pieri extensions.
//!
//! Inducing S^λ ⊗ (trivial) from S_k × S_{n−k} up to S_n decomposes as the
//! multiplicity-free sum of the S^μ over exactly the μ ⊢ n whose diagram is
//! obtained from Y(λ) by adding at most one box per column. That condition
//! is equivalent to the interlacing inequalities μ_i ≥ λ_i ≥ μ_{i+1}; the
//! equivalence is asserted by a brute-force diagram test rather than assumed.

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// True iff Y(μ) contains Y(λ) and μ \ λ has at most one box per column,
/// i.e. μ_i ≥ λ_i ≥ μ_{i+1} with λ padded by zeros. λ ≺ λ holds (empty strip).
pub fn is_extension(lambda: &Partition, mu: &Partition) -> bool {
    let rows = lambda.len().max(mu.len());
    (0..rows).all(|i| mu.part(i) >= lambda.part(i) && lambda.part(i) >= mu.part(i + 1))
}

/// All μ ⊢ n with λ ≺ μ, in reverse-lexicographic order.
///
/// Built by direct construction — each row is chosen inside its interlaced
/// range — instead of filtering every partition of n, which would be
/// exponentially larger for the threshold scans where n is big.
pub fn extensions(lambda: &Partition, n: u32) -> Result<Vec<Partition>> {
    if u64::from(n) < lambda.weight() {
        return Err(Error::ExtensionTargetTooSmall {
            weight: lambda.weight(),
            n,
        });
    }
    let mut out = Vec::new();
    build(lambda, 0, u64::from(n), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Choose μ_row descending within [max(λ_row, what later rows cannot absorb),
/// min(λ_{row−1}, what is left)], then recurse; descending choices at every
/// row emit the results already in reverse-lexicographic order.
fn build(
    lambda: &Partition,
    row: usize,
    remaining: u64,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    // A horizontal strip adds no row below len(λ)+1.
    if row > lambda.len() {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
        }
        return;
    }
    let lo = u64::from(lambda.part(row));
    // Rows after this one hold at least the rest of λ and at most one box
    // per remaining column, i.e. at most λ_row + λ_{row+1} + …
    let min_rest: u64 = lambda.parts()[(row + 1).min(lambda.len())..]
        .iter()
        .map(|&p| u64::from(p))
        .sum();
    let max_rest: u64 = lambda.parts()[row..].iter().map(|&p| u64::from(p)).sum();

    let mut hi = remaining.saturating_sub(min_rest);
    if row > 0 {
        hi = hi.min(u64::from(lambda.part(row - 1)));
    }
    let floor = lo.max(remaining.saturating_sub(max_rest));

    let mut v = hi;
    while v >= floor.max(1) {
        prefix.push(v as u32);
        build(lambda, row + 1, remaining - v, prefix, out);
        prefix.pop();
        v -= 1;
    }
    // Row value 0 ends the partition; valid only once λ is exhausted and
    // nothing is left to place.
    if floor == 0 && remaining == 0 {
        out.push(Partition::from_parts_unchecked(prefix.clone()));
    }
}

/// The distinguished extension μ(λ) = (n−k, λ_1, …, λ_q) for λ ⊢ k, defined
/// whenever n−k ≥ λ_1. It always satisfies λ ≺ μ(λ).
pub fn mu_of_lambda(lambda: &Partition, n: u32) -> Result<Partition> {
    let k = lambda.weight();
    let head = u64::from(n)
        .checked_sub(k)
        .ok_or(Error::ExtensionTargetTooSmall { weight: k, n })?;
    if head < u64::from(lambda.first()) {
        return Err(Error::HeadPartTooSmall {
            head,
            first: lambda.first(),
        });
    }
    if head == 0 {
        // Only reachable for the empty λ with n = 0.
        return Ok(Partition::empty());
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    parts.push(head as u32);
    parts.extend_from_slice(lambda.parts());
    let mu = Partition::from_parts_unchecked(parts);
    debug_assert!(is_extension(lambda, &mu));
    Ok(mu)
}
