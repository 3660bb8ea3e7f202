//! Exact rank and nullity of integer matrices by fraction-free elimination.
//!
//! Bareiss's one-step scheme keeps every intermediate entry equal to a minor
//! of the input matrix, so the division at each step is exact and entry
//! growth stays polynomial. Elimination first runs in `i128`; if any product
//! would overflow, it restarts from the original matrix with
//! arbitrary-precision integers. Either way the result is exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

/// Matrix entry a fraction-free elimination can run over.
trait Entry: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    /// (pivot·target − head·row) / prev; `None` signals overflow.
    fn eliminate(pivot: &Self, head: &Self, row: &Self, target: &Self, prev: &Self)
        -> Option<Self>;
}

impl Entry for i128 {
    fn from_i64(v: i64) -> Self {
        i128::from(v)
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }

    fn eliminate(pivot: &Self, head: &Self, row: &Self, target: &Self, prev: &Self)
        -> Option<Self> {
        let minor = pivot
            .checked_mul(*target)?
            .checked_sub(head.checked_mul(*row)?)?;
        debug_assert_eq!(minor % prev, 0, "fraction-free division must be exact");
        Some(minor / prev)
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }

    fn eliminate(pivot: &Self, head: &Self, row: &Self, target: &Self, prev: &Self)
        -> Option<Self> {
        let minor = pivot * target - head * row;
        debug_assert!(
            Zero::is_zero(&(&minor % prev)),
            "fraction-free division must be exact"
        );
        Some(minor / prev)
    }
}

/// Row-echelon rank by Bareiss elimination, `None` on overflow. Pivots are
/// chosen with the smallest absolute value to slow coefficient growth;
/// columns with no pivot are skipped.
fn rank_fraction_free<E: Entry>(mut m: Vec<Vec<E>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = E::from_i64(1);
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot_row = (rank..rows)
            .filter(|&i| !m[i][col].is_zero())
            .min_by(|&a, &b| m[a][col].cmp_abs(&m[b][col]));
        let Some(p) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let (upper, lower) = m.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        let pivot = pivot_row[col].clone();
        for row in lower {
            let head = std::mem::replace(&mut row[col], E::from_i64(0));
            for j in col + 1..cols {
                row[j] = E::eliminate(&pivot, &head, &pivot_row[j], &row[j], &prev)?;
            }
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    Some(rank)
}

fn convert<E: Entry>(matrix: &[Vec<i64>]) -> Vec<Vec<E>> {
    matrix
        .iter()
        .map(|row| row.iter().map(|&v| E::from_i64(v)).collect())
        .collect()
}

/// Exact rank of an integer matrix.
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(
        matrix.iter().all(|row| row.len() == cols),
        "ragged matrix"
    );
    if let Some(rank) = rank_fraction_free(convert::<i128>(matrix)) {
        return rank;
    }
    rank_fraction_free(convert::<BigInt>(matrix)).expect("big-integer elimination cannot overflow")
}

/// Exact nullity (kernel dimension) of an integer matrix.
pub fn integer_nullity(matrix: &[Vec<i64>]) -> usize {
    matrix.first().map_or(0, Vec::len) - integer_rank(matrix)
}
