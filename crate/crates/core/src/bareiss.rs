//! Exact matrix rank by fraction-free (Bareiss) elimination.
//!
//! Elimination first runs on `i128` with checked arithmetic; on overflow the
//! whole computation restarts on arbitrary-precision integers. No rounding
//! happens on either path.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

trait Ring: Clone {
    fn is_zero(&self) -> bool;
    /// `(a * d - b * c) / q`, exact; `None` on overflow.
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, q: &Self) -> Option<Self>;
    fn abs_key(&self) -> Option<u128>;
}

impl Ring for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn cross_div(a: &i128, d: &i128, b: &i128, c: &i128, q: &i128) -> Option<i128> {
        let lhs = a.checked_mul(*d)?;
        let rhs = b.checked_mul(*c)?;
        let num = lhs.checked_sub(rhs)?;
        debug_assert_eq!(num % q, 0);
        Some(num / q)
    }

    fn abs_key(&self) -> Option<u128> {
        Some(self.unsigned_abs())
    }
}

impl Ring for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cross_div(a: &BigInt, d: &BigInt, b: &BigInt, c: &BigInt, q: &BigInt) -> Option<BigInt> {
        Some((a * d - b * c) / q)
    }

    fn abs_key(&self) -> Option<u128> {
        // Pivot choice only needs "small" vs "large"; saturate.
        let a = self.abs();
        Some(u128::try_from(a).unwrap_or(u128::MAX))
    }
}

fn rank_generic<T: Ring>(mut rows: Vec<Vec<T>>, one: T) -> Option<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Some(0);
    }
    let ncols = rows[0].len();
    let mut prev = one;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // Smallest nonzero pivot keeps intermediate entries small.
        let pivot = (rank..nrows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].abs_key());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col].clone();
        for row in bottom.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                row[j] = T::cross_div(&row[j], &pv, &factor, &prow[j], &prev)?;
            }
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

/// Rank of an integer matrix given as rows of equal length.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    if let Some(r) = rank_generic(small, 1i128) {
        return r;
    }
    rank_big(rows)
}

/// Rank computed directly on arbitrary-precision integers.
pub fn rank_big(rows: &[Vec<i64>]) -> usize {
    rank_bigint_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
}

/// Rank of a matrix that already holds arbitrary-precision entries.
pub fn rank_bigint_rows(rows: Vec<Vec<BigInt>>) -> usize {
    rank_generic(rows, BigInt::from(1)).expect("bigint elimination cannot overflow")
}
