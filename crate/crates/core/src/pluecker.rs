//! Integer vectors indexed by the k-subsets of `[n]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::subsets::{binomial, lex_rank, SubsetTable};

/// Integer vector of length `C(n, k)` in lexicographic subset order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct PlueckerVector {
    k: usize,
    n: usize,
    coords: Vec<i64>,
}

impl PlueckerVector {
    pub fn new(k: usize, n: usize, coords: Vec<i64>) -> Result<Self> {
        let expected = binomial(n, k);
        if coords.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: coords.len(),
            });
        }
        Ok(Self { k, n, coords })
    }

    pub fn zero(k: usize, n: usize) -> Self {
        Self {
            k,
            n,
            coords: vec![0; binomial(n, k)],
        }
    }

    /// Standard basis vector `e_I`.
    pub fn unit(k: usize, n: usize, subset: &[usize]) -> Result<Self> {
        if subset.len() != k {
            return Err(Error::InvalidSubset {
                elements: subset.to_vec(),
                n,
                reason: "wrong subset size",
            });
        }
        let mut v = Self::zero(k, n);
        v.coords[lex_rank(subset, n)?] = 1;
        Ok(v)
    }

    /// Sum of unit vectors over the given subsets.
    pub fn indicator<S: AsRef<[usize]>>(k: usize, n: usize, subsets: &[S]) -> Result<Self> {
        let mut v = Self::zero(k, n);
        for s in subsets {
            let s = s.as_ref();
            if s.len() != k {
                return Err(Error::InvalidSubset {
                    elements: s.to_vec(),
                    n,
                    reason: "wrong subset size",
                });
            }
            v.coords[lex_rank(s, n)?] += 1;
        }
        Ok(v)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn same_shape(&self, other: &Self) -> Result<()> {
        if self.k != other.k || self.n != other.n {
            return Err(Error::ShapeMismatch {
                expected_k: self.k,
                expected_n: self.n,
                k: other.k,
                n: other.n,
            });
        }
        Ok(())
    }

    /// Coordinatewise sum; `None` if any coordinate overflows `i64`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.k != other.k || self.n != other.n {
            return None;
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { coords, ..*self })
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let neg = other.checked_scale(-1)?;
        self.checked_add(&neg)
    }

    pub fn checked_scale(&self, c: i64) -> Option<Self> {
        let coords = self
            .coords
            .iter()
            .map(|a| a.checked_mul(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { coords, ..*self })
    }

    /// Relabel coordinates: the output at `I` is the input at `sort(sigma(I))`.
    ///
    /// `sigma[i - 1]` is the image of label `i`.
    pub fn permute(&self, table: &SubsetTable, sigma: &[usize]) -> Self {
        let coords = (0..self.coords.len())
            .map(|r| {
                let img = table
                    .subset(r)
                    .iter()
                    .fold(0u64, |m, &e| m | 1 << sigma[e - 1]);
                self.coords[table.rank_of_mask(img)]
            })
            .collect();
        Self { coords, ..*self }
    }
}

impl fmt::Display for PlueckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
