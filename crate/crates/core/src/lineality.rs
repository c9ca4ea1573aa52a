//! The lineality space `L_{k,n}` and exact dimension counts modulo it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bareiss;
use crate::error::{Error, Result};
use crate::pluecker::PlueckerVector;
use crate::subsets::SubsetTable;

/// The `n` generators of the lineality space: the `i`-th has a 1 at every
/// subset containing `i`.
#[derive(Debug, Clone)]
pub struct LinealityBasis {
    k: usize,
    n: usize,
    vectors: Vec<PlueckerVector>,
    rank: usize,
    /// Reduced row echelon form of the generators: (pivot column, row).
    rref: Vec<(usize, Vec<BigRational>)>,
}

impl LinealityBasis {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        let table = SubsetTable::new(k, n)?;
        let vectors: Vec<PlueckerVector> = (1..=n)
            .map(|i| {
                let coords = table
                    .iter()
                    .map(|s| i64::from(s.contains(&i)))
                    .collect();
                PlueckerVector::new(k, n, coords)
            })
            .collect::<Result<_>>()?;
        let rows: Vec<Vec<i64>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        let rank = bareiss::rank(&rows);
        let rref = reduced_echelon(&rows);
        debug_assert_eq!(rref.len(), rank);
        Ok(Self {
            k,
            n,
            vectors,
            rank,
            rref,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[PlueckerVector] {
        &self.vectors
    }

    /// Rank of the lineality span (equals `n` for `0 < k < n`).
    pub fn rank(&self) -> usize {
        self.rank
    }

    fn check(&self, v: &PlueckerVector) -> Result<()> {
        if v.k() != self.k || v.n() != self.n {
            return Err(Error::ShapeMismatch {
                expected_k: self.k,
                expected_n: self.n,
                k: v.k(),
                n: v.n(),
            });
        }
        Ok(())
    }

    /// `rank(span(vectors + lineality)) - rank(lineality)`.
    pub fn rank_mod<'a, I>(&self, vectors: I) -> Result<usize>
    where
        I: IntoIterator<Item = &'a PlueckerVector>,
    {
        let mut rows: Vec<Vec<i64>> = self.vectors.iter().map(|v| v.coords().to_vec()).collect();
        for v in vectors {
            self.check(v)?;
            rows.push(v.coords().to_vec());
        }
        Ok(bareiss::rank(&rows) - self.rank)
    }

    /// Same as [`rank_mod`](Self::rank_mod) on raw coordinate slices.
    pub(crate) fn rank_mod_coords(&self, vectors: &[&[i64]]) -> usize {
        let mut rows: Vec<Vec<i64>> = self.vectors.iter().map(|v| v.coords().to_vec()).collect();
        rows.extend(vectors.iter().map(|c| c.to_vec()));
        bareiss::rank(&rows) - self.rank
    }

    /// Whether `u - v` lies in the lineality span.
    pub fn equal_mod(&self, u: &PlueckerVector, v: &PlueckerVector) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        let diff: Vec<i128> = u
            .coords()
            .iter()
            .zip(v.coords())
            .map(|(a, b)| *a as i128 - *b as i128)
            .collect();
        if diff.iter().all(|d| *d == 0) {
            return Ok(true);
        }
        if let Some(small) = diff
            .iter()
            .map(|d| i64::try_from(*d).ok())
            .collect::<Option<Vec<i64>>>()
        {
            return Ok(self.rank_mod_coords(&[&small]) == 0);
        }
        let mut rows: Vec<Vec<BigInt>> = self
            .vectors
            .iter()
            .map(|l| l.coords().iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        rows.push(diff.into_iter().map(BigInt::from).collect());
        Ok(bareiss::rank_bigint_rows(rows) == self.rank)
    }
}

impl LinealityBasis {
    /// Canonical representative of `v + L`: the unique vector in the coset
    /// that vanishes on the pivot columns of the lineality generators.
    /// Two vectors are equal modulo lineality iff their normal forms agree.
    pub fn normal_form(&self, v: &PlueckerVector) -> Result<Vec<BigRational>> {
        self.check(v)?;
        let mut out: Vec<BigRational> = v
            .coords()
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        for (pivot, row) in &self.rref {
            let f = out[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        Ok(out)
    }

    /// Normal form scaled to a primitive integer vector (positive scaling
    /// only). Two vectors span the same ray modulo lineality iff these agree.
    pub fn ray_key(&self, v: &PlueckerVector) -> Result<Vec<BigInt>> {
        use num_integer::Integer;
        let nf = self.normal_form(v)?;
        let lcm = nf
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = nf.iter().map(|q| (q * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return Ok(ints);
        }
        Ok(ints.into_iter().map(|x| x / &g).collect())
    }
}

fn reduced_echelon(rows: &[Vec<i64>]) -> Vec<(usize, Vec<BigRational>)> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect()
        })
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots.into_iter().zip(m).collect()
}

/// Free-function form of [`LinealityBasis::rank_mod`].
pub fn rank_mod_lineality(vectors: &[PlueckerVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    LinealityBasis::new(first.k(), first.n())?.rank_mod(vectors)
}

/// Free-function form of [`LinealityBasis::equal_mod`].
pub fn equal_mod_lineality(u: &PlueckerVector, v: &PlueckerVector) -> Result<bool> {
    u.same_shape(v)?;
    LinealityBasis::new(u.k(), u.n())?.equal_mod(u, v)
}
