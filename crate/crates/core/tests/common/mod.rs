//! Independent oracles. Nothing here calls the library's own rank/sign logic.
#![allow(dead_code)]

use std::collections::HashMap;

use itertools::Itertools;

/// Lexicographic list of k-subsets of [n] (1-based) and their positions,
/// built by plain enumeration.
pub struct Lex {
    pub subsets: Vec<Vec<usize>>,
    pub pos: HashMap<Vec<usize>, usize>,
}

impl Lex {
    pub fn new(k: usize, n: usize) -> Self {
        let subsets: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
        let pos = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Self { subsets, pos }
    }

    pub fn at(&self, s: &[usize]) -> usize {
        let mut v = s.to_vec();
        v.sort_unstable();
        self.pos[&v]
    }
}

/// Every three-term relation as its three pairs of positions, plus the
/// textbook signs (+, -, +).
pub fn three_terms(k: usize, n: usize) -> Vec<[[usize; 2]; 3]> {
    let lex = Lex::new(k, n);
    let mut out = Vec::new();
    for base in (1..=n).combinations(k - 2) {
        let rest: Vec<usize> = (1..=n).filter(|x| !base.contains(x)).collect();
        for q in rest.iter().copied().combinations(4) {
            let (a, b, c, d) = (q[0], q[1], q[2], q[3]);
            let s = |x: usize, y: usize| {
                let mut v = base.clone();
                v.push(x);
                v.push(y);
                lex.at(&v)
            };
            out.push([[s(a, b), s(c, d)], [s(a, c), s(b, d)], [s(a, d), s(b, c)]]);
        }
    }
    out
}

/// Signed monomials of each relation under the sign vector.
pub fn monomials(signs: &[i8], rel: &[[usize; 2]; 3]) -> [i8; 3] {
    let t = [1i8, -1, 1];
    std::array::from_fn(|j| t[j] * signs[rel[j][0]] * signs[rel[j][1]])
}

/// Dressian membership straight from the definition.
pub fn in_dressian(x: &[i64], rels: &[[[usize; 2]; 3]]) -> bool {
    rels.iter().all(|r| {
        let v: Vec<i128> = r.iter().map(|p| x[p[0]] as i128 + x[p[1]] as i128).collect();
        let m = *v.iter().min().unwrap();
        v.iter().filter(|&&t| t == m).count() >= 2
    })
}

/// Chirotropical membership straight from the definition: the term whose
/// signed monomial is in the minority equals the minimum of the other two.
pub fn in_chi_dressian(x: &[i64], signs: &[i8], rels: &[[[usize; 2]; 3]]) -> bool {
    rels.iter().all(|r| {
        let m = monomials(signs, r);
        let plus = m.iter().filter(|&&s| s > 0).count();
        let lone = if plus == 1 {
            m.iter().position(|&s| s > 0)
        } else if plus == 2 {
            m.iter().position(|&s| s < 0)
        } else {
            return false;
        }
        .unwrap();
        let v: Vec<i128> = r.iter().map(|p| x[p[0]] as i128 + x[p[1]] as i128).collect();
        let others = (0..3).filter(|&j| j != lone).map(|j| v[j]).min().unwrap();
        v[lone] == others
    })
}

/// Lineality generator i: 1 at every subset containing label i.
pub fn lineality_vector(k: usize, n: usize, i: usize) -> Vec<i64> {
    Lex::new(k, n)
        .subsets
        .iter()
        .map(|s| s.contains(&i) as i64)
        .collect()
}

/// Rank over Q by plain fraction-based Gaussian elimination (f64-free).
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    use num_rational::BigRational;
    use num_traits::{Zero, One};
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone() * &inv;
                for (v, p) in row.iter_mut().zip(&pivot).skip(c) {
                    *v -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank modulo the lineality space of (k, n).
pub fn rank_mod_lineality(k: usize, n: usize, rows: &[Vec<i64>]) -> usize {
    let lin: Vec<Vec<i64>> = (1..=n).map(|i| lineality_vector(k, n, i)).collect();
    let mut all = lin.clone();
    all.extend(rows.iter().cloned());
    rational_rank(&all) - rational_rank(&lin)
}
