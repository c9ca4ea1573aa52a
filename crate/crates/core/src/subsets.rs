//! Lexicographic indexing of k-subsets of `[n] = {1, ..., n}`.
//!
//! Ground-set labels are 1-based everywhere in the public API; ranks are
//! 0-based positions in lexicographic order (`123 < 124 < ... < (n-2)(n-1)n`).

use std::fmt;

use crate::error::{Error, Result};

/// Binomial coefficient; returns 0 when `r > m`.
pub fn binomial(m: usize, r: usize) -> usize {
    if r > m {
        return 0;
    }
    let r = r.min(m - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// A k-subset of `[n]` together with its lexicographic rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex {
    elements: Vec<usize>,
    rank: usize,
}

impl SubsetIndex {
    pub fn new(elements: &[usize], n: usize) -> Result<Self> {
        let rank = lex_rank(elements, n)?;
        Ok(Self {
            elements: elements.to_vec(),
            rank,
        })
    }

    pub fn from_rank(rank: usize, k: usize, n: usize) -> Result<Self> {
        let elements = lex_unrank(rank, k, n)?;
        Ok(Self { elements, rank })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&label(&self.elements))
    }
}

/// Compact label of a subset: `123` when every element is a single digit,
/// otherwise `1.2.13`.
pub fn label(elements: &[usize]) -> String {
    if elements.iter().all(|&e| e < 10) {
        elements.iter().map(|e| e.to_string()).collect()
    } else {
        elements
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn check_subset(elements: &[usize], n: usize) -> Result<()> {
    let bad = |reason| {
        Err(Error::InvalidSubset {
            elements: elements.to_vec(),
            n,
            reason,
        })
    };
    if elements.len() > n {
        return bad("more elements than the ground set");
    }
    for (pos, &e) in elements.iter().enumerate() {
        if e == 0 || e > n {
            return bad("element out of range 1..=n");
        }
        if pos > 0 {
            let prev = elements[pos - 1];
            if prev == e {
                return bad("duplicated element");
            }
            if prev > e {
                return bad("elements not strictly increasing");
            }
        }
    }
    Ok(())
}

/// 0-based lexicographic rank of a strictly increasing subset of `[n]`.
pub fn lex_rank(elements: &[usize], n: usize) -> Result<usize> {
    check_subset(elements, n)?;
    Ok(lex_rank_unchecked(elements, n))
}

pub(crate) fn lex_rank_unchecked(elements: &[usize], n: usize) -> usize {
    let k = elements.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &c) in elements.iter().enumerate() {
        for j in prev + 1..c {
            rank += binomial(n - j, k - i - 1);
        }
        prev = c;
    }
    rank
}

/// Inverse of [`lex_rank`].
pub fn lex_unrank(mut rank: usize, k: usize, n: usize) -> Result<Vec<usize>> {
    if k > n {
        return Err(Error::UnsupportedShape {
            k,
            n,
            reason: "k exceeds n",
        });
    }
    let total = binomial(n, k);
    if rank >= total {
        return Err(Error::InvalidSubset {
            elements: vec![],
            n,
            reason: "rank out of range",
        });
    }
    let mut out = Vec::with_capacity(k);
    let mut next = 1;
    for i in 0..k {
        loop {
            let block = binomial(n - next, k - i - 1);
            if rank < block {
                out.push(next);
                next += 1;
                break;
            }
            rank -= block;
            next += 1;
        }
    }
    Ok(out)
}

/// All k-subsets of `[n]` in lexicographic order, plus a bitmask lookup.
#[derive(Debug, Clone)]
pub struct SubsetTable {
    k: usize,
    n: usize,
    subsets: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

impl SubsetTable {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k > n || n > 63 {
            return Err(Error::UnsupportedShape {
                k,
                n,
                reason: "need k <= n <= 63",
            });
        }
        let subsets: Vec<Vec<usize>> = (0..binomial(n, k))
            .map(|r| lex_unrank(r, k, n))
            .collect::<Result<_>>()?;
        let masks = subsets.iter().map(|s| mask_of(s)).collect();
        Ok(Self {
            k,
            n,
            subsets,
            masks,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subset(&self, rank: usize) -> &[usize] {
        &self.subsets[rank]
    }

    pub fn mask(&self, rank: usize) -> u64 {
        self.masks[rank]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.subsets.iter().map(Vec::as_slice)
    }

    /// Rank of a subset given as a bitmask over labels (bit `i` = label `i`).
    pub fn rank_of_mask(&self, mask: u64) -> usize {
        let elems: Vec<usize> = (1..=self.n).filter(|i| mask >> i & 1 == 1).collect();
        debug_assert_eq!(elems.len(), self.k);
        lex_rank_unchecked(&elems, self.n)
    }

    pub fn rank_of(&self, elements: &[usize]) -> Result<usize> {
        if elements.len() != self.k {
            return Err(Error::InvalidSubset {
                elements: elements.to_vec(),
                n: self.n,
                reason: "wrong subset size",
            });
        }
        lex_rank(elements, self.n)
    }
}

pub(crate) fn mask_of(elements: &[usize]) -> u64 {
    elements.iter().fold(0u64, |m, &e| m | 1 << e)
}

/// Parse a subset label such as `356`, `1.2.10` or `{3,5,6}`.
pub fn parse_label(text: &str) -> Result<Vec<usize>> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}');
    if t.is_empty() {
        return Err(Error::Parse(format!("empty subset label {text:?}")));
    }
    let parts: Vec<&str> = if t.contains('.') || t.contains(',') || t.contains(' ') {
        t.split(['.', ',', ' ']).filter(|s| !s.is_empty()).collect()
    } else {
        t.split("").filter(|s| !s.is_empty()).collect()
    };
    parts
        .into_iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad subset label {text:?}")))
        })
        .collect()
}
