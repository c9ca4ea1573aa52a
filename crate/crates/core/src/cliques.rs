//! Maximal clique enumeration (Bron–Kerbosch with pivoting).
//!
//! The outer level branches on each vertex `v` with candidates restricted to
//! later neighbours and the excluded set to earlier neighbours, so branches
//! are independent and run in parallel. Inside a branch the pivot is the
//! vertex of `P ∪ X` with the most neighbours in `P` (ties to the lowest
//! index). Output is sorted, so it does not depend on scheduling.

use crate::par;

/// Fixed-width bitset over vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut b = Self::new(len);
        for &i in indices {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn and_count(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn and_not(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn or(&self, other: &Self) -> Self {
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

fn expand(
    adj: &[Bitset],
    r: &mut Vec<usize>,
    mut p: Bitset,
    mut x: Bitset,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (adj[u].and_count(&p), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let branch = p.and_not(&adj[pivot]);
    for v in branch.iter() {
        r.push(v);
        expand(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All maximal cliques of the graph with the given adjacency bitsets (no
/// self-loops), each sorted, the list sorted lexicographically.
pub fn maximal_cliques(adj: &[Bitset]) -> Vec<Vec<usize>> {
    let len = adj.len();
    let branches: Vec<Vec<Vec<usize>>> = par::map_range(len, |v| {
        let mut before = Bitset::new(len);
        let mut after = Bitset::new(len);
        for u in adj[v].iter() {
            if u < v {
                before.insert(u);
            } else if u > v {
                after.insert(u);
            }
        }
        let mut out = Vec::new();
        expand(adj, &mut vec![v], after, before, &mut out);
        out
    });
    let mut all: Vec<Vec<usize>> = branches.into_iter().flatten().collect();
    all.sort();
    all
}

/// Adjacency bitsets from an edge list on `len` vertices.
pub fn adjacency_from_edges(len: usize, edges: &[(usize, usize)]) -> Vec<Bitset> {
    let mut adj = vec![Bitset::new(len); len];
    for &(a, b) in edges {
        if a != b {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    adj
}
