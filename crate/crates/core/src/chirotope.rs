//! Uniform chirotopes, their group actions, and orbit expansion.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::par;
use crate::relations::{RelationSet, ThreeTermRelation, TERM_SIGNS};
use crate::subsets::{binomial, label, lex_rank, parse_label, SubsetTable};

/// Sign vector in `{+1, -1}` indexed by the k-subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    k: usize,
    n: usize,
    signs: Vec<i8>,
}

impl Chirotope {
    pub fn new(k: usize, n: usize, signs: Vec<i8>) -> Result<Self> {
        let expected = binomial(n, k);
        if signs.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: signs.len(),
            });
        }
        if let Some((position, &value)) = signs.iter().find_position(|s| **s != 1 && **s != -1) {
            return Err(Error::NonUniformSign { position, value });
        }
        Ok(Self { k, n, signs })
    }

    /// The totally positive chirotope `+`.
    pub fn all_plus(k: usize, n: usize) -> Self {
        Self {
            k,
            n,
            signs: vec![1; binomial(n, k)],
        }
    }

    /// Parse a string over `{+, -}` (optionally wrapped in parentheses).
    pub fn from_sign_string(k: usize, n: usize, text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let signs = t
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::Parse(format!("unexpected sign character {other:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Self::new(k, n, signs)
    }

    /// Negative-subset notation: the listed subsets carry `-`, all others `+`.
    pub fn from_negatives<S: AsRef<[usize]>>(k: usize, n: usize, negatives: &[S]) -> Result<Self> {
        let mut signs = vec![1i8; binomial(n, k)];
        for s in negatives {
            let s = s.as_ref();
            if s.len() != k {
                return Err(Error::InvalidSubset {
                    elements: s.to_vec(),
                    n,
                    reason: "wrong subset size",
                });
            }
            let r = lex_rank(s, n)?;
            if signs[r] == -1 {
                return Err(Error::InvalidSubset {
                    elements: s.to_vec(),
                    n,
                    reason: "listed twice",
                });
            }
            signs[r] = -1;
        }
        Ok(Self { k, n, signs })
    }

    /// Parse `"356,456,457,467"`, `"(356,456)"` or `"+"`.
    pub fn parse_negative_notation(k: usize, n: usize, text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t == "+" || t.is_empty() {
            return Ok(Self::all_plus(k, n));
        }
        let subsets = t
            .split([',', ' ', ';'])
            .filter(|p| !p.is_empty())
            .map(parse_label)
            .collect::<Result<Vec<_>>>()?;
        Self::from_negatives(k, n, &subsets)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, rank: usize) -> i8 {
        self.signs[rank]
    }

    pub fn sign_string(&self) -> String {
        self.signs
            .iter()
            .map(|&s| if s > 0 { '+' } else { '-' })
            .collect()
    }

    /// Subsets carrying a negative sign.
    pub fn negatives(&self) -> Vec<Vec<usize>> {
        let table = SubsetTable::new(self.k, self.n).expect("shape validated on construction");
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s < 0)
            .map(|(r, _)| table.subset(r).to_vec())
            .collect()
    }

    /// Inverse of [`parse_negative_notation`](Self::parse_negative_notation):
    /// `(356,456,457,467)` or `+`.
    pub fn negative_notation(&self) -> String {
        let negs = self.negatives();
        if negs.is_empty() {
            "+".to_string()
        } else {
            format!("({})", negs.iter().map(|s| label(s)).join(","))
        }
    }

    /// Signed monomial values `(+χ_{Lab}χ_{Lcd}, -χ_{Lac}χ_{Lbd}, +χ_{Lad}χ_{Lbc})`.
    pub fn monomial_signs(&self, rel: &ThreeTermRelation) -> [i8; 3] {
        let t = rel.terms();
        [0, 1, 2].map(|j| TERM_SIGNS[j] * self.signs[t[j][0]] * self.signs[t[j][1]])
    }

    /// Index of the term whose monomial sign differs from the other two, or
    /// `None` if all three agree (the relation is violated).
    pub fn lone_term(&self, rel: &ThreeTermRelation) -> Option<usize> {
        let m = self.monomial_signs(rel);
        if m[0] == m[1] && m[1] == m[2] {
            None
        } else if m[0] == m[1] {
            Some(2)
        } else if m[0] == m[2] {
            Some(1)
        } else {
            Some(0)
        }
    }

    fn check_shape(&self, rels: &RelationSet) -> Result<()> {
        if rels.k() != self.k || rels.n() != self.n {
            return Err(Error::ShapeMismatch {
                expected_k: rels.k(),
                expected_n: rels.n(),
                k: self.k,
                n: self.n,
            });
        }
        Ok(())
    }

    /// First relation whose signed monomials all share one sign.
    pub fn first_violation<'a>(&self, rels: &'a RelationSet) -> Result<Option<&'a ThreeTermRelation>> {
        self.check_shape(rels)?;
        Ok(rels.relations().iter().find(|r| self.lone_term(r).is_none()))
    }

    /// Grassmann-Pluecker sign condition on every three-term relation.
    pub fn validate(&self, rels: &RelationSet) -> Result<bool> {
        Ok(self.first_violation(rels)?.is_none())
    }

    /// Like [`validate`](Self::validate) but reports the violated relation.
    pub fn ensure_valid(&self, rels: &RelationSet) -> Result<()> {
        match self.first_violation(rels)? {
            None => Ok(()),
            Some(r) => Err(Error::InvalidChirotope {
                relation: r.to_string(),
            }),
        }
    }

    /// `χ(i_1, ..., i_k) ↦ χ(σ(i_1), ..., σ(i_k))` with `χ` extended as an
    /// alternating map: the output at `I` is the input at `sort(σ(I))` times
    /// the sign of the sorting permutation. `sigma[i - 1]` is the image of
    /// label `i`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Self> {
        check_permutation(sigma, self.n)?;
        let table = SubsetTable::new(self.k, self.n)?;
        let map = position_map(&table, sigma);
        let signs = map
            .iter()
            .enumerate()
            .map(|(r, &src)| self.signs[src] * sort_sign(table.subset(r), sigma))
            .collect();
        Ok(Self { signs, ..*self })
    }

    /// `χ_I ↦ (∏_{i∈I} t_i) χ_I`.
    pub fn reorient(&self, t: &[i8]) -> Result<Self> {
        if t.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: t.len(),
            });
        }
        if let Some((position, &value)) = t.iter().find_position(|s| **s != 1 && **s != -1) {
            return Err(Error::NonUniformSign { position, value });
        }
        let table = SubsetTable::new(self.k, self.n)?;
        let signs = self
            .signs
            .iter()
            .enumerate()
            .map(|(r, &s)| table.subset(r).iter().fold(s, |acc, &i| acc * t[i - 1]))
            .collect();
        Ok(Self { signs, ..*self })
    }

    pub(crate) fn key(&self) -> SignKey {
        SignKey::from_signs(&self.signs)
    }
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sign_string())
    }
}

pub(crate) fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::InvalidPermutation {
            n,
            reason: "wrong length",
        });
    }
    let mut seen = vec![false; n + 1];
    for &s in sigma {
        if s == 0 || s > n {
            return Err(Error::InvalidPermutation {
                n,
                reason: "image out of range",
            });
        }
        if seen[s] {
            return Err(Error::InvalidPermutation {
                n,
                reason: "not injective",
            });
        }
        seen[s] = true;
    }
    Ok(())
}

/// Sign of the permutation sorting `(σ(i_1), ..., σ(i_k))`.
pub(crate) fn sort_sign(subset: &[usize], sigma: &[usize]) -> i8 {
    let img: Vec<usize> = subset.iter().map(|&e| sigma[e - 1]).collect();
    let inversions = img
        .iter()
        .enumerate()
        .map(|(i, a)| img[i + 1..].iter().filter(|b| *b < a).count())
        .sum::<usize>();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `map[r]` = rank of `sort(sigma(I_r))`.
pub(crate) fn position_map(table: &SubsetTable, sigma: &[usize]) -> Vec<usize> {
    (0..table.len())
        .map(|r| {
            let img = table
                .subset(r)
                .iter()
                .fold(0u64, |m, &e| m | 1 << sigma[e - 1]);
            table.rank_of_mask(img)
        })
        .collect()
}

/// Sign vector packed into a `u128` with position 0 as the most significant
/// bit and `1` meaning `-`; integer order equals lexicographic order of the
/// `+/-` strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct SignKey(u128);

impl SignKey {
    pub(crate) fn from_signs(signs: &[i8]) -> Self {
        assert!(signs.len() <= 128, "sign vectors longer than 128 are not packed");
        let len = signs.len();
        Self(
            signs
                .iter()
                .enumerate()
                .filter(|(_, s)| **s < 0)
                .fold(0u128, |acc, (i, _)| acc | 1 << (len - 1 - i)),
        )
    }

    fn to_signs(self, len: usize) -> Vec<i8> {
        (0..len)
            .map(|i| if self.0 >> (len - 1 - i) & 1 == 1 { -1 } else { 1 })
            .collect()
    }
}

/// Deduplicated chirotopes sharing `(k, n)`, in lexicographic sign order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChirotopeSet {
    k: usize,
    n: usize,
    members: Vec<Chirotope>,
}

impl ChirotopeSet {
    pub fn new(k: usize, n: usize, members: Vec<Chirotope>) -> Result<Self> {
        for c in &members {
            if c.k != k || c.n != n {
                return Err(Error::ShapeMismatch {
                    expected_k: k,
                    expected_n: n,
                    k: c.k,
                    n: c.n,
                });
            }
        }
        let mut seen = HashSet::new();
        let members = members.into_iter().filter(|c| seen.insert(c.signs.clone())).collect();
        Ok(Self { k, n, members })
    }

    pub fn empty(k: usize, n: usize) -> Self {
        Self {
            k,
            n,
            members: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Chirotope] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, chi: &Chirotope) -> bool {
        self.members.iter().any(|c| c == chi)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Chirotope> {
        self.members.iter()
    }
}

/// Sign masks of the reorientations: entry `b` flips every subset meeting
/// the label set encoded by `b` in an odd number of elements.
fn reorientation_masks(table: &SubsetTable) -> Vec<u128> {
    let n = table.n();
    let len = table.len();
    let per_label: Vec<u128> = (1..=n)
        .map(|i| {
            (0..len)
                .filter(|&r| table.subset(r).contains(&i))
                .fold(0u128, |acc, r| acc | 1 << (len - 1 - r))
        })
        .collect();
    (0..1usize << n)
        .map(|b| {
            (0..n)
                .filter(|i| b >> i & 1 == 1)
                .fold(0u128, |acc, i| acc ^ per_label[i])
        })
        .collect()
}

fn permute_key(key: u128, map: &[usize]) -> u128 {
    let len = map.len();
    map.iter().enumerate().fold(0u128, |acc, (r, &src)| {
        acc | (key >> (len - 1 - src) & 1) << (len - 1 - r)
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OrbitMode {
    /// Every relabeling and every reorientation, as distinct sign vectors.
    Full,
    /// One lexicographically smallest representative per reorientation class.
    ModReorientation,
}

fn orbit_keys(classes: &ChirotopeSet, mode: OrbitMode) -> Result<BTreeSet<u128>> {
    let (k, n) = (classes.k, classes.n);
    let table = SubsetTable::new(k, n)?;
    if table.len() > 128 {
        return Err(Error::UnsupportedShape {
            k,
            n,
            reason: "orbit expansion packs at most 128 signs",
        });
    }
    let flips = reorientation_masks(&table);
    let perms = all_permutations(n);
    let len = table.len();
    let maps: Vec<(Vec<usize>, u128)> = par::map_slice(&perms, |s| {
        let odd = (0..len)
            .filter(|&r| sort_sign(table.subset(r), s) < 0)
            .fold(0u128, |acc, r| acc | 1 << (len - 1 - r));
        (position_map(&table, s), odd)
    });
    let keys: Vec<u128> = classes.members.iter().map(|c| c.key().0).collect();
    let chunks: Vec<BTreeSet<u128>> = par::map_slice(&maps, |(map, odd)| {
        let mut local = BTreeSet::new();
        for &key in &keys {
            let moved = permute_key(key, map) ^ odd;
            match mode {
                OrbitMode::Full => local.extend(flips.iter().map(|f| moved ^ f)),
                OrbitMode::ModReorientation => {
                    let canonical = flips.iter().map(|f| moved ^ f).min().expect("2^n > 0 flips");
                    local.insert(canonical);
                }
            }
        }
        local
    });
    let mut all = BTreeSet::new();
    for c in chunks {
        all.extend(c);
    }
    Ok(all)
}

fn keys_to_set(k: usize, n: usize, keys: BTreeSet<u128>) -> ChirotopeSet {
    let len = binomial(n, k);
    let members = keys
        .into_iter()
        .map(|key| Chirotope {
            k,
            n,
            signs: SignKey(key).to_signs(len),
        })
        .collect();
    ChirotopeSet { k, n, members }
}

/// Closure under all relabelings and reorientations, with one member per
/// reorientation class: the lexicographically smallest sign vector of the
/// class. Output is sorted lexicographically.
///
/// Reorientation never changes which vectors satisfy the chirotropical
/// relations, so this set carries every distinct chirotropical Dressian of
/// the orbit. For the 4 classes on 6 elements it has 372 members.
pub fn expand_orbit(classes: &ChirotopeSet) -> Result<ChirotopeSet> {
    if classes.is_empty() {
        return Ok(ChirotopeSet::empty(classes.k, classes.n));
    }
    let keys = orbit_keys(classes, OrbitMode::ModReorientation)?;
    Ok(keys_to_set(classes.k, classes.n, keys))
}

/// Closure under all relabelings and reorientations, every distinct sign
/// vector kept, in lexicographic order.
pub fn full_orbit(classes: &ChirotopeSet) -> Result<ChirotopeSet> {
    if classes.is_empty() {
        return Ok(ChirotopeSet::empty(classes.k, classes.n));
    }
    let keys = orbit_keys(classes, OrbitMode::Full)?;
    Ok(keys_to_set(classes.k, classes.n, keys))
}

/// Lexicographically smallest member of the reorientation class of `chi`.
pub fn reorientation_representative(chi: &Chirotope) -> Result<Chirotope> {
    let table = SubsetTable::new(chi.k, chi.n)?;
    let key = chi.key().0;
    let best = reorientation_masks(&table)
        .into_iter()
        .map(|f| key ^ f)
        .min()
        .expect("2^n > 0 flips");
    Ok(Chirotope {
        signs: SignKey(best).to_signs(table.len()),
        ..*chi
    })
}


#[cfg(test)]
mod orbit_size {
    use super::*;

    #[test]
    fn three_six_orbit_has_372_members() {
        let classes = crate::catalog::classes_3_6();
        let orbit = expand_orbit(&classes).unwrap();
        assert_eq!(orbit.len(), 372);
        let full = full_orbit(&classes).unwrap();
        assert_eq!(full.len(), 372 * 64);
        assert!(full.len() <= classes.len() * 720 * 64);
        for c in orbit.iter() {
            assert_eq!(&reorientation_representative(c).unwrap(), c);
        }
    }
}
