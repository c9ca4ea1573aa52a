//! Membership in the Dressian and in chirotropical Dressians.
//!
//! Both predicates look at the three term values
//! `x_{Lab}+x_{Lcd}, x_{Lac}+x_{Lbd}, x_{Lad}+x_{Lbc}` of every three-term
//! relation. Values are accumulated in `i128`, so sums of two `i64`
//! vectors never overflow.

use crate::chirotope::Chirotope;
use crate::error::{Error, Result};
use crate::pluecker::PlueckerVector;
use crate::relations::{RelationSet, ThreeTermRelation};

#[inline]
fn term_values(rel: &ThreeTermRelation, at: impl Fn(usize) -> i128) -> [i128; 3] {
    let t = rel.terms();
    [
        at(t[0][0]) + at(t[0][1]),
        at(t[1][0]) + at(t[1][1]),
        at(t[2][0]) + at(t[2][1]),
    ]
}

#[inline]
fn min_attained_twice(v: [i128; 3]) -> bool {
    let m = v[0].min(v[1]).min(v[2]);
    v.iter().filter(|x| **x == m).count() >= 2
}

#[inline]
fn lone_equals_min(v: [i128; 3], lone: usize) -> bool {
    let (a, b) = match lone {
        0 => (v[1], v[2]),
        1 => (v[0], v[2]),
        _ => (v[0], v[1]),
    };
    v[lone] == a.min(b)
}

fn check_len(rels: &RelationSet, len: usize) -> Result<()> {
    if len != rels.dim() {
        return Err(Error::LengthMismatch {
            expected: rels.dim(),
            got: len,
        });
    }
    Ok(())
}

fn check_shape(rels: &RelationSet, x: &PlueckerVector) -> Result<()> {
    if x.k() != rels.k() || x.n() != rels.n() {
        return Err(Error::ShapeMismatch {
            expected_k: rels.k(),
            expected_n: rels.n(),
            k: x.k(),
            n: x.n(),
        });
    }
    check_len(rels, x.len())
}

/// First relation at which the minimum is attained only once.
pub fn first_unique_minimum<'a>(coords: &[i64], rels: &'a RelationSet) -> Option<&'a ThreeTermRelation> {
    rels.relations()
        .iter()
        .find(|r| !min_attained_twice(term_values(r, |i| coords[i] as i128)))
}

/// Dressian membership: the minimum of every relation is attained at least twice.
pub fn satisfy_eqn(x: &PlueckerVector, rels: &RelationSet) -> Result<bool> {
    check_shape(rels, x)?;
    Ok(first_unique_minimum(x.coords(), rels).is_none())
}

/// [`satisfy_eqn`] evaluated at `x + y` without materialising the sum.
pub fn satisfy_eqn_sum(x: &[i64], y: &[i64], rels: &RelationSet) -> bool {
    rels.relations()
        .iter()
        .all(|r| min_attained_twice(term_values(r, |i| x[i] as i128 + y[i] as i128)))
}

/// A chirotope compiled against a relation set: for every relation, the
/// index of the term whose monomial sign is the odd one out.
#[derive(Debug, Clone)]
pub struct ChiPredicate {
    chirotope: Chirotope,
    lone: Vec<u8>,
}

impl ChiPredicate {
    /// Fails if the chirotope has the wrong shape or violates the sign condition.
    pub fn new(chi: &Chirotope, rels: &RelationSet) -> Result<Self> {
        chi.ensure_valid(rels)?;
        let lone = rels
            .relations()
            .iter()
            .map(|r| chi.lone_term(r).expect("validated") as u8)
            .collect();
        Ok(Self {
            chirotope: chi.clone(),
            lone,
        })
    }

    pub fn chirotope(&self) -> &Chirotope {
        &self.chirotope
    }

    /// Index (0, 1 or 2) of the lone term of relation `id`.
    pub fn lone_term(&self, id: usize) -> usize {
        self.lone[id] as usize
    }

    /// First relation where the lone term differs from the minimum of the other two.
    pub fn first_violation<'a>(&self, coords: &[i64], rels: &'a RelationSet) -> Option<&'a ThreeTermRelation> {
        rels.relations()
            .iter()
            .zip(&self.lone)
            .find(|(r, &l)| !lone_equals_min(term_values(r, |i| coords[i] as i128), l as usize))
            .map(|(r, _)| r)
    }

    pub fn holds(&self, coords: &[i64], rels: &RelationSet) -> bool {
        rels.relations()
            .iter()
            .zip(&self.lone)
            .all(|(r, &l)| lone_equals_min(term_values(r, |i| coords[i] as i128), l as usize))
    }

    pub fn holds_for_sum(&self, x: &[i64], y: &[i64], rels: &RelationSet) -> bool {
        rels.relations().iter().zip(&self.lone).all(|(r, &l)| {
            lone_equals_min(term_values(r, |i| x[i] as i128 + y[i] as i128), l as usize)
        })
    }

    /// Membership of `x + y + z`.
    pub fn holds_for_sum3(&self, x: &[i64], y: &[i64], z: &[i64], rels: &RelationSet) -> bool {
        rels.relations().iter().zip(&self.lone).all(|(r, &l)| {
            lone_equals_min(
                term_values(r, |i| x[i] as i128 + y[i] as i128 + z[i] as i128),
                l as usize,
            )
        })
    }
}

/// Chirotropical membership: in every relation the lone term equals the
/// minimum of the other two.
pub fn satisfy_eqn_chi(chi: &Chirotope, x: &PlueckerVector, rels: &RelationSet) -> Result<bool> {
    check_shape(rels, x)?;
    let pred = ChiPredicate::new(chi, rels)?;
    Ok(pred.holds(x.coords(), rels))
}
