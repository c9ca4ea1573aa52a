//! Three-term Pluecker relations `P_{k,n}`.
//!
//! For a `(k-2)`-subset `L` and a 4-subset `a < b < c < d` disjoint from it,
//! the relation is
//! `p_{Lab} p_{Lcd} - p_{Lac} p_{Lbd} + p_{Lad} p_{Lbc}`.
//! Terms are stored as pairs of subset ranks so that evaluating a relation at
//! a vector is six array reads.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::subsets::{binomial, label, SubsetTable};

/// Coefficient signs of the terms `(Lab·Lcd, Lac·Lbd, Lad·Lbc)`.
pub const TERM_SIGNS: [i8; 3] = [1, -1, 1];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThreeTermRelation {
    pub(crate) base: Vec<usize>,
    pub(crate) quad: [usize; 4],
    pub(crate) terms: [[usize; 2]; 3],
}

impl ThreeTermRelation {
    /// The common `(k-2)`-subset `L`.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn quad(&self) -> [usize; 4] {
        self.quad
    }

    /// Subset ranks of the three monomials, in the order
    /// `(Lab, Lcd), (Lac, Lbd), (Lad, Lbc)`.
    pub fn terms(&self) -> &[[usize; 2]; 3] {
        &self.terms
    }

    pub fn signs(&self) -> [i8; 3] {
        TERM_SIGNS
    }

    /// Whether the subset with the given rank occurs in some term.
    pub fn involves(&self, rank: usize) -> bool {
        self.terms.iter().flatten().any(|&r| r == rank)
    }

    /// The six k-subsets of the relation, as sorted label vectors, term by term.
    pub fn term_subsets(&self) -> [[Vec<usize>; 2]; 3] {
        let [a, b, c, d] = self.quad;
        let with = |x: usize, y: usize| {
            let mut s = self.base.clone();
            s.push(x);
            s.push(y);
            s.sort_unstable();
            s
        };
        [
            [with(a, b), with(c, d)],
            [with(a, c), with(b, d)],
            [with(a, d), with(b, c)],
        ]
    }

    /// Text form used by the `relations` command:
    /// `L={1} quad={2,3,4,5} terms=(123·145, 124·135, 125·134)`.
    pub fn describe(&self) -> String {
        let terms = self
            .term_subsets()
            .iter()
            .map(|[x, y]| format!("{}·{}", label(x), label(y)))
            .join(", ");
        format!(
            "L={{{}}} quad={{{}}} terms=({})",
            self.base.iter().join(","),
            self.quad.iter().join(","),
            terms
        )
    }
}

impl fmt::Display for ThreeTermRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L={{{}}}, quad={{{}}}",
            self.base.iter().join(","),
            self.quad.iter().join(",")
        )
    }
}

/// Expected relation count `C(n, k-2) * C(n-k+2, 4)`.
pub fn relation_count(k: usize, n: usize) -> usize {
    if k < 2 || k + 2 > n {
        return 0;
    }
    binomial(n, k - 2) * binomial(n - k + 2, 4)
}

/// All three-term relations for `2 <= k <= n - 2`, ordered lexicographically
/// on `L` and then on the quadruple.
pub fn generate_three_term(k: usize, n: usize) -> Result<Vec<ThreeTermRelation>> {
    if k < 2 || k + 2 > n {
        return Err(Error::UnsupportedShape {
            k,
            n,
            reason: "three-term relations need 2 <= k <= n - 2",
        });
    }
    let table = SubsetTable::new(k, n)?;
    let mut out = Vec::with_capacity(relation_count(k, n));
    for base in (1..=n).combinations(k - 2) {
        let rest: Vec<usize> = (1..=n).filter(|i| !base.contains(i)).collect();
        for quad in rest.iter().copied().combinations(4) {
            let [a, b, c, d] = [quad[0], quad[1], quad[2], quad[3]];
            let lm = crate::subsets::mask_of(&base);
            let r = |x: usize, y: usize| table.rank_of_mask(lm | 1 << x | 1 << y);
            out.push(ThreeTermRelation {
                base: base.clone(),
                quad: [a, b, c, d],
                terms: [[r(a, b), r(c, d)], [r(a, c), r(b, d)], [r(a, d), r(b, c)]],
            });
        }
    }
    Ok(out)
}

/// Relations touching a given subset rank.
pub fn relations_containing(rank: usize, relations: &[ThreeTermRelation]) -> Vec<&ThreeTermRelation> {
    relations.iter().filter(|r| r.involves(rank)).collect()
}

/// Relations for one `(k, n)` with a per-subset incidence index.
#[derive(Debug, Clone)]
pub struct RelationSet {
    k: usize,
    n: usize,
    table: SubsetTable,
    relations: Vec<ThreeTermRelation>,
    incidence: Vec<Vec<usize>>,
}

impl RelationSet {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        let relations = generate_three_term(k, n)?;
        let table = SubsetTable::new(k, n)?;
        let mut incidence = vec![Vec::new(); table.len()];
        for (id, rel) in relations.iter().enumerate() {
            for &r in rel.terms.iter().flatten() {
                incidence[r].push(id);
            }
        }
        Ok(Self {
            k,
            n,
            table,
            relations,
            incidence,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &SubsetTable {
        &self.table
    }

    pub fn relations(&self) -> &[ThreeTermRelation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Number of coordinates, `C(n, k)`.
    pub fn dim(&self) -> usize {
        self.table.len()
    }

    /// Indices of the relations in which the given subset rank occurs.
    pub fn containing(&self, rank: usize) -> &[usize] {
        &self.incidence[rank]
    }
}
