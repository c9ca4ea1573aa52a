//! Compatibility graphs: rays joined when their sum stays in the fan.

use crate::chirotope::Chirotope;
use crate::cliques::{self, Bitset};
use crate::error::{Error, Result};
use crate::membership::{first_unique_minimum, satisfy_eqn_sum, ChiPredicate};
use crate::par;
use crate::pluecker::PlueckerVector;
use crate::relations::RelationSet;

/// Which membership predicate defines edges.
#[derive(Debug, Clone)]
pub enum GraphMode {
    /// Dressian membership of the pairwise sum.
    Plain,
    /// Chirotropical membership of the pairwise sum.
    Chi(ChiPredicate),
}

impl GraphMode {
    pub fn chi(chi: &Chirotope, rels: &RelationSet) -> Result<Self> {
        Ok(Self::Chi(ChiPredicate::new(chi, rels)?))
    }

    pub fn chirotope(&self) -> Option<&Chirotope> {
        match self {
            Self::Plain => None,
            Self::Chi(p) => Some(p.chirotope()),
        }
    }

    fn vertex_ok(&self, x: &[i64], rels: &RelationSet) -> bool {
        match self {
            Self::Plain => first_unique_minimum(x, rels).is_none(),
            Self::Chi(p) => p.holds(x, rels),
        }
    }

    fn pair_ok(&self, x: &[i64], y: &[i64], rels: &RelationSet) -> bool {
        match self {
            Self::Plain => satisfy_eqn_sum(x, y, rels),
            Self::Chi(p) => p.holds_for_sum(x, y, rels),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CompatibilityGraph {
    adjacency: Vec<Bitset>,
    mode: GraphMode,
}

impl CompatibilityGraph {
    pub fn ray_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn mode(&self) -> &GraphMode {
        &self.mode
    }

    pub fn adjacency(&self) -> &[Bitset] {
        &self.adjacency
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count()
    }

    /// Sorted edge list `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.ray_count())
            .flat_map(|a| {
                self.adjacency[a]
                    .iter()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Bitset::count).sum::<usize>() / 2
    }

    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        cliques::maximal_cliques(&self.adjacency)
    }
}

/// Join `i < j` whenever `rays[i] + rays[j]` satisfies the mode's predicate.
/// Every ray must satisfy the predicate on its own.
pub fn build_graph(rays: &[PlueckerVector], mode: GraphMode, rels: &RelationSet) -> Result<CompatibilityGraph> {
    for (i, r) in rays.iter().enumerate() {
        if r.k() != rels.k() || r.n() != rels.n() {
            return Err(Error::ShapeMismatch {
                expected_k: rels.k(),
                expected_n: rels.n(),
                k: r.k(),
                n: r.n(),
            });
        }
        if !mode.vertex_ok(r.coords(), rels) {
            return Err(Error::Ingestion(format!(
                "ray {i} fails the vertex predicate of the graph"
            )));
        }
    }
    let len = rays.len();
    let rows: Vec<Vec<usize>> = par::map_range(len, |i| {
        (i + 1..len)
            .filter(|&j| mode.pair_ok(rays[i].coords(), rays[j].coords(), rels))
            .collect()
    });
    let mut adjacency = vec![Bitset::new(len); len];
    for (i, row) in rows.into_iter().enumerate() {
        for j in row {
            adjacency[i].insert(j);
            adjacency[j].insert(i);
        }
    }
    Ok(CompatibilityGraph { adjacency, mode })
}
