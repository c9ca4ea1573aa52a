//! The chirotropical Dressian pipeline: filter rays, build the compatibility
//! graph, enumerate maximal cliques, and close under intersection.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chirotope::Chirotope;
use crate::error::{Error, Result};
use crate::fan::{face_lattice, Fan};
use crate::graph::{build_graph, GraphMode};
use crate::lineality::LinealityBasis;
use crate::membership::ChiPredicate;
use crate::par;
use crate::pluecker::PlueckerVector;
use crate::relations::RelationSet;

/// Shared read-only context for one `(k, n)`.
#[derive(Debug, Clone)]
pub struct Context {
    pub rels: RelationSet,
    pub lin: LinealityBasis,
}

impl Context {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        Ok(Self {
            rels: RelationSet::new(k, n)?,
            lin: LinealityBasis::new(k, n)?,
        })
    }

    pub fn k(&self) -> usize {
        self.rels.k()
    }

    pub fn n(&self) -> usize {
        self.rels.n()
    }

    /// `(k - 1)(n - k - 1)`: the dimension of every maximal cone modulo lineality.
    pub fn expected_dimension(&self) -> usize {
        (self.k() - 1) * (self.n() - self.k() - 1)
    }
}

/// Indices (in input order) of the rays satisfying the chirotropical relations.
pub fn chi_rays(rays: &[PlueckerVector], pred: &ChiPredicate, rels: &RelationSet) -> Vec<usize> {
    let keep = par::map_slice(rays, |r| pred.holds(r.coords(), rels));
    keep.into_iter()
        .enumerate()
        .filter(|(_, k)| *k)
        .map(|(i, _)| i)
        .collect()
}

/// Result of one chirotropical computation.
#[derive(Debug, Clone)]
pub struct ChiDressian {
    pub chirotope: Chirotope,
    /// Position of each fan ray in the input ray list.
    pub source_indices: Vec<usize>,
    pub fan: Fan,
}

/// Rays, maximal cones and faces of `Dr^χ(k, n)` from the rays of `Dr(k, n)`.
/// Every facet must have dimension `(k-1)(n-k-1)`; otherwise this fails with
/// the offending clique.
pub fn compute_chirotropical_dressian(
    rays: &[PlueckerVector],
    chi: &Chirotope,
    ctx: &Context,
) -> Result<ChiDressian> {
    let pred = ChiPredicate::new(chi, &ctx.rels)?;
    let source_indices = chi_rays(rays, &pred, &ctx.rels);
    let selected: Vec<PlueckerVector> = source_indices.iter().map(|&i| rays[i].clone()).collect();
    let graph = build_graph(&selected, GraphMode::Chi(pred), &ctx.rels)?;
    let facets = graph.maximal_cliques();
    let expected = ctx.expected_dimension();
    let fan = face_lattice(&facets, &selected, &ctx.lin)?;
    for (facet, d) in fan.facets.iter().zip(fan.facet_dimensions(&ctx.lin)) {
        if d != expected {
            return Err(Error::Purity {
                facet: facet.clone(),
                dimension: d,
                expected,
            });
        }
    }
    Ok(ChiDressian {
        chirotope: chi.clone(),
        source_indices,
        fan,
    })
}

/// Maximal cones of `Dr(k, n)` from its rays (no purity requirement).
pub fn compute_dressian_facets(rays: &[PlueckerVector], ctx: &Context) -> Result<Vec<Vec<usize>>> {
    let graph = build_graph(rays, GraphMode::Plain, &ctx.rels)?;
    Ok(graph.maximal_cliques())
}

/// JSON-compatible fan record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanReport {
    pub k: usize,
    pub n: usize,
    pub chirotope: String,
    /// Ray index → coordinates.
    pub rays: BTreeMap<usize, Vec<i64>>,
    /// Ray index → line position (0-based) in the input ray list.
    pub source_indices: BTreeMap<usize, usize>,
    /// Dimension → sorted ray-index lists.
    pub faces_by_dim: BTreeMap<usize, Vec<Vec<usize>>>,
    pub f_vector: Vec<usize>,
    pub two_determined: bool,
    pub pure: bool,
}

impl From<&ChiDressian> for FanReport {
    fn from(d: &ChiDressian) -> Self {
        Self {
            k: d.fan.k,
            n: d.fan.n,
            chirotope: d.chirotope.sign_string(),
            rays: d
                .fan
                .rays
                .iter()
                .enumerate()
                .map(|(i, r)| (i, r.coords().to_vec()))
                .collect(),
            source_indices: d.source_indices.iter().copied().enumerate().collect(),
            faces_by_dim: d.fan.faces_by_dim.clone(),
            f_vector: d.fan.f_vector.clone(),
            two_determined: d.fan.two_determined,
            pure: d.fan.pure,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rays::ingest_rays_str;

    const RAYS_3_6: &str = include_str!("../data/rays_3_6.txt");

    #[test]
    fn positive_three_six() {
        let ctx = Context::new(3, 6).unwrap();
        let rays = ingest_rays_str(RAYS_3_6).unwrap().rays;
        let plus = Chirotope::all_plus(3, 6);
        let pred = ChiPredicate::new(&plus, &ctx.rels).unwrap();
        assert_eq!(chi_rays(&rays, &pred, &ctx.rels).len(), 16);
        let d = compute_chirotropical_dressian(&rays, &plus, &ctx).unwrap();
        assert_eq!(d.fan.f_vector, vec![16, 66, 98, 48]);
        assert!(d.fan.two_determined && d.fan.pure);
    }

    #[test]
    fn empty_ray_list() {
        let ctx = Context::new(3, 6).unwrap();
        let pred = ChiPredicate::new(&Chirotope::all_plus(3, 6), &ctx.rels).unwrap();
        assert!(chi_rays(&[], &pred, &ctx.rels).is_empty());
    }
}
