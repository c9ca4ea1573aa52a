//! Faces from maximal cones by repeated intersection of ray sets.
//!
//! A face is identified with the sorted set of ray indices generating it.
//! Starting from the facets, faces are closed under intersection with
//! facets until nothing new appears; each face is then bucketed by the
//! dimension of its span modulo lineality. Dimension 0 is not recorded.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::cliques::Bitset;
use crate::error::{Error, Result};
use crate::lineality::LinealityBasis;
use crate::par;
use crate::pluecker::PlueckerVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub k: usize,
    pub n: usize,
    /// Generators, indexed by the ray indices used in faces.
    pub rays: Vec<PlueckerVector>,
    /// Maximal cones, as sorted ray-index lists in lexicographic order.
    pub facets: Vec<Vec<usize>>,
    /// Faces of each dimension `d >= 1`, sorted.
    pub faces_by_dim: BTreeMap<usize, Vec<Vec<usize>>>,
    /// `f_vector[d - 1]` is the number of faces of dimension `d`.
    pub f_vector: Vec<usize>,
    /// Whether pairwise facet intersections already produced every face.
    pub two_determined: bool,
    /// Whether every facet has the same dimension.
    pub pure: bool,
}

impl Fan {
    /// Dimension of the highest-dimensional face (0 for an empty fan).
    pub fn dimension(&self) -> usize {
        self.f_vector.len()
    }

    pub fn facet_dimensions(&self, lin: &LinealityBasis) -> Vec<usize> {
        self.facets
            .iter()
            .map(|f| dimension_of(f, &self.rays, lin))
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.f_vector.iter().sum()
    }
}

fn dimension_of(face: &[usize], rays: &[PlueckerVector], lin: &LinealityBasis) -> usize {
    let cols: Vec<&[i64]> = face.iter().map(|&i| rays[i].coords()).collect();
    lin.rank_mod_coords(&cols)
}

/// Closure of `facets` under pairwise intersection, bucketed by dimension.
pub fn face_lattice(facets: &[Vec<usize>], rays: &[PlueckerVector], lin: &LinealityBasis) -> Result<Fan> {
    for r in rays {
        if r.k() != lin.k() || r.n() != lin.n() {
            return Err(Error::ShapeMismatch {
                expected_k: lin.k(),
                expected_n: lin.n(),
                k: r.k(),
                n: r.n(),
            });
        }
    }
    let len = rays.len();
    for f in facets {
        if let Some(&bad) = f.iter().find(|&&i| i >= len) {
            return Err(Error::InvalidParameter(format!(
                "facet refers to ray {bad}, but only {len} rays were given"
            )));
        }
    }
    let facet_sets: Vec<Bitset> = facets.iter().map(|f| Bitset::from_indices(len, f)).collect();
    let mut known: HashSet<Bitset> = facet_sets.iter().cloned().collect();

    // Round one: pairwise intersections of facets.
    let pair_rows: Vec<Vec<Bitset>> = par::map_range(facet_sets.len(), |i| {
        (i + 1..facet_sets.len())
            .map(|j| facet_sets[i].and(&facet_sets[j]))
            .filter(|s| !s.is_empty())
            .collect()
    });
    let mut frontier: Vec<Bitset> = Vec::new();
    for s in pair_rows.into_iter().flatten() {
        if known.insert(s.clone()) {
            frontier.push(s);
        }
    }
    let after_pairs = known.len();

    // Deeper rounds: intersect new faces with every facet.
    while !frontier.is_empty() {
        frontier.sort();
        let rows: Vec<Vec<Bitset>> = par::map_slice(&frontier, |face| {
            facet_sets
                .iter()
                .map(|f| face.and(f))
                .filter(|s| !s.is_empty())
                .collect()
        });
        let mut next = Vec::new();
        for s in rows.into_iter().flatten() {
            if known.insert(s.clone()) {
                next.push(s);
            }
        }
        frontier = next;
    }
    let two_determined = known.len() == after_pairs;

    let mut faces: Vec<Vec<usize>> = known.into_iter().map(|b| b.to_vec()).collect();
    faces.sort();
    let dims: Vec<usize> = par::map_slice(&faces, |f| dimension_of(f, rays, lin));
    let mut faces_by_dim: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for (face, d) in faces.into_iter().zip(dims) {
        if d == 0 || face.len() < d {
            return Err(Error::CorruptFace {
                rays: face.len(),
                face,
                dimension: d,
            });
        }
        faces_by_dim.entry(d).or_default().push(face);
    }
    let top = faces_by_dim.keys().next_back().copied().unwrap_or(0);
    let f_vector = (1..=top)
        .map(|d| faces_by_dim.get(&d).map_or(0, Vec::len))
        .collect();

    let mut sorted_facets: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            f
        })
        .collect();
    sorted_facets.sort();
    sorted_facets.dedup();
    let facet_dims: HashSet<usize> = sorted_facets
        .iter()
        .map(|f| dimension_of(f, rays, lin))
        .collect();
    Ok(Fan {
        k: lin.k(),
        n: lin.n(),
        rays: rays.to_vec(),
        facets: sorted_facets,
        faces_by_dim,
        f_vector,
        two_determined,
        pure: facet_dims.len() <= 1,
    })
}

/// True iff every non-maximal face equals the intersection of some pair of
/// facets. Recomputed from the stored facets, independent of the flag that
/// [`face_lattice`] records.
pub fn check_two_determined(fan: &Fan) -> bool {
    let facets: HashSet<&Vec<usize>> = fan.facets.iter().collect();
    let mut pairwise: HashSet<Vec<usize>> = HashSet::new();
    for (i, a) in fan.facets.iter().enumerate() {
        for b in &fan.facets[i + 1..] {
            let common: Vec<usize> = a.iter().filter(|x| b.binary_search(x).is_ok()).copied().collect();
            if !common.is_empty() {
                pairwise.insert(common);
            }
        }
    }
    fan.faces_by_dim
        .values()
        .flatten()
        .all(|f| facets.contains(f) || pairwise.contains(f))
}
