//! Realizability checks: Fano cones, covering by chirotropical Grassmannians,
//! and the rank-4 counterexample on eight elements.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::chirotope::{expand_orbit, Chirotope, ChirotopeSet};
use crate::cliques::Bitset;
use crate::dressian::chi_rays;
use crate::error::{Error, Result};
use crate::lineality::LinealityBasis;
use crate::membership::{first_unique_minimum, satisfy_eqn_sum, ChiPredicate};
use crate::par;
use crate::pluecker::PlueckerVector;
use crate::relations::RelationSet;
use crate::subsets::{label, parse_label};

/// The seven nonbases of the Fano matroid in the labelling used throughout.
pub const FANO_BASE: [[usize; 3]; 7] = [
    [1, 6, 7],
    [2, 4, 6],
    [3, 5, 6],
    [2, 3, 7],
    [4, 5, 7],
    [1, 2, 5],
    [1, 3, 4],
];

/// Outcome of one named check. `passed` is the conjunction of everything the
/// check asserts; `violations` says what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub details: Vec<String>,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            passed: true,
            summary: String::new(),
            details: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn fail(&mut self, msg: String) {
        self.passed = false;
        self.violations.push(msg);
    }

    fn finish(mut self, summary: String) -> Self {
        self.summary = summary;
        self
    }
}

/// A relabelled Fano matroid: seven sorted nonbases of `[7]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FanoConeSpec {
    pub nonbases: Vec<[usize; 3]>,
}

impl FanoConeSpec {
    fn from_image(sigma: &[usize], base: &[[usize; 3]]) -> Self {
        let mut nonbases: Vec<[usize; 3]> = base
            .iter()
            .map(|t| {
                let mut s = [sigma[t[0] - 1], sigma[t[1] - 1], sigma[t[2] - 1]];
                s.sort_unstable();
                s
            })
            .collect();
        nonbases.sort_unstable();
        Self { nonbases }
    }

    pub fn base() -> Self {
        Self::from_image(&[1, 2, 3, 4, 5, 6, 7], &FANO_BASE)
    }

    /// Sum of the seven basis vectors, in `C(n, 3)` coordinates (`n >= 7`).
    pub fn interior_point(&self, n: usize) -> Result<PlueckerVector> {
        PlueckerVector::indicator(3, n, &self.nonbases)
    }

    /// The seven facet points: sums of six of the seven basis vectors.
    pub fn facet_points(&self, n: usize) -> Result<Vec<PlueckerVector>> {
        (0..7)
            .map(|skip| {
                let six: Vec<[usize; 3]> = self
                    .nonbases
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, t)| *t)
                    .collect();
                PlueckerVector::indicator(3, n, &six)
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        self.nonbases.iter().map(|t| label(t)).join(",")
    }
}

fn distinct_images(m: usize, base: &[[usize; 3]]) -> Vec<FanoConeSpec> {
    let perms: Vec<Vec<usize>> = (1..=m).permutations(m).collect();
    let images = par::map_slice(&perms, |p| FanoConeSpec::from_image(p, base));
    images.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

/// All distinct relabellings of the Fano nonbases under `S_7`, sorted.
pub fn fano_orbit() -> Vec<FanoConeSpec> {
    distinct_images(7, &FANO_BASE)
}

/// All distinct `S_8` images of the Fano nonbases with `[7]` embedded in `[8]`.
pub fn fano_orbit_8() -> Vec<FanoConeSpec> {
    distinct_images(8, &FANO_BASE)
}

/// Fano-cone realizability check.
///
/// For `n = 7`: every interior point lies in the Dressian, fails the
/// chirotropical relations for every class in `classes`, and each facet point
/// is compatible with some member of the expanded orbit of `classes`.
/// For `n = 8`: every `S_8` image of the embedded interior point fails every class.
pub fn fano_incompatibility_check(n: usize, classes: &ChirotopeSet) -> Result<CheckReport> {
    if classes.k() != 3 || classes.n() != n {
        return Err(Error::ShapeMismatch {
            expected_k: 3,
            expected_n: n,
            k: classes.k(),
            n: classes.n(),
        });
    }
    let rels = RelationSet::new(3, n)?;
    let preds: Vec<ChiPredicate> = classes
        .iter()
        .map(|c| ChiPredicate::new(c, &rels))
        .collect::<Result<_>>()?;
    let specs = match n {
        7 => fano_orbit(),
        8 => fano_orbit_8(),
        _ => {
            return Err(Error::UnsupportedShape {
                k: 3,
                n,
                reason: "Fano check is defined for n = 7 or 8",
            })
        }
    };
    let mut report = CheckReport::new(&format!("fano-n{n}"));
    report
        .details
        .push(format!("{} Fano cones, {} classes", specs.len(), preds.len()));

    let points: Vec<PlueckerVector> = specs.iter().map(|s| s.interior_point(n)).collect::<Result<_>>()?;

    let in_dressian = par::map_slice(&points, |p| first_unique_minimum(p.coords(), &rels).is_none());
    for (s, ok) in specs.iter().zip(&in_dressian) {
        if !ok {
            report.fail(format!("interior point of {{{}}} is not in the Dressian", s.describe()));
        }
    }

    let compatible = par::map_slice(&points, |p| {
        preds
            .iter()
            .enumerate()
            .filter(|(_, q)| q.holds(p.coords(), &rels))
            .map(|(i, _)| i)
            .collect::<Vec<_>>()
    });
    let mut hits = 0usize;
    for (s, cs) in specs.iter().zip(&compatible) {
        for &c in cs {
            hits += 1;
            report.fail(format!(
                "interior point of {{{}}} is compatible with class {} {}",
                s.describe(),
                c + 1,
                preds[c].chirotope().negative_notation()
            ));
        }
    }
    report.details.push(format!("{hits} interior compatibilities"));

    if n == 7 {
        let orbit = expand_orbit(classes)?;
        let orbit_preds: Vec<ChiPredicate> = orbit
            .iter()
            .map(|c| ChiPredicate::new(c, &rels))
            .collect::<Result<_>>()?;
        let facets: Vec<(usize, PlueckerVector)> = specs
            .iter()
            .enumerate()
            .map(|(i, s)| s.facet_points(n).map(|fs| fs.into_iter().map(move |f| (i, f))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let covered = par::map_slice(&facets, |(_, f)| {
            let orbit_hit = orbit_preds.iter().any(|q| q.holds(f.coords(), &rels));
            let class_hit = preds.iter().any(|q| q.holds(f.coords(), &rels));
            (orbit_hit, class_hit)
        });
        let mut by_class = 0;
        for ((i, f), (orbit_hit, class_hit)) in facets.iter().zip(&covered) {
            if *class_hit {
                by_class += 1;
            }
            if !orbit_hit {
                let missing = specs[*i]
                    .nonbases
                    .iter()
                    .find(|t| f.coords()[rels.table().rank_of(&t[..]).expect("valid subset")] == 0)
                    .map(|t| label(t))
                    .unwrap_or_default();
                report.fail(format!(
                    "facet of {{{}}} without {missing} is compatible with no chirotope",
                    specs[*i].describe()
                ));
            }
        }
        report.details.push(format!(
            "{} facet points checked against {} chirotopes; {} also compatible with a class representative",
            facets.len(),
            orbit_preds.len(),
            by_class
        ));
    }
    let summary = if report.passed {
        format!(
            "all {} Fano cones are incompatible with every class",
            specs.len()
        )
    } else {
        format!("{} violations", report.violations.len())
    };
    Ok(report.finish(summary))
}

/// Pairs `(i, j)`, `i < j`, of rays whose sum lies in the Dressian.
pub fn compatible_pairs(rays: &[PlueckerVector], rels: &RelationSet) -> Vec<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = (0..rays.len()).tuple_combinations().collect();
    let keep = par::map_slice(&pairs, |&(i, j)| satisfy_eqn_sum(rays[i].coords(), rays[j].coords(), rels));
    pairs.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect()
}

/// Compatible pairs covered by at least one chirotope of `xi`: both rays and
/// their sum satisfy that chirotope's relations. Returned as one bitset row per ray.
pub fn covered_pairs(rays: &[PlueckerVector], xi: &ChirotopeSet, rels: &RelationSet) -> Result<Vec<Bitset>> {
    let m = rays.len();
    let preds: Vec<ChiPredicate> = xi.iter().map(|c| ChiPredicate::new(c, rels)).collect::<Result<_>>()?;
    let chunks: Vec<&[ChiPredicate]> = preds.chunks(64).collect();
    let partial = par::map_slice(&chunks, |chunk| {
        let mut rows = vec![Bitset::new(m); m];
        for q in chunk.iter() {
            let sel = chi_rays(rays, q, rels);
            for (a, &i) in sel.iter().enumerate() {
                for &j in &sel[a + 1..] {
                    if !rows[i].contains(j) && q.holds_for_sum(rays[i].coords(), rays[j].coords(), rels) {
                        rows[i].insert(j);
                    }
                }
            }
        }
        rows
    });
    let mut rows = vec![Bitset::new(m); m];
    for part in partial {
        for (r, p) in rows.iter_mut().zip(part) {
            *r = r.or(&p);
        }
    }
    Ok(rows)
}

/// Every compatible ray pair is covered by some chirotope of `xi`.
pub fn covering_check(rays: &[PlueckerVector], xi: &ChirotopeSet, rels: &RelationSet) -> Result<CheckReport> {
    let pairs = compatible_pairs(rays, rels);
    let rows = covered_pairs(rays, xi, rels)?;
    let mut report = CheckReport::new(&format!("covering-{}-{}", rels.k(), rels.n()));
    let mut uncovered = 0;
    for &(i, j) in &pairs {
        if !rows[i].contains(j) {
            uncovered += 1;
            report.fail(format!("rays {} and {} (0-based) are compatible but uncovered", i, j));
        }
    }
    report.details.push(format!(
        "{} rays, {} compatible pairs, {} chirotopes",
        rays.len(),
        pairs.len(),
        xi.len()
    ));
    let summary = format!("{} of {} compatible pairs covered", pairs.len() - uncovered, pairs.len());
    Ok(report.finish(summary))
}

/// The 20 tetrahedra of the rank-4 counterexample.
pub const TETRAHEDRA_4_8: [&str; 20] = [
    "1234", "1237", "1256", "1268", "1278", "1358", "1368", "1458", "1467", "1567", "2348", "2358", "2367",
    "2457", "2467", "3456", "3457", "3478", "4568", "5678",
];

/// The twelve vectors spanning the large cone of the counterexample.
pub const CLIQUE_4_8: [&str; 12] = [
    "1234", "1256", "1278", "1368", "1458", "1467", "2358", "2367", "2457", "3456", "3478", "5678",
];

/// Dimension of the realizable part: `(k - 1)(n - k - 1)` for `(4, 8)`.
pub const REALIZABLE_DIM_4_8: usize = 9;

/// Check the rank-4 counterexample: validity, tetrahedra membership, the
/// twelve-vector clique, and its dimension modulo lineality.
pub fn verify_48_counterexample_with(chi: &Chirotope) -> Result<CheckReport> {
    let rels = RelationSet::new(4, 8)?;
    let lin = LinealityBasis::new(4, 8)?;
    let mut report = CheckReport::new("counterexample-48");

    if let Some(r) = chi.first_violation(&rels)? {
        report.fail(format!("chirotope violates the sign condition at {}", r.describe()));
        return Ok(report.finish("invalid chirotope".into()));
    }
    report.details.push("chirotope valid".into());
    let pred = ChiPredicate::new(chi, &rels)?;

    let unit = |s: &str| -> Result<PlueckerVector> { PlueckerVector::unit(4, 8, &parse_label(s)?) };
    let mut tet_ok = 0;
    for t in TETRAHEDRA_4_8 {
        let e = unit(t)?;
        match pred.first_violation(e.coords(), &rels) {
            None => tet_ok += 1,
            Some(r) => report.fail(format!("e_{t} fails at {}", r.describe())),
        }
    }
    report.details.push(format!("{tet_ok}/20 tetrahedra in the chirotropical Dressian"));

    let vecs: Vec<PlueckerVector> = CLIQUE_4_8.iter().map(|s| unit(s)).collect::<Result<_>>()?;
    let mut pair_ok = 0;
    for (a, b) in (0..vecs.len()).tuple_combinations() {
        if pred.holds_for_sum(vecs[a].coords(), vecs[b].coords(), &rels) {
            pair_ok += 1;
        } else {
            let sum = vecs[a].checked_add(&vecs[b]).expect("small");
            let r = pred.first_violation(sum.coords(), &rels).expect("fails");
            report.fail(format!("e_{} + e_{} fails at {}", CLIQUE_4_8[a], CLIQUE_4_8[b], r.describe()));
        }
    }
    report.details.push(format!("{pair_ok}/66 pairs compatible"));

    let dim = lin.rank_mod(vecs.iter())?;
    report.details.push(format!("dimension modulo lineality {dim}"));
    if dim <= REALIZABLE_DIM_4_8 {
        report.fail(format!("dimension {dim} does not exceed {REALIZABLE_DIM_4_8}"));
    }
    let summary = if report.passed {
        format!("dim {dim} > {REALIZABLE_DIM_4_8}: non-realizable cone confirmed")
    } else {
        format!("{} violations", report.violations.len())
    };
    Ok(report.finish(summary))
}

/// [`verify_48_counterexample_with`] on the embedded chirotope.
pub fn verify_48_counterexample() -> Result<CheckReport> {
    verify_48_counterexample_with(&catalog::chirotope_4_8())
}
