//! One line per acceptance criterion. Extended-tier items run only when their
//! inputs are supplied:
//!
//! - `CHIROTROP_EXTENDED=1` enables the (3,7) covering check.
//! - `CHIROTROP_CATALOG_3_8=<file>` enables the n = 8 Fano check.
//! - `CHIROTROP_RAYS_3_8=<file>` together with the catalog enables the (3,8) fans.

mod common;

use std::io::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use chirotrop::catalog::{chirotope_4_8, classes_3_6, classes_3_7, read_catalog};
use chirotrop::charts::verify_charts;
use chirotrop::dressian::{compute_chirotropical_dressian, Context};
use chirotrop::fan::check_two_determined;
use chirotrop::rays::{embedded_rays, ingest_rays};
use chirotrop::realizability::{covering_check, fano_incompatibility_check, verify_48_counterexample};
use chirotrop::{expand_orbit, generate_three_term, ChirotopeSet, Fan, PlueckerVector, RelationSet};
use common::{in_chi_dressian, in_dressian, lineality_vector, monomials, three_terms};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Pinned budgets. Every numeric comparison below is exact (integers or
// rationals), so wall-clock time is the only tolerance.
const BUDGET_RELATIONS: Duration = Duration::from_secs(1);
const BUDGET_FANS_3_6: Duration = Duration::from_secs(10);
const BUDGET_FANS_3_7: Duration = Duration::from_secs(600);
const BUDGET_FANO_7: Duration = Duration::from_secs(600);
const BUDGET_COUNTEREXAMPLE: Duration = Duration::from_secs(5);
const BUDGET_CHARTS: Duration = Duration::from_secs(30);
const BUDGET_COVERING_3_6: Duration = Duration::from_secs(60);
const CHART_SAMPLES: usize = 100;
const PROPERTY_CHIROTOPES: usize = 1000;
const LINEALITY_SHIFTS: usize = 100;

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

use Verdict::*;

fn timed(budget: Duration, f: impl FnOnce() -> Result<String, String>) -> Verdict {
    let t = Instant::now();
    let r = f();
    let dt = t.elapsed();
    match r {
        Ok(msg) if dt <= budget => Pass(format!("{msg} [{dt:.2?} ≤ {budget:?}]")),
        Ok(msg) => Fail(format!("{msg} but took {dt:.2?} > {budget:?}")),
        Err(msg) => Fail(format!("{msg} [{dt:.2?}]")),
    }
}

fn env_path(var: &str) -> Option<PathBuf> {
    std::env::var_os(var).map(PathBuf::from).filter(|p| p.exists())
}

fn c1_relation_counts() -> Verdict {
    timed(BUDGET_RELATIONS, || {
        let got: Vec<usize> = [(3, 6), (3, 7), (3, 8), (4, 8)]
            .iter()
            .map(|&(k, n)| generate_three_term(k, n).unwrap().len())
            .collect();
        let oracle: Vec<usize> = [(3, 6), (3, 7), (3, 8), (4, 8)]
            .iter()
            .map(|&(k, n)| three_terms(k, n).len())
            .collect();
        if got == vec![30, 105, 280, 420] && got == oracle {
            Ok(format!("{got:?}"))
        } else {
            Err(format!("got {got:?}, oracle {oracle:?}"))
        }
    })
}

fn class_fans(k: usize, n: usize, classes: &ChirotopeSet, rays: &[PlueckerVector]) -> Result<Vec<Fan>, String> {
    let ctx = Context::new(k, n).map_err(|e| e.to_string())?;
    classes
        .iter()
        .map(|c| {
            compute_chirotropical_dressian(rays, c, &ctx)
                .map(|d| d.fan)
                .map_err(|e| format!("{}: {e}", c.negative_notation()))
        })
        .collect()
}

fn compare_fvectors(fans: &[Fan], expected: &[Vec<usize>], dim: usize) -> Result<String, String> {
    for (i, (f, e)) in fans.iter().zip(expected).enumerate() {
        if &f.f_vector != e {
            return Err(format!("class {} has f-vector {:?}, expected {:?}", i + 1, f.f_vector, e));
        }
        if !f.pure || f.dimension() != dim {
            return Err(format!("class {} not pure of dimension {dim}", i + 1));
        }
    }
    if fans.len() != expected.len() {
        return Err(format!("{} fans, expected {}", fans.len(), expected.len()));
    }
    Ok(format!("{} f-vectors exact, pure of dimension {dim}", fans.len()))
}

fn c2_three_six(out: &mut Vec<Fan>) -> Verdict {
    let expected = vec![
        vec![15, 60, 90, 45],
        vec![15, 60, 89, 44],
        vec![14, 55, 82, 41],
        vec![16, 66, 98, 48],
    ];
    timed(BUDGET_FANS_3_6, || {
        let fans = class_fans(3, 6, &classes_3_6(), &embedded_rays(3, 6).unwrap().rays)?;
        let r = compare_fvectors(&fans, &expected, 4);
        out.extend(fans);
        r
    })
}

fn c3_three_seven(out: &mut Vec<Fan>) -> Verdict {
    let expected = vec![
        vec![30, 244, 864, 1513, 1287, 424],
        vec![31, 252, 892, 1565, 1335, 441],
        vec![28, 222, 781, 1373, 1179, 393],
        vec![39, 342, 1224, 2109, 1746, 558],
        vec![35, 298, 1073, 1885, 1597, 522],
        vec![34, 291, 1050, 1844, 1560, 509],
        vec![36, 311, 1125, 1974, 1665, 541],
        vec![30, 248, 891, 1577, 1351, 447],
        vec![37, 325, 1181, 2070, 1740, 563],
        vec![34, 296, 1084, 1922, 1634, 534],
        vec![42, 392, 1463, 2583, 2163, 693],
    ];
    timed(BUDGET_FANS_3_7, || {
        let fans = class_fans(3, 7, &classes_3_7(), &embedded_rays(3, 7).unwrap().rays)?;
        let r = compare_fvectors(&fans, &expected, 6);
        out.extend(fans);
        r
    })
}

fn c4_two_determined(fans: &[Fan]) -> Verdict {
    if fans.len() != 15 {
        return Fail(format!("only {} of 15 fans were built", fans.len()));
    }
    let bad: Vec<usize> = fans
        .iter()
        .enumerate()
        .filter(|(_, f)| !(f.two_determined && check_two_determined(f)))
        .map(|(i, _)| i + 1)
        .collect();
    if bad.is_empty() {
        Pass("all 4 + 11 fans are 2-determined".into())
    } else {
        Fail(format!("fans {bad:?} are not 2-determined"))
    }
}

fn c5_fano() -> Verdict {
    let seven = timed(BUDGET_FANO_7, || {
        let r = fano_incompatibility_check(7, &classes_3_7()).map_err(|e| e.to_string())?;
        if r.passed {
            Ok(format!("n=7: {}; {}", r.summary, r.details.join("; ")))
        } else {
            Err(format!("n=7: {}", r.violations.join("; ")))
        }
    });
    let Pass(msg7) = seven else { return seven };
    match env_path("CHIROTROP_CATALOG_3_8") {
        None => Pass(format!(
            "{msg7} | n=8 extended tier not run: set CHIROTROP_CATALOG_3_8 to the 135-class catalog"
        )),
        Some(p) => {
            let classes = match read_catalog(&p, 3, 8) {
                Ok(c) => c,
                Err(e) => return Fail(format!("{msg7} | n=8 catalog: {e}")),
            };
            match fano_incompatibility_check(8, &classes) {
                Ok(r) if r.passed && classes.len() == 135 => Pass(format!("{msg7} | n=8: {}", r.summary)),
                Ok(r) => Fail(format!("{msg7} | n=8 ({} classes): {}", classes.len(), r.summary)),
                Err(e) => Fail(format!("{msg7} | n=8: {e}")),
            }
        }
    }
}

fn c6_counterexample() -> Verdict {
    timed(BUDGET_COUNTEREXAMPLE, || {
        let r = verify_48_counterexample().map_err(|e| e.to_string())?;
        if r.passed {
            Ok(format!("{}; {}", r.summary, r.details.join("; ")))
        } else {
            Err(r.violations.join("; "))
        }
    })
}

fn c7_charts() -> Verdict {
    timed(BUDGET_CHARTS, || {
        let r = verify_charts(CHART_SAMPLES, 0).map_err(|e| e.to_string())?;
        if r.passed {
            Ok(r.summary)
        } else {
            Err(r.violations.join("; "))
        }
    })
}

fn c8_orbit_and_covering() -> Verdict {
    let six = timed(BUDGET_COVERING_3_6, || {
        let xi = expand_orbit(&classes_3_6()).map_err(|e| e.to_string())?;
        if xi.len() != 372 {
            return Err(format!("|Ξ(3,6)| = {}", xi.len()));
        }
        let rels = RelationSet::new(3, 6).unwrap();
        let r = covering_check(&embedded_rays(3, 6).unwrap().rays, &xi, &rels).map_err(|e| e.to_string())?;
        if r.passed {
            Ok(format!("|Ξ(3,6)| = 372; (3,6) {}", r.summary))
        } else {
            Err(r.violations.join("; "))
        }
    });
    let Pass(msg6) = six else { return six };
    if std::env::var("CHIROTROP_EXTENDED").as_deref() != Ok("1") {
        return Pass(format!("{msg6} | (3,7) extended tier not run: set CHIROTROP_EXTENDED=1"));
    }
    let xi = expand_orbit(&classes_3_7()).unwrap();
    let rels = RelationSet::new(3, 7).unwrap();
    match covering_check(&embedded_rays(3, 7).unwrap().rays, &xi, &rels) {
        Ok(r) if r.passed => Pass(format!("{msg6} | (3,7) {} over {} chirotopes", r.summary, xi.len())),
        Ok(r) => Fail(format!("{msg6} | (3,7) {}", r.summary)),
        Err(e) => Fail(format!("{msg6} | (3,7) {e}")),
    }
}

fn c9_properties() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut notes = Vec::new();

    // Sign split for random orbit members.
    let shapes = [(3usize, 6usize), (3, 7), (4, 8)];
    let rels_by: Vec<_> = shapes.iter().map(|&(k, n)| three_terms(k, n)).collect();
    for i in 0..PROPERTY_CHIROTOPES {
        let s = i % 3;
        let (k, n) = shapes[s];
        let base = match s {
            0 => classes_3_6().members().choose(&mut rng).unwrap().clone(),
            1 => classes_3_7().members().choose(&mut rng).unwrap().clone(),
            _ => chirotope_4_8(),
        };
        let mut sigma: Vec<usize> = (1..=n).collect();
        sigma.shuffle(&mut rng);
        let t: Vec<i8> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let chi = base.relabel(&sigma).unwrap().reorient(&t).unwrap();
        for r in &rels_by[s] {
            let plus = monomials(chi.signs(), r).iter().filter(|&&x| x > 0).count();
            if plus != 1 && plus != 2 {
                return Fail(format!("({k},{n}) {} has no 2-1 split", chi.sign_string()));
            }
        }
    }
    notes.push(format!("{PROPERTY_CHIROTOPES} chirotopes split 2-1"));

    // Lineality invariance of both predicates.
    let rays = embedded_rays(3, 6).unwrap().rays;
    let rels = three_terms(3, 6);
    let classes = classes_3_6();
    for _ in 0..LINEALITY_SHIFTS {
        let a = rays.choose(&mut rng).unwrap().coords();
        let b = rays.choose(&mut rng).unwrap().coords();
        let x: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
        let mut y = x.clone();
        for i in 1..=6 {
            let c = rng.gen_range(-5i64..=5);
            for (v, l) in y.iter_mut().zip(lineality_vector(3, 6, i)) {
                *v += c * l;
            }
        }
        let chi = classes.members().choose(&mut rng).unwrap();
        let px = PlueckerVector::new(3, 6, x.clone()).unwrap();
        let py = PlueckerVector::new(3, 6, y.clone()).unwrap();
        let lib = RelationSet::new(3, 6).unwrap();
        let plain = chirotrop::satisfy_eqn(&px, &lib).unwrap();
        let chi_x = chirotrop::satisfy_eqn_chi(chi, &px, &lib).unwrap();
        if plain != chirotrop::satisfy_eqn(&py, &lib).unwrap()
            || chi_x != chirotrop::satisfy_eqn_chi(chi, &py, &lib).unwrap()
            || plain != in_dressian(&y, &rels)
            || chi_x != in_chi_dressian(&y, chi.signs(), &rels)
        {
            return Fail(format!("lineality shift changed membership of {x:?}"));
        }
    }
    notes.push(format!("{LINEALITY_SHIFTS} lineality shifts invariant"));

    // χ-membership implies plain membership.
    let rels7 = three_terms(3, 7);
    let lib7 = RelationSet::new(3, 7).unwrap();
    let rays7 = embedded_rays(3, 7).unwrap().rays;
    let classes7 = classes_3_7();
    let own_rays: Vec<Vec<usize>> = classes7
        .iter()
        .map(|c| {
            let pred = chirotrop::ChiPredicate::new(c, &lib7).unwrap();
            chirotrop::dressian::chi_rays(&rays7, &pred, &lib7)
        })
        .collect();
    let mut chi_hits = 0;
    for i in 0..2000 {
        let ci = rng.gen_range(0..classes7.len());
        let chi = classes7.members()[ci].clone();
        let x: Vec<i64> = if i % 2 == 0 {
            (0..35).map(|_| rng.gen_range(0..3)).collect()
        } else {
            let a = rays7[*own_rays[ci].choose(&mut rng).unwrap()].coords();
            let b = rays7[*own_rays[ci].choose(&mut rng).unwrap()].coords();
            a.iter().zip(b).map(|(p, q)| p + q).collect()
        };
        let px = PlueckerVector::new(3, 7, x.clone()).unwrap();
        let c = chirotrop::satisfy_eqn_chi(&chi, &px, &lib7).unwrap();
        let p = chirotrop::satisfy_eqn(&px, &lib7).unwrap();
        if c != in_chi_dressian(&x, chi.signs(), &rels7) || p != in_dressian(&x, &rels7) || (c && !p) {
            return Fail(format!("implication or oracle mismatch at {x:?}"));
        }
        chi_hits += c as usize;
    }
    notes.push(format!("χ ⇒ plain on 2000 vectors ({chi_hits} χ-members)"));

    // Subset oracle on the 16-ray positive instance lives in tests/fans.rs;
    // repeated here in compact form.
    let ctx = Context::new(3, 6).unwrap();
    let plus = chirotrop::Chirotope::all_plus(3, 6);
    let d = compute_chirotropical_dressian(&rays, &plus, &ctx).unwrap();
    let coords: Vec<&[i64]> = d.fan.rays.iter().map(|r| r.coords()).collect();
    let m = coords.len();
    let good: Vec<bool> = (0u32..1 << m)
        .map(|mask| {
            let mut x = vec![0i64; 20];
            for (i, r) in coords.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x.iter_mut().zip(r.iter()).for_each(|(a, b)| *a += b);
                }
            }
            in_chi_dressian(&x, plus.signs(), &rels)
        })
        .collect();
    let mut oracle: Vec<Vec<usize>> = (1u32..1 << m)
        .filter(|&mask| good[mask as usize] && (0..m).all(|i| mask >> i & 1 == 1 || !good[(mask | 1 << i) as usize]))
        .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    oracle.sort();
    let mut facets = d.fan.facets.clone();
    facets.sort();
    if m != 16 || facets != oracle {
        return Fail(format!("facet oracle: {} rays, {} vs {} facets", m, facets.len(), oracle.len()));
    }
    notes.push("48 facets match the subset oracle on 16 rays".into());
    Pass(notes.join("; "))
}

fn c10_three_eight() -> Verdict {
    let (Some(rp), Some(cp)) = (env_path("CHIROTROP_RAYS_3_8"), env_path("CHIROTROP_CATALOG_3_8")) else {
        return Skip("extended tier: (3,8) rays and 135-class catalog are not in the workspace; set CHIROTROP_RAYS_3_8 and CHIROTROP_CATALOG_3_8".into());
    };
    let rays = match ingest_rays(&rp) {
        Ok(r) => r.rays,
        Err(e) => return Fail(format!("rays: {e}")),
    };
    let classes = match read_catalog(&cp, 3, 8) {
        Ok(c) => c,
        Err(e) => return Fail(format!("catalog: {e}")),
    };
    match class_fans(3, 8, &classes, &rays) {
        Ok(fans) if fans.iter().all(|f| f.pure && f.dimension() == 8) && fans.len() == 135 => {
            for (i, f) in fans.iter().enumerate() {
                println!("        (3,8) class {:>3}: {:?}", i + 1, f.f_vector);
            }
            Pass("135 fans pure of dimension 8; f-vectors listed above".into())
        }
        Ok(fans) => Fail(format!("{} fans, not all pure of dimension 8", fans.len())),
        Err(e) => Fail(e),
    }
}

#[test]
fn acceptance() {
    let mut fans = Vec::new();
    let results = vec![
        ("1 relation counts", c1_relation_counts()),
        ("2 (3,6) f-vectors", c2_three_six(&mut fans)),
        ("3 (3,7) f-vectors", c3_three_seven(&mut fans)),
        ("4 2-determined", c4_two_determined(&fans)),
        ("5 Fano cones", c5_fano()),
        ("6 (4,8) counterexample", c6_counterexample()),
        ("7 charts", c7_charts()),
        ("8 orbit and covering", c8_orbit_and_covering()),
        ("9 property suites", c9_properties()),
        ("10 (3,8) fans", c10_three_eight()),
    ];
    // Written to the raw handle so the lines show up without --nocapture.
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    writeln!(out).unwrap();
    for (name, v) in &results {
        let (tag, m) = match v {
            Pass(m) => ("PASS", m),
            Skip(m) => ("SKIP", m),
            Fail(m) => {
                failed.push(*name);
                ("FAIL", m)
            }
        };
        writeln!(out, "{tag}  {name}: {m}").unwrap();
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failed: {failed:?}");
}
