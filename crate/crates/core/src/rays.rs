//! Ray files and ray ingestion.
//!
//! Format: a header line `k n m`, then `m` lines of `C(n, k)` space-separated
//! integers in lexicographic subset order. Lines starting with `#` and blank
//! lines are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lineality::LinealityBasis;
use crate::membership::first_unique_minimum;
use crate::pluecker::PlueckerVector;
use crate::relations::RelationSet;
use crate::subsets::binomial;

/// Rays as read from a file, with the line number of each ray.
#[derive(Debug, Clone)]
pub struct RayFile {
    pub k: usize,
    pub n: usize,
    pub rays: Vec<PlueckerVector>,
    pub lines: Vec<usize>,
}

/// Parse a ray file without validating membership.
pub fn parse_rays(text: &str) -> Result<RayFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty ray file".into()))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("line {hline}: header must be `k n m`")))?;
    let [k, n, m] = head[..] else {
        return Err(Error::Parse(format!("line {hline}: header must be `k n m`")));
    };
    if k == 0 || k >= n {
        return Err(Error::Parse(format!("line {hline}: need 0 < k < n")));
    }
    let width = binomial(n, k);
    let mut rays = Vec::with_capacity(m);
    let mut at = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let coords: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("line {lineno}: non-integer coordinate")))?;
        if coords.len() != width {
            return Err(Error::Parse(format!(
                "line {lineno}: expected {width} coordinates, found {}",
                coords.len()
            )));
        }
        rays.push(PlueckerVector::new(k, n, coords)?);
        at.push(lineno);
    }
    if rays.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} rays, file has {}",
            rays.len()
        )));
    }
    Ok(RayFile {
        k,
        n,
        rays,
        lines: at,
    })
}

/// Check that every ray lies in the Dressian and that no two rays agree
/// modulo lineality. Errors name the file line and the witness.
pub fn validate_rays(file: &RayFile, rels: &RelationSet, lin: &LinealityBasis) -> Result<()> {
    let mut seen: HashMap<Vec<num_rational::BigRational>, usize> = HashMap::new();
    for (ray, &line) in file.rays.iter().zip(&file.lines) {
        if let Some(rel) = first_unique_minimum(ray.coords(), rels) {
            return Err(Error::Ingestion(format!(
                "line {line}: ray is not in the Dressian; unique minimum at relation {rel}"
            )));
        }
        let nf = lin.normal_form(ray)?;
        if let Some(prev) = seen.insert(nf, line) {
            return Err(Error::Ingestion(format!(
                "line {line}: duplicate of the ray on line {prev} modulo lineality"
            )));
        }
    }
    Ok(())
}

/// Parse and validate ray text.
pub fn ingest_rays_str(text: &str) -> Result<RayFile> {
    let file = parse_rays(text)?;
    let rels = RelationSet::new(file.k, file.n)?;
    let lin = LinealityBasis::new(file.k, file.n)?;
    validate_rays(&file, &rels, &lin)?;
    Ok(file)
}

/// Read, parse and validate a ray file.
pub fn ingest_rays(path: &Path) -> Result<RayFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    ingest_rays_str(&text)
}

const RAYS_3_6: &str = include_str!("../data/rays_3_6.txt");
const RAYS_3_7: &str = include_str!("../data/rays_3_7.txt");

/// Ray text shipped with the crate for `(3, 6)` and `(3, 7)`.
pub fn embedded_ray_text(k: usize, n: usize) -> Option<&'static str> {
    match (k, n) {
        (3, 6) => Some(RAYS_3_6),
        (3, 7) => Some(RAYS_3_7),
        _ => None,
    }
}

/// Validated embedded rays, if any ship for `(k, n)`.
pub fn embedded_rays(k: usize, n: usize) -> Option<RayFile> {
    embedded_ray_text(k, n).map(|t| ingest_rays_str(t).expect("embedded rays are valid"))
}

/// Serialise rays in ray-file format.
pub fn write_rays(k: usize, n: usize, rays: &[PlueckerVector]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{k} {n} {}", rays.len());
    for r in rays {
        let _ = writeln!(out, "{r}");
    }
    out
}
