//! Plain-text chirotope catalogs.
//!
//! One chirotope per line as a `+`/`-` string of length `C(n, k)` in
//! lexicographic subset order. `#` starts a comment; blank lines are skipped.

use std::path::Path;

use crate::chirotope::{Chirotope, ChirotopeSet};
use crate::error::{Error, Result};
use crate::relations::RelationSet;

const CLASSES_3_6: &str = include_str!("../data/chirotopes_3_6.txt");
const CLASSES_3_7: &str = include_str!("../data/chirotopes_3_7.txt");
const CHIROTOPE_4_8: &str = include_str!("../data/chirotope_4_8.txt");

/// Parse catalog text, keeping file order. Every entry must satisfy the
/// sign condition.
pub fn parse_catalog(text: &str, k: usize, n: usize) -> Result<ChirotopeSet> {
    let rels = RelationSet::new(k, n)?;
    let mut members = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let chi = Chirotope::from_sign_string(k, n, body)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        chi.ensure_valid(&rels)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        members.push(chi);
    }
    ChirotopeSet::new(k, n, members)
}

pub fn read_catalog(path: &Path, k: usize, n: usize) -> Result<ChirotopeSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_catalog(&text, k, n)
}

/// Serialise a set in catalog format.
pub fn write_catalog(set: &ChirotopeSet) -> String {
    let mut out = String::new();
    for c in set.iter() {
        out.push_str(&c.sign_string());
        out.push('\n');
    }
    out
}

/// The 4 class representatives for `(3, 6)`, in table order.
pub fn classes_3_6() -> ChirotopeSet {
    parse_catalog(CLASSES_3_6, 3, 6).expect("embedded catalog is valid")
}

/// The 11 class representatives for `(3, 7)`, in table order.
pub fn classes_3_7() -> ChirotopeSet {
    parse_catalog(CLASSES_3_7, 3, 7).expect("embedded catalog is valid")
}

/// Embedded catalog for `(3, n)`, when one ships with the crate.
pub fn embedded_classes(k: usize, n: usize) -> Option<ChirotopeSet> {
    match (k, n) {
        (3, 6) => Some(classes_3_6()),
        (3, 7) => Some(classes_3_7()),
        _ => None,
    }
}

/// The rank-4 chirotope on 8 elements used by the counterexample check.
/// Not validated here; the check itself reports validity.
pub fn chirotope_4_8() -> Chirotope {
    let body = CHIROTOPE_4_8
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .expect("embedded data present");
    Chirotope::from_sign_string(4, 8, body).expect("70 signs")
}
