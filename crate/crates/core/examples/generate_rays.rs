//! Data preparation: candidate rays of `Dr(3, n)` from matroid corank vectors.
//!
//! Every rank-3 matroid on `[n]` gives a corank vector `I ↦ 3 - rank(I)`.
//! A vector `x` of the Dressian spans a ray iff the linear space cut out by
//! "all minimising terms agree" in every three-term relation has dimension
//! `n + 1` (one more than the lineality space). Candidates passing that test
//! are deduplicated modulo lineality and positive scaling and written in
//! ray-file format.
//!
//! This tool only prepares input data; the engine revalidates whatever it
//! ingests. Usage: `cargo run --release --example generate_rays -- 7 > rays_3_7.txt`

use std::collections::HashMap;

use chirotrop::bareiss;
use chirotrop::lineality::LinealityBasis;
use chirotrop::membership::first_unique_minimum;
use chirotrop::pluecker::PlueckerVector;
use chirotrop::rays::write_rays;
use chirotrop::relations::RelationSet;
use chirotrop::subsets::SubsetTable;
use itertools::Itertools;

/// All set partitions of `items` into blocks.
fn partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for p in partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first);
            out.push(q);
        }
        let mut q = p;
        q.insert(0, vec![first]);
        out.push(q);
    }
    out
}

/// All families of long lines (size >= 3) on `m` points that pairwise meet in
/// at most one point, excluding the single line through every point.
fn linear_spaces(m: usize) -> Vec<Vec<u32>> {
    let lines: Vec<u32> = (0u32..1 << m).filter(|s| s.count_ones() >= 3).collect();
    let full = (1u32 << m) - 1;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(lines: &[u32], start: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, full: u32) {
        if !current.contains(&full) {
            out.push(current.clone());
        }
        for i in start..lines.len() {
            let l = lines[i];
            if current.iter().all(|c| (c & l).count_ones() <= 1) {
                current.push(l);
                rec(lines, i + 1, current, out, full);
                current.pop();
            }
        }
    }
    rec(&lines, 0, &mut current, &mut out, full);
    out
}

fn corank_vectors(n: usize, table: &SubsetTable) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let labels: Vec<usize> = (1..=n).collect();
    let spaces: Vec<Vec<Vec<u32>>> = (0..=n).map(linear_spaces).collect();
    for loops in labels.iter().copied().powerset() {
        let rest: Vec<usize> = labels.iter().copied().filter(|i| !loops.contains(i)).collect();
        for blocks in partitions(&rest) {
            let m = blocks.len();
            if m < 3 {
                continue;
            }
            let mut point_of = vec![usize::MAX; n + 1];
            for (p, b) in blocks.iter().enumerate() {
                for &e in b {
                    point_of[e] = p;
                }
            }
            for space in &spaces[m] {
                let coords = table
                    .iter()
                    .map(|s| {
                        let pts: u32 = s
                            .iter()
                            .filter(|e| point_of[**e] != usize::MAX)
                            .fold(0, |acc, e| acc | 1 << point_of[*e]);
                        let rank = match pts.count_ones() {
                            c @ 0..=2 => c as i64,
                            _ => {
                                if space.iter().any(|l| l & pts == pts) {
                                    2
                                } else {
                                    3
                                }
                            }
                        };
                        3 - rank
                    })
                    .collect();
                out.push(coords);
            }
        }
    }
    out
}

/// Dimension of the closed three-term cell containing `x` in its relative interior.
fn cell_dimension(x: &[i64], rels: &RelationSet) -> usize {
    let width = x.len();
    let mut rows = Vec::new();
    for rel in rels.relations() {
        let t = rel.terms();
        let v: Vec<i64> = t.iter().map(|p| x[p[0]] + x[p[1]]).collect();
        let m = *v.iter().min().unwrap();
        let tied: Vec<usize> = (0..3).filter(|&j| v[j] == m).collect();
        for w in tied.windows(2) {
            let mut row = vec![0i64; width];
            for &c in &t[w[0]] {
                row[c] += 1;
            }
            for &c in &t[w[1]] {
                row[c] -= 1;
            }
            rows.push(row);
        }
    }
    width - bareiss::rank(&rows)
}

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let k = 3;
    let table = SubsetTable::new(k, n).unwrap();
    let rels = RelationSet::new(k, n).unwrap();
    let lin = LinealityBasis::new(k, n).unwrap();

    let candidates = corank_vectors(n, &table);
    eprintln!("{} corank vectors", candidates.len());
    // Sparsest, then smallest-sum representative of each lineality class.
    let weight = |c: &[i64]| (c.iter().filter(|x| **x != 0).count(), c.iter().sum::<i64>());
    let mut by_key: HashMap<Vec<num_bigint::BigInt>, Vec<i64>> = HashMap::new();
    for c in candidates {
        if first_unique_minimum(&c, &rels).is_some() {
            continue;
        }
        let key = lin.ray_key(&PlueckerVector::new(k, n, c.clone()).unwrap()).unwrap();
        match by_key.get_mut(&key) {
            Some(best) => {
                if (weight(&c), std::cmp::Reverse(c.clone())) < (weight(best), std::cmp::Reverse(best.clone())) {
                    *best = c;
                }
            }
            None => {
                by_key.insert(key, c);
            }
        }
    }
    eprintln!("{} distinct Dressian candidates", by_key.len());
    by_key.retain(|_, c| cell_dimension(c, &rels) == n + 1);
    let mut rays: Vec<Vec<i64>> = by_key.into_values().collect();
    // Fewest nonzero entries first, then lexicographically descending.
    rays.sort_by(|a, b| {
        let na = a.iter().filter(|x| **x != 0).count();
        let nb = b.iter().filter(|x| **x != 0).count();
        na.cmp(&nb).then_with(|| b.cmp(a))
    });
    eprintln!("{} rays", rays.len());
    let rays: Vec<PlueckerVector> = rays
        .into_iter()
        .map(|c| PlueckerVector::new(k, n, c).unwrap())
        .collect();
    print!("{}", write_rays(k, n, &rays));
}
