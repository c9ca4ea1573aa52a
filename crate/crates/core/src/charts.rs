//! Positive parameterizations of the four chirotopal configuration spaces
//! `X^χ(3, 6)`, with their inverse cross-ratio maps.
//!
//! Each chart sends `y ∈ Q^4_{>0}` to a 3×6 matrix `[I | M(y)]`; the sign of
//! every maximal minor is constant on the orthant, and `y` is recovered
//! exactly from the minors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::chirotope::{expand_orbit, reorientation_representative, Chirotope, ChirotopeSet};
use crate::error::{Error, Result};
use crate::realizability::CheckReport;
use crate::subsets::{lex_rank, SubsetTable};

pub type Q = BigRational;
pub type Matrix = [[Q; 6]; 3];

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Chart types, numbered like the rows of the (3,6) class table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ChartType {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl ChartType {
    pub const ALL: [ChartType; 4] = [ChartType::One, ChartType::Two, ChartType::Three, ChartType::Four];

    pub fn from_number(t: usize) -> Result<Self> {
        match t {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            4 => Ok(Self::Four),
            _ => Err(Error::InvalidParameter(format!("chart type {t} is not in 1..=4"))),
        }
    }

    pub fn number(self) -> usize {
        self as usize
    }

    /// Negative 3-subsets of the chirotope this chart parameterizes.
    pub fn target_negatives(self) -> &'static [[usize; 3]] {
        match self {
            Self::One => &[[1, 3, 4], [1, 3, 5], [1, 4, 5], [2, 3, 5], [2, 4, 5], [3, 4, 6], [3, 5, 6]],
            Self::Two => &[
                [1, 3, 4],
                [1, 3, 5],
                [1, 3, 6],
                [2, 3, 5],
                [2, 3, 6],
                [2, 4, 5],
                [2, 4, 6],
                [2, 5, 6],
            ],
            Self::Three => &[[4, 5, 6]],
            Self::Four => &[],
        }
    }

    pub fn target_chirotope(self) -> Chirotope {
        Chirotope::from_negatives(3, 6, self.target_negatives()).expect("fixed data")
    }
}

fn check_positive(y: &[Q; 4]) -> Result<()> {
    match y.iter().position(|v| !v.is_positive()) {
        Some(i) => Err(Error::InvalidParameter(format!("y{} = {} is not positive", i + 1, y[i]))),
        None => Ok(()),
    }
}

fn framed(row1: [Q; 3], row2: [Q; 3]) -> Matrix {
    let [a, b, c] = row1;
    let [d, e, f] = row2;
    [
        [q(1), q(0), q(0), a, b, c],
        [q(0), q(1), q(0), d, e, f],
        [q(0), q(0), q(1), q(1), q(1), q(1)],
    ]
}

/// The chart matrix at a positive rational point.
pub fn evaluate_chart(t: ChartType, y: &[Q; 4]) -> Result<Matrix> {
    check_positive(y)?;
    let [y1, y2, y3, y4] = y.clone();
    let one = q(1);
    Ok(match t {
        ChartType::Four => framed(
            [
                &y1 * &y3,
                &y1 * &y3 + &y1 * &y4 + &y2 * &y4,
                &y3 * &y1 + &y4 * &y1 + &y1 + &y2 + &y2 * &y4 + &one,
            ],
            [-y3.clone(), -&y3 - &y4, -&y3 - &y4 - &one],
        ),
        ChartType::Three => {
            let d = &y2 * &y4 * &y1 + &y4 * &y1 + &y1 + &y4 + &one;
            let m = &y2 * &y4 + &y4 + &one;
            framed(
                [
                    one.clone(),
                    (&y1 + &one) / &y1,
                    (&y1 * &y3 + &y3 + &one) / (&y1 * &y3),
                ],
                [
                    -one.clone(),
                    -((&y1 + &one) * &m) / &d,
                    -((&y1 * &y3 * &y2 + &y3 * &y2 + &y2 + &y1 * &y3 + &y3) * &m) / ((&y2 + &one) * &y3 * &d),
                ],
            )
        }
        ChartType::Two => {
            let num = &y1 * &y2 * &y3
                + &y2 * &y3
                + &y1 * &y2 * &y4 * &y3
                + &y2 * &y4 * &y3
                + &y4 * &y3
                + &y3
                + &y1 * &y2 * &y4
                + &y2 * &y4
                + &y4
                + &one;
            let den = &y1 * (&y3 + &one) * (&y1 * &y2 * &y4 + &y2 * &y4 + &y4 + &one);
            framed(
                [one.clone(), -(&one / &y1), -(num / den)],
                [
                    one.clone(),
                    &y2 / (&y2 + &one),
                    &y2 / ((&y2 + &one) * (&y3 + &one)),
                ],
            )
        }
        ChartType::One => {
            let s = &y2 * &y3 + &y3 + &one;
            let den = &y2 * &y3
                + &y2 * &y4 * &y3
                + &y4 * &y3
                + &y3
                + &y1 * &y2 * &y4
                + &y2 * &y4
                + &y4
                + &one;
            framed(
                [one.clone(), -(&one / &y3), &s / (&y2 * &y3)],
                [
                    one.clone(),
                    ((&y1 * &y2 + &y2 + &one) * (&y4 + &one)) / (&y1 * &y2 * &y4 + &y2 * &y4 + &y4 + &one),
                    -(&y1 * &s * (&y4 + &one)) / den,
                ],
            )
        }
    })
}

fn det3(m: &Matrix, c: [usize; 3]) -> Q {
    let a = |r: usize, i: usize| &m[r][c[i]];
    a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
        + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
}

/// The 20 maximal minors in lexicographic order of column triples.
pub fn minors(m: &Matrix) -> Vec<Q> {
    let table = SubsetTable::new(3, 6).expect("(3,6)");
    table.iter().map(|s| det3(m, [s[0] - 1, s[1] - 1, s[2] - 1])).collect()
}

/// Signs of the maximal minors as a chirotope; a zero minor is non-generic.
pub fn minor_sign_vector(m: &Matrix) -> Result<Chirotope> {
    let ps = minors(m);
    let table = SubsetTable::new(3, 6)?;
    let mut signs = Vec::with_capacity(20);
    for (i, p) in ps.iter().enumerate() {
        if p.is_zero() {
            return Err(Error::NonGeneric(format!(
                "minor p_{} vanishes",
                crate::subsets::label(table.subset(i))
            )));
        }
        signs.push(if p.is_positive() { 1 } else { -1 });
    }
    Chirotope::new(3, 6, signs)
}

/// Cross-ratio expression: `sign · Π num / Π den` over labelled minors.
struct Ratio {
    sign: i64,
    num: &'static [[usize; 3]],
    den: &'static [[usize; 3]],
}

const fn r(sign: i64, num: &'static [[usize; 3]], den: &'static [[usize; 3]]) -> Ratio {
    Ratio { sign, num, den }
}

fn recovery(t: ChartType) -> [Ratio; 4] {
    match t {
        ChartType::Four => [
            r(1, &[[1, 4, 5], [1, 5, 6], [2, 3, 4]], &[[1, 2, 5], [1, 3, 4], [4, 5, 6]]),
            r(1, &[[1, 2, 4], [1, 5, 6], [3, 4, 5]], &[[1, 2, 5], [1, 3, 4], [4, 5, 6]]),
            r(1, &[[1, 2, 5], [1, 2, 6], [1, 3, 4]], &[[1, 2, 3], [1, 2, 4], [1, 5, 6]]),
            r(1, &[[1, 2, 6], [1, 4, 5]], &[[1, 2, 4], [1, 5, 6]]),
        ],
        ChartType::Three => [
            r(1, &[[1, 2, 5], [2, 3, 4]], &[[1, 2, 3], [2, 4, 5]]),
            r(1, &[[1, 5, 6], [2, 3, 5]], &[[1, 2, 5], [3, 5, 6]]),
            r(1, &[[1, 2, 6], [2, 4, 5]], &[[1, 2, 4], [2, 5, 6]]),
            r(-1, &[[1, 4, 5], [3, 5, 6]], &[[1, 3, 5], [4, 5, 6]]),
        ],
        ChartType::Two => [
            r(-1, &[[1, 2, 5], [2, 3, 4]], &[[1, 2, 4], [2, 3, 5]]),
            r(-1, &[[1, 2, 4], [1, 3, 5]], &[[1, 2, 3], [1, 4, 5]]),
            r(-1, &[[1, 2, 3], [1, 5, 6]], &[[1, 2, 5], [1, 3, 6]]),
            r(1, &[[2, 3, 5], [4, 5, 6]], &[[2, 5, 6], [3, 4, 5]]),
        ],
        ChartType::One => [
            r(
                -1,
                &[[1, 2, 4], [1, 3, 6], [2, 5, 6], [3, 4, 5]],
                &[[1, 2, 6], [1, 3, 4], [2, 4, 5], [3, 5, 6]],
            ),
            r(-1, &[[1, 2, 6], [2, 4, 5]], &[[1, 2, 5], [2, 4, 6]]),
            r(-1, &[[1, 2, 5], [2, 3, 4]], &[[1, 2, 4], [2, 3, 5]]),
            r(
                -1,
                &[[1, 2, 5], [1, 3, 4], [2, 3, 6], [4, 5, 6]],
                &[[1, 2, 3], [1, 4, 5], [2, 5, 6], [3, 4, 6]],
            ),
        ],
    }
}

/// Recover `y` from the 20 minors (lexicographic order) via the cross-ratio formulas.
pub fn recover_parameters(t: ChartType, minors: &[Q]) -> Result<[Q; 4]> {
    if minors.len() != 20 {
        return Err(Error::LengthMismatch {
            expected: 20,
            got: minors.len(),
        });
    }
    let p = |s: &[usize; 3]| &minors[lex_rank(s, 6).expect("valid")];
    let eval = |ratio: &Ratio| -> Result<Q> {
        let num = ratio.num.iter().fold(q(ratio.sign), |acc, s| acc * p(s));
        let den = ratio.den.iter().fold(Q::one(), |acc, s| acc * p(s));
        if den.is_zero() {
            return Err(Error::NonGeneric("recovery denominator vanishes".into()));
        }
        Ok(num / den)
    };
    let [a, b, c, d] = recovery(t);
    Ok([eval(&a)?, eval(&b)?, eval(&c)?, eval(&d)?])
}

/// Random positive rational with numerator and denominator in `1..=bound`.
pub fn random_positive(rng: &mut impl Rng, bound: i64) -> Q {
    Q::new(BigInt::from(rng.gen_range(1..=bound)), BigInt::from(rng.gen_range(1..=bound)))
}

/// Deterministic sample points: the symmetric point first, then seeded random ones.
pub fn sample_points(samples: usize, seed: u64) -> Vec<[Q; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![[q(1), q(1), q(1), q(1)]];
    while out.len() < samples.max(1) {
        out.push(std::array::from_fn(|_| random_positive(&mut rng, 50)));
    }
    out
}

/// Whether the chart's target chirotope lies in the orbit of the class
/// representative with the same number.
pub fn target_matches_class(t: ChartType) -> Result<bool> {
    let classes = catalog::classes_3_6();
    let class = classes.members()[t.number() - 1].clone();
    let orbit = expand_orbit(&ChirotopeSet::new(3, 6, vec![class])?)?;
    Ok(orbit.contains(&reorientation_representative(&t.target_chirotope())?))
}

/// Sign stability and exact round-trip over `samples` points for every chart.
pub fn verify_charts(samples: usize, seed: u64) -> Result<CheckReport> {
    let points = sample_points(samples, seed);
    let rels = crate::relations::RelationSet::new(3, 6)?;
    let mut report = CheckReport::new("charts");
    for t in ChartType::ALL {
        let target = t.target_chirotope();
        if let Some(rel) = target.first_violation(&rels)? {
            report.fail(format!("type {} target is invalid at {}", t.number(), rel.describe()));
        }
        if !target_matches_class(t)? {
            report.fail(format!("type {} target is not in the orbit of class {}", t.number(), t.number()));
        }
        let results = crate::par::map_slice(&points, |y| -> Result<(bool, bool)> {
            let m = evaluate_chart(t, y)?;
            let signs_ok = minor_sign_vector(&m).map(|c| c == target).unwrap_or(false);
            let back = recover_parameters(t, &minors(&m));
            Ok((signs_ok, matches!(back, Ok(ref b) if b == y)))
        });
        let mut sign_fail = 0;
        let mut trip_fail = 0;
        for (y, res) in points.iter().zip(results) {
            let (s, r) = res?;
            let show = || y.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
            if !s {
                sign_fail += 1;
                report.fail(format!("type {}: sign vector differs at y = ({})", t.number(), show()));
            }
            if !r {
                trip_fail += 1;
                report.fail(format!("type {}: round-trip fails at y = ({})", t.number(), show()));
            }
        }
        report.details.push(format!(
            "type {}: {} samples, {} sign failures, {} round-trip failures",
            t.number(),
            points.len(),
            sign_fail,
            trip_fail
        ));
    }
    report.summary = if report.passed {
        format!("4 charts verified on {} samples each", points.len())
    } else {
        format!("{} violations", report.violations.len())
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones() -> [Q; 4] {
        [q(1), q(1), q(1), q(1)]
    }

    #[test]
    fn type_four_symmetric_point() {
        let m = evaluate_chart(ChartType::Four, &ones()).unwrap();
        let row = |r: usize| m[r].iter().map(|v| v.to_integer().try_into().unwrap()).collect::<Vec<i64>>();
        assert_eq!(row(0), vec![1, 0, 0, 1, 3, 6]);
        assert_eq!(row(1), vec![0, 1, 0, -1, -2, -3]);
        assert_eq!(row(2), vec![0, 0, 1, 1, 1, 1]);
        let ps = minors(&m);
        assert_eq!(ps[0], q(1));
        assert_eq!(ps[19], q(1));
    }

    #[test]
    fn rejects_nonpositive() {
        let y = [q(1), q(0), q(1), q(1)];
        assert!(evaluate_chart(ChartType::One, &y).is_err());
    }

    #[test]
    fn type_four_round_trip_fixed_point() {
        let y = [q(2), Q::new(1.into(), 3.into()), q(5), Q::new(7.into(), 2.into())];
        let m = evaluate_chart(ChartType::Four, &y).unwrap();
        assert_eq!(recover_parameters(ChartType::Four, &minors(&m)).unwrap(), y);
    }

    #[test]
    fn zero_minor_is_non_generic() {
        let mut m = evaluate_chart(ChartType::Four, &ones()).unwrap();
        m[0][3] = q(0);
        m[1][3] = q(0);
        assert!(matches!(minor_sign_vector(&m), Err(Error::NonGeneric(_))));
    }
}
