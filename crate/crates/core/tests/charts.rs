use chirotrop::charts::{
    evaluate_chart, minor_sign_vector, minors, recover_parameters, sample_points, target_matches_class, verify_charts,
    ChartType, Q,
};
use chirotrop::RelationSet;
use itertools::Itertools;
use num_bigint::BigInt;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn ones() -> [Q; 4] {
    [q(1, 1), q(1, 1), q(1, 1), q(1, 1)]
}

/// Laplace expansion over permutations.
fn det_oracle(m: &[[Q; 6]; 3], cols: &[usize]) -> Q {
    let mut total = q(0, 1);
    for p in (0..3).permutations(3) {
        let inversions = (0..3).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = q(if inversions % 2 == 0 { 1 } else { -1 }, 1);
        for r in 0..3 {
            term *= &m[r][cols[p[r]]];
        }
        total += term;
    }
    total
}

#[test]
fn minors_match_laplace_oracle() {
    for t in ChartType::ALL {
        for y in sample_points(5, 9) {
            let m = evaluate_chart(t, &y).unwrap();
            let expected: Vec<Q> = (0..6).combinations(3).map(|c| det_oracle(&m, &c)).collect();
            assert_eq!(minors(&m), expected);
        }
    }
}

#[test]
fn symmetric_point_type_four() {
    let m = evaluate_chart(ChartType::Four, &ones()).unwrap();
    let ps = minors(&m);
    assert_eq!(ps[0], q(1, 1));
    assert_eq!(ps[19], q(1, 1));
    assert!(minor_sign_vector(&m).unwrap().signs().iter().all(|&s| s == 1));
}

#[test]
fn exact_round_trips() {
    let y = [q(2, 1), q(1, 3), q(5, 1), q(7, 2)];
    let m = evaluate_chart(ChartType::Four, &y).unwrap();
    assert_eq!(recover_parameters(ChartType::Four, &minors(&m)).unwrap(), y);
    let m = evaluate_chart(ChartType::One, &ones()).unwrap();
    assert_eq!(recover_parameters(ChartType::One, &minors(&m)).unwrap(), ones());
}

#[test]
fn targets_valid_and_in_class_orbit() {
    let rels = RelationSet::new(3, 6).unwrap();
    for t in ChartType::ALL {
        assert!(t.target_chirotope().validate(&rels).unwrap());
        assert!(target_matches_class(t).unwrap());
    }
    assert_eq!(ChartType::Three.target_chirotope().negative_notation(), "(456)");
}

#[test]
fn recovery_rejects_wrong_length_and_zero() {
    assert!(recover_parameters(ChartType::Two, &vec![q(1, 1); 19]).is_err());
    assert!(recover_parameters(ChartType::Two, &vec![q(0, 1); 20]).is_err());
}

#[test]
fn hundred_samples_all_charts() {
    let r = verify_charts(100, 2024).unwrap();
    assert!(r.passed, "{:?}", r.violations);
    assert_eq!(sample_points(100, 1), sample_points(100, 1));
}
