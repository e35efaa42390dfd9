mod common;

use piercing::counterexample::{generate, SequenceConfig};
use piercing::solver::{candidate_points, piercing_number, verify_transversal};
use piercing::{rat, Family, Point};
use rand::Rng;

#[test]
fn prefix_three_is_pierced_by_apex() {
    let f = generate(3, &SequenceConfig::Standard).unwrap();
    let res = piercing_number(&f, None).unwrap();
    assert_eq!(res.tau, 1);
    assert_eq!(res.transversal, vec![Point::new(rat(2, 3), rat(0, 1))]);
}

#[test]
fn prefix_ten_needs_two() {
    let f = generate(10, &SequenceConfig::Standard).unwrap();
    let res = piercing_number(&f, None).unwrap();
    assert_eq!(res.tau, 2);
    assert!(res.optimal);
    assert!(verify_transversal(&f, &res.transversal).ok);
    assert_eq!(common::brute_force_tau(&f), 2);
}

#[test]
fn transversal_checks_on_prefix_ten() {
    let f = generate(10, &SequenceConfig::Standard).unwrap();
    let half = Point::new(rat(1, 2), rat(0, 1));
    assert!(verify_transversal(&f, &[half.clone(), Point::from_ints(0, 9)]).ok);
    let chk = verify_transversal(&f, &[half, Point::from_ints(0, 5)]);
    assert!(!chk.ok);
    assert_eq!(chk.missed, vec!["F7", "F8", "F9", "F10"]);
    let all = candidate_points(&f).unwrap().points;
    assert!(verify_transversal(&f, &all).ok);
}

#[test]
fn prefix_four_candidates_include_apexes() {
    let f = generate(4, &SequenceConfig::Standard).unwrap();
    let c = candidate_points(&f).unwrap();
    assert!(c.points.contains(&Point::new(rat(2, 3), rat(0, 1))));
    assert!(c.points.contains(&Point::new(rat(3, 4), rat(0, 1))));
}

#[test]
fn solver_matches_brute_force_on_random_families() {
    let mut rng = common::rng(21);
    for _ in 0..25 {
        let size = rng.gen_range(1..=7);
        let f = common::random_family(&mut rng, size, 8);
        let res = piercing_number(&f, None).unwrap();
        assert!(verify_transversal(&f, &res.transversal).ok);
        assert_eq!(res.tau, common::brute_force_tau(&f), "{f:?}");
    }
}

#[test]
fn candidate_patterns_dominate_random_points() {
    let mut rng = common::rng(22);
    for _ in 0..15 {
        let f = common::random_family(&mut rng, 6, 8);
        let masks: Vec<u64> = candidate_points(&f).unwrap().points.iter().map(|p| common::mask_of(&f, p)).collect();
        for _ in 0..40 {
            let p = common::random_point(&mut rng, 10, 4);
            let m = common::mask_of(&f, &p);
            assert!(masks.iter().any(|c| c & m == m), "{p}");
        }
        // Points picked inside a region, where patterns are nonempty.
        for r in f.regions() {
            let w = r.witness().unwrap();
            let m = common::mask_of(&f, &w);
            assert!(masks.iter().any(|c| c & m == m));
        }
    }
}

#[test]
fn adding_regions_never_lowers_tau() {
    let mut rng = common::rng(23);
    for _ in 0..8 {
        let f = common::random_family(&mut rng, 7, 10);
        let mut prev = 0;
        for n in 1..=f.len() {
            let tau = piercing_number(&f.prefix(n), None).unwrap().tau;
            assert!(tau >= prev);
            prev = tau;
        }
    }
}

#[test]
fn unbounded_and_degenerate_regions() {
    use piercing::kernel::HalfPlane;
    use piercing::ConvexRegion;
    let f = Family::new(
        "mixed",
        vec![
            ConvexRegion::new("left", vec![HalfPlane::x_at_most(rat(-5, 1))]),
            ConvexRegion::new("right", vec![HalfPlane::x_at_least(rat(5, 1))]),
            ConvexRegion::rect("dot", rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)),
            ConvexRegion::new("up", vec![HalfPlane::y_at_least(rat(100, 1))]),
        ],
    )
    .unwrap();
    let res = piercing_number(&f, None).unwrap();
    assert_eq!(res.tau, 3);
    assert_eq!(common::brute_force_tau(&f), 3);
    assert!(verify_transversal(&f, &res.transversal).ok);
}
