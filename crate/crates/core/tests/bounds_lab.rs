use sombor_core::bounds::{
    check_deletion, check_link_so1, check_link_so1_uniform, check_sandwich, fuzz_bounds, replay, BoundId, BoundVerdict,
    FuzzConfig,
};
use sombor_core::families::{complete, cycle};
use sombor_core::ops::{link, LinkSpec};
use sombor_core::report::bounds_jsonl;
use sombor_core::Graph;

#[test]
fn monomer_link_without_regular_prefixes() {
    let spec = LinkSpec::new(vec![complete(3); 3], vec![(0, 1); 3]).unwrap();
    let r = check_link_so1(&spec).unwrap();
    assert!(r.preconditions_met);
    assert_eq!(r.verdict, BoundVerdict::Holds);
}

#[test]
fn regular_link_fails_the_hypothesis_but_is_still_evaluated() {
    // C5 plus chords 0-2 and 1-3: vertex 4 is the only one of degree 2.
    let unit = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]).unwrap();
    let spec = LinkSpec::new(vec![unit.clone(), unit], vec![(4, 4); 2]).unwrap();
    assert!(link(&spec).is_regular());
    for r in [check_link_so1(&spec).unwrap(), check_link_so1_uniform(&spec).unwrap()] {
        assert!(!r.preconditions_met);
        assert!(!r.is_counterexample());
        assert!(r.lhs.abs() < 1e-12);
    }
}

#[test]
fn regular_deletion_on_complete_graph() {
    let r = check_deletion(&complete(4), (0, 1), BoundId::DelSo4).unwrap();
    assert!(r.preconditions_met);
    assert!(r.lhs.is_finite() && r.rhs.is_finite());
}

#[test]
fn fuzz_seed_one_sandwiches_never_fail() {
    let outcome = fuzz_bounds(&FuzzConfig::new(1, 500)).unwrap();
    for b in BoundId::ALL.into_iter().filter(|b| b.is_sandwich()) {
        let s = outcome.summary_for(b);
        assert_eq!(s.violated, 0, "{b}");
        assert_eq!(s.evaluated, 500, "{b}");
    }
    for r in outcome.reports.iter().filter(|r| r.verdict == BoundVerdict::Violated) {
        let again = replay(r).unwrap();
        assert!((again.lhs - r.lhs).abs() <= 1e-12 && (again.rhs - r.rhs).abs() <= 1e-12);
    }
    let again = fuzz_bounds(&FuzzConfig::new(1, 500)).unwrap();
    assert_eq!(bounds_jsonl(&outcome.reports), bounds_jsonl(&again.reports));
}

#[test]
fn cycle_sandwich_so2_is_zero_tight() {
    let r = check_sandwich(&cycle(6), BoundId::SandwichSo2).unwrap();
    assert_eq!(r.verdict, BoundVerdict::Tight);
}
