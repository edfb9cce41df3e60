mod common;

use common::view::library_two_cuts;
use common::*;
use proptest::prelude::*;
use surflink::catalog;
use surflink::error::Hypothesis;
use surflink::map::{cut_along_curve, surface_info};
use surflink::prime::{classify_two_cut, is_obviously_prime, is_prime_certified, obviously_prime_unchecked};
use surflink::Error;

#[test]
fn torus_one_candidates_match_brute_force() {
    let map = catalog::torus_one_map();
    assert_eq!(Some(library_two_cuts(&map)), oracle_two_cuts(&map));
}

#[test]
fn genus_two_weave_is_prime() {
    let d = catalog::genus_two_octagons();
    let check = is_obviously_prime(&d).unwrap();
    assert!(check.obviously_prime);
    assert_eq!(Some(library_two_cuts(d.map())), oracle_two_cuts(d.map()));
    assert!(is_prime_certified(&d).unwrap().prime);
}

#[test]
fn preconditions_are_reported() {
    let kinked = catalog::kinked_trefoil(1);
    assert!(matches!(is_obviously_prime(&kinked), Err(Error::PreconditionFailed(Hypothesis::Reduced))));
    let switched = catalog::trefoil().with_crossing_switched(0);
    assert!(matches!(is_obviously_prime(&switched), Err(Error::PreconditionFailed(Hypothesis::Alternating))));
    let two = catalog::disjoint_union(&catalog::trefoil(), &catalog::trefoil());
    assert!(matches!(is_obviously_prime(&two), Err(Error::PreconditionFailed(Hypothesis::Connected))));
    assert!(matches!(
        is_prime_certified(&catalog::trefoil()),
        Err(Error::PreconditionFailed(Hypothesis::PositiveGenus))
    ));
    assert!(matches!(
        is_prime_certified(&catalog::klein_one()),
        Err(Error::PreconditionFailed(Hypothesis::OrientableSurface))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn candidates_match_brute_force(seed in any::<u64>(), nv in 1usize..7) {
        let d = random_alternating(&mut rng(seed), nv, 0.0);
        let map = d.map();
        prop_assert_eq!(Some(library_two_cuts(map)), oracle_two_cuts(map));
        prop_assert_eq!(Some(obviously_prime_unchecked(&d).obviously_prime), oracle_obviously_prime(map));
    }

    #[test]
    fn verdict_ignores_labels(seed in any::<u64>(), nv in 1usize..8, neg in 0.0f64..0.4) {
        let mut r = rng(seed);
        let d = random_alternating(&mut r, nv, neg);
        let a = obviously_prime_unchecked(&d);
        let b = obviously_prime_unchecked(&scramble(&mut r, &d));
        prop_assert_eq!(a.obviously_prime, b.obviously_prime);
        prop_assert_eq!(a.candidates, b.candidates);
    }

    #[test]
    fn witness_replays(seed in any::<u64>(), nv in 2usize..8, neg in 0.0f64..0.4) {
        let d = random_alternating(&mut rng(seed), nv, neg);
        let check = obviously_prime_unchecked(&d);
        if let Some(w) = check.witness {
            let v = classify_two_cut(d.map(), &w);
            prop_assert!(v.bounds_disk && !v.embedded_arc);
            let cut = cut_along_curve(d.map(), &w.curve).unwrap();
            prop_assert!(cut.separates);
            let chi = surface_info(d.map()).euler_char;
            prop_assert_eq!(cut.sides.iter().map(|s| s.euler_char).sum::<i64>(), chi);
            let disk = cut.disk_sides().min_by_key(|s| s.vertices.len()).unwrap();
            prop_assert!(!disk.vertices.is_empty());
            prop_assert!(disk.vertices.len() < d.crossing_count());
        }
    }
}
