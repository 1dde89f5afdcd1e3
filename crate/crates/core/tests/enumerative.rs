use std::sync::Arc;

use prymcheck::curves::*;
use prymcheck::ledger::*;
use prymcheck::lines27::*;
use prymcheck::surface::*;
use prymcheck::Error;

#[test]
fn dual_degrees() {
    assert_eq!(pluecker_dual_degree(6, 6, 0).unwrap(), 18);
    assert_eq!(pluecker_dual_degree(4, 0, 0).unwrap(), 12);
    assert_eq!(riemann_hurwitz_branch(4, 0, 6).unwrap(), 18);
    // a pencil of plane cubics: chi(P^2 blown up in 9 points) = 12 = number of nodal members
    assert_eq!(solve_unknown_count(12, &[], 1, 0, 2).unwrap(), 12);
}

#[test]
fn bitangents_of_the_projected_curve() {
    assert_eq!(pluecker_solve_bf(6, 18, 4).unwrap(), (96, 36));
    assert_eq!(flex_count(6, 6, 0).unwrap(), 36);
    assert_eq!(pluecker_solve_bf(4, 12, 3).unwrap(), (28, 24));
}

#[test]
fn inconsistent_plane_data_is_rejected() {
    assert!(pluecker_solve_bf(6, 3, 4).is_err());
    assert!(matches!(pluecker_dual_degree(1, 5, 0), Err(Error::NegativeResult { .. })));
}

#[test]
fn counts_on_curves() {
    assert_eq!(theta_characteristics(4, Parity::Odd).unwrap(), 120);
    assert_eq!(riemann_hurwitz_branch(4, 0, 4).unwrap() * 27, 378);
    assert_eq!(moduli_dimension_check(3, &[2, 3], pgl_dim(3)).unwrap(), 13);
    assert_eq!(solve_unknown_count(24, &[(5, 2)], 1, 0, 2).unwrap(), 14);
    assert_eq!(elliptic_total(&[(19, 1)]).unwrap(), 19);
}

#[test]
fn polystable_degrees() {
    let two = PolystableSpec { genera: vec![0, 1], intersections: vec![vec![0, 4], vec![4, 0]], total_chi: -3 };
    assert_eq!(solve_polystable_degrees(&two).unwrap(), [-2, -2]);
    assert_eq!(two_component_slope_relation(&two).unwrap(), (2, 2, 1));
    let three = PolystableSpec {
        genera: vec![0, 0, 0],
        intersections: vec![vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]],
        total_chi: -3,
    };
    assert_eq!(solve_polystable_degrees(&three).unwrap(), [-2, -2, -2]);
}

#[test]
fn curve_on_the_square_of_the_branch_curve() {
    let basis = Arc::new(
        ClassBasis::new(vec!["f1".into(), "f2".into(), "Delta".into()], vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, -6]]).unwrap(),
    );
    let d = DivisorClass::new(&basis, vec![12, 6, -2]).unwrap();
    let k = DivisorClass::new(&basis, vec![6, 6, 0]).unwrap();
    let kd = intersect(&k.add(&d).unwrap(), &d).unwrap();
    assert_eq!(kd, 132);
    assert_eq!(adjunction_genus(kd).unwrap(), 67);
    assert_eq!(riemann_hurwitz_branch(67, 4, 4).unwrap(), 108);

    let chain = ProductCurveChain::compute(4, 1, 4).unwrap();
    assert_eq!((chain.delta_squared, chain.canonical_degree, chain.genus_d, chain.branch_points), (-6, 132, 67, 108));
}

#[test]
fn odd_canonical_degree_is_an_error() {
    assert!(matches!(adjunction_genus(7), Err(Error::OddCanonicalDegree(7))));
}

#[test]
fn lines_and_tritangents() {
    let c = Configuration27::build();
    assert_eq!(c.strongly_regular_parameters(), Some((27, 10, 1, 5)));
    for l in c.lines() {
        assert!(!c.incident(*l, *l));
        for m in c.lines() {
            assert_eq!(c.incident(*l, *m), c.incident(*m, *l));
        }
    }
    let triples = tritangent_triples(&c);
    assert_eq!(triples.len(), 45);
    for t in &triples {
        assert!(c.incident(t[0], t[1]) && c.incident(t[0], t[2]) && c.incident(t[1], t[2]));
    }
    let d = dual_stratification_counts(&c).unwrap();
    assert_eq!((d.triples_per_line, d.lines_per_triple), (5, 3));
    assert_eq!(27 * 5, 45 * 3);
}

#[test]
fn ledgers() {
    assert_eq!(total_chi(&Ledger::stated_cubic()).unwrap(), 2283);
    assert_eq!(total_chi(&Ledger::stated_del_pezzo_2()).unwrap(), 212);
    let derived = Ledger::derive_from(&Ledger::stated_cubic(), true).unwrap();
    for (l, v) in [("k", 120), ("n", 378), ("s", 45)] {
        assert_eq!(derived.entry(l).unwrap().chi_base, Some(v), "row {l}");
    }
    assert_eq!(total_chi(&derived).unwrap(), 2355);
    let disc = discrepancy_report(&Ledger::stated_cubic(), &derived).unwrap();
    assert_eq!(disc.len(), 1);
    assert_eq!((disc[0].label.as_str(), disc[0].stated_value, disc[0].derived_value), ("o", Some(864), Some(936)));
    assert!(disc[0].upstream_cause.contains("b = 96"));
}

#[test]
fn strict_derivation_refuses_unrecorded_rows() {
    match Ledger::derive_from(&Ledger::stated_del_pezzo_2(), true) {
        Err(Error::UnderivableLabel(l)) => assert_eq!(l, "ii"),
        other => panic!("expected an underivable row, got {other:?}"),
    }
    let relaxed = Ledger::derive_from(&Ledger::stated_del_pezzo_2(), false).unwrap();
    assert_eq!(total_chi(&relaxed).unwrap(), 212);
}

#[test]
fn discriminant_and_fiber_points() {
    let d = discriminant_degrees().unwrap();
    assert_eq!((d.cubic_dual, d.branch_dual, d.total), (12, 18, 30));
    let fp = fiber_point_checks();
    assert!(fp.halving_counts.iter().all(|&(_, n)| n == 4));
    assert_eq!(fp.s_equivalence_classes, 3);
}
