mod common;

use std::collections::BTreeMap;

use prymcheck::invariants::catalog::*;
use prymcheck::invariants::*;
use prymcheck::Error;

fn segre() -> MonoidPresentation {
    labelled_presentation(&segre_action(), 4, LabelScheme::Segre, segre_variables()).unwrap()
}

fn sign_c4() -> MonoidPresentation {
    labelled_presentation(&sign_c4_action(), 4, LabelScheme::SignC4, sign_c4_variables()).unwrap()
}

fn triple() -> MonoidPresentation {
    labelled_presentation(&triple_action(), 6, LabelScheme::Triple, triple_variables()).unwrap()
}

fn z2z2() -> MonoidPresentation {
    labelled_presentation(&z2z2_action(), 4, LabelScheme::Z2z2, z2z2_variables()).unwrap()
}

fn profile(rels: &[Relation]) -> BTreeMap<u32, usize> {
    let mut p = BTreeMap::new();
    for r in rels {
        *p.entry(r.degree()).or_default() += 1;
    }
    p
}

fn family_rank_profile(fams: &[RelationFamily]) -> BTreeMap<u32, usize> {
    let mut p = BTreeMap::new();
    for f in fams {
        let d = f.effective()[0].degree();
        *p.entry(d).or_default() += family_rank(f.effective());
    }
    p
}

#[test]
fn segre_cone() {
    let p = segre();
    assert_eq!(p.len(), 16);
    assert_eq!(p.generator_degree_profile(), BTreeMap::from([(2, 16)]));
    assert_eq!(profile(&p.relations), BTreeMap::from([(2, 36)]));
    let fam = segre_minor_family(&p).unwrap();
    assert!(fam.displayed.iter().all(|r| p.relation_holds(r)));
    assert_eq!(family_rank(&fam.displayed), 36);
    assert!(congruence_closure(&p.generators, &fam.displayed, 6).is_complete());
}

#[test]
fn veronese_cone() {
    let p = sign_c4();
    assert_eq!(p.len(), 10);
    let fam = sign_c4_family(&p).unwrap();
    assert_eq!(family_rank(&fam.displayed), 20);
    assert!(congruence_closure(&p.generators, &fam.displayed, 6).is_complete());
}

#[test]
fn every_generator_is_invariant_and_every_relation_expands() {
    for (action, p) in [(segre_action(), segre()), (triple_action(), triple()), (z2z2_action(), z2z2())] {
        assert!(p.generators.iter().all(|g| action.is_invariant(g.exponents())));
        for r in &p.relations {
            assert_eq!(p.expand(&r.lhs), p.expand(&r.rhs), "{}", p.relation_to_string(r));
        }
    }
}

#[test]
fn triple_case_counts() {
    let p = triple();
    assert_eq!(p.len(), 28);
    assert_eq!(p.generator_degree_profile(), BTreeMap::from([(2, 12), (3, 16)]));
    let fams = triple_families(&p).unwrap();
    let sizes: Vec<usize> = fams.iter().map(|f| family_rank(f.effective())).collect();
    assert_eq!(sizes, [3, 18, 64]);
    assert_eq!(family_rank_profile(&fams), BTreeMap::from([(2, 21), (3, 64)]));
}

#[test]
fn triple_minimal_relations_exceed_the_displayed_families() {
    let p = triple();
    assert_eq!(profile(&p.relations), BTreeMap::from([(2, 69), (3, 64)]));
    let fams = triple_families(&p).unwrap();
    let all: Vec<Relation> = fams.iter().flat_map(|f| f.effective().to_vec()).collect();
    let closure = congruence_closure(&p.generators, &all, 9);
    assert!(closure.invalid_relations.is_empty());
    assert!(!closure.is_complete());
    let (a, b) = &closure.gaps[0].witness;
    assert_eq!(p.expand(a), p.expand(b));
}

#[test]
fn displayed_cubics_need_transposed_superscripts() {
    let p = triple();
    let cubics = &triple_families(&p).unwrap()[2];
    assert_eq!(cubics.displayed.iter().filter(|r| p.relation_holds(r)).count(), 16);
    let (fixed, _) = cubics.corrected.as_ref().unwrap();
    assert!(fixed.iter().all(|r| p.relation_holds(r)));
}

#[test]
fn z2z2_quotient() {
    let p = z2z2();
    assert_eq!(p.len(), 17);
    assert_eq!(p.generator_degree_profile(), BTreeMap::from([(2, 9), (3, 8)]));
    let fams = z2z2_families(&p).unwrap();
    assert_eq!(fams[0].displayed.iter().filter(|r| p.relation_holds(r)).count(), 0);
    assert!(fams.iter().all(|f| f.effective().iter().all(|r| p.relation_holds(r))));
    assert_eq!(family_rank_profile(&fams), BTreeMap::from([(2, 3), (3, 36)]));
}

#[test]
fn segre_fixed_locus_is_the_veronese_quotient() {
    let s = segre();
    let fixed = fixed_locus_presentation(&segre_action(), &s, &segre_involution(), None).unwrap();
    assert_eq!(fixed.presentation.len(), 10);
    assert_eq!(fixed.identifications.len(), 6);
    let v = sign_c4();
    let vm: Vec<Option<usize>> = (0..8).map(|i| (i < 4).then_some(i)).collect();
    let map = generator_map_from_variables(&fixed.presentation, &v, &vm).unwrap();
    let cert = presentations_isomorphic(&fixed.presentation, &v, &map, 4);
    assert!(cert.isomorphic, "{cert:?}");
    assert!(cert.words_checked > 0);
}

#[test]
fn triple_fixed_locus_is_the_z2z2_quotient() {
    let t = triple();
    let fixed = fixed_locus_presentation(&triple_action(), &t, &triple_involution(), None).unwrap();
    assert_eq!(fixed.presentation.len(), 17);
    assert_eq!(fixed.presentation.generator_degree_profile(), BTreeMap::from([(2, 9), (3, 8)]));
    let fams = triple_fixed_families(&fixed).unwrap();
    assert_eq!(fams.iter().map(|f| family_rank(f.effective())).collect::<Vec<_>>(), [3, 36]);
    assert!(fams.iter().all(|f| f.effective().iter().all(|r| fixed.presentation.relation_holds(r))));

    let z = z2z2();
    let vm: Vec<Option<usize>> = (0..12).map(|i| (i < 6).then_some(i)).collect();
    let map = generator_map_from_variables(&fixed.presentation, &z, &vm).unwrap();
    assert!(presentations_isomorphic(&fixed.presentation, &z, &map, 4).isomorphic);
}

#[test]
fn a_wrong_map_is_refuted() {
    let s = segre();
    let fixed = fixed_locus_presentation(&segre_action(), &s, &segre_involution(), None).unwrap();
    let v = sign_c4();
    // a transposition of two generators of different shape
    let mut map: Vec<usize> = (0..10).collect();
    map.swap(0, 1);
    let cert = presentations_isomorphic(&fixed.presentation, &v, &map, 4);
    assert!(!cert.isomorphic);
}

#[test]
fn unsaturated_bound_is_reported() {
    // weights (1, -5): the only generator is x^5 y, of degree 6
    let action = DiagonalAction::torus(2, vec![vec![1, -5]]).unwrap();
    match invariant_generators(&action, 3) {
        Err(Error::NonSaturated { bound, witness }) => {
            assert_eq!(bound, 3);
            assert_eq!(witness.exponents(), &[5, 1]);
        }
        other => panic!("expected NonSaturated, got {other:?}"),
    }
    assert_eq!(invariant_generators(&action, 6).unwrap().len(), 1);
}

#[test]
fn brute_force_on_catalog_actions() {
    let segre = common::RawAction { n: 8, torus: vec![vec![1, 1, 1, 1, -1, -1, -1, -1]], finite: vec![] };
    let ours: Vec<Vec<u32>> = {
        let mut g: Vec<_> = invariant_generators(&segre.build(), 3).unwrap().generators.into_iter().map(|m| m.into_exponents()).collect();
        g.sort();
        g
    };
    assert_eq!(Some(ours), common::brute_force_generators(&segre, 3));
}
