mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

use prymcheck::curves::*;
use prymcheck::lattice::{integer_kernel, IntegerMatrix, Monomial};
use prymcheck::ledger::{total_chi, Ledger, LedgerSurface, Mode, Provenance, StratumEntry};
use prymcheck::lines27::{dual_stratification_counts, tritangent_triples, Configuration27, Line27};
use prymcheck::singularity::*;
use prymcheck::surface::{intersect, ClassBasis, DivisorClass};

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..6, n).prop_map(Monomial::new)
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..5, 1usize..7).prop_flat_map(|(r, c)| (Just(c), prop::collection::vec(prop::collection::vec(-4i64..=4, c), r)))
}

fn raw_action() -> impl Strategy<Value = common::RawAction> {
    (1usize..=5).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=2),
            prop::option::of((2u32..=3, prop::collection::vec(-2i64..=2, n))),
        )
            .prop_map(move |(torus, f)| common::RawAction { n, torus, finite: f.into_iter().collect() })
    })
}

fn element(n: usize) -> impl Strategy<Value = CyclicDiagonalElement> {
    (1u32..=6).prop_flat_map(move |r| {
        prop::collection::vec(0..r, n).prop_map(move |e| CyclicDiagonalElement::new(r, e).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomial_product_is_commutative_and_associative(a in monomial(4), b in monomial(4), c in monomial(4)) {
        prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kernel_vectors_are_annihilated((cols, rows) in small_matrix()) {
        let m = IntegerMatrix::from_rows(cols, &rows).unwrap();
        let kernel = integer_kernel(&m);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == BigInt::from(0)));
        }
        prop_assert_eq!(kernel.len(), cols - common::rational_rank(&rows));
    }

    #[test]
    fn generators_match_brute_force(action in raw_action()) {
        let ours = prymcheck::invariants::invariant_generators(&action.build(), 4);
        match common::brute_force_generators(&action, 4) {
            Some(expected) => {
                let p = ours.unwrap();
                prop_assert!(p.generators.iter().all(|g| action.invariant(g.exponents())));
                let mut got: Vec<Vec<u32>> = p.generators.into_iter().map(Monomial::into_exponents).collect();
                got.sort();
                prop_assert_eq!(got, expected);
            }
            None => prop_assert!(ours.is_err()),
        }
    }

    #[test]
    fn age_of_inverse_complements(g in element(5)) {
        let total = age(&g) + age(&g.inverse());
        prop_assert_eq!(total, Ratio::from_integer(g.nontrivial_eigenvalues() as u64));
    }

    #[test]
    fn classification_ignores_coordinate_order(gens in prop::collection::vec(element(4), 1..3), perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let permute = |g: &CyclicDiagonalElement| {
            let e: Vec<u32> = perm.iter().map(|&i| g.exponents()[i]).collect();
            CyclicDiagonalElement::new(g.order(), e).unwrap()
        };
        let a = FiniteDiagonalGroup::generated_by(gens.clone()).unwrap();
        let b = FiniteDiagonalGroup::generated_by(gens.iter().map(permute).collect()).unwrap();
        let (ca, cb) = (classify_quotient(&a), classify_quotient(&b));
        prop_assert_eq!(ca.is_ok(), cb.is_ok());
        if let (Ok(x), Ok(y)) = (ca, cb) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn classification_ignores_the_generating_set(g in element(4), h in element(4)) {
        let a = FiniteDiagonalGroup::generated_by(vec![g.clone(), h.clone()]).unwrap();
        let gh = g.compose(&h).unwrap();
        let b = FiniteDiagonalGroup::generated_by(vec![gh, h.inverse(), g.clone()]).unwrap();
        prop_assert_eq!(a.order(), b.order());
        let (ca, cb) = (classify_quotient(&a), classify_quotient(&b));
        prop_assert_eq!(ca.is_ok(), cb.is_ok());
        if let (Ok(x), Ok(y)) = (ca, cb) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn pluecker_solution_resubstitutes(d in 2i64..12, delta in 0i64..10, kappa in 0i64..4) {
        let Ok(data) = PlueckerData::complete(d, delta, kappa) else { return Ok(()) };
        let (g, ds, b, f) = (data.g.unwrap(), data.d_star.unwrap(), data.b.unwrap(), data.f.unwrap());
        prop_assert_eq!(ds * (ds - 1) - 2 * b - 3 * f, d);
        prop_assert_eq!((ds - 1) * (ds - 2) / 2 - b - f, g);
    }

    #[test]
    fn covers_satisfy_riemann_hurwitz(degree in 1i64..8, g_target in 0i64..5, extra in 0i64..20) {
        // any source genus at least the pullback bound
        let g_source = degree * (g_target - 1) + 1 + extra;
        if let Ok(c) = CoverData::new(degree, g_source, g_target) {
            prop_assert!(c.satisfies_riemann_hurwitz());
            prop_assert_eq!(c.branch_degree(), 2 * g_source - 2 - degree * (2 * g_target - 2));
        }
    }

    #[test]
    fn intersection_is_symmetric_and_bilinear(
        a in prop::collection::vec(-5i64..=5, 3),
        b in prop::collection::vec(-5i64..=5, 3),
        c in prop::collection::vec(-5i64..=5, 3),
        k in -4i64..=4,
        genus in 0i64..6,
    ) {
        let basis = Arc::new(ClassBasis::product_of_curves(genus, 1));
        let a = DivisorClass::new(&basis, a).unwrap();
        let b = DivisorClass::new(&basis, b).unwrap();
        let c = DivisorClass::new(&basis, c).unwrap();
        prop_assert_eq!(intersect(&a, &b).unwrap(), intersect(&b, &a).unwrap());
        let lhs = intersect(&a.scale(k).add(&b).unwrap(), &c).unwrap();
        prop_assert_eq!(lhs, k * intersect(&a, &c).unwrap() + intersect(&b, &c).unwrap());
    }

    #[test]
    fn tritangents_survive_relabeling(perm in Just([1u8, 2, 3, 4, 5, 6]).prop_shuffle()) {
        let c = Configuration27::build();
        let base = tritangent_triples(&c);
        let mut moved: Vec<[Line27; 3]> = base.iter().map(|t| {
            let mut t = t.map(|l| l.permute(&perm));
            t.sort();
            t
        }).collect();
        moved.sort();
        prop_assert_eq!(&moved, &base);
        for l in Line27::all() {
            for m in Line27::all() {
                prop_assert_eq!(c.incident(l, m), c.incident(l.permute(&perm), m.permute(&perm)));
            }
        }
        let d = dual_stratification_counts(&c).unwrap();
        prop_assert_eq!((d.triple_points, d.triples_per_line), (45, 5));
    }

    #[test]
    fn ledger_total_is_linear_in_fibers(bases in prop::collection::vec(0i64..500, 3), f1 in prop::collection::vec(-3i64..=3, 3), f2 in prop::collection::vec(-3i64..=3, 3)) {
        let make = |fibers: &[i64]| {
            let entries = ["i", "ii", "iii"].iter().zip(&bases).zip(fibers).map(|((l, &b), &f)| StratumEntry {
                label: l.to_string(),
                dimension: 0,
                chi_base: Some(b),
                chi_fiber: f,
                provenance: Provenance::Derived,
                recipe: None,
                note: None,
            }).collect();
            Ledger::new(LedgerSurface::DelPezzo2, Mode::Derived, entries).unwrap()
        };
        let sum: Vec<i64> = f1.iter().zip(&f2).map(|(a, b)| a + b).collect();
        prop_assert_eq!(total_chi(&make(&sum)).unwrap(), total_chi(&make(&f1)).unwrap() + total_chi(&make(&f2)).unwrap());
    }
}

#[test]
fn minus_identity_is_terminal_from_dimension_three() {
    for n in 2..=8 {
        let g = FiniteDiagonalGroup::minus_identity(n);
        let class = classify_quotient(&g).unwrap();
        assert_eq!(class == QuotientClass::Terminal, n >= 3, "n = {n}");
        assert_eq!(minimum_age(&g), Some(Ratio::new(n as u64, 2)));
    }
}

#[test]
fn theta_counts_sum_to_all_square_roots() {
    for g in 1..=8u32 {
        let odd = theta_characteristics(g, Parity::Odd).unwrap();
        let even = theta_characteristics(g, Parity::Even).unwrap();
        assert_eq!(odd + even, 1u64 << (2 * g));
    }
}

#[test]
fn flexes_agree_with_the_solver() {
    for (d, delta, kappa) in [(3, 0, 0), (4, 0, 0), (6, 6, 0)] {
        let data = PlueckerData::complete(d, delta, kappa).unwrap();
        assert_eq!(flex_count(d, delta, kappa).unwrap(), data.f.unwrap());
        let dual_genus = plane_arithmetic_genus(data.d_star.unwrap()).unwrap() - data.b.unwrap() - data.f.unwrap();
        assert_eq!(dual_genus, plane_arithmetic_genus(d).unwrap() - delta - kappa);
    }
}
