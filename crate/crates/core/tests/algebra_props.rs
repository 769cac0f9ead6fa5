use std::sync::Arc;

use ccobstruct::chern::{bo_presentation, bu_presentation, phi_bu_to_bo_x_bu1, psi_bu_to_bo};
use ccobstruct::graded::{GradedClass, Monomial, RingPresentation};
use ccobstruct::CoefficientRing;
use num_bigint::BigInt;
use proptest::prelude::*;

const MAX_DEGREE: u32 = 40;

/// Sparse random class in `c1..c10`: up to 5 monomials of up to 3 factors.
fn arb_chern_poly() -> impl Strategy<Value = Vec<(Vec<(usize, u32)>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec((0usize..10, 1u32..3), 0..4), -20i64..20),
        0..6,
    )
}

fn build(pres: &Arc<RingPresentation>, raw: &[(Vec<(usize, u32)>, i64)], max_degree: u32) -> GradedClass {
    GradedClass::from_terms(
        pres,
        raw.iter().map(|(m, c)| (Monomial::from_exponents(m.clone()), BigInt::from(*c))),
        max_degree,
    )
}

fn bu() -> Arc<RingPresentation> {
    // Generators c1..c10 exactly, so indices 0..10 are valid.
    bu_presentation(CoefficientRing::IntegersHalfInverted, 20)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn product_is_associative_and_commutative(a in arb_chern_poly(), b in arb_chern_poly(), c in arb_chern_poly()) {
        let pres = bu();
        let (a, b, c) = (build(&pres, &a, MAX_DEGREE), build(&pres, &b, MAX_DEGREE), build(&pres, &c, MAX_DEGREE));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        // distributivity
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn truncation_is_compatible_with_products(a in arb_chern_poly(), b in arb_chern_poly(), cut in 0u32..40) {
        let pres = bu();
        let (a, b) = (build(&pres, &a, MAX_DEGREE), build(&pres, &b, MAX_DEGREE));
        let lhs = a.mul(&b).unwrap().truncate(cut);
        let rhs = a.truncate(cut).mul(&b.truncate(cut)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_and_psi_are_ring_maps(a in arb_chern_poly(), b in arb_chern_poly()) {
        let pres = bu();
        let (a, b) = (build(&pres, &a, MAX_DEGREE), build(&pres, &b, MAX_DEGREE));
        let ab = a.mul(&b).unwrap();
        let phi = |x: &GradedClass| phi_bu_to_bo_x_bu1(x, MAX_DEGREE).unwrap();
        let psi = |x: &GradedClass| psi_bu_to_bo(x, MAX_DEGREE).unwrap();
        prop_assert_eq!(phi(&ab), phi(&a).mul(&phi(&b)).unwrap());
        prop_assert_eq!(psi(&ab), psi(&a).mul(&psi(&b)).unwrap());
        prop_assert_eq!(phi(&a.add(&b).unwrap()), phi(&a).add(&phi(&b)).unwrap());

        // psi is phi followed by e -> 0.
        let bo = bo_presentation(MAX_DEGREE);
        let source = phi(&a);
        let images: Vec<GradedClass> = source
            .presentation()
            .generators()
            .iter()
            .map(|g| {
                if g.name == "e" {
                    GradedClass::zero(&bo, MAX_DEGREE)
                } else {
                    GradedClass::generator_power(&bo, &g.name, 1, 1, MAX_DEGREE).unwrap()
                }
            })
            .collect();
        prop_assert_eq!(source.substitute(&bo, &images, MAX_DEGREE).unwrap(), psi(&a));
    }

    #[test]
    fn canonical_text_parses_back(a in arb_chern_poly()) {
        let pres = bu();
        let a = build(&pres, &a, MAX_DEGREE);
        prop_assert_eq!(GradedClass::parse(&pres, &a.to_string(), MAX_DEGREE).unwrap(), a);
    }

    #[test]
    fn truncated_h_ring_products_commute(d in 1u64..40, window in 3u32..25, x in prop::collection::vec(-50i64..50, 12), y in prop::collection::vec(-50i64..50, 12)) {
        let top = (window - 1) / 2;
        let pres = RingPresentation::truncated_on_h(vec![d; top as usize], window, CoefficientRing::Integers).unwrap();
        let mk = |v: &[i64]| GradedClass::from_terms(
            &pres,
            v.iter().enumerate().map(|(i, c)| (Monomial::from_exponents(vec![(0, i as u32)]), BigInt::from(*c))),
            64,
        );
        let (a, b) = (mk(&x), mk(&y));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert!(a.terms().all(|(m, _)| pres.monomial_degree(m) < window));
    }
}

#[test]
fn phi_of_c1_squared_matches_square_of_phi() {
    let pres = bu();
    let c1 = GradedClass::parse(&pres, "c1", MAX_DEGREE).unwrap();
    let phi = |x: &GradedClass| phi_bu_to_bo_x_bu1(x, MAX_DEGREE).unwrap();
    assert_eq!(phi(&c1.mul(&c1).unwrap()), phi(&c1).mul(&phi(&c1)).unwrap());
    assert_eq!(phi(&c1.mul(&c1).unwrap()).to_string(), "e^2");
}
