//! Chern-class calculus over `Z[1/2]`.
//!
//! Over `Z[1/2]` the cohomology of `BO` is polynomial on the Pontryagin
//! classes and `c(V (x) C) = 1 - p1 + p2 - ...`. Pulling the universal
//! bundle of `BU` back along `BO x BU(1) -> BU`, `(V, L) |-> V (x) C + L`,
//! gives [`phi_bu_to_bo_x_bu1`]; dropping the line bundle gives
//! [`psi_bu_to_bo`]. Both are ring maps and are applied monomial by monomial.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::CoefficientRing;
use crate::error::{domain, Error, Result};
use crate::graded::{GradedClass, Generator, Monomial, RingPresentation};

/// Name of the first Chern class of the line-bundle factor. Kept distinct
/// from `c1` so source and target never share a symbol.
pub const LINE_CLASS: &str = "e";

/// `H*(BU; ring)` through `max_degree`: generators `c1, c2, ...` with `|ci| = 2i`.
pub fn bu_presentation(ring: CoefficientRing, max_degree: u32) -> Arc<RingPresentation> {
    let gens = (1..=max_degree / 2).map(|i| Generator::new(format!("c{i}"), 2 * i)).collect();
    RingPresentation::free_polynomial(gens, ring).expect("valid generators")
}

/// `H*(BO; Z[1/2])` through `max_degree`: `p1, p2, ...` with `|pi| = 4i`.
pub fn bo_presentation(max_degree: u32) -> Arc<RingPresentation> {
    let gens = pontryagin_generators(max_degree);
    RingPresentation::free_polynomial(gens, CoefficientRing::IntegersHalfInverted).expect("valid generators")
}

/// `H*(BO x BU(1); Z[1/2])`: the Pontryagin classes followed by `e`.
pub fn bo_x_bu1_presentation(max_degree: u32) -> Arc<RingPresentation> {
    let mut gens = pontryagin_generators(max_degree);
    gens.push(Generator::new(LINE_CLASS, 2));
    RingPresentation::free_polynomial(gens, CoefficientRing::IntegersHalfInverted).expect("valid generators")
}

fn pontryagin_generators(max_degree: u32) -> Vec<Generator> {
    (1..=max_degree / 4).map(|i| Generator::new(format!("p{i}"), 4 * i)).collect()
}

/// A total Chern class `1 + c1 + c2 + ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalChernClass(GradedClass);

impl TotalChernClass {
    pub fn new(class: GradedClass) -> Result<Self> {
        let unit = GradedClass::one(class.presentation(), class.max_degree());
        if class.degree_part(0) != unit {
            return domain(format!("total Chern class must have constant term 1, got {class}"));
        }
        Ok(TotalChernClass(class))
    }

    pub fn class(&self) -> &GradedClass {
        &self.0
    }

    /// `c_i`, the degree-`2i` component.
    pub fn component(&self, i: u32) -> GradedClass {
        self.0.degree_part(2 * i)
    }

    pub fn into_class(self) -> GradedClass {
        self.0
    }
}

/// `c(P^n) = sum_{i <= n} C(n+1, i) h^i` in `H*(P^n; ring) = ring[h]/(h^{n+1})`.
pub fn total_chern_projective(n: u32, ring: CoefficientRing) -> Result<TotalChernClass> {
    if n < 1 {
        return domain("projective space needs n >= 1");
    }
    let order = ring.modulus().unwrap_or(0);
    let pres = RingPresentation::truncated_on_h(vec![order; n as usize], 2 * n + 1, ring)?;
    let terms = (0..=n).map(|i| {
        (
            Monomial::from_exponents(vec![(0, i)]),
            crate::numtheory::binom_exact(u64::from(n) + 1, u64::from(i)),
        )
    });
    TotalChernClass::new(GradedClass::from_terms(&pres, terms, 2 * n))
}

/// Total Chern class of a direct sum.
pub fn whitney_product(a: &TotalChernClass, b: &TotalChernClass) -> Result<TotalChernClass> {
    TotalChernClass::new(a.0.mul(&b.0)?)
}

fn chern_index(name: &str) -> Option<u32> {
    name.strip_prefix('c')?.parse().ok().filter(|&i| i >= 1)
}

fn check_chern_source(class: &GradedClass) -> Result<Vec<u32>> {
    let pres = class.presentation();
    if pres.ring() != CoefficientRing::IntegersHalfInverted {
        return domain(format!("expected coefficients in Z[1/2], got {}", pres.ring()));
    }
    pres.generators()
        .iter()
        .map(|g| match chern_index(&g.name) {
            Some(i) if g.degree == 2 * i => Ok(i),
            _ => Err(Error::Domain(format!("{} is not a Chern class generator", g.name))),
        })
        .collect()
}

fn signed_pontryagin(target: &Arc<RingPresentation>, m: u32, max_degree: u32) -> GradedClass {
    let sign = if m.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    GradedClass::generator_power(target, &format!("p{m}"), 1, sign, max_degree)
        .unwrap_or_else(|_| GradedClass::zero(target, max_degree))
}

/// `c1 -> e`, `c_{2m} -> (-1)^m p_m`, `c_{2m+1} -> (-1)^m p_m e`.
pub fn phi_bu_to_bo_x_bu1(class: &GradedClass, max_degree: u32) -> Result<GradedClass> {
    let indices = check_chern_source(class)?;
    let target = bo_x_bu1_presentation(max_degree);
    let e = GradedClass::generator_power(&target, LINE_CLASS, 1, 1, max_degree)?;
    let images: Vec<GradedClass> = indices
        .iter()
        .map(|&i| match i {
            1 => e.clone(),
            i if i % 2 == 0 => signed_pontryagin(&target, i / 2, max_degree),
            i => signed_pontryagin(&target, i / 2, max_degree)
                .mul(&e)
                .expect("same presentation"),
        })
        .collect();
    class.substitute(&target, &images, max_degree)
}

/// Complexification only: `c_{2m} -> (-1)^m p_m`, odd classes to zero.
pub fn psi_bu_to_bo(class: &GradedClass, max_degree: u32) -> Result<GradedClass> {
    let indices = check_chern_source(class)?;
    let target = bo_presentation(max_degree);
    let images: Vec<GradedClass> = indices
        .iter()
        .map(|&i| {
            if i % 2 == 0 {
                signed_pontryagin(&target, i / 2, max_degree)
            } else {
                GradedClass::zero(&target, max_degree)
            }
        })
        .collect();
    class.substitute(&target, &images, max_degree)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelCheck {
    pub in_kernel: bool,
    /// Image under [`phi_bu_to_bo_x_bu1`]; zero exactly when `in_kernel`.
    pub image: GradedClass,
}

pub fn kernel_membership(class: &GradedClass, max_degree: u32) -> Result<KernelCheck> {
    let image = phi_bu_to_bo_x_bu1(class, max_degree)?;
    Ok(KernelCheck { in_kernel: image.is_zero(), image })
}

/// `c1 c_{2k} - c_{2k+1}` in `H*(BU; Z[1/2])`.
pub fn kernel_relation(k: u32, max_degree: u32) -> Result<GradedClass> {
    if k < 1 || 4 * k + 2 > max_degree {
        return domain(format!("relation for k={k} needs 1 <= k and 4k+2 <= {max_degree}"));
    }
    let pres = bu_presentation(CoefficientRing::IntegersHalfInverted, max_degree);
    GradedClass::parse(&pres, &format!("c1*c{} - c{}", 2 * k, 2 * k + 1), max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::DEFAULT_MAX_DEGREE;

    const D: u32 = DEFAULT_MAX_DEGREE;

    fn bu(text: &str) -> GradedClass {
        GradedClass::parse(&bu_presentation(CoefficientRing::IntegersHalfInverted, D), text, D).unwrap()
    }

    #[test]
    fn projective_space_chern_classes() {
        let c = total_chern_projective(7, CoefficientRing::Integers).unwrap();
        assert_eq!(
            c.class().to_string(),
            "1 + 8*h + 28*h^2 + 56*h^3 + 70*h^4 + 56*h^5 + 28*h^6 + 8*h^7"
        );
        assert_eq!(total_chern_projective(1, CoefficientRing::Integers).unwrap().class().to_string(), "1 + 2*h");
        let c3 = total_chern_projective(7, CoefficientRing::integers_mod(3).unwrap()).unwrap();
        assert_eq!(
            c3.class().to_string(),
            "1 + 2*h + h^2 + 2*h^3 + h^4 + 2*h^5 + h^6 + 2*h^7 (mod 3)"
        );
        assert_eq!(c3.component(2).to_string(), "h^2 (mod 3)");
        assert!(total_chern_projective(0, CoefficientRing::Integers).is_err());
    }

    #[test]
    fn whitney_examples() {
        let a = total_chern_projective(4, CoefficientRing::Integers).unwrap();
        let one = TotalChernClass::new(GradedClass::one(a.class().presentation(), a.class().max_degree())).unwrap();
        assert_eq!(whitney_product(&a, &one).unwrap(), a);

        // Window 5 keeps h^2 alive.
        let pres = RingPresentation::truncated_on_h(vec![0, 0], 5, CoefficientRing::Integers).unwrap();
        let cp1 = TotalChernClass::new(GradedClass::parse(&pres, "1 + 2*h", D).unwrap()).unwrap();
        assert_eq!(whitney_product(&cp1, &cp1).unwrap().class().to_string(), "1 + 4*h + 4*h^2");

        let target = bo_x_bu1_presentation(12);
        let v = TotalChernClass::new(GradedClass::parse(&target, "1 - p1 + p2 - p3", 12).unwrap()).unwrap();
        let l = TotalChernClass::new(GradedClass::parse(&target, "1 + e", 12).unwrap()).unwrap();
        let expected = GradedClass::parse(&target, "1 + e - p1 - p1*e + p2 + p2*e - p3", 12).unwrap();
        assert_eq!(whitney_product(&v, &l).unwrap().class(), &expected);
    }

    #[test]
    fn total_class_needs_unit_constant() {
        let pres = bo_presentation(8);
        assert!(TotalChernClass::new(GradedClass::parse(&pres, "2 + p1", 8).unwrap()).is_err());
    }

    #[test]
    fn phi_on_low_generators() {
        assert_eq!(phi_bu_to_bo_x_bu1(&bu("c2"), D).unwrap().to_string(), "-p1");
        assert_eq!(phi_bu_to_bo_x_bu1(&bu("c3"), D).unwrap().to_string(), "-p1*e");
        assert_eq!(phi_bu_to_bo_x_bu1(&bu("c1"), D).unwrap().to_string(), "e");
        assert!(phi_bu_to_bo_x_bu1(&bu("c1*c2 - c3"), D).unwrap().is_zero());
        assert_eq!(phi_bu_to_bo_x_bu1(&bu("c4"), D).unwrap().to_string(), "p2");
        assert_eq!(phi_bu_to_bo_x_bu1(&bu("c1^2"), D).unwrap().to_string(), "e^2");
    }

    #[test]
    fn psi_examples() {
        assert!(psi_bu_to_bo(&bu("c3"), D).unwrap().is_zero());
        assert_eq!(psi_bu_to_bo(&bu("c2"), D).unwrap().to_string(), "-p1");
        assert_eq!(psi_bu_to_bo(&bu("c2^2"), D).unwrap().to_string(), "p1^2");
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_membership(&bu("c1*c2 - c3"), D).unwrap().in_kernel);
        let c2 = kernel_membership(&bu("c2"), D).unwrap();
        assert!(!c2.in_kernel);
        assert_eq!(c2.image.to_string(), "-p1");
        assert!(kernel_membership(&bu("c1*c4 - c5"), D).unwrap().in_kernel);
        assert_eq!(phi_bu_to_bo_x_bu1(&bu("c5"), D).unwrap().to_string(), "p2*e");
    }

    #[test]
    fn kernel_relations_through_k12() {
        for k in 1..=12 {
            let rel = kernel_relation(k, 64).unwrap();
            assert!(kernel_membership(&rel, 64).unwrap().in_kernel, "k={k}");
        }
        assert!(kernel_relation(0, 64).is_err());
        assert!(kernel_relation(16, 64).is_err());
    }

    #[test]
    fn phi_rejects_foreign_generators() {
        let pres = bo_presentation(8);
        assert!(phi_bu_to_bo_x_bu1(&GradedClass::parse(&pres, "p1", 8).unwrap(), 8).is_err());
        let integral = GradedClass::parse(&bu_presentation(CoefficientRing::Integers, 8), "c1", 8).unwrap();
        assert!(psi_bu_to_bo(&integral, 8).is_err());
    }
}
