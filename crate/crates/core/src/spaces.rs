//! Cohomological models of the Weinstein manifolds under study.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coeff::CoefficientRing;
use crate::error::{domain, Result};
use crate::graded::{Cell, GradedClass, Monomial, PresentationKind, RingPresentation, DEFAULT_MAX_DEGREE};
use crate::numtheory::binom_exact;
use crate::SCHEMA_VERSION;

/// Cohomology presentation plus the Chern classes of the stable tangent
/// bundle, trusted only in degrees below `window`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceModel {
    name: String,
    presentation: Arc<RingPresentation>,
    chern: BTreeMap<u32, GradedClass>,
    window: u32,
    trivial_summands: u64,
    meta: Vec<String>,
}

impl SpaceModel {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.presentation
    }

    pub fn ring(&self) -> CoefficientRing {
        self.presentation.ring()
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn meta(&self) -> &[String] {
        &self.meta
    }

    /// Number of trivial complex summands added by [`stabilize`].
    pub fn trivial_summands(&self) -> u64 {
        self.trivial_summands
    }

    /// `c_i`; `c_0 = 1` and unrecorded indices read as zero.
    pub fn chern_class(&self, i: u32) -> GradedClass {
        if i == 0 {
            return GradedClass::one(&self.presentation, DEFAULT_MAX_DEGREE);
        }
        self.chern
            .get(&i)
            .cloned()
            .unwrap_or_else(|| GradedClass::zero(&self.presentation, DEFAULT_MAX_DEGREE))
    }

    pub fn chern_classes(&self) -> impl Iterator<Item = (u32, &GradedClass)> {
        self.chern.iter().map(|(&i, c)| (i, c))
    }

    /// Pairing of `c_i` with each generator in degree `2i`, in generator order.
    pub fn chern_pairings(&self, i: u32) -> Vec<BigInt> {
        self.chern_class(i).linear_coefficients(2 * i)
    }

    /// The same space with cohomology coefficients changed to `ring`.
    /// Only integral models can be re-read; the result reduces each Chern
    /// class through the coefficient map.
    pub fn with_coefficients(&self, ring: CoefficientRing) -> Result<SpaceModel> {
        if ring == self.ring() {
            return Ok(self.clone());
        }
        let presentation = self.presentation.with_ring(ring)?;
        let chern = self
            .chern
            .iter()
            .map(|(&i, c)| Ok((i, c.change_presentation(&presentation)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(SpaceModel {
            presentation,
            chern,
            ..self.clone()
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SpaceModelJson::from(self)).expect("serializable")
    }
}

#[derive(Serialize)]
struct SpaceModelJson<'a> {
    schema: &'static str,
    name: &'a str,
    window: u32,
    ring: String,
    trivial_summands: u64,
    presentation: &'a PresentationKind,
    generators: Vec<String>,
    chern: Vec<ChernJson>,
    meta: &'a [String],
}

#[derive(Serialize)]
struct ChernJson {
    i: u32,
    degree: u32,
    value: String,
    coefficients: Vec<TermJson>,
}

#[derive(Serialize)]
struct TermJson {
    monomial: String,
    coefficient: String,
}

impl<'a> From<&'a SpaceModel> for SpaceModelJson<'a> {
    fn from(x: &'a SpaceModel) -> Self {
        let pres = &x.presentation;
        SpaceModelJson {
            schema: SCHEMA_VERSION,
            name: &x.name,
            window: x.window,
            ring: x.ring().to_string(),
            trivial_summands: x.trivial_summands,
            presentation: pres.kind(),
            generators: pres.generators().iter().map(|g| g.name.clone()).collect(),
            chern: x
                .chern
                .iter()
                .map(|(&i, c)| {
                    let mut coefficients: Vec<TermJson> = c
                        .terms()
                        .map(|(m, v)| TermJson {
                            monomial: m.render(pres),
                            coefficient: v.to_string(),
                        })
                        .collect();
                    coefficients.sort_by(|a, b| a.monomial.cmp(&b.monomial));
                    ChernJson {
                        i,
                        degree: 2 * i,
                        value: c.to_string(),
                        coefficients,
                    }
                })
                .collect(),
            meta: &x.meta,
        }
    }
}

/// `X_{n,d}`: the complement of a smooth degree-`d` hypersurface in `P^n`.
///
/// Below the middle dimension the even cohomology is cyclic of order `d`
/// generated by powers of the hyperplane class, and `c_i` is the image of
/// `C(n+1, i) h^i`. Degrees `>= n` are not modeled.
pub fn divisor_complement(n: u32, d: u64, ring: CoefficientRing) -> Result<SpaceModel> {
    if n < 2 {
        return domain(format!("divisor complement needs n >= 2, got {n}"));
    }
    if d < 1 {
        return domain("divisor complement needs d >= 1");
    }
    let top = (n - 1) / 2;
    let presentation = RingPresentation::truncated_on_h(vec![d; top as usize], n, CoefficientRing::Integers)?;
    let chern = (1..=top)
        .map(|i| {
            let class = GradedClass::from_terms(
                &presentation,
                [(Monomial::from_exponents(vec![(0, i)]), binom_exact(u64::from(n) + 1, u64::from(i)))],
                DEFAULT_MAX_DEGREE,
            );
            (i, class)
        })
        .collect();
    let integral = SpaceModel {
        name: format!("X_{{{n},{d}}}"),
        presentation,
        chern,
        window: n,
        trivial_summands: 0,
        meta: vec![format!("complement of a smooth degree-{d} hypersurface in P^{n}")],
    };
    integral.with_coefficients(ring)
}

fn sphere6_model(name: String, c3: BigInt, ring: CoefficientRing, meta: String) -> Result<SpaceModel> {
    let presentation = RingPresentation::sphere_like(vec![Cell { degree: 6, rank: 1 }], ring)?;
    let zero = GradedClass::zero(&presentation, DEFAULT_MAX_DEGREE);
    let c3 = GradedClass::generator_power(&presentation, "s6", 1, c3, DEFAULT_MAX_DEGREE)?;
    Ok(SpaceModel {
        name,
        presentation,
        chern: BTreeMap::from([(1, zero.clone()), (2, zero), (3, c3)]),
        window: 7,
        trivial_summands: 0,
        meta: vec![meta],
    })
}

/// Total space of `W = (TS^6)^{+k}` over `S^6`: homotopy equivalent to `S^6`
/// with `c_3` pairing to `2(k+1)` with the zero section.
pub fn sphere6_bundle_total_space(k: u64) -> Result<SpaceModel> {
    if k < 1 {
        return domain("bundle over S^6 needs k >= 1");
    }
    sphere6_model(
        format!("S6-bundle(k={k})"),
        BigInt::from(2) * (BigInt::from(k) + 1),
        CoefficientRing::Integers,
        format!("total space of {k} copies of TS^6 over S^6, complex rank {}", 3 * k),
    )
}

/// `T*S^6` over `Z[1/2]`: its tangent bundle is a complexification, so the
/// odd Chern classes vanish after inverting 2. No integral model is offered.
pub fn cotangent_sphere6() -> SpaceModel {
    sphere6_model(
        "T*S6".to_string(),
        BigInt::from(0),
        CoefficientRing::IntegersHalfInverted,
        "cotangent bundle of S^6, Chern data over Z[1/2] only".to_string(),
    )
    .expect("valid model")
}

/// A point: no positive-degree cohomology.
pub fn point() -> SpaceModel {
    SpaceModel {
        name: "pt".to_string(),
        presentation: RingPresentation::sphere_like(Vec::new(), CoefficientRing::Integers).expect("valid"),
        chern: BTreeMap::new(),
        window: 1,
        trivial_summands: 0,
        meta: Vec::new(),
    }
}

fn sphere_cells(x: &SpaceModel) -> Result<Vec<Cell>> {
    match x.presentation.kind() {
        PresentationKind::SphereLike { cells } => Ok(cells.clone()),
        _ => domain(format!("{} is not sphere-like", x.name)),
    }
}

fn embed(class: &GradedClass, target: &Arc<RingPresentation>, offset: usize) -> GradedClass {
    GradedClass::from_terms(
        target,
        class.terms().map(|(m, c)| {
            let shifted = m.exponents().iter().map(|&(g, e)| (g + offset, e)).collect();
            (Monomial::from_exponents(shifted), c.clone())
        }),
        class.max_degree(),
    )
}

/// Wedge of two sphere-like models. Summand order follows argument order;
/// an integral argument is re-read over the other argument's ring.
pub fn wedge(a: &SpaceModel, b: &SpaceModel) -> Result<SpaceModel> {
    let cells_a = sphere_cells(a)?;
    let cells_b = sphere_cells(b)?;
    let ring = match (a.ring(), b.ring()) {
        (x, y) if x == y => x,
        (CoefficientRing::Integers, y) => y,
        (x, CoefficientRing::Integers) => x,
        (x, y) => return domain(format!("cannot wedge models over {x} and {y}")),
    };
    let a = a.with_coefficients(ring)?;
    let b = b.with_coefficients(ring)?;
    let offset = a.presentation.generators().len();
    let presentation = RingPresentation::direct_sum(vec![cells_a, cells_b], ring)?;
    let mut chern = BTreeMap::new();
    for i in a.chern.keys().chain(b.chern.keys()) {
        let sum = embed(&a.chern_class(*i), &presentation, 0)
            .add(&embed(&b.chern_class(*i), &presentation, offset))?;
        chern.insert(*i, sum);
    }
    let mut meta = vec![format!("wedge of {} and {}", a.name, b.name)];
    meta.extend(a.meta.iter().chain(b.meta.iter()).cloned());
    Ok(SpaceModel {
        name: format!("{} v {}", a.name, b.name),
        presentation,
        chern,
        window: a.window.max(b.window),
        trivial_summands: a.trivial_summands + b.trivial_summands,
        meta,
    })
}

/// `E + C^m`: Chern data is unchanged, only the summand count moves.
pub fn stabilize(a: &SpaceModel, m: u64) -> SpaceModel {
    SpaceModel {
        trivial_summands: a.trivial_summands + m,
        ..a.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(m: u64) -> CoefficientRing {
        CoefficientRing::integers_mod(m).unwrap()
    }

    #[test]
    fn anticanonical_p11_mod3() {
        let x = divisor_complement(11, 12, zmod(3)).unwrap();
        assert!(x.chern_class(1).is_zero());
        assert!(x.chern_class(2).is_zero());
        assert_eq!(x.chern_class(3).to_string(), "h^3 (mod 3)");
        assert_eq!(x.window(), 11);
        assert_eq!(x.chern_classes().count(), 5);
    }

    #[test]
    fn anticanonical_has_vanishing_c1() {
        for n in 2..30 {
            let x = divisor_complement(n, u64::from(n) + 1, CoefficientRing::Integers).unwrap();
            assert!(x.chern_class(1).is_zero(), "n={n}");
        }
    }

    #[test]
    fn degree_one_hypersurface_kills_everything() {
        let x = divisor_complement(7, 1, CoefficientRing::Integers).unwrap();
        for i in 1..=3 {
            assert!(x.chern_class(i).is_zero());
        }
        assert_eq!(x.presentation().coefficient_order(4), 1);
    }

    #[test]
    fn divisor_complement_guards() {
        assert!(divisor_complement(1, 3, CoefficientRing::Integers).is_err());
        assert!(divisor_complement(5, 0, CoefficientRing::Integers).is_err());
    }

    #[test]
    fn even_degree_over_half_inverted_uses_odd_part() {
        let x = divisor_complement(11, 12, CoefficientRing::IntegersHalfInverted).unwrap();
        assert_eq!(x.presentation().coefficient_order(2), 3);
    }

    #[test]
    fn sphere_bundle_pairings() {
        assert_eq!(sphere6_bundle_total_space(23).unwrap().chern_pairings(3), vec![BigInt::from(48)]);
        assert_eq!(sphere6_bundle_total_space(1).unwrap().chern_pairings(3), vec![BigInt::from(4)]);
        assert_eq!(sphere6_bundle_total_space(11).unwrap().chern_pairings(3), vec![BigInt::from(24)]);
        let x = sphere6_bundle_total_space(5).unwrap();
        assert!(x.chern_class(1).is_zero() && x.chern_class(2).is_zero());
        assert!(sphere6_bundle_total_space(0).is_err());
    }

    #[test]
    fn wedge_keeps_component_pairings_in_argument_order() {
        let y = sphere6_bundle_total_space(23).unwrap();
        let z = wedge(&y, &cotangent_sphere6()).unwrap();
        assert_eq!(z.ring(), CoefficientRing::IntegersHalfInverted);
        assert_eq!(z.chern_pairings(3), vec![BigInt::from(48), BigInt::from(0)]);
        let flipped = wedge(&cotangent_sphere6(), &y).unwrap();
        assert_eq!(flipped.chern_pairings(3), vec![BigInt::from(0), BigInt::from(48)]);

        let with_point = wedge(&y, &point()).unwrap();
        assert_eq!(with_point.chern_pairings(3), vec![BigInt::from(48)]);
        assert_eq!(with_point.window(), 7);
    }

    #[test]
    fn wedge_rejects_non_sphere_like() {
        let x = divisor_complement(7, 3, CoefficientRing::Integers).unwrap();
        assert!(wedge(&x, &point()).is_err());
        let y = sphere6_bundle_total_space(1).unwrap().with_coefficients(zmod(3)).unwrap();
        assert!(wedge(&y, &cotangent_sphere6()).is_err());
    }

    #[test]
    fn stabilization_composes() {
        let x = sphere6_bundle_total_space(23).unwrap();
        assert_eq!(stabilize(&x, 0), x);
        let s = stabilize(&x, 66);
        assert_eq!(s.chern_pairings(3), vec![BigInt::from(48)]);
        assert_eq!(stabilize(&stabilize(&x, 10), 56), s);
    }

    #[test]
    fn json_layout_is_stable() {
        let x = divisor_complement(8, 9, CoefficientRing::Integers).unwrap();
        let text = serde_json::to_string(&x.to_json()).unwrap();
        assert_eq!(text, serde_json::to_string(&x.to_json()).unwrap());
        assert!(text.starts_with(r#"{"schema":"ccobstruct/1","name":"X_{8,9}","window":8"#), "{text}");
        assert!(text.contains(r#"{"i":3,"degree":6,"value":"3*h^3 (mod 9)","coefficients":[{"monomial":"h^3","coefficient":"3"}]}"#), "{text}");
    }
}
