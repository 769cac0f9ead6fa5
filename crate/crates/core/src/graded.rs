//! Truncated graded-commutative polynomial algebras generated in even degrees.
//!
//! A [`RingPresentation`] fixes the generators, the coefficient ring and the
//! relations; a [`GradedClass`] is a sparse element of it. Since every
//! generator has even degree the product is commutative without signs.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{odd_part_u64, reduce_mod_order, CoefficientRing};
use crate::error::{domain, Error, Result};

pub const DEFAULT_MAX_DEGREE: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator { name: name.into(), degree }
    }
}

/// A free block of a sphere-like space: `rank` copies of `Z` in `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub degree: u32,
    pub rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PresentationKind {
    FreePolynomial {
        generators: Vec<Generator>,
    },
    /// One degree-2 generator `h`; `orders[i - 1]` is the cyclic order of the
    /// group in degree `2i` (`0` for a free group). Only degrees below
    /// `window` exist.
    TruncatedPolynomialOnH {
        orders: Vec<u64>,
        window: u32,
    },
    SphereLike {
        cells: Vec<Cell>,
    },
    DirectSum {
        summands: Vec<Vec<Cell>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    kind: PresentationKind,
    ring: CoefficientRing,
    generators: Vec<Generator>,
}

fn sphere_generators(cells: &[Cell], suffix: &str) -> Vec<Generator> {
    let mut out = Vec::new();
    for cell in cells {
        for j in 1..=cell.rank {
            let name = if cell.rank == 1 {
                format!("s{}{suffix}", cell.degree)
            } else {
                format!("s{}_{j}{suffix}", cell.degree)
            };
            out.push(Generator::new(name, cell.degree));
        }
    }
    out
}

fn check_cells(cells: &[Cell]) -> Result<()> {
    for cell in cells {
        if cell.degree == 0 || cell.degree % 2 != 0 {
            return domain(format!("sphere cells must sit in even positive degree, got {}", cell.degree));
        }
    }
    let mut degrees: Vec<u32> = cells.iter().map(|c| c.degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.len() != cells.len() {
        return domain("sphere cells must have distinct degrees");
    }
    Ok(())
}

impl RingPresentation {
    pub fn free_polynomial(generators: Vec<Generator>, ring: CoefficientRing) -> Result<Arc<Self>> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 || g.degree % 2 != 0 {
                return domain(format!("generator {} must have even positive degree", g.name));
            }
            if generators[..i].iter().any(|o| o.name == g.name) {
                return domain(format!("duplicate generator {}", g.name));
            }
        }
        Ok(Arc::new(RingPresentation {
            kind: PresentationKind::FreePolynomial { generators: generators.clone() },
            ring,
            generators,
        }))
    }

    /// `orders` lists the cyclic order in each even degree `2, 4, ...` below `window`.
    pub fn truncated_on_h(orders: Vec<u64>, window: u32, ring: CoefficientRing) -> Result<Arc<Self>> {
        let expected = window.saturating_sub(1) / 2;
        if orders.len() != expected as usize {
            return domain(format!(
                "window {window} needs {expected} degree orders, got {}",
                orders.len()
            ));
        }
        Ok(Arc::new(RingPresentation {
            kind: PresentationKind::TruncatedPolynomialOnH { orders, window },
            ring,
            generators: vec![Generator::new("h", 2)],
        }))
    }

    pub fn sphere_like(cells: Vec<Cell>, ring: CoefficientRing) -> Result<Arc<Self>> {
        check_cells(&cells)?;
        let generators = sphere_generators(&cells, "");
        Ok(Arc::new(RingPresentation {
            kind: PresentationKind::SphereLike { cells },
            ring,
            generators,
        }))
    }

    /// Generators of summand `j` (1-based) carry the suffix `[j]`.
    pub fn direct_sum(summands: Vec<Vec<Cell>>, ring: CoefficientRing) -> Result<Arc<Self>> {
        let mut generators = Vec::new();
        for (j, cells) in summands.iter().enumerate() {
            check_cells(cells)?;
            generators.extend(sphere_generators(cells, &format!("[{}]", j + 1)));
        }
        Ok(Arc::new(RingPresentation {
            kind: PresentationKind::DirectSum { summands },
            ring,
            generators,
        }))
    }

    pub fn kind(&self) -> &PresentationKind {
        &self.kind
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Degrees at or above the window do not exist in the presentation.
    pub fn window(&self) -> Option<u32> {
        match &self.kind {
            PresentationKind::TruncatedPolynomialOnH { window, .. } => Some(*window),
            _ => None,
        }
    }

    fn ring_order(&self) -> u64 {
        self.ring.modulus().unwrap_or(0)
    }

    /// Cyclic order of the coefficient group in `degree` (`0` = free).
    pub fn coefficient_order(&self, degree: u32) -> u64 {
        match &self.kind {
            PresentationKind::TruncatedPolynomialOnH { orders, window } => {
                if degree == 0 {
                    self.ring_order()
                } else if degree.is_multiple_of(2) && degree < *window {
                    orders[(degree / 2 - 1) as usize]
                } else {
                    1
                }
            }
            _ => self.ring_order(),
        }
    }

    fn is_sphere_like(&self) -> bool {
        matches!(
            self.kind,
            PresentationKind::SphereLike { .. } | PresentationKind::DirectSum { .. }
        )
    }

    pub fn monomial_degree(&self, monomial: &Monomial) -> u32 {
        monomial
            .0
            .iter()
            .map(|&(g, e)| self.generators[g].degree * e)
            .sum()
    }

    /// The same generators and relations with coefficients changed to `ring`.
    ///
    /// Only defined from integral presentations (or to the same ring). A
    /// cyclic order `m` becomes `odd_part(m)` over `Z[1/2]` and `gcd(m, q)`
    /// over `Z/q`; free groups become the ring itself.
    pub fn with_ring(&self, ring: CoefficientRing) -> Result<Arc<Self>> {
        if ring == self.ring {
            return Ok(Arc::new(self.clone()));
        }
        if self.ring != CoefficientRing::Integers {
            return domain(format!("cannot change coefficients from {} to {ring}", self.ring));
        }
        let kind = match &self.kind {
            PresentationKind::TruncatedPolynomialOnH { orders, window } => {
                let orders = orders
                    .iter()
                    .map(|&m| base_change_order(m, ring))
                    .collect::<Result<Vec<_>>>()?;
                PresentationKind::TruncatedPolynomialOnH { orders, window: *window }
            }
            other => other.clone(),
        };
        Ok(Arc::new(RingPresentation {
            kind,
            ring,
            generators: self.generators.clone(),
        }))
    }
}

fn base_change_order(order: u64, ring: CoefficientRing) -> Result<u64> {
    Ok(match ring {
        CoefficientRing::Integers => order,
        CoefficientRing::IntegersHalfInverted => {
            if order == 0 {
                0
            } else {
                odd_part_u64(order)?
            }
        }
        CoefficientRing::IntegersMod(q) => {
            if order == 0 {
                q.get()
            } else {
                num_integer::gcd(order, q.get())
            }
        }
    })
}

/// Exponent vector as sorted `(generator index, exponent)` pairs, no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut pairs: Vec<(usize, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable();
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(pairs.len());
        for (g, e) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == g => last.1 += e,
                _ => merged.push((g, e)),
            }
        }
        Monomial(merged)
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn render(&self, presentation: &RingPresentation) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, e)| {
                let name = &presentation.generators[g].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A finitely supported element of a [`RingPresentation`], truncated above
/// `max_degree` and kept in canonical sparse form.
#[derive(Debug, Clone)]
pub struct GradedClass {
    presentation: Arc<RingPresentation>,
    terms: BTreeMap<Monomial, BigInt>,
    max_degree: u32,
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        self.max_degree == other.max_degree
            && same_presentation(&self.presentation, &other.presentation)
            && self.terms == other.terms
    }
}

impl Eq for GradedClass {}

fn same_presentation(a: &Arc<RingPresentation>, b: &Arc<RingPresentation>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GradedClass {
    pub fn zero(presentation: &Arc<RingPresentation>, max_degree: u32) -> Self {
        GradedClass {
            presentation: Arc::clone(presentation),
            terms: BTreeMap::new(),
            max_degree,
        }
    }

    pub fn one(presentation: &Arc<RingPresentation>, max_degree: u32) -> Self {
        Self::from_terms(presentation, [(Monomial::one(), BigInt::one())], max_degree)
    }

    /// Builds a class from raw terms, dropping anything that does not survive
    /// truncation, relations or coefficient reduction.
    pub fn from_terms<I>(presentation: &Arc<RingPresentation>, terms: I, max_degree: u32) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut class = GradedClass {
            presentation: Arc::clone(presentation),
            terms: BTreeMap::new(),
            max_degree,
        };
        for (m, c) in acc {
            if class.survives(&m) {
                let c = reduce_mod_order(c, presentation.coefficient_order(presentation.monomial_degree(&m)));
                if !c.is_zero() {
                    class.terms.insert(m, c);
                }
            }
        }
        class
    }

    /// `coefficient * generator^exponent` for a named generator.
    pub fn generator_power(
        presentation: &Arc<RingPresentation>,
        name: &str,
        exponent: u32,
        coefficient: impl Into<BigInt>,
        max_degree: u32,
    ) -> Result<Self> {
        let g = presentation
            .generator_index(name)
            .ok_or_else(|| Error::Domain(format!("unknown generator {name}")))?;
        Ok(Self::from_terms(
            presentation,
            [(Monomial::from_exponents(vec![(g, exponent)]), coefficient.into())],
            max_degree,
        ))
    }

    pub fn constant(presentation: &Arc<RingPresentation>, value: impl Into<BigInt>, max_degree: u32) -> Self {
        Self::from_terms(presentation, [(Monomial::one(), value.into())], max_degree)
    }

    fn survives(&self, m: &Monomial) -> bool {
        let degree = self.presentation.monomial_degree(m);
        if degree > self.max_degree {
            return false;
        }
        if let Some(window) = self.presentation.window() {
            if degree >= window {
                return false;
            }
        }
        !(self.presentation.is_sphere_like() && m.total_exponent() > 1)
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.presentation
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// Coefficient of each degree-`degree` generator, in generator order.
    pub fn linear_coefficients(&self, degree: u32) -> Vec<BigInt> {
        self.presentation
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| g.degree == degree)
            .map(|(i, _)| self.coefficient(&Monomial::from_exponents(vec![(i, 1)])))
            .collect()
    }

    fn compatible(&self, other: &GradedClass) -> Result<()> {
        if !same_presentation(&self.presentation, &other.presentation) {
            return Err(Error::PresentationMismatch(
                "classes live in different presentations".into(),
            ));
        }
        if self.max_degree != other.max_degree {
            return Err(Error::PresentationMismatch(format!(
                "max degrees differ ({} vs {})",
                self.max_degree, other.max_degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedClass) -> Result<GradedClass> {
        self.compatible(other)?;
        Ok(Self::from_terms(
            &self.presentation,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
            self.max_degree,
        ))
    }

    pub fn neg(&self) -> GradedClass {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &GradedClass) -> Result<GradedClass> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigInt) -> GradedClass {
        Self::from_terms(
            &self.presentation,
            self.terms.iter().map(|(m, c)| (m.clone(), c * factor)),
            self.max_degree,
        )
    }

    pub fn mul(&self, other: &GradedClass) -> Result<GradedClass> {
        self.mul_flagged(other).map(|(product, _)| product)
    }

    /// Product together with a flag telling whether any nonzero term was
    /// dropped for landing at or above the window or `max_degree`.
    pub fn mul_flagged(&self, other: &GradedClass) -> Result<(GradedClass, bool)> {
        self.compatible(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        let mut dropped = false;
        let limit = match self.presentation.window() {
            Some(w) => self.max_degree.min(w.saturating_sub(1)),
            None => self.max_degree,
        };
        for (ma, ca) in &self.terms {
            let da = self.presentation.monomial_degree(ma);
            for (mb, cb) in &other.terms {
                if da + self.presentation.monomial_degree(mb) > limit {
                    dropped = true;
                    continue;
                }
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        Ok((Self::from_terms(&self.presentation, raw, self.max_degree), dropped))
    }

    pub fn pow(&self, exponent: u32) -> GradedClass {
        let mut acc = GradedClass::one(&self.presentation, self.max_degree);
        for _ in 0..exponent {
            acc = acc.mul(self).expect("same presentation");
        }
        acc
    }

    /// The homogeneous component of the given degree.
    pub fn degree_part(&self, degree: u32) -> GradedClass {
        GradedClass {
            presentation: Arc::clone(&self.presentation),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.presentation.monomial_degree(m) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            max_degree: self.max_degree,
        }
    }

    /// Drops every term above `max_degree` and lowers the truncation bound.
    pub fn truncate(&self, max_degree: u32) -> GradedClass {
        let bound = max_degree.min(self.max_degree);
        Self::from_terms(
            &self.presentation,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
            bound,
        )
    }

    /// Re-reads the same terms in a presentation with identical generators,
    /// reducing coefficients as the target requires.
    pub fn change_presentation(&self, target: &Arc<RingPresentation>) -> Result<GradedClass> {
        if target.generators != self.presentation.generators {
            return Err(Error::PresentationMismatch(
                "target presentation has different generators".into(),
            ));
        }
        Ok(Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
            self.max_degree,
        ))
    }

    /// Evaluates the ring homomorphism sending the `i`-th generator to
    /// `images[i]`. All images must share one target presentation.
    pub fn substitute(
        &self,
        target: &Arc<RingPresentation>,
        images: &[GradedClass],
        max_degree: u32,
    ) -> Result<GradedClass> {
        if images.len() != self.presentation.generators.len() {
            return domain("one image per generator is required");
        }
        if let Some(bad) = images.iter().find(|c| !same_presentation(&c.presentation, target)) {
            return Err(Error::PresentationMismatch(format!(
                "generator image {bad} is not in the target presentation"
            )));
        }
        let mut total = GradedClass::zero(target, max_degree);
        let mut power_cache: BTreeMap<(usize, u32), GradedClass> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = GradedClass::constant(target, c.clone(), max_degree);
            for &(g, e) in m.exponents() {
                let power = power_cache
                    .entry((g, e))
                    .or_insert_with(|| images[g].truncate(max_degree).with_max_degree(max_degree).pow(e))
                    .clone();
                term = term.mul(&power)?;
                if term.is_zero() {
                    break;
                }
            }
            total = total.add(&term)?;
        }
        Ok(total)
    }

    fn with_max_degree(&self, max_degree: u32) -> GradedClass {
        Self::from_terms(
            &self.presentation,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
            max_degree,
        )
    }

    /// Parses the canonical text form (`2*h^3 - c1*c2 (mod 3)`); the `(mod ..)`
    /// suffix is informational and ignored.
    pub fn parse(presentation: &Arc<RingPresentation>, text: &str, max_degree: u32) -> Result<GradedClass> {
        let body = match text.find(" (mod") {
            Some(idx) => &text[..idx],
            None => text,
        };
        let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return domain("empty polynomial");
        }
        let mut raw_terms = Vec::new();
        let mut current = String::new();
        let mut sign = 1i32;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                raw_terms.push((sign, std::mem::take(&mut current)));
                sign = if ch == '-' { -1 } else { 1 };
            } else if (ch == '+' || ch == '-') && i == 0 {
                sign = if ch == '-' { -1 } else { 1 };
            } else {
                current.push(ch);
            }
        }
        raw_terms.push((sign, current));

        let mut terms = Vec::new();
        for (sign, raw) in raw_terms {
            if raw.is_empty() {
                return domain(format!("malformed polynomial {text:?}"));
            }
            let mut coefficient = BigInt::from(sign);
            let mut exps = Vec::new();
            for factor in raw.split('*') {
                if let Ok(n) = factor.parse::<BigInt>() {
                    coefficient *= n;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((name, e)) => (
                        name,
                        e.parse::<u32>()
                            .map_err(|_| Error::Domain(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let g = presentation
                    .generator_index(name)
                    .ok_or_else(|| Error::Domain(format!("unknown generator {name:?}")))?;
                exps.push((g, e));
            }
            terms.push((Monomial::from_exponents(exps), coefficient));
        }
        Ok(Self::from_terms(presentation, terms, max_degree))
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let pres = &self.presentation;
        let mut sorted: Vec<(u32, String, &BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (pres.monomial_degree(m), m.render(pres), c))
            .collect();
        sorted.sort();
        let mut orders: Vec<u64> = Vec::new();
        for (i, (degree, mono, c)) in sorted.iter().enumerate() {
            let order = pres.coefficient_order(*degree);
            if order != 0 && !orders.contains(&order) {
                orders.push(order);
            }
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        if !orders.is_empty() {
            let list: Vec<String> = orders.iter().map(|o| o.to_string()).collect();
            write!(f, " (mod {})", list.join(","))?;
        }
        Ok(())
    }
}
