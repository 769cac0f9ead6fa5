//! Exact scalars: the integers, cyclic quotients `Z/m`, and `Z[1/2]`.
//!
//! `Z[1/2]` is stored without denominators. Every class this crate handles
//! over `Z[1/2]` is an integer multiple of a generator, and `Z -> Z[1/2]` is
//! injective, so integer storage decides equality. A cyclic quotient
//! `Z[1/2]/d` is represented as `Z/odd_part(d)`.

use std::fmt;
use std::num::NonZeroU64;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoefficientRing {
    Integers,
    IntegersMod(NonZeroU64),
    IntegersHalfInverted,
}

impl CoefficientRing {
    pub fn integers_mod(m: u64) -> Result<Self> {
        NonZeroU64::new(m)
            .map(CoefficientRing::IntegersMod)
            .ok_or_else(|| Error::Domain("Z/m requires m >= 1".into()))
    }

    /// The cyclic quotient `Z[1/2] / d Z[1/2]`, i.e. `Z/odd_part(d)`.
    pub fn half_inverted_quotient(d: u64) -> Result<Self> {
        Self::integers_mod(odd_part_u64(d)?)
    }

    /// The modulus of the ring, `None` for the torsion-free rings.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoefficientRing::IntegersMod(m) => Some(m.get()),
            _ => None,
        }
    }

    pub fn reduce(&self, value: impl Into<BigInt>) -> RingElement {
        reduce(value, *self)
    }

    pub fn zero(&self) -> RingElement {
        self.reduce(0)
    }

    pub fn one(&self) -> RingElement {
        self.reduce(1)
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::IntegersMod(m) => write!(f, "Z/{m}"),
            CoefficientRing::IntegersHalfInverted => write!(f, "Z[1/2]"),
        }
    }
}

/// An element of a [`CoefficientRing`], always held in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: CoefficientRing,
    value: BigInt,
}

impl RingElement {
    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::PresentationMismatch(format!(
                "cannot combine elements of {} and {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(reduce(&self.value + &other.value, self.ring))
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(reduce(&self.value * &other.value, self.ring))
    }

    pub fn neg(&self) -> RingElement {
        reduce(-&self.value, self.ring)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Canonical representative of `value` in `ring`: residues live in `[0, m)`.
pub fn reduce(value: impl Into<BigInt>, ring: CoefficientRing) -> RingElement {
    let value = value.into();
    let value = match ring {
        CoefficientRing::IntegersMod(m) => value.mod_floor(&BigInt::from(m.get())),
        _ => value,
    };
    RingElement { ring, value }
}

/// `d / 2^v` where `2^v` exactly divides `d`.
pub fn odd_part(d: &BigInt) -> Result<BigInt> {
    if !d.is_positive() {
        return domain(format!("odd_part requires d >= 1, got {d}"));
    }
    let twos = d.trailing_zeros().unwrap_or(0);
    Ok(d >> twos)
}

pub fn odd_part_u64(d: u64) -> Result<u64> {
    if d == 0 {
        return domain("odd_part requires d >= 1, got 0");
    }
    Ok(d >> d.trailing_zeros())
}

/// Reduces a representative modulo a cyclic order; order `0` means free.
pub(crate) fn reduce_mod_order(value: BigInt, order: u64) -> BigInt {
    if order == 0 {
        value
    } else if order == 1 {
        BigInt::zero()
    } else {
        value.mod_floor(&BigInt::from(order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zmod(m: u64) -> CoefficientRing {
        CoefficientRing::integers_mod(m).unwrap()
    }

    #[test]
    fn odd_part_examples() {
        assert_eq!(odd_part_u64(12).unwrap(), 3);
        assert_eq!(odd_part_u64(1).unwrap(), 1);
        assert_eq!(odd_part_u64(9).unwrap(), 9);
        assert_eq!(odd_part(&BigInt::from(12)).unwrap(), BigInt::from(3));
        assert!(odd_part_u64(0).is_err());
        assert!(odd_part(&BigInt::from(-4)).is_err());
        assert!(CoefficientRing::integers_mod(0).is_err());
    }

    #[test]
    fn odd_part_against_repeated_halving() {
        for d in 1u64..=2000 {
            let mut x = d;
            while x % 2 == 0 {
                x /= 2;
            }
            assert_eq!(odd_part_u64(d).unwrap(), x);
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(168, zmod(3)).value(), &BigInt::from(0));
        assert_eq!(reduce(240, zmod(9)).value(), &BigInt::from(6));
        for ring in [CoefficientRing::Integers, CoefficientRing::IntegersHalfInverted, zmod(7)] {
            assert!(reduce(0, ring).is_zero());
        }
        assert_eq!(reduce(-1, zmod(5)).value(), &BigInt::from(4));
        assert_eq!(reduce(-7, CoefficientRing::Integers).value(), &BigInt::from(-7));
    }

    #[test]
    fn mixing_rings_is_an_error() {
        let a = reduce(1, zmod(3));
        let b = reduce(1, zmod(5));
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn half_inverted_quotient_uses_odd_part() {
        assert_eq!(CoefficientRing::half_inverted_quotient(12).unwrap(), zmod(3));
        assert_eq!(CoefficientRing::half_inverted_quotient(8).unwrap(), zmod(1));
    }

    #[test]
    fn reduction_mod_odd_part_factors_through_quotient() {
        // Z/d -> Z/odd_part(d) is a ring map, so reducing twice equals reducing once.
        for d in 1u64..=200 {
            let odd = odd_part_u64(d).unwrap();
            for a in (-600i64..600).step_by(7) {
                let via_d = reduce(reduce(a, zmod(d)).value().clone(), zmod(odd));
                assert_eq!(via_d, reduce(a, zmod(odd)), "d={d} a={a}");
                if d % 2 == 1 {
                    assert_eq!(reduce(a, zmod(d)).value(), reduce(a, zmod(odd)).value());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn reduce_is_a_homomorphism(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000, m in 1u64..500) {
            let r = zmod(m);
            prop_assert_eq!(reduce(a + b, r), reduce(a, r).add(&reduce(b, r)).unwrap());
            prop_assert_eq!(reduce(a as i128 * b as i128, r), reduce(a, r).mul(&reduce(b, r)).unwrap());
        }

        #[test]
        fn ring_laws_on_triples(a in -10_000i64..10_000, b in -10_000i64..10_000, c in -10_000i64..10_000, m in 1u64..100) {
            for ring in [CoefficientRing::Integers, CoefficientRing::IntegersHalfInverted, zmod(m)] {
                let (x, y, z) = (ring.reduce(a), ring.reduce(b), ring.reduce(c));
                prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
                prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
                prop_assert_eq!(x.add(&y).unwrap().add(&z).unwrap(), x.add(&y.add(&z).unwrap()).unwrap());
                prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
                prop_assert_eq!(x.add(&ring.zero()).unwrap(), x.clone());
                prop_assert_eq!(x.mul(&ring.one()).unwrap(), x.clone());
            }
        }

        #[test]
        fn zero_in_half_inverted_iff_zero_in_integers(a in -1_000_000i64..1_000_000) {
            prop_assert_eq!(reduce(a, CoefficientRing::IntegersHalfInverted).is_zero(), a == 0);
        }
    }
}
