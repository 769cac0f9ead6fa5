//! Lookup tables for the homotopy groups that feed the Maslov obstruction,
//! and the `S^6` bundle example built on them.
//!
//! Only the facts actually needed are stored: Bott periodicity for `O`, `U`
//! and `U/O`, the mod-`p` vanishing range of the stable stems, the order of
//! the image of `J` on `pi_3`, and the unitary stable range.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::numtheory::is_prime;
use crate::obstructions::check_arboreal;
use crate::spaces::sphere6_bundle_total_space;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    Zero,
    Z,
    ZMod(u64),
}

/// A finitely generated abelian group as a sorted list of cyclic summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomotopyGroupDescriptor {
    summands: Vec<Summand>,
}

impl HomotopyGroupDescriptor {
    pub fn new(summands: impl IntoIterator<Item = Summand>) -> Self {
        let mut summands: Vec<Summand> = summands
            .into_iter()
            .filter(|s| !matches!(s, Summand::Zero | Summand::ZMod(0 | 1)))
            .collect();
        summands.sort_unstable();
        if summands.is_empty() {
            summands.push(Summand::Zero);
        }
        HomotopyGroupDescriptor { summands }
    }

    pub fn zero() -> Self {
        Self::new([])
    }

    pub fn z() -> Self {
        Self::new([Summand::Z])
    }

    pub fn z_mod(m: u64) -> Self {
        Self::new([Summand::ZMod(m)])
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands == [Summand::Zero]
    }
}

impl fmt::Display for HomotopyGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| match s {
                Summand::Zero => "0".to_string(),
                Summand::Z => "Z".to_string(),
                Summand::ZMod(m) => format!("Z/{m}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for HomotopyGroupDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieGroup {
    O,
    U,
    UModO,
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieGroup::O => "O",
            LieGroup::U => "U",
            LieGroup::UModO => "U/O",
        })
    }
}

impl FromStr for LieGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" => Ok(LieGroup::O),
            "U" => Ok(LieGroup::U),
            "U/O" | "UO" => Ok(LieGroup::UModO),
            other => domain(format!("unknown group {other:?}, expected O, U or U/O")),
        }
    }
}

/// `pi_k` of the stable orthogonal group, indexed by `k mod 8`.
const PI_O: [Summand; 8] = [
    Summand::ZMod(2),
    Summand::ZMod(2),
    Summand::Zero,
    Summand::Z,
    Summand::Zero,
    Summand::Zero,
    Summand::Zero,
    Summand::Z,
];

/// Stable homotopy groups from Bott periodicity. `pi_k(U/O)` uses
/// `Omega(U/O) = Z x BO`.
pub fn bott_pi(group: LieGroup, k: u64) -> HomotopyGroupDescriptor {
    match group {
        LieGroup::O => HomotopyGroupDescriptor::new([PI_O[(k % 8) as usize]]),
        LieGroup::U if k % 2 == 1 => HomotopyGroupDescriptor::z(),
        LieGroup::U => HomotopyGroupDescriptor::zero(),
        LieGroup::UModO => match k {
            0 => HomotopyGroupDescriptor::zero(),
            1 => HomotopyGroupDescriptor::z(),
            k => bott_pi(LieGroup::O, k - 2),
        },
    }
}

/// Shape of `pi_{2p-1}(U) -> pi_{2p-1}(U/O) -> pi_{2p-2}(O) -> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JSequenceShape {
    TimesTwo,
    Iso,
}

impl fmt::Display for JSequenceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JSequenceShape::TimesTwo => "Z --2--> Z -> Z/2 -> 0",
            JSequenceShape::Iso => "Z --iso--> Z -> 0 -> 0",
        })
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return domain(format!("expected an odd prime, got {p}"));
    }
    Ok(())
}

pub fn j_sequence_shape(p: u64) -> Result<JSequenceShape> {
    require_odd_prime(p)?;
    let residue = (2 * p - 1) % 8;
    assert!(
        residue == 1 || residue == 5,
        "2p-1 = {residue} mod 8 is impossible for odd p"
    );
    let cokernel = bott_pi(LieGroup::O, 2 * p - 2);
    Ok(if cokernel.is_zero() {
        JSequenceShape::Iso
    } else {
        assert_eq!(cokernel, HomotopyGroupDescriptor::z_mod(2));
        JSequenceShape::TimesTwo
    })
}

/// `pi_k^s (x) Z/p` for `0 < k <= 2p - 3`; zero below the top, `Z/p` at it.
pub fn stable_stem_mod_p(p: u64, k: u64) -> Result<HomotopyGroupDescriptor> {
    require_odd_prime(p)?;
    if k == 0 || k > 2 * p - 3 {
        return domain(format!(
            "fact table covers 0 < k <= {} for p = {p}, got k = {k}",
            2 * p - 3
        ));
    }
    Ok(if k == 2 * p - 3 {
        HomotopyGroupDescriptor::z_mod(p)
    } else {
        HomotopyGroupDescriptor::zero()
    })
}

/// Order of the image of `J: pi_3(O) = Z -> pi_3^s = Z/24`, which is onto.
pub const J_IMAGE_ORDER_PI3: u64 = 24;

/// Smallest `m` for which `BU(m) -> BU` is an isomorphism on `pi_j` for all
/// `j <= k`, so that every map `S^k -> BU` compresses into `BU(m)`.
/// `pi_j(U(m)) -> pi_j(U)` is onto for `j <= 2m`, bijective for `j < 2m`.
pub fn unitary_stable_rank(k: u64) -> Result<u64> {
    if k < 1 {
        return domain("unitary stable rank needs k >= 1");
    }
    Ok(k.div_ceil(2))
}

/// Summary of the `S^6` example with `W = (TS^6)^{+k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sphere6Example {
    pub k: u64,
    /// `<c3(X), [S^6]>`.
    #[serde(serialize_with = "serialize_display")]
    pub c3_pairing: BigInt,
    /// Image of the generator of `pi_6(X)` in `pi_6(BU) = Z`.
    #[serde(serialize_with = "serialize_display")]
    pub pi6_image: BigInt,
    /// Image divisible by the order of `J` on `pi_3`; sufficient, not necessary.
    pub maslov_sufficient: bool,
    pub arboreal_obstructed: bool,
    pub destabilized_rank: u64,
    pub destabilized_real_dimension: u64,
    pub total_real_dimension: u64,
    pub trivial_summands: u64,
}

fn serialize_display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn sphere6_example(k: u64) -> Result<Sphere6Example> {
    let model = sphere6_bundle_total_space(k)?;
    let c3_pairing = model.chern_pairings(3).remove(0);
    // c3 of a generator of pi_6(BU) pairs to 2! = 2 with [S^6].
    let pi6_image = &c3_pairing / 2u32;
    let maslov_sufficient = (&pi6_image % J_IMAGE_ORDER_PI3).is_zero();
    let arboreal_obstructed = check_arboreal(&model).verdict.is_obstructed();
    let destabilized_rank = unitary_stable_rank(6)?;
    let fibre_rank = 3 * k;
    Ok(Sphere6Example {
        k,
        c3_pairing,
        pi6_image,
        maslov_sufficient,
        arboreal_obstructed,
        destabilized_rank,
        destabilized_real_dimension: 6 + 2 * destabilized_rank,
        total_real_dimension: 6 + 2 * fibre_rank,
        trivial_summands: fibre_rank.saturating_sub(destabilized_rank),
    })
}
