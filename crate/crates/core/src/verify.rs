//! Golden cases reproducing the worked examples, each paired with the
//! independent arithmetic it is checked against.

use std::fmt;

use num_bigint::BigInt;

use crate::chern::{bu_presentation, kernel_membership, kernel_relation, phi_bu_to_bo_x_bu1, psi_bu_to_bo};
use crate::chern::{bo_x_bu1_presentation, whitney_product, TotalChernClass};
use crate::coeff::CoefficientRing;
use crate::graded::{GradedClass, DEFAULT_MAX_DEGREE};
use crate::homotopy::{
    bott_pi, j_sequence_shape, sphere6_example, stable_stem_mod_p, unitary_stable_rank, HomotopyGroupDescriptor,
    LieGroup, J_IMAGE_ORDER_PI3,
};
use crate::numtheory::{
    anticanonical_congruence, arboreal_degree_six_value, arboreal_divisor_criterion, binom_exact, binom_mod_lucas,
    fermat_maslov_predicate,
};
use crate::obstructions::{
    check_arboreal, check_gradability, check_maslov_mod_p, check_polarization, classify, CheckKind, Verdict,
};
use crate::search::{search, CheckFamily, SearchSpec};
use crate::spaces::{cotangent_sphere6, divisor_complement, sphere6_bundle_total_space, stabilize, wedge, SpaceModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Pass,
    Fail,
    /// Computation matches our arithmetic but contradicts a remark in the
    /// source material; counts as passing.
    ExpectedDiscrepancy,
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseStatus::Pass => "PASS",
            CaseStatus::Fail => "FAIL",
            CaseStatus::ExpectedDiscrepancy => "EXPECTED-DISCREPANCY",
        })
    }
}

pub struct GoldenCase {
    pub id: &'static str,
    pub construction: &'static str,
    pub expected: &'static str,
    /// Where the expected value comes from and what checks it independently.
    pub provenance: &'static str,
    run: fn() -> Outcome,
}

type Outcome = Result<String, String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub id: &'static str,
    pub status: CaseStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub results: Vec<CaseResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status != CaseStatus::Fail)
    }

    pub fn count(&self, status: CaseStatus) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out += &format!("{:<20} {:<44} {}\n", r.status.to_string(), r.id, r.detail);
        }
        out += &format!(
            "verify-paper: {} passed, {} expected discrepancy, {} failed\n",
            self.count(CaseStatus::Pass),
            self.count(CaseStatus::ExpectedDiscrepancy),
            self.count(CaseStatus::Fail)
        );
        out
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pn(n: u32, d: u64) -> Result<SpaceModel, String> {
    divisor_complement(n, d, CoefficientRing::Integers).map_err(|e| e.to_string())
}

fn s6(k: u64) -> Result<SpaceModel, String> {
    sphere6_bundle_total_space(k).map_err(|e| e.to_string())
}

fn binom_i(n: u64, k: u64) -> BigInt {
    binom_exact(n, k)
}

fn modulo(x: BigInt, m: u64) -> BigInt {
    let m = BigInt::from(m);
    ((x % &m) + &m) % m
}

fn p8_arboreal() -> Outcome {
    let r = check_arboreal(&pn(8, 9)?);
    let oracle = modulo(binom_i(9, 1) * binom_i(9, 2) - binom_i(9, 3), 9);
    ensure(oracle == BigInt::from(6), || format!("oracle residue {oracle}"))?;
    ensure(r.verdict == Verdict::Obstructed, || format!("verdict {}", r.verdict))?;
    let w = &r.witnesses[0];
    ensure(w.param == "k=1" && w.value == "6*h^3 (mod 9)", || format!("witness {w:?}"))?;
    Ok(format!("{} at {}: {}", r.verdict, w.param, w.value))
}

fn p11_maslov() -> Outcome {
    let r = check_maslov_mod_p(&pn(11, 12)?, 3).map_err(|e| e.to_string())?;
    let oracle: Vec<BigInt> = (1..=3).map(|i| modulo(binom_i(12, i), 3)).collect();
    ensure(oracle == [0, 0, 1].map(BigInt::from), || format!("oracle {oracle:?}"))?;
    ensure(r.verdict == Verdict::Obstructed, || format!("verdict {}", r.verdict))?;
    let values: Vec<&str> = r.witnesses.iter().map(|w| w.value.as_str()).collect();
    ensure(values == ["0", "0", "h^3 (mod 3)"], || format!("witnesses {values:?}"))?;
    Ok(format!("{}: c1, c2, c3 = {}", r.verdict, values.join(", ")))
}

fn p14_combined() -> Outcome {
    let x = pn(14, 15)?;
    let arb = check_arboreal(&x);
    let mas = check_maslov_mod_p(&x, 5).map_err(|e| e.to_string())?;
    let arb_oracle = modulo(binom_i(15, 1) * binom_i(15, 2) - binom_i(15, 3), 15);
    let mas_oracle = modulo(binom_i(15, 5), 5);
    ensure(arb_oracle == BigInt::from(10) && mas_oracle == BigInt::from(3), || "oracle".into())?;
    ensure(arb.verdict.is_obstructed() && mas.verdict.is_obstructed(), || {
        format!("arboreal {}, maslov {}", arb.verdict, mas.verdict)
    })?;
    ensure(arb.witnesses[0].value == "10*h^3 (mod 15)", || format!("{:?}", arb.witnesses[0]))?;
    ensure(mas.witnesses[4].value == "3*h^5 (mod 5)", || format!("{:?}", mas.witnesses[4]))?;
    Ok("arboreal Obstructed (1120 = 10 mod 15), maslov_p5 Obstructed (3003 = 3 mod 5)".into())
}

fn anticanonical_gradable() -> Outcome {
    for n in 7..=30 {
        let x = pn(n, u64::from(n) + 1)?;
        ensure(x.chern_class(1).is_zero(), || format!("c1 nonzero for n={n}"))?;
        let v = check_gradability(&x).verdict;
        ensure(v == Verdict::NotObstructedByThisTest, || format!("n={n}: {v}"))?;
    }
    Ok("c1 = 0 and gradability not obstructed for 7 <= n <= 30".into())
}

fn anticanonical_arboreal_sweep() -> Outcome {
    let spec = SearchSpec {
        n_range: 7..=40,
        d_range: 1..=1,
        primes: vec![],
        checks: vec![CheckFamily::Arboreal],
        anticanonical_only: true,
    };
    let table = search(&spec, 1).map_err(|e| e.to_string())?;
    for row in &table.rows {
        let n = u64::from(row.n);
        let r = check_arboreal(&pn(row.n, n + 1)?);
        ensure(r.verdict.name() == row.verdicts[0], || format!("search disagrees at n={n}"))?;
        let fires_at_one = r.witnesses.iter().any(|w| w.param == "k=1");
        if n % 2 == 0 {
            // Odd degree n + 1: the closed form applies verbatim.
            let expected = anticanonical_congruence(n).map_err(|e| e.to_string())?;
            ensure(fires_at_one == expected, || format!("k=1 at n={n}: {fires_at_one}"))?;
            ensure(expected == arboreal_divisor_criterion(n, n + 1).map_err(|e| e.to_string())?, || {
                format!("closed forms disagree at n={n}")
            })?;
        }
        ensure(fires_at_one == (n % 3 == 2), || format!("k=1 over Z[1/2] at n={n}"))?;
        let divisible = (arboreal_degree_six_value(n) % (n + 1)) == BigInt::from(0);
        ensure(divisible == (n % 3 != 2), || format!("divisibility at n={n}"))?;
    }
    Ok("k=1 obstruction on X_{n,n+1} with n+1 odd exactly at n = 2 mod 6 for 7 <= n <= 40; first at n = 8".into())
}

fn x73_discrepancy() -> Outcome {
    let value = arboreal_degree_six_value(7);
    ensure(value == BigInt::from(168), || format!("n(n+1)(n+2)/3 = {value}"))?;
    ensure(modulo(value, 3) == BigInt::from(0), || "168 not divisible by 3".into())?;
    let v = check_arboreal(&pn(7, 3)?).verdict;
    ensure(v == Verdict::NotObstructedByThisTest, || format!("verdict {v}"))?;
    let criterion = arboreal_divisor_criterion(7, 3).map_err(|e| e.to_string())?;
    ensure(!criterion, || "closed form fires".into())?;
    let smallest = (3..).step_by(2).find(|&d| arboreal_divisor_criterion(7, d).unwrap_or(false));
    Ok(format!(
        "168 = 0 mod 3, so the degree-6 obstruction vanishes on X_{{7,3}}; remark names (7,3) as smallest; smallest odd d for n=7 is {}",
        smallest.unwrap_or(0)
    ))
}

fn fermat_grid() -> Outcome {
    for p in [3u64, 5, 7, 11, 13] {
        for k in 3..=10u64 {
            let n = u32::try_from(k * p - 1).map_err(|e| e.to_string())?;
            let v = check_maslov_mod_p(&pn(n, k * p)?, p).map_err(|e| e.to_string())?.verdict;
            let predicate = fermat_maslov_predicate(k, p).map_err(|e| e.to_string())?;
            ensure(predicate == (k % p != 0), || format!("predicate p={p} k={k}"))?;
            ensure(v.is_obstructed() == predicate, || format!("p={p} k={k}: {v}"))?;
        }
    }
    let first = check_maslov_mod_p(&pn(11, 12)?, 3).map_err(|e| e.to_string())?;
    ensure(first.verdict.is_obstructed(), || "X_{11,12}".into())?;
    Ok("Maslov obstructed on X_{kp-1,kp} iff p does not divide k (p <= 13, 3 <= k <= 10)".into())
}

fn lucas_kp() -> Outcome {
    for p in [3u64, 5, 7, 11, 13] {
        for k in 1..=30 {
            for i in 1..p {
                ensure(binom_mod_lucas(k * p, i, p) == Ok(0), || format!("C({},{i})", k * p))?;
            }
            ensure(binom_mod_lucas(k * p, p, p) == Ok(k % p), || format!("C({},{p})", k * p))?;
        }
    }
    Ok("C(kp, i) = 0 mod p for 0 < i < p and C(kp, p) = k mod p".into())
}

fn kernel_relations() -> Outcome {
    for k in 1..=12 {
        let rel = kernel_relation(k, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        let check = kernel_membership(&rel, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
        ensure(check.in_kernel, || format!("k={k}: image {}", check.image))?;
    }
    Ok("c1*c{2k} - c{2k+1} in kernel for 1 <= k <= 12".into())
}

fn low_degree_images() -> Outcome {
    let pres = bu_presentation(CoefficientRing::IntegersHalfInverted, DEFAULT_MAX_DEGREE);
    let parse = |s: &str| GradedClass::parse(&pres, s, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string());
    let phi = |s: &str| -> Result<String, String> {
        Ok(phi_bu_to_bo_x_bu1(&parse(s)?, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?.to_string())
    };
    ensure(phi("c2")? == "-p1", || "c2".into())?;
    ensure(phi("c3")? == "-p1*e", || "c3".into())?;
    ensure(phi("c1*c2 - c3")? == "0", || "c1c2 - c3".into())?;
    let c2 = kernel_membership(&parse("c2")?, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(!c2.in_kernel && c2.image.to_string() == "-p1", || "c2 witness".into())?;
    let psi = psi_bu_to_bo(&parse("c2")?, DEFAULT_MAX_DEGREE).map_err(|e| e.to_string())?;
    ensure(psi.to_string() == "-p1", || format!("psi(c2) = {psi}"))?;
    Ok("c2 -> -p1, c3 -> -p1*e, c1*c2 - c3 -> 0; c2 not in kernel".into())
}

fn whitney_line() -> Outcome {
    let target = bo_x_bu1_presentation(16);
    let parse = |s: &str| {
        GradedClass::parse(&target, s, 16)
            .and_then(TotalChernClass::new)
            .map_err(|e| e.to_string())
    };
    let product = whitney_product(&parse("1 - p1 + p2")?, &parse("1 + e")?).map_err(|e| e.to_string())?;
    let text = product.class().to_string();
    ensure(text == "1 + e - p1 - p1*e + p2 + p2*e", || text.clone())?;
    Ok(text)
}

fn sphere6_k23() -> Outcome {
    let x = sphere6_example(23).map_err(|e| e.to_string())?;
    ensure(x.c3_pairing == BigInt::from(48), || format!("pairing {}", x.c3_pairing))?;
    ensure(x.maslov_sufficient && x.arboreal_obstructed, || format!("{x:?}"))?;
    ensure(x.destabilized_rank == 3 && x.destabilized_real_dimension == 12, || format!("{x:?}"))?;
    ensure(x.total_real_dimension == 144 && x.trivial_summands == 66, || format!("{x:?}"))?;
    let first = (1..=100).find(|&k| sphere6_example(k).map(|e| e.maslov_sufficient).unwrap_or(false));
    ensure(first == Some(23), || format!("first sufficient k = {first:?}"))?;
    Ok("c3 pairs to 48, pi_6 image 24 = 0 in Z/24, arboreal obstructed, destabilizes to rank 3".into())
}

fn sphere6_mod3() -> Outcome {
    let x = s6(23)?;
    let r = classify(&x, &[3]);
    ensure(r.verdict(CheckKind::Arboreal) == Some(&Verdict::Obstructed), || "arboreal".into())?;
    ensure(
        r.verdict(CheckKind::MaslovModP(3)) == Some(&Verdict::NotObstructedByThisTest),
        || "maslov_p3".into(),
    )?;
    Ok("48 = 0 mod 3, Maslov check mod 3 silent while arboreal is obstructed".into())
}

fn wedge_z() -> Outcome {
    let z = wedge(&s6(23)?, &cotangent_sphere6()).map_err(|e| e.to_string())?;
    let pairings = z.chern_pairings(3);
    ensure(pairings == [BigInt::from(48), BigInt::from(0)], || format!("{pairings:?}"))?;
    let v = check_arboreal(&z).verdict;
    ensure(v.is_obstructed(), || format!("arboreal {v}"))?;
    Ok("c3(Z) = (48, 0) in Z[1/2] + Z[1/2]; arboreal obstructed".into())
}

fn stabilization() -> Outcome {
    let x = s6(23)?;
    let y = stabilize(&x, 66);
    ensure(y.chern_pairings(3) == [BigInt::from(48)], || "pairing moved".into())?;
    for model in [pn(8, 9)?, pn(11, 12)?, pn(14, 15)?, x] {
        let base = classify(&model, &[3, 5, 7]);
        ensure(classify(&stabilize(&model, 66), &[3, 5, 7]) == base, || model.name().to_string())?;
    }
    Ok("adding C^66 leaves c3 = 48 and every verdict unchanged".into())
}

fn homotopy_tables() -> Outcome {
    ensure(bott_pi(LieGroup::O, 3) == HomotopyGroupDescriptor::z(), || "pi_3(O)".into())?;
    for p in [3u64, 5, 7, 11, 13] {
        ensure(bott_pi(LieGroup::U, 2 * p - 1) == HomotopyGroupDescriptor::z(), || format!("pi_{}(U)", 2 * p - 1))?;
        j_sequence_shape(p).map_err(|e| e.to_string())?;
    }
    ensure(J_IMAGE_ORDER_PI3 == 24, || "J".into())?;
    Ok("pi_3(O) = Z, pi_{2p-1}(U) = Z, J onto Z/24 on pi_3".into())
}

fn stable_stems() -> Outcome {
    let got = [
        stable_stem_mod_p(3, 2),
        stable_stem_mod_p(3, 3),
        stable_stem_mod_p(5, 7),
    ];
    let want = [
        HomotopyGroupDescriptor::zero(),
        HomotopyGroupDescriptor::z_mod(3),
        HomotopyGroupDescriptor::z_mod(5),
    ];
    for (g, w) in got.into_iter().zip(want) {
        ensure(g.as_ref() == Ok(&w), || format!("{g:?} != {w}"))?;
    }
    Ok("pi_k^s (x) Z/p = 0 below 2p-3, Z/p at 2p-3".into())
}

fn stable_rank() -> Outcome {
    let m = unitary_stable_rank(6).map_err(|e| e.to_string())?;
    ensure(m == 3, || format!("rank {m}"))?;
    Ok("S^6 -> BU factors through BU(3)".into())
}

fn polarization_degree() -> Outcome {
    for n in 3..=20u32 {
        for d in 1..=30u64 {
            let r = check_polarization(&pn(n, d)?);
            let fails_at_zero = r.witnesses.first().is_some_and(|w| w.param == "k=0");
            ensure(fails_at_zero == (2 * (u64::from(n) + 1) % d != 0), || format!("n={n} d={d}"))?;
        }
    }
    Ok("2c1 = 0 on X_{n,d} iff d divides 2(n+1)".into())
}

fn arboreal_closed_form() -> Outcome {
    for (n, d, expected) in [(8u64, 9u64, true), (7, 3, false), (7, 5, true)] {
        let got = arboreal_divisor_criterion(n, d).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("({n},{d})"))?;
    }
    for n in [8u64, 14] {
        ensure(anticanonical_congruence(n) == Ok(true), || format!("n={n}"))?;
    }
    Ok("(8,9) and (7,5) fire, (7,3) does not".into())
}

pub fn golden_cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            id: "P8-anticanonical-arboreal",
            construction: "X_{8,9}",
            expected: "arboreal Obstructed, k=1 value 6*h^3 (mod 9)",
            provenance: "anticanonical complement in P^8 has no arboreal skeleton; residue from exact binomials",
            run: p8_arboreal,
        },
        GoldenCase {
            id: "P11-anticanonical-maslov-p3",
            construction: "X_{11,12}, p = 3",
            expected: "maslov_p3 Obstructed with c1 = c2 = 0, c3 = 1 mod 3",
            provenance: "anticanonical complement in P^11 has no Maslov data; residues from exact binomials",
            run: p11_maslov,
        },
        GoldenCase {
            id: "P14-anticanonical-arboreal-maslov-p5",
            construction: "X_{14,15}, p = 5",
            expected: "arboreal and maslov_p5 Obstructed",
            provenance: "P^14 complement admits neither; 1120 mod 15 and 3003 mod 5 from exact binomials",
            run: p14_combined,
        },
        GoldenCase {
            id: "anticanonical-gradable",
            construction: "X_{n,n+1}, 7 <= n <= 30",
            expected: "gradability NotObstructedByThisTest",
            provenance: "c1 of an anticanonical complement vanishes",
            run: anticanonical_gradable,
        },
        GoldenCase {
            id: "anticanonical-arboreal-2-mod-6",
            construction: "search X_{n,n+1}, 7 <= n <= 40",
            expected: "for odd n+1, degree-6 arboreal witness iff n = 2 mod 6",
            provenance: "n(n+1)(n+2)/3 divisible by n+1 iff n = 0, 1 mod 3; direct division oracle",
            run: anticanonical_arboreal_sweep,
        },
        GoldenCase {
            id: "X7-3-smallest-example",
            construction: "X_{7,3}",
            expected: "168 = 0 mod 3, arboreal NotObstructedByThisTest",
            provenance: "listed as the smallest obstructed case; 168 = 0 mod 3 says otherwise",
            run: x73_discrepancy,
        },
        GoldenCase {
            id: "arboreal-closed-form",
            construction: "n(n+1)(n+2)/3 mod d",
            expected: "(8,9), (7,5) fire; (7,3) silent; n = 8, 14 anticanonical",
            provenance: "closed-form divisor criterion",
            run: arboreal_closed_form,
        },
        GoldenCase {
            id: "fermat-maslov-grid",
            construction: "X_{kp-1,kp}, p <= 13, 3 <= k <= 10",
            expected: "maslov_p Obstructed iff p does not divide k; X_{11,12} first",
            provenance: "Lucas digit products",
            run: fermat_grid,
        },
        GoldenCase {
            id: "lucas-kp",
            construction: "C(kp, i) mod p",
            expected: "0 for 0 < i < p, k mod p at i = p",
            provenance: "base-p digits of kp end in 0",
            run: lucas_kp,
        },
        GoldenCase {
            id: "kernel-relations",
            construction: "c1*c{2k} - c{2k+1}, 1 <= k <= 12",
            expected: "in kernel of H*(BU) -> H*(BO x BU(1)) over Z[1/2]",
            provenance: "c_{2k} -> (-1)^k p_k, c_{2k+1} -> (-1)^k p_k e",
            run: kernel_relations,
        },
        GoldenCase {
            id: "low-degree-images",
            construction: "phi(c2), phi(c3), psi(c2)",
            expected: "-p1, -p1*e, -p1",
            provenance: "expansion of (1 - p1 + p2 - ...)(1 + e)",
            run: low_degree_images,
        },
        GoldenCase {
            id: "whitney-complexification-line",
            construction: "(1 - p1 + p2)(1 + e)",
            expected: "1 + e - p1 - p1*e + p2 + p2*e",
            provenance: "Whitney sum of a complexification and a line bundle",
            run: whitney_line,
        },
        GoldenCase {
            id: "polarization-degree-divides-2(n+1)",
            construction: "X_{n,d}, 3 <= n <= 20, 1 <= d <= 30",
            expected: "obstructed at k=0 iff d does not divide 2(n+1)",
            provenance: "2c1 = 2(n+1) h mod d",
            run: polarization_degree,
        },
        GoldenCase {
            id: "sphere6-k23",
            construction: "W = (TS^6)^{+23} over S^6",
            expected: "c3 pairs to 48, maslov_sufficient, arboreal_obstructed, rank 3",
            provenance: "c3 = 2(k+1); J on pi_3 onto Z/24",
            run: sphere6_k23,
        },
        GoldenCase {
            id: "sphere6-k23-maslov-p3",
            construction: "W = (TS^6)^{+23}, p = 3",
            expected: "maslov_p3 NotObstructedByThisTest, arboreal Obstructed",
            provenance: "48 = 0 mod 3",
            run: sphere6_mod3,
        },
        GoldenCase {
            id: "wedge-Z-pairs-48",
            construction: "Y v T*S^6",
            expected: "c3 = (48, 0), arboreal Obstructed",
            provenance: "wedge of two 6-spheres; T*S^6 polarizable",
            run: wedge_z,
        },
        GoldenCase {
            id: "stabilize-C66",
            construction: "Y + C^66",
            expected: "same Chern data and verdicts",
            provenance: "c(E + C^m) = c(E)",
            run: stabilization,
        },
        GoldenCase {
            id: "homotopy-tables",
            construction: "pi_3(O), pi_{2p-1}(U), J on pi_3",
            expected: "Z, Z, Z/24",
            provenance: "Bott periodicity",
            run: homotopy_tables,
        },
        GoldenCase {
            id: "stable-stems-mod-p",
            construction: "pi_k^s (x) Z/p",
            expected: "0 below 2p-3, Z/p at 2p-3",
            provenance: "stored fact table",
            run: stable_stems,
        },
        GoldenCase {
            id: "unitary-stable-rank-6",
            construction: "S^6 -> BU",
            expected: "factors through BU(3)",
            provenance: "unitary stable range",
            run: stable_rank,
        },
    ]
}

/// Ids whose status is [`CaseStatus::ExpectedDiscrepancy`] when they hold.
pub const DISCREPANCY_CASES: [&str; 1] = ["X7-3-smallest-example"];

pub fn run_case(case: &GoldenCase) -> CaseResult {
    let (status, detail) = match (case.run)() {
        Ok(detail) if DISCREPANCY_CASES.contains(&case.id) => (CaseStatus::ExpectedDiscrepancy, detail),
        Ok(detail) => (CaseStatus::Pass, detail),
        Err(why) => (CaseStatus::Fail, format!("expected {}; {why}", case.expected)),
    };
    CaseResult { id: case.id, status, detail }
}

pub fn verify_paper() -> VerifyReport {
    VerifyReport { results: golden_cases().iter().map(run_case).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_holds() {
        let report = verify_paper();
        for r in &report.results {
            assert_ne!(r.status, CaseStatus::Fail, "{}: {}", r.id, r.detail);
        }
        assert_eq!(report.count(CaseStatus::ExpectedDiscrepancy), 1);
        assert!(report.render().contains("EXPECTED-DISCREPANCY"));
    }

    #[test]
    fn ids_are_unique_and_documented() {
        let cases = golden_cases();
        let mut ids: Vec<&str> = cases.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cases.len());
        assert!(cases.iter().all(|c| !c.provenance.is_empty() && !c.construction.is_empty()));
    }
}
