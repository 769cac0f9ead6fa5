//! Binomial oracles: exact big-integer arithmetic against Lucas' theorem and
//! Kummer's carry count.

use ccobstruct::numtheory::{
    anticanonical_congruence, arboreal_degree_six_value, arboreal_divisor_criterion, binom_exact, binom_mod_lucas,
    binom_p_valuation, is_prime,
};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn primes_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&p| is_prime(p)).collect()
}

fn residue(x: &BigInt, p: u64) -> u64 {
    (x % p).to_u64().unwrap()
}

/// Row `n` of Pascal's triangle via `C(n, k+1) = C(n, k) (n - k) / (k + 1)`.
fn pascal_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::from(1);
    for k in 0..=n {
        row.push(c.clone());
        c = c * (n - k) / (k + 1);
    }
    row
}

#[test]
fn lucas_matches_exact_exhaustively() {
    let primes = primes_to(97);
    for n in 0..=200u64 {
        let row = pascal_row(n);
        for k in 0..=200u64 {
            let exact = if k <= n { row[k as usize].clone() } else { BigInt::zero() };
            if k <= n && k % 17 == 0 {
                assert_eq!(binom_exact(n, k), exact);
            }
            for &p in &primes {
                assert_eq!(binom_mod_lucas(n, k, p).unwrap(), residue(&exact, p), "C({n},{k}) mod {p}");
            }
        }
    }
}

#[test]
fn lucas_matches_exact_on_random_large_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1ce5);
    let primes = primes_to(97);
    let mut checked = 0usize;
    for _ in 0..100 {
        let n = rng.gen_range(201..=2000u64);
        let row = pascal_row(n);
        assert_eq!(row[(n / 3) as usize], binom_exact(n, n / 3));
        for _ in 0..1000 {
            let k = rng.gen_range(0..=n);
            let p = primes[rng.gen_range(0..primes.len())];
            assert_eq!(binom_mod_lucas(n, k, p).unwrap(), residue(&row[k as usize], p), "C({n},{k}) mod {p}");
            checked += 1;
        }
    }
    assert_eq!(checked, 100_000);
}

fn valuation(mut x: BigInt, p: u64) -> u32 {
    let mut v = 0;
    while !x.is_zero() && (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

#[test]
fn kummer_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let n = rng.gen_range(0..600u64);
        let k = rng.gen_range(0..=n);
        let p = [3u64, 5, 7, 11, 13, 29, 97][rng.gen_range(0..7)];
        let v = valuation(binom_exact(n, k), p);
        assert_eq!(binom_p_valuation(n, k, p).unwrap(), Some(v));
        assert_eq!(binom_mod_lucas(n, k, p).unwrap() == 0, v >= 1);
    }
    assert_eq!(binom_p_valuation(3, 5, 3).unwrap(), None);
}

#[test]
fn n_plus_one_divides_degree_six_value_iff_n_is_0_or_1_mod_3() {
    for n in 1..=10_000u64 {
        let divisible = (arboreal_degree_six_value(n) % (n + 1)).is_zero();
        assert_eq!(divisible, n % 3 != 2, "n={n}");
    }
}

#[test]
fn anticanonical_congruence_matches_divisor_criterion() {
    for n in (8..=2000u64).step_by(2) {
        assert_eq!(anticanonical_congruence(n).unwrap(), arboreal_divisor_criterion(n, n + 1).unwrap(), "n={n}");
    }
}

#[test]
fn binomials_near_ten_thousand_are_exact() {
    let row = pascal_row(10_000);
    for k in [0u64, 1, 2, 137, 4999, 5000, 9999, 10_000] {
        assert_eq!(binom_exact(10_000, k), row[k as usize]);
    }
}
