//! Binomial arithmetic and the closed-form divisibility criteria that the
//! graded pipeline is checked against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binom_exact(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 since acc = C(n, i).
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Trial division; adequate for the moduli this crate sees.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut q = 3u64;
    while q.saturating_mul(q) <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `C(a, b) mod p` for digits `a, b < p`.
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let (mut num, mut den) = (1u128, 1u128);
    let p128 = p as u128;
    for i in 0..b {
        num = num * ((a - i) as u128) % p128;
        den = den * ((i + 1) as u128) % p128;
    }
    (num * pow_mod(den as u64, p - 2, p) as u128 % p128) as u64
}

/// `C(n, k) mod p` as the product of digit binomials in base `p`.
pub fn binom_mod_lucas(n: u64, k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return domain(format!("Lucas' theorem needs a prime modulus, got {p}"));
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64 % p;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return Ok(0);
        }
        acc = ((acc as u128 * small_binom_mod(nd, kd, p) as u128) % p as u128) as u64;
        n /= p;
        k /= p;
    }
    Ok(acc)
}

/// Exponent of `p` in `C(n, k)`: the number of carries when adding `k` and
/// `n - k` in base `p`.
pub fn binom_p_valuation(n: u64, k: u64, p: u64) -> Result<Option<u32>> {
    if !is_prime(p) {
        return domain(format!("expected a prime, got {p}"));
    }
    if k > n {
        return Ok(None);
    }
    let (mut a, mut b) = (k, n - k);
    let (mut carry, mut carries) = (0u64, 0u32);
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p + b % p + carry;
        carry = u64::from(s >= p);
        carries += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(Some(carries))
}

/// `n (n+1) (n+2) / 3`, the degree-6 value of `c1 c2 - c3` on `P^n` up to sign.
pub fn arboreal_degree_six_value(n: u64) -> BigInt {
    let product = BigInt::from(n) * (n + 1) * (n + 2);
    assert!((&product % 3u32).is_zero(), "three consecutive integers");
    product / 3u32
}

/// True when the degree-6 arboreal obstruction fires on `X_{n,d}`, i.e.
/// odd `d` does not divide `n (n+1) (n+2) / 3`.
pub fn arboreal_divisor_criterion(n: u64, d: u64) -> Result<bool> {
    if n <= 6 {
        return domain(format!("criterion needs n > 6, got {n}"));
    }
    if d.is_multiple_of(2) {
        return domain(format!("criterion needs odd d, got {d}"));
    }
    Ok(!(arboreal_degree_six_value(n) % d).is_zero())
}

/// True iff `n = 2 mod 6`: the anticanonical complement in `P^n` carries the
/// degree-6 arboreal obstruction.
pub fn anticanonical_congruence(n: u64) -> Result<bool> {
    if n <= 6 {
        return domain(format!("congruence needs n > 6, got {n}"));
    }
    Ok(n % 6 == 2)
}

/// The Maslov hypothesis on `X_{kp-1, kp}` read off through Lucas' theorem:
/// `C(kp, i) = 0 mod p` for `0 < i < p` and `C(kp, p) != 0 mod p`.
pub fn fermat_maslov_predicate(k: u64, p: u64) -> Result<bool> {
    if p == 2 || !is_prime(p) {
        return domain(format!("needs an odd prime, got {p}"));
    }
    if k < 3 {
        return domain(format!("needs k >= 3, got {k}"));
    }
    let n = k * p;
    for i in 1..p {
        if binom_mod_lucas(n, i, p)? != 0 {
            return Ok(false);
        }
    }
    Ok(binom_mod_lucas(n, p, p)? != 0)
}
