//! Small integer utilities shared by the algorithm modules: deterministic
//! primality by trial division, trial-division factorization, and modular
//! helpers. Everything here is desk-scale by design.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Trial-division primality test. Intended for desk-scale moduli and factors.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

pub(crate) fn is_prime_big(n: &BigInt) -> bool {
    match n.to_u64() {
        Some(v) => is_prime_u64(v),
        None => {
            // Desk-scale contract: inputs this large are outside the intended
            // range, but stay correct (if slow) rather than wrong.
            if n.is_negative() || n < &BigInt::from(2) {
                return false;
            }
            let two = BigInt::from(2);
            if n.is_even() {
                return *n == two;
            }
            let mut d = BigInt::from(3);
            while &d * &d <= *n {
                if (n % &d).is_zero() {
                    return false;
                }
                d += 2;
            }
            true
        }
    }
}

/// Factorization by trial division, smallest prime first, with multiplicity.
/// Requires n >= 1; returns an empty list for n = 1.
pub(crate) fn factor_trial(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(n.is_positive(), "factor_trial requires a positive integer");
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e2 = 0;
    while rest.is_even() {
        rest /= 2;
        e2 += 1;
    }
    push(BigInt::from(2), e2);
    let mut d = BigInt::from(3);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 2;
    }
    if rest > BigInt::one() {
        push(rest, 1);
    }
    out
}

/// Floor of the square root of a nonnegative integer.
pub(crate) fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    n.sqrt()
}

/// True when n is a perfect square; also hands back the root.
pub(crate) fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Modular inverse in Z/m (m >= 1), defined whenever gcd(a, m) = 1.
pub(crate) fn mod_inverse_u64(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub(crate) fn mod_pow_u64(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0);
    let m128 = m as u128;
    let mut b = (base as u128) % m128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Euclidean quotient-with-remainder on integers with the convention
/// 0 <= r < |b|.
pub(crate) fn div_rem_euclid(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    assert!(!b.is_zero(), "division by zero");
    let (mut q, mut r) = a.div_mod_floor(b);
    // div_mod_floor gives a remainder with the sign of b; shift it into
    // [0, |b|) when b is negative.
    if r.is_negative() {
        q += 1;
        r -= b;
    }
    (q, r)
}

/// Rounds the fraction num/den (den > 0) to the nearest integer, with exact
/// halves rounded toward zero.
pub(crate) fn round_half_toward_zero(num: &BigInt, den: &BigInt) -> BigInt {
    assert!(den.is_positive(), "denominator must be positive");
    let (q, r) = num.div_mod_floor(den);
    let twice: BigInt = &r * 2;
    match twice.cmp(den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            let up: BigInt = &q + 1;
            if q.abs() <= up.abs() {
                q
            } else {
                up
            }
        }
    }
}
