//! Sums of two squares by continuants.
//!
//! Over the integers: a prime p = 1 (mod 4) is written as x^2 + y^2
//! either by stopping the Euclidean algorithm on (p, z) early (with z a
//! square root of -1 mod p) or by reading the palindromic quotient
//! sequence of the full run. Over a polynomial ring F[X] where -1 is not
//! a square, any divisor m of z^2 + 1 becomes (x^2 + y^2) * u for a
//! constant u, recovered from the quotient sequence after undoing its
//! alternating constant rescaling; an independent route computes
//! gcd(m, z + omega*t) in F(omega)[X], omega^2 = -1. The module also
//! covers the converse direction (a multiplier z from a representation),
//! splitting in rings where -1 is already a square, absorbing constant
//! units that are themselves sums of two squares, and the cyclotomic
//! family Phi_{4p} = x^2 + y^2.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith;
use crate::continuants::{continuant_slice, zigzag_rescale, QuotientSeq};
use crate::error::{Error, Result};
use crate::euclid::{euclid_until, euclidean_algorithm, stops};
use crate::ring::{RingId, RingValue};

/// A representation m = (x^2 + y^2) * unit.
///
/// Producers guarantee x and y coprime and a canonical presentation
/// (over the integers x >= y >= 0; over F[X] a monic x of higher degree
/// with the scaling pushed into `unit`, except after unit absorption,
/// which instead fixes signs and orders the pair). The fields are plain
/// data; [`verify_two_squares`] re-checks a representation against m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSquaresRep {
    pub x: RingValue,
    pub y: RingValue,
    pub unit: RingValue,
}

impl TwoSquaresRep {
    pub fn new(x: RingValue, y: RingValue, unit: RingValue) -> Self {
        TwoSquaresRep { x, y, unit }
    }

    /// The value this representation stands for: (x^2 + y^2) * unit.
    pub fn value(&self) -> RingValue {
        self.x
            .mul(&self.x)
            .add(&self.y.mul(&self.y))
            .mul(&self.unit)
    }
}

/// The square root of -1 modulo a prime p = 1 (mod 4), normalized into
/// [2, p/2]. Deterministic: tries bases a = 2, 3, ... until one is a
/// quadratic non-residue, then returns a^((p-1)/4) mod p.
pub fn sqrt_minus_one_mod_p(p: u64) -> Result<u64> {
    if !arith::is_prime_u64(p) {
        return Err(Error::PreconditionFailed(format!("{p} is not prime")));
    }
    if p % 4 != 1 {
        return Err(Error::NoSolution(p));
    }
    for a in 2..p {
        if arith::mod_pow_u64(a, (p - 1) / 2, p) == p - 1 {
            let z = arith::mod_pow_u64(a, (p - 1) / 4, p);
            let z = z.min(p - z);
            debug_assert!(2 <= z && z <= p / 2);
            debug_assert_eq!(arith::mod_pow_u64(z, 2, p), p - 1);
            return Ok(z);
        }
    }
    unreachable!("a prime p = 1 (mod 4) has quadratic non-residues below p")
}

/// Writes a prime p = 1 (mod 4) (or p = 2) as x^2 + y^2 by running the
/// Euclidean algorithm on (p, z) and stopping at the first remainder x
/// with x^2 < p; y is the remainder of one more division. Guarantees
/// y < x < sqrt(p) and gcd(x, y) = 1 for odd p.
pub fn brillhart_two_squares(p: u64) -> Result<TwoSquaresRep> {
    if !arith::is_prime_u64(p) {
        return Err(Error::PreconditionFailed(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(TwoSquaresRep::new(
            RingValue::integer(1),
            RingValue::integer(1),
            RingValue::integer(1),
        ));
    }
    if p % 4 != 1 {
        return Err(Error::NotRepresentable(format!("{p} == 3 (mod 4)")));
    }
    let z = sqrt_minus_one_mod_p(p)?;
    let p_val = RingValue::int_big(BigInt::from(p));
    let trace = euclid_until(
        &p_val,
        &RingValue::int_big(BigInt::from(z)),
        stops::square_below(&p_val),
    )?;
    let rem = trace.remainders();
    let x = rem[rem.len() - 1].clone();
    let before = &rem[rem.len() - 2];
    let (_, y) = before.euclidean_divide(&x)?;
    let rep = TwoSquaresRep::new(x, y, RingValue::integer(1));
    debug_assert_eq!(rep.value(), p_val);
    debug_assert!(verify_two_squares(&p_val, &rep));
    Ok(rep)
}

/// Writes a prime p = 1 (mod 4) as x^2 + y^2 from the full Euclidean
/// run on (p, z): its quotient sequence is an even-length palindrome
/// (q_1, ..., q_s, q_s, ..., q_1), and x = [q_1..q_s],
/// y = [q_1..q_{s-1}]. Returns the palindrome along with the
/// representation; the result agrees with [`brillhart_two_squares`].
pub fn smith_two_squares(p: u64) -> Result<(QuotientSeq, TwoSquaresRep)> {
    if !arith::is_prime_u64(p) {
        return Err(Error::PreconditionFailed(format!("{p} is not prime")));
    }
    if p % 4 != 1 {
        return Err(Error::NotRepresentable(format!("{p} == 3 (mod 4)")));
    }
    let z = sqrt_minus_one_mod_p(p)?;
    let p_val = RingValue::int_big(BigInt::from(p));
    let trace = euclidean_algorithm(&p_val, &RingValue::int_big(BigInt::from(z)))?;
    let q = trace.quotients();
    if q.len() % 2 != 0 || !is_palindrome(q) {
        return Err(Error::PalindromeViolation);
    }
    let s = q.len() / 2;
    let x = continuant_slice(&RingId::Integers, &q[..s]);
    let y = continuant_slice(&RingId::Integers, &q[..s - 1]);
    let rep = TwoSquaresRep::new(x, y, RingValue::integer(1));
    debug_assert_eq!(rep.value(), p_val);
    let seq = QuotientSeq::new(RingId::Integers, q.to_vec())?;
    Ok((seq, rep))
}

fn is_palindrome(items: &[RingValue]) -> bool {
    let n = items.len();
    (0..n / 2).all(|i| items[i] == items[n - 1 - i])
}

/// The converse direction over rings whose star is the identity
/// (integers, prime fields, rationals, polynomials): from coprime x, y
/// it produces z and w with z^2 + 1 = (x^2 + y^2) * w.
///
/// Both are continuants of the Euclid quotients q_1..q_n of (x, y):
/// z = [q_n..q_1, q_1..q_{n-1}] and w = [q_{n-1}..q_1, q_1..q_{n-1}],
/// the latter corrected by the trace unit when the run ends in a
/// non-trivial constant. The identity is asserted before returning.
pub fn multiplier_from_representation(
    x: &RingValue,
    y: &RingValue,
) -> Result<(RingValue, RingValue)> {
    let ring = x.ring();
    assert_eq!(ring, y.ring(), "inputs from different rings");
    if !ring.has_trivial_star() {
        return Err(Error::UnsupportedRing(ring.to_string()));
    }
    if x.is_zero() && y.is_zero() {
        return Err(Error::NotCoprime);
    }
    let trace = euclidean_algorithm(x, y)?;
    if !trace.gcd().is_unit() {
        return Err(Error::NotCoprime);
    }
    let q = trace.quotients();
    let z = if q.is_empty() {
        RingValue::zero(&ring)
    } else {
        let mut seq: Vec<RingValue> = q.iter().rev().cloned().collect();
        seq.extend_from_slice(&q[..q.len() - 1]);
        continuant_slice(&ring, &seq)
    };
    let w_core = if q.len() <= 1 {
        RingValue::one(&ring)
    } else {
        let head = &q[..q.len() - 1];
        let mut seq: Vec<RingValue> = head.iter().rev().cloned().collect();
        seq.extend_from_slice(head);
        continuant_slice(&ring, &seq)
    };
    let h_inv = trace.gcd().inverse()?;
    let w = w_core.mul(&h_inv).mul(&h_inv);
    let m = x.mul(x).add(&y.mul(y));
    assert_eq!(
        z.mul(&z).add(&RingValue::one(&ring)),
        m.mul(&w),
        "multiplier identity z^2 + 1 = (x^2 + y^2) w must hold"
    );
    Ok((z, w))
}

/// In a ring where -1 has a square root k, splits x into a^2 + b^2 with
/// a = (x + 1)/2 and b = (x - 1)/(2k), provided those divisions are
/// exact (automatic in a field of odd characteristic).
pub fn split_when_i_exists(x: &RingValue, k: &RingValue) -> Result<(RingValue, RingValue)> {
    let ring = x.ring();
    assert_eq!(ring, k.ring(), "inputs from different rings");
    let minus_one = RingValue::embed_int(&ring, -1);
    if k.mul(k) != minus_one {
        return Err(Error::PreconditionFailed(
            "k is not a square root of -1".to_string(),
        ));
    }
    let two = RingValue::embed_int(&ring, 2);
    if two.is_zero() {
        return Err(Error::PreconditionFailed(
            "2 is zero in this ring".to_string(),
        ));
    }
    let one = RingValue::one(&ring);
    let a = x
        .add(&one)
        .exact_div(&two)
        .map_err(|_| Error::UnitNotSumOfSquares)?;
    let b = x
        .sub(&one)
        .exact_div(&two.mul(k))
        .map_err(|_| Error::UnitNotSumOfSquares)?;
    assert_eq!(a.mul(&a).add(&b.mul(&b)), *x, "split must satisfy a^2 + b^2 = x");
    Ok((a, b))
}

// ---------------------------------------------------------------------
// polynomial two squares
// ---------------------------------------------------------------------

fn poly_base(ring: &RingId) -> Result<RingId> {
    match ring {
        RingId::PolyOverField(base) => Ok((**base).clone()),
        other => Err(Error::UnsupportedRing(other.to_string())),
    }
}

/// The coefficient field must have odd characteristic and no square
/// root of -1: the rationals, or F_p with p = 3 (mod 4).
fn require_minus_one_nonsquare(base: &RingId) -> Result<()> {
    match base {
        RingId::Rationals => Ok(()),
        RingId::PrimeField(2) => Err(Error::BadField(
            "the coefficient field has characteristic 2".to_string(),
        )),
        RingId::PrimeField(p) if p % 4 == 1 => {
            Err(Error::BadField(format!("-1 is a square in F:{p}")))
        }
        RingId::PrimeField(_) => Ok(()),
        other => Err(Error::UnsupportedRing(other.to_string())),
    }
}

/// Negativity of a field scalar in its canonical presentation: ordinary
/// sign for rationals, the balanced residue (p/2, p) for prime fields.
fn scalar_is_negative(c: &RingValue) -> bool {
    match c {
        RingValue::Rational(r) => r.is_negative(),
        RingValue::Residue { modulus, value } => *value > modulus / 2,
        RingValue::Int(n) => n.is_negative(),
        _ => false,
    }
}

fn cmp_scalar(a: &RingValue, b: &RingValue) -> Ordering {
    match (a, b) {
        (RingValue::Rational(x), RingValue::Rational(y)) => x.cmp(y),
        (
            RingValue::Residue { modulus, value: x },
            RingValue::Residue { value: y, .. },
        ) => {
            let balance = |v: u64| -> i128 {
                if v > modulus / 2 {
                    v as i128 - *modulus as i128
                } else {
                    v as i128
                }
            };
            balance(*x).cmp(&balance(*y))
        }
        (RingValue::Int(x), RingValue::Int(y)) => x.cmp(y),
        _ => Ordering::Equal,
    }
}

/// Orders polynomials by degree, then coefficients from the top down.
fn cmp_poly(a: &RingValue, b: &RingValue) -> Ordering {
    let (da, db) = (a.poly_degree(), b.poly_degree());
    match (da, db) {
        (None, None) => return Ordering::Equal,
        (None, Some(_)) => return Ordering::Less,
        (Some(_), None) => return Ordering::Greater,
        (Some(x), Some(y)) if x != y => return x.cmp(&y),
        _ => {}
    }
    let (ca, cb) = (a.poly_coeffs().unwrap(), b.poly_coeffs().unwrap());
    for (x, y) in ca.iter().rev().zip(cb.iter().rev()) {
        let ord = cmp_scalar(x, y);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

fn constant_poly(base: &RingId, scalar: RingValue) -> RingValue {
    RingValue::poly(base.clone(), vec![scalar])
}

fn leading_is_negative(p: &RingValue) -> bool {
    p.leading_coeff().as_ref().is_some_and(scalar_is_negative)
}

/// When x and y have equal degree, trades them for a pair with
/// deg x > deg y: with lambda the ratio of leading coefficients,
/// (x + lambda y)^2 + (lambda x - y)^2 = (1 + lambda^2)(x^2 + y^2), and
/// 1 + lambda^2 is nonzero because -1 is not a square in the field. The
/// unit shrinks by that factor.
fn balance_degrees(
    base: &RingId,
    x: RingValue,
    y: RingValue,
    unit: RingValue,
) -> (RingValue, RingValue, RingValue) {
    debug_assert_eq!(x.poly_degree(), y.poly_degree());
    let lambda = y
        .leading_coeff()
        .expect("nonzero y")
        .mul(&x.leading_coeff().expect("nonzero x").inverse().expect("field"));
    let lam = constant_poly(base, lambda.clone());
    let new_x = x.add(&lam.mul(&y));
    let new_y = lam.mul(&x).sub(&y);
    let one_plus = constant_poly(
        base,
        RingValue::one(base).add(&lambda.mul(&lambda)),
    );
    let new_unit = unit
        .exact_div(&one_plus)
        .expect("1 + lambda^2 is a nonzero constant");
    debug_assert!(new_x.poly_degree() > new_y.poly_degree());
    (new_x, new_y, new_unit)
}

/// Canonical polynomial presentation: deg x > deg y (balancing if
/// needed), x monic with the scale pushed into the unit, y with a
/// non-negative leading coefficient.
fn canonicalize_poly_rep(
    base: &RingId,
    mut x: RingValue,
    mut y: RingValue,
    mut unit: RingValue,
) -> (RingValue, RingValue, RingValue) {
    if y.poly_degree() > x.poly_degree() {
        std::mem::swap(&mut x, &mut y);
    }
    if !y.is_zero() && x.poly_degree() == y.poly_degree() {
        (x, y, unit) = balance_degrees(base, x, y, unit);
    }
    let lead = x.leading_coeff().expect("nonzero x");
    if !lead.is_one() {
        let inv = constant_poly(base, lead.inverse().expect("field"));
        let lead = constant_poly(base, lead);
        x = x.mul(&inv);
        y = y.mul(&inv);
        unit = unit.mul(&lead).mul(&lead);
    }
    if leading_is_negative(&y) {
        y = y.neg();
    }
    (x, y, unit)
}

fn assert_coprime(x: &RingValue, y: &RingValue) {
    let gcd_ok = match euclidean_algorithm(x, y) {
        Ok(trace) => trace.gcd().is_unit(),
        Err(_) => false,
    };
    assert!(gcd_ok, "produced representation must have coprime parts");
}

/// Validations shared by the two polynomial representation routes.
fn check_poly_inputs(m: &RingValue, others: &[&RingValue]) -> Result<(RingId, usize)> {
    let ring = m.ring();
    let base = poly_base(&ring)?;
    require_minus_one_nonsquare(&base)?;
    for v in others {
        assert_eq!(v.ring(), ring, "inputs from different rings");
    }
    let deg_m = m
        .poly_degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::DegreeError("m must have degree at least 1".to_string()))?;
    Ok((base, deg_m))
}

/// Writes a divisor m of z^2 + 1 in F[X] as (x^2 + y^2) * u, u a
/// constant.
///
/// Runs the full Euclidean algorithm on (m, z). The run's constant gcd
/// leaves the quotients rescaled by an alternating constant pattern;
/// undoing it (in whichever of the two directions yields a palindrome)
/// recovers a palindromic sequence (q_1, ..., q_s, q_s, ..., q_1), from
/// which x = [q_1..q_s] and y = [q_1..q_{s-1}]. A second, early-stopped
/// run reads x directly off the first remainder of half degree, and the
/// two answers are checked against each other before the result is
/// canonicalized.
pub fn poly_two_squares(m: &RingValue, z: &RingValue) -> Result<TwoSquaresRep> {
    let (base, deg_m) = check_poly_inputs(m, &[z])?;
    let ring = m.ring();
    if z.poly_degree().is_some_and(|dz| dz >= deg_m) {
        return Err(Error::DegreeError(
            "z must have lower degree than m".to_string(),
        ));
    }
    let z_sq_plus_1 = z.mul(z).add(&RingValue::one(&ring));
    let (_, r) = z_sq_plus_1.euclidean_divide(m)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor);
    }

    let trace = euclidean_algorithm(m, z)?;
    let u = trace.gcd().clone();
    assert_eq!(u.poly_degree(), Some(0), "the gcd of (m, z) is a constant");
    let quotients = trace.quotients();
    if quotients.len() % 2 != 0 {
        return Err(Error::PalindromeViolation);
    }
    let seq = QuotientSeq::new(ring.clone(), quotients.to_vec())?;
    let (palindrome, tau_was_u) = {
        let direct = zigzag_rescale(&seq, &u)?;
        if is_palindrome(direct.items()) {
            (direct, true)
        } else {
            let reversed = zigzag_rescale(&seq, &u.inverse()?)?;
            if is_palindrome(reversed.items()) {
                (reversed, false)
            } else {
                return Err(Error::PalindromeViolation);
            }
        }
    };
    let t = palindrome.items();
    let s = t.len() / 2;
    let x = continuant_slice(&ring, &t[..s]);
    let y = continuant_slice(&ring, &t[..s.saturating_sub(1)]);

    // Independent shortcut: stop a second run at the first remainder of
    // at most half the degree of m; after undoing the rescaling it must
    // be x up to sign.
    let partial = euclid_until(m, z, stops::half_degree(m))?;
    let r = partial
        .remainders()
        .last()
        .expect("a run always retains its inputs")
        .clone();
    let j = partial.remainders().len() - 1;
    let u_inv = u.inverse()?;
    let direct_x = if j % 2 == 0 {
        u_inv.mul(&r)
    } else if tau_was_u {
        r
    } else {
        u_inv.mul(&u_inv).mul(&r)
    };
    assert!(
        direct_x == x || direct_x == x.neg(),
        "early-stopped remainder must reproduce x up to sign"
    );

    let (x, y, unit) = canonicalize_poly_rep(&base, x, y, u);
    let rep = TwoSquaresRep::new(x, y, unit);
    assert_eq!(rep.value(), *m, "representation must reproduce m");
    assert_coprime(&rep.x, &rep.y);
    Ok(rep)
}

// ----- the gcd-in-an-extension route ------------------------------------

/// A scalar of F(omega), omega^2 = -1, over a base field where -1 is not
/// a square (so this is a field and re^2 + im^2 = 0 only at zero).
#[derive(Debug, Clone, PartialEq, Eq)]
struct ExtScalar {
    re: RingValue,
    im: RingValue,
}

impl ExtScalar {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn sub(&self, other: &Self) -> Self {
        ExtScalar {
            re: self.re.sub(&other.re),
            im: self.im.sub(&other.im),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        ExtScalar {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    fn inverse(&self) -> Self {
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let n_inv = norm
            .inverse()
            .expect("re^2 + im^2 is nonzero when -1 is not a square");
        ExtScalar {
            re: self.re.mul(&n_inv),
            im: self.im.neg().mul(&n_inv),
        }
    }
}

fn ext_trim(v: &mut Vec<ExtScalar>) {
    while v.last().is_some_and(ExtScalar::is_zero) {
        v.pop();
    }
}

fn ext_deg(v: &[ExtScalar]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

/// Long division in F(omega)[X]; the divisor must be nonzero.
fn ext_divmod(a: &[ExtScalar], b: &[ExtScalar]) -> Vec<ExtScalar> {
    let db = ext_deg(b).expect("nonzero divisor");
    let lead_inv = b[db].inverse();
    let mut rem = a.to_vec();
    while let Some(dr) = ext_deg(&rem) {
        if dr < db {
            break;
        }
        let factor = rem[dr].mul(&lead_inv);
        for k in 0..=db {
            let delta = factor.mul(&b[k]);
            rem[dr - db + k] = rem[dr - db + k].sub(&delta);
        }
        ext_trim(&mut rem);
    }
    rem
}

/// Monic gcd in F(omega)[X] by the plain remainder loop.
fn ext_gcd(a: &[ExtScalar], b: &[ExtScalar]) -> Vec<ExtScalar> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    ext_trim(&mut r0);
    ext_trim(&mut r1);
    while !r1.is_empty() {
        let r2 = ext_divmod(&r0, &r1);
        r0 = r1;
        r1 = r2;
    }
    let lead_inv = r0.last().expect("gcd of nonzero inputs").inverse();
    r0.iter().map(|c| c.mul(&lead_inv)).collect()
}

/// Writes a divisor m of z^2 + t^2 (z, t coprime) in F[X] as
/// (x^2 + y^2) * u by computing the monic gcd(m, z + omega t) = x +
/// omega y in the extension F(omega)[X]. An independent oracle for
/// [`poly_two_squares`] (take t = 1).
pub fn poly_two_squares_gcd(
    m: &RingValue,
    z: &RingValue,
    t: &RingValue,
) -> Result<TwoSquaresRep> {
    let (base, _) = check_poly_inputs(m, &[z, t])?;
    let sum = z.mul(z).add(&t.mul(t));
    let (_, r) = sum.euclidean_divide(m)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor);
    }
    if z.is_zero() && t.is_zero() {
        return Err(Error::NotCoprime);
    }
    if !euclidean_algorithm(z, t)?.gcd().is_unit() {
        return Err(Error::NotCoprime);
    }

    let zero = RingValue::zero(&base);
    let gm: Vec<ExtScalar> = m
        .poly_coeffs()
        .unwrap()
        .iter()
        .map(|c| ExtScalar {
            re: c.clone(),
            im: zero.clone(),
        })
        .collect();
    let zc = z.poly_coeffs().unwrap();
    let tc = t.poly_coeffs().unwrap();
    let len = zc.len().max(tc.len());
    let gzt: Vec<ExtScalar> = (0..len)
        .map(|k| ExtScalar {
            re: zc.get(k).cloned().unwrap_or_else(|| zero.clone()),
            im: tc.get(k).cloned().unwrap_or_else(|| zero.clone()),
        })
        .collect();
    let g = ext_gcd(&gm, &gzt);

    let x = RingValue::poly(base.clone(), g.iter().map(|c| c.re.clone()).collect());
    let y = RingValue::poly(base.clone(), g.iter().map(|c| c.im.clone()).collect());
    let norm = x.mul(&x).add(&y.mul(&y));
    let unit = m
        .exact_div(&norm)
        .expect("m factors through the conjugate pair gcds");
    assert_eq!(unit.poly_degree(), Some(0), "the cofactor is a constant");
    let (x, y, unit) = canonicalize_poly_rep(&base, x, y, unit);
    let rep = TwoSquaresRep::new(x, y, unit);
    assert_eq!(rep.value(), *m, "representation must reproduce m");
    assert_coprime(&rep.x, &rep.y);
    Ok(rep)
}

// ----- unit absorption ----------------------------------------------------

/// Integer pair (a, b) with a^2 + b^2 = n, smallest a first; `None` when
/// n is not a sum of two squares.
fn two_square_search(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_negative() {
        return None;
    }
    let mut a = BigInt::zero();
    let bound = arith::isqrt(n);
    while a <= bound {
        let rest = n - &a * &a;
        if let Some(b) = arith::perfect_sqrt(&rest) {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

/// Absorbs the unit of a representation into the pair when the unit is
/// itself a sum of two squares of constants: with u = c^2 + d^2,
/// m = (x^2 + y^2) u = (cx - dy)^2 + (cy + dx)^2.
///
/// Over the rationals, u = P/Q > 0 works exactly when PQ is a sum of
/// two integer squares; over F_p every scalar works; over the integers
/// only non-negative cofactors that are sums of two squares do. The
/// result keeps unit 1 and is presented with fixed signs and the larger
/// component first; the monic rescaling is deliberately *not* applied,
/// since it would reintroduce a unit.
pub fn unit_absorb(rep: &TwoSquaresRep) -> Result<TwoSquaresRep> {
    if rep.unit.is_one() {
        return Ok(rep.clone());
    }
    let ring = rep.x.ring();
    match &ring {
        RingId::Integers => {
            let u = rep.unit.as_int().expect("integer unit");
            let (c, d) = two_square_search(u).ok_or(Error::UnitNotSumOfSquares)?;
            let c = RingValue::int_big(c);
            let d = RingValue::int_big(d);
            let (x, y) = absorb_transform(&rep.x, &rep.y, &c, &d);
            let mut parts = [abs_int(&x), abs_int(&y)];
            parts.sort_by(|a, b| b.as_int().cmp(&a.as_int()));
            let [x, y] = parts;
            Ok(TwoSquaresRep::new(x, y, RingValue::integer(1)))
        }
        RingId::PolyOverField(base) => {
            if rep.unit.is_zero() {
                return Err(Error::UnitNotSumOfSquares);
            }
            if rep.unit.poly_degree() != Some(0) {
                return Err(Error::PreconditionFailed(
                    "the unit of a polynomial representation must be a constant".to_string(),
                ));
            }
            let scalar = rep.unit.poly_coeffs().unwrap()[0].clone();
            let (c, d) = scalar_two_squares(base, &scalar)?;
            let (x, y) = absorb_transform(
                &rep.x,
                &rep.y,
                &constant_poly(base, c),
                &constant_poly(base, d),
            );
            let mut x = if leading_is_negative(&x) { x.neg() } else { x };
            let mut y = if leading_is_negative(&y) { y.neg() } else { y };
            if cmp_poly(&x, &y) == Ordering::Less {
                std::mem::swap(&mut x, &mut y);
            }
            Ok(TwoSquaresRep::new(x, y, RingValue::one(&ring)))
        }
        other => Err(Error::UnsupportedRing(other.to_string())),
    }
}

fn abs_int(v: &RingValue) -> RingValue {
    RingValue::int_big(v.as_int().expect("integer").abs())
}

fn absorb_transform(
    x: &RingValue,
    y: &RingValue,
    c: &RingValue,
    d: &RingValue,
) -> (RingValue, RingValue) {
    (
        c.mul(x).sub(&d.mul(y)),
        c.mul(y).add(&d.mul(x)),
    )
}

/// Writes a field scalar as c^2 + d^2, or reports that it is not one.
fn scalar_two_squares(base: &RingId, u: &RingValue) -> Result<(RingValue, RingValue)> {
    match base {
        RingId::Rationals => {
            let r = u.as_rational().expect("rational scalar");
            if !r.is_positive() {
                return Err(Error::UnitNotSumOfSquares);
            }
            let n = r.numer() * r.denom();
            let (a, b) = two_square_search(&n).ok_or(Error::UnitNotSumOfSquares)?;
            let denom = r.denom().clone();
            Ok((
                RingValue::rational_big(num_rational::BigRational::new(a, denom.clone())),
                RingValue::rational_big(num_rational::BigRational::new(b, denom)),
            ))
        }
        RingId::PrimeField(p) => {
            let (_, v) = u.as_residue().expect("prime field scalar");
            for c in 0..*p {
                for d in 0..*p {
                    let sum = (c as u128 * c as u128 + d as u128 * d as u128) % *p as u128;
                    if sum == v as u128 {
                        return Ok((
                            RingValue::residue(*p, c as i64),
                            RingValue::residue(*p, d as i64),
                        ));
                    }
                }
            }
            Err(Error::UnitNotSumOfSquares)
        }
        other => Err(Error::UnsupportedRing(other.to_string())),
    }
}

// ----- cyclotomic family ----------------------------------------------------

/// The cyclotomic identity for an odd prime p: with
/// Phi_{4p}(X) = sum_{k=0}^{p-1} (-1)^k X^{2k}, returns (Phi_{4p}, x, y)
/// over the rationals where Phi_{4p} = x^2 + y^2,
/// x = +/- sum_{k<=(p-1)/2} (-1)^k X^{2k} and
/// y = +/- X sum_{k<=(p-3)/2} (-1)^k X^{2k}, signs fixed so both leading
/// coefficients are positive.
pub fn cyclotomic_rep(p: u64) -> Result<(RingValue, RingValue, RingValue)> {
    if p < 3 || !arith::is_prime_u64(p) {
        return Err(Error::PreconditionFailed(format!(
            "{p} is not an odd prime"
        )));
    }
    let alternating = |terms: u64| -> Vec<i64> {
        // coefficients of sum_{k=0}^{terms-1} (-1)^k X^{2k}
        let mut cs = vec![0i64; (2 * (terms - 1) + 1) as usize];
        for k in 0..terms {
            cs[(2 * k) as usize] = if k % 2 == 0 { 1 } else { -1 };
        }
        cs
    };
    let base = RingId::Rationals;
    let phi = RingValue::poly_from_ints(&base, &alternating(p));
    let mut x = RingValue::poly_from_ints(&base, &alternating((p - 1) / 2 + 1));
    let mut y_coeffs = vec![0i64];
    y_coeffs.extend(alternating((p - 3) / 2 + 1));
    let mut y = RingValue::poly_from_ints(&base, &y_coeffs);
    if leading_is_negative(&x) {
        x = x.neg();
    }
    if leading_is_negative(&y) {
        y = y.neg();
    }
    assert_eq!(
        x.mul(&x).add(&y.mul(&y)),
        phi,
        "the cyclotomic identity must hold"
    );
    Ok((phi, x, y))
}

/// Checks a claimed representation: (x^2 + y^2) * unit must equal m
/// exactly and x, y must be coprime. Values from the wrong ring simply
/// fail the check.
pub fn verify_two_squares(m: &RingValue, rep: &TwoSquaresRep) -> bool {
    let ring = m.ring();
    if rep.x.ring() != ring || rep.y.ring() != ring || rep.unit.ring() != ring {
        return false;
    }
    if rep.value() != *m {
        return false;
    }
    match euclidean_algorithm(&rep.x, &rep.y) {
        Ok(trace) => trace.gcd().is_unit(),
        Err(_) => false,
    }
}
