//! Integer forms by descent in quadratic star rings.
//!
//! Every positive integer is a sum of four squares; the proof pattern
//! implemented here works in any of the lattices Z[i], Z[j] (j a
//! primitive cube root of unity) and Z[sqrt(3)]. For a prime m, either
//! m = z z-bar outright, or some z has star_norm(z) + 1 divisible by m;
//! dividing the successive z's by the successive cofactors drives m
//! down to +/-1 through the equalities m_i * m_{i+1} = N(z_i) + 1. The
//! quotients of that descent, alternately conjugated and reflected into
//! a quasi-palindrome, have continuants x and y with m = x x-bar +
//! y y-bar. Composite numbers are handled by the two-factor product
//! rule, and each lattice norm then spreads into an integer quadratic
//! form in four variables: x^2+y^2+z^2+u^2, x^2-xy+y^2+z^2-zu+u^2 (and
//! its sibling x^2+3y^2+z^2+3u^2), or the indefinite
//! x^2-3y^2+z^2-3u^2, which also reaches negative integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::continuants::continuant_slice;
use crate::error::{Error, Result};
use crate::euclid::euclidean_algorithm;
use crate::ring::{RingId, RingValue};

/// The record of a norm descent: moduli m_0, m_1, ..., m_s ending at
/// |m_s| = 1, the successive z_0, ..., z_{s-1} satisfying
/// m_i * m_{i+1} = star_norm(z_i) + 1, and the quotients q_1, ..., q_s
/// with z_i = q_{i+1} m_{i+1} + z_{i+1} and q_s = z_{s-1}. In Z[i] and
/// Z[j] all moduli are positive; in Z[sqrt(3)] intermediate moduli may
/// be negative, and a chain of a single step may terminate at -1 and
/// so represent -m_0 (longer chains always end at +1, see
/// descent_chain).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentChain {
    ring: RingId,
    ms: Vec<BigInt>,
    zs: Vec<RingValue>,
    qs: Vec<RingValue>,
}

impl DescentChain {
    pub fn ring(&self) -> &RingId {
        &self.ring
    }

    /// The moduli m_0, ..., m_s.
    pub fn moduli(&self) -> &[BigInt] {
        &self.ms
    }

    /// The z_0, ..., z_{s-1} of the successive equalities.
    pub fn zs(&self) -> &[RingValue] {
        &self.zs
    }

    /// The division quotients q_1, ..., q_s.
    pub fn quotients(&self) -> &[RingValue] {
        &self.qs
    }
}

/// A representation m = x x-bar + y y-bar in a quadratic star ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarRep {
    pub x: RingValue,
    pub y: RingValue,
    pub ring: RingId,
}

impl StarRep {
    pub fn new(x: RingValue, y: RingValue) -> Self {
        let ring = x.ring();
        assert_eq!(ring, y.ring(), "components from different rings");
        StarRep { x, y, ring }
    }

    /// The integer x x-bar + y y-bar this representation stands for.
    pub fn value(&self) -> BigInt {
        let nx = self.x.star_norm_int().expect("integer star norm");
        let ny = self.y.star_norm_int().expect("integer star norm");
        nx + ny
    }
}

/// Which four-variable integer form a quadruple instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// x^2 + y^2 + z^2 + u^2
    FourSquares,
    /// x^2 - xy + y^2 + z^2 - zu + u^2
    EisensteinDouble,
    /// x^2 + 3y^2 + z^2 + 3u^2
    X2p3Y2,
    /// x^2 - 3y^2 + z^2 - 3u^2
    Sqrt3Double,
}

/// An integer quadruple together with the form it is meant for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormQuadruple {
    pub form: FormKind,
    pub values: (BigInt, BigInt, BigInt, BigInt),
}

impl FormQuadruple {
    pub fn from_ints(form: FormKind, x: i64, y: i64, z: i64, u: i64) -> Self {
        FormQuadruple {
            form,
            values: (BigInt::from(x), BigInt::from(y), BigInt::from(z), BigInt::from(u)),
        }
    }

    /// Evaluates the form at the stored quadruple.
    pub fn value(&self) -> BigInt {
        let (x, y, z, u) = &self.values;
        match self.form {
            FormKind::FourSquares => x * x + y * y + z * z + u * u,
            FormKind::EisensteinDouble => x * x - x * y + y * y + z * z - z * u + u * u,
            FormKind::X2p3Y2 => x * x + 3 * (y * y) + z * z + 3 * (u * u),
            FormKind::Sqrt3Double => x * x - 3 * (y * y) + z * z - 3 * (u * u),
        }
    }
}

/// The outcome of the multiplier search for a modulus m: either m is a
/// star norm outright, or some z has star_norm(z) + 1 divisible by m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarMultiplier {
    Exact(RingValue),
    Multiplier(RingValue),
}

/// The two-factor product rule: a = xz - y u-bar and b = xu + y z-bar
/// satisfy (x x-bar + y y-bar)(z z-bar + u u-bar) = a a-bar + b b-bar
/// in every commutative star ring (asserted before returning).
pub fn product_formula(
    x: &RingValue,
    y: &RingValue,
    z: &RingValue,
    u: &RingValue,
) -> (RingValue, RingValue) {
    let ring = x.ring();
    assert!(
        y.ring() == ring && z.ring() == ring && u.ring() == ring,
        "inputs from different rings"
    );
    assert!(ring.is_commutative(), "the product rule needs a commutative ring");
    let a = x.mul(z).sub(&y.mul(&u.conjugate()));
    let b = x.mul(u).add(&y.mul(&z.conjugate()));
    let norm = |v: &RingValue| v.mul(&v.conjugate());
    let lhs = norm(x).add(&norm(y)).mul(&norm(z).add(&norm(u)));
    let rhs = norm(&a).add(&norm(&b));
    assert_eq!(lhs, rhs, "product rule identity must hold");
    (a, b)
}

/// Smallest-second-coordinate solution of a^2 + b^2 = t.
fn decompose_gaussian(t: &BigInt) -> Option<(BigInt, BigInt)> {
    if t.is_negative() {
        return None;
    }
    let mut b = BigInt::zero();
    while &b * &b * 2 <= *t {
        if let Some(a) = arith::perfect_sqrt(&(t - &b * &b)) {
            return Some((a, b));
        }
        b += 1;
    }
    None
}

/// Smallest-second-coordinate solution of a^2 - ab + b^2 = t.
fn decompose_eisenstein(t: &BigInt) -> Option<(BigInt, BigInt)> {
    if t.is_negative() {
        return None;
    }
    let mut b = BigInt::zero();
    while &b * &b * 3 <= t * 4 {
        let d2 = t * 4 - &b * &b * 3;
        if let Some(d) = arith::perfect_sqrt(&d2) {
            let a2 = &b + &d;
            if a2.is_even() {
                return Some((a2 / 2, b));
            }
        }
        b += 1;
    }
    None
}

/// Smallest-second-coordinate solution of a^2 - 3 b^2 = t with a >= 0.
/// The search window covers all fundamental solutions of the Pell-type
/// equation, so failure within it means t is not a norm.
fn decompose_sqrt3(t: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = arith::isqrt(&t.abs()) + 2;
    let mut b = BigInt::zero();
    while b <= bound {
        let a2: BigInt = t + &b * &b * 3;
        if !a2.is_negative() {
            if let Some(a) = arith::perfect_sqrt(&a2) {
                return Some((a, b));
            }
        }
        b += 1;
    }
    None
}

/// For a prime modulus m, finds either z with m = z z-bar, or the
/// smallest-norm z with star_norm(z) + 1 divisible by m. The norm
/// candidates k*m - 1 are tried for k = 1, 2, ... (in Z[sqrt(3)],
/// interleaved with the negative candidates -(k*m + 1) by absolute
/// value), and each candidate is decomposed by ascending second
/// coordinate, so the result is deterministic.
///
/// Hardwired starts: 2 = N(1+i) in Z[i] and 3 = N(1-j) in Z[j]. In
/// Z[sqrt(3)] no multiplier exists for m divisible by 3 (norms are 0 or
/// 1 mod 3), which surfaces as NoMultiplier.
pub fn find_star_multiplier(m: &BigInt, ring: &RingId) -> Result<StarMultiplier> {
    assert!(m.is_positive(), "the modulus must be a positive integer");
    match ring {
        RingId::GaussianIntegers => {
            if *m == BigInt::from(2) {
                return Ok(StarMultiplier::Exact(RingValue::gaussian(1, 1)));
            }
            if let Some((a, b)) = decompose_gaussian(m) {
                return Ok(StarMultiplier::Exact(RingValue::gaussian_big(a, b)));
            }
            let mut k = BigInt::one();
            let guard = m * 8;
            while k <= guard {
                if let Some((a, b)) = decompose_gaussian(&(&k * m - 1)) {
                    return Ok(StarMultiplier::Multiplier(RingValue::gaussian_big(a, b)));
                }
                k += 1;
            }
            Err(Error::NoMultiplier(format!("{m} over {ring}")))
        }
        RingId::EisensteinIntegers => {
            if *m == BigInt::from(3) {
                return Ok(StarMultiplier::Exact(RingValue::eisenstein(1, -1)));
            }
            if let Some((a, b)) = decompose_eisenstein(m) {
                return Ok(StarMultiplier::Exact(RingValue::eisenstein_big(a, b)));
            }
            let mut k = BigInt::one();
            let guard = m * 8;
            while k <= guard {
                if let Some((a, b)) = decompose_eisenstein(&(&k * m - 1)) {
                    return Ok(StarMultiplier::Multiplier(RingValue::eisenstein_big(a, b)));
                }
                k += 1;
            }
            Err(Error::NoMultiplier(format!("{m} over {ring}")))
        }
        RingId::ZSqrt3 => {
            if (m % 3u8).is_zero() {
                return Err(Error::NoMultiplier(format!(
                    "{m} over {ring}: norms are 0 or 1 mod 3"
                )));
            }
            if let Some((a, b)) = decompose_sqrt3(m) {
                return Ok(StarMultiplier::Exact(RingValue::sqrt3_big(a, b)));
            }
            let mut k = BigInt::one();
            let guard = m * 8;
            while k <= guard {
                if let Some((a, b)) = decompose_sqrt3(&(&k * m - 1)) {
                    return Ok(StarMultiplier::Multiplier(RingValue::sqrt3_big(a, b)));
                }
                if let Some((a, b)) = decompose_sqrt3(&(-(&k * m) - 1)) {
                    return Ok(StarMultiplier::Multiplier(RingValue::sqrt3_big(a, b)));
                }
                k += 1;
            }
            Err(Error::NoMultiplier(format!("{m} over {ring}")))
        }
        other => Err(Error::UnsupportedRing(other.to_string())),
    }
}

/// The balanced residue of v modulo m, in (-m/2, m/2] (ties land on
/// +m/2).
fn balanced_residue(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Reduces z modulo m*R to a small-norm representative: coordinates are
/// balanced, which already bounds the norm by m^2/2 in Z[i] and
/// 3m^2/4 in Z[j]. In Z[sqrt(3)] the norm is indefinite, so nearby
/// lattice translates (up to two steps of m in each coordinate) are
/// also examined, preferring representatives with star_norm + 1 > 0 so
/// descents keep positive moduli when possible, then the smallest
/// absolute norm, then the lexicographically smallest coordinates.
pub fn reduce_mod(z: &RingValue, m: &BigInt) -> RingValue {
    assert!(m.is_positive(), "the modulus must be a positive integer");
    let ring = z.ring();
    let (a, b) = z.quad_pair().expect("a value from a quadratic star ring");
    let ba = balanced_residue(a, m);
    let bb = balanced_residue(b, m);
    match ring {
        RingId::GaussianIntegers => RingValue::gaussian_big(ba, bb),
        RingId::EisensteinIntegers => RingValue::eisenstein_big(ba, bb),
        RingId::ZSqrt3 => {
            let window = m * m * 3 / 4;
            let mut best: Option<((bool, BigInt, BigInt, BigInt), (BigInt, BigInt))> = None;
            for c in -2i64..=2 {
                for d in -2i64..=2 {
                    let ca = &ba + m * c;
                    let cb = &bb + m * d;
                    let norm: BigInt = &ca * &ca - &cb * &cb * 3;
                    if norm.abs() > window {
                        continue;
                    }
                    let key = (norm.is_negative(), norm.abs(), ca.clone(), cb.clone());
                    if best.as_ref().is_none_or(|(k, _)| key < *k) {
                        best = Some((key, (ca, cb)));
                    }
                }
            }
            let (a, b) = best.expect("the balanced representative is always in the window").1;
            RingValue::sqrt3_big(a, b)
        }
        other => unreachable!("no reduction in {other}"),
    }
}

/// The quotient offsets searched when a division by 2 in Z[j] must be
/// retried (see descent_chain).
const ESCAPE_OFFSETS: [(i64, i64); 9] = [
    (0, 0),
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (-1, -1),
    (1, -1),
    (-1, 1),
];

/// Runs the descent m_{i+1} = (star_norm(z_i) + 1) / m_i, dividing each
/// z_i by m_{i+1} for the next quotient and remainder, until the
/// modulus reaches +/-1. Requires star_norm(z) + 1 divisible by m and a
/// z already reduced (see reduce_mod).
///
/// When a division by 2 in Z[j] leaves a remainder of norm 3 (the one
/// spot where 2*2 = N(1-j)+1 would freeze the modulus at 2), the
/// quotient is re-selected so the remainder has norm at most 1. The
/// minimizing division used here never produces such a remainder in
/// the first place, but the escape is kept so the chain can never
/// stall; if it somehow found no candidate it would report ChainStall.
///
/// In Z[sqrt(3)] a chain of two or more steps that is about to
/// terminate at -1 is instead extended through the unit modulus: with
/// m_s = -1 any z_s at all satisfies the division equality, and
/// z_s = 1 + sqrt(3) of norm -2 forces m_{s+1} = +1. The continuant
/// reconstruction identity behind chain_to_rep telescopes only into a
/// +1 tail (for a single step either sign works), so this keeps every
/// multi-step chain reconstructible while single-step chains may still
/// legitimately report -1.
pub fn descent_chain(m: &BigInt, z: &RingValue) -> Result<DescentChain> {
    assert!(m.is_positive(), "the modulus must be a positive integer");
    let ring = z.ring();
    if z.quad_pair().is_none() {
        return Err(Error::UnsupportedRing(ring.to_string()));
    }
    let first: BigInt = z.star_norm_int()? + 1;
    if !(&first % m).is_zero() {
        return Err(Error::PreconditionFailed(format!(
            "star_norm(z) + 1 must be divisible by {m}"
        )));
    }
    let limit = 10 * (m.bits() as usize) + 10;
    let mut ms = vec![m.clone()];
    let mut zs = vec![z.clone()];
    let mut qs: Vec<RingValue> = Vec::new();
    let mut cur_m = m.clone();
    let mut cur_z = z.clone();
    loop {
        if qs.len() > limit {
            return Err(Error::NonTermination(limit));
        }
        let n1: BigInt = cur_z.star_norm_int()? + 1;
        let next_m: BigInt = &n1 / &cur_m;
        assert_eq!(&next_m * &cur_m, n1, "the descent equality divides exactly");
        ms.push(next_m.clone());
        if next_m.abs().is_one() {
            if ring == RingId::ZSqrt3 && next_m.is_negative() && !qs.is_empty() {
                // extend through the -1 modulus to a +1 terminal
                let tail = RingValue::sqrt3(1, 1);
                qs.push(tail.sub(&cur_z));
                zs.push(tail.clone());
                ms.push(BigInt::one());
                qs.push(tail);
            } else {
                qs.push(cur_z);
            }
            break;
        }
        let m_val = RingValue::embed_bigint(&ring, &next_m);
        let (mut q, mut r) = cur_z.euclidean_divide(&m_val)?;
        if ring == RingId::EisensteinIntegers
            && next_m == BigInt::from(2)
            && r.star_norm_int()? == BigInt::from(3)
        {
            (q, r) = escape_norm_three(&cur_z, &m_val)?;
        }
        qs.push(q);
        zs.push(r.clone());
        cur_z = r;
        cur_m = next_m;
    }
    Ok(DescentChain { ring, ms, zs, qs })
}

fn escape_norm_three(z: &RingValue, two: &RingValue) -> Result<(RingValue, RingValue)> {
    let (q0, _) = z.euclidean_divide(two)?;
    for (da, db) in ESCAPE_OFFSETS {
        let q = q0.add(&RingValue::eisenstein(da, db));
        let r = z.sub(&q.mul(two));
        if r.star_norm_int()? <= BigInt::one() {
            return Ok((q, r));
        }
    }
    Err(Error::ChainStall)
}

/// Reads a representation off a descent chain: the quotients with every
/// second one conjugated form the first half of a quasi-palindrome
/// whose full continuant is m_0 * m_s; the continuants x of the first s
/// terms and y of the first s-1 terms then satisfy x x-bar + y y-bar =
/// m_0 * m_s. Both equalities are re-checked and any failure surfaces
/// as ReconstructionMismatch.
pub fn chain_to_rep(chain: &DescentChain) -> Result<StarRep> {
    let ring = chain.ring.clone();
    let s = chain.qs.len();
    let half: Vec<RingValue> = chain
        .qs
        .iter()
        .enumerate()
        .map(|(k, q)| if k % 2 == 0 { q.clone() } else { q.conjugate() })
        .collect();
    let x = continuant_slice(&ring, &half);
    let y = continuant_slice(&ring, &half[..s - 1]);
    let mut full = half.clone();
    full.extend(half.iter().rev().map(RingValue::conjugate));
    let total = continuant_slice(&ring, &full);
    let expected = chain.ms.first().expect("nonempty moduli")
        * chain.ms.last().expect("nonempty moduli");
    let expected = RingValue::embed_bigint(&ring, &expected);
    let norm = |v: &RingValue| v.mul(&v.conjugate());
    if total != expected || norm(&x).add(&norm(&y)) != expected {
        return Err(Error::ReconstructionMismatch);
    }
    Ok(StarRep::new(x, y))
}

/// A representation of the prime p in the given lattice, via the norm
/// table (2 in Z[i]; 3 in Z[j]; 2 and 3 in Z[sqrt(3)]), an exact norm
/// solution, or a multiplier descent. In Z[sqrt(3)] the result may
/// represent -p (a chain that terminates at -1).
fn prime_star_rep(ring: &RingId, p: &BigInt) -> Result<StarRep> {
    debug_assert!(arith::is_prime_big(p), "prime factors only");
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    match ring {
        RingId::ZSqrt3 if *p == two => {
            return Ok(StarRep::new(RingValue::sqrt3(1, 0), RingValue::sqrt3(1, 0)));
        }
        RingId::ZSqrt3 if *p == three => {
            return Ok(StarRep::new(RingValue::sqrt3(3, 1), RingValue::sqrt3(0, 1)));
        }
        _ => {}
    }
    match find_star_multiplier(p, ring)? {
        StarMultiplier::Exact(z) => Ok(StarRep::new(z, RingValue::zero(ring))),
        StarMultiplier::Multiplier(z) => {
            let z = reduce_mod(&z, p);
            let chain = descent_chain(p, &z)?;
            chain_to_rep(&chain)
        }
    }
}

/// Folds per-prime representations together with the product rule.
fn composite_rep(ring: &RingId, n: &BigInt) -> Result<StarRep> {
    assert!(n.is_positive());
    let mut acc = StarRep::new(RingValue::one(ring), RingValue::zero(ring));
    for (p, e) in arith::factor_trial(n) {
        let rep = prime_star_rep(ring, &p)?;
        for _ in 0..e {
            let (a, b) = product_formula(&acc.x, &acc.y, &rep.x, &rep.y);
            acc = StarRep::new(a, b);
        }
    }
    Ok(acc)
}

fn pair_abs(v: &RingValue) -> (BigInt, BigInt) {
    let (a, b) = v.quad_pair().expect("quadratic value");
    (a.abs(), b.abs())
}

/// Orders two (norm, pair) entries descending: larger norm first, then
/// lexicographically larger pair.
fn order_pairs(
    first: (BigInt, (BigInt, BigInt)),
    second: (BigInt, (BigInt, BigInt)),
) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    if (&second.0, &second.1) > (&first.0, &first.1) {
        (second.1, first.1)
    } else {
        (first.1, second.1)
    }
}

/// The least representative of an Eisenstein coordinate pair under the
/// twelve norm-preserving symmetries (six units, conjugation), chosen
/// among those in the sector v >= w >= 0.
fn eisenstein_canonical_pair(v: &BigInt, w: &BigInt) -> (BigInt, BigInt) {
    let mut best: Option<(BigInt, BigInt)> = None;
    let starts = [(v.clone(), w.clone()), (v - w, -w.clone())];
    for start in starts {
        let mut cur = start;
        for _ in 0..3 {
            for cand in [cur.clone(), (-cur.0.clone(), -cur.1.clone())] {
                if cand.0 >= cand.1 && !cand.1.is_negative()
                    && best.as_ref().is_none_or(|b| cand < *b)
                {
                    best = Some(cand);
                }
            }
            // multiplication by the cube root of unity: a+bj -> -b+(a-b)j
            cur = (-cur.1.clone(), cur.0 - cur.1);
        }
    }
    best.expect("every orbit meets the sector v >= w >= 0")
}

/// The canonical integer quadruple of a lattice representation:
/// Z[i] gives the four absolute coordinates sorted descending; Z[j]
/// canonicalizes each pair within its symmetry orbit; Z[sqrt(3)] takes
/// absolute coordinates. Pairs are ordered by descending norm, then
/// descending coordinates.
pub fn canonical_quadruple(rep: &StarRep) -> FormQuadruple {
    match rep.ring {
        RingId::GaussianIntegers => {
            let (a, b) = pair_abs(&rep.x);
            let (c, d) = pair_abs(&rep.y);
            let mut v = [a, b, c, d];
            v.sort();
            let [u3, u2, u1, u0] = v;
            FormQuadruple {
                form: FormKind::FourSquares,
                values: (u0, u1, u2, u3),
            }
        }
        RingId::EisensteinIntegers => {
            let (a, b) = rep.x.quad_pair().expect("quadratic value");
            let (c, d) = rep.y.quad_pair().expect("quadratic value");
            let p1 = eisenstein_canonical_pair(a, b);
            let p2 = eisenstein_canonical_pair(c, d);
            let n1 = rep.x.star_norm_int().expect("integer norm");
            let n2 = rep.y.star_norm_int().expect("integer norm");
            let (p1, p2) = order_pairs((n1, p1), (n2, p2));
            FormQuadruple {
                form: FormKind::EisensteinDouble,
                values: (p1.0, p1.1, p2.0, p2.1),
            }
        }
        RingId::ZSqrt3 => {
            let p1 = pair_abs(&rep.x);
            let p2 = pair_abs(&rep.y);
            let n1 = rep.x.star_norm_int().expect("integer norm");
            let n2 = rep.y.star_norm_int().expect("integer norm");
            let (p1, p2) = order_pairs((n1, p1), (n2, p2));
            FormQuadruple {
                form: FormKind::Sqrt3Double,
                values: (p1.0, p1.1, p2.0, p2.1),
            }
        }
        ref other => panic!("no canonical quadruple over {other}"),
    }
}

/// Writes a positive integer as x^2 + y^2 + z^2 + u^2 by factoring,
/// descending each prime in Z[i], and folding with the product rule.
pub fn four_squares(n: &BigInt) -> Result<FormQuadruple> {
    if !n.is_positive() {
        return Err(Error::PreconditionFailed(format!(
            "{n} is not a positive integer"
        )));
    }
    let rep = composite_rep(&RingId::GaussianIntegers, n)?;
    let quad = canonical_quadruple(&rep);
    assert_eq!(quad.value(), *n, "four squares must sum back to n");
    Ok(quad)
}

/// Writes a positive integer as x^2 - xy + y^2 + z^2 - zu + u^2 via the
/// same pipeline over Z[j].
pub fn eisenstein_form(n: &BigInt) -> Result<FormQuadruple> {
    if !n.is_positive() {
        return Err(Error::PreconditionFailed(format!(
            "{n} is not a positive integer"
        )));
    }
    let rep = composite_rep(&RingId::EisensteinIntegers, n)?;
    let quad = canonical_quadruple(&rep);
    assert_eq!(quad.value(), *n, "the Eisenstein form must evaluate back to n");
    Ok(quad)
}

/// Rewrites x^2 - xy + y^2 as q^2 + 3 p^2, returning (p, q). One of
/// the three parity cases always applies: x even with t = x/2 gives
/// (t, y - t); y even with t = y/2 gives (t, x - t); both odd gives
/// ((y - x)/2, (x + y)/2).
pub fn eisenstein_to_x2_3y2(x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    if x.is_even() {
        let t = x / 2;
        let q = y - &t;
        (t, q)
    } else if y.is_even() {
        let t = y / 2;
        let q = x - &t;
        (t, q)
    } else {
        ((y - x) / 2, (x + y) / 2)
    }
}

/// Writes a positive integer as x^2 + 3y^2 + z^2 + 3u^2 by converting
/// both pairs of the Eisenstein representation.
pub fn form_x2_3y2(n: &BigInt) -> Result<FormQuadruple> {
    let quad = eisenstein_form(n)?;
    let (v1, w1, v2, w2) = quad.values;
    let (p1, q1) = eisenstein_to_x2_3y2(&v1, &w1);
    let (p2, q2) = eisenstein_to_x2_3y2(&v2, &w2);
    let n1 = &q1 * &q1 + &p1 * &p1 * 3;
    let n2 = &q2 * &q2 + &p2 * &p2 * 3;
    let pair1 = (q1.abs(), p1.abs());
    let pair2 = (q2.abs(), p2.abs());
    let (a, b) = order_pairs((n1, pair1), (n2, pair2));
    let quad = FormQuadruple {
        form: FormKind::X2p3Y2,
        values: (a.0, a.1, b.0, b.1),
    };
    assert_eq!(quad.value(), *n, "the converted form must evaluate back to n");
    Ok(quad)
}

/// Writes any integer as x^2 - 3y^2 + z^2 - 3u^2 via Z[sqrt(3)]. A
/// positive integer whose descent lands on -1, or a negative target,
/// is corrected by composing with the fixed representation
/// -1 = N(1) + N(1 + sqrt(3)).
pub fn sqrt3_form(n: &BigInt) -> Result<FormQuadruple> {
    if n.is_zero() {
        return Ok(FormQuadruple::from_ints(FormKind::Sqrt3Double, 0, 0, 0, 0));
    }
    let mut rep = composite_rep(&RingId::ZSqrt3, &n.abs())?;
    if rep.value() != *n {
        let (a, b) = product_formula(
            &rep.x,
            &rep.y,
            &RingValue::sqrt3(1, 0),
            &RingValue::sqrt3(1, 1),
        );
        rep = StarRep::new(a, b);
    }
    assert_eq!(rep.value(), *n, "the lattice representation must match the target");
    let quad = canonical_quadruple(&rep);
    assert_eq!(quad.value(), *n, "the indefinite form must evaluate back to n");
    Ok(quad)
}

/// The converse direction in any Euclidean star ring: from x, y
/// generating the whole ring, a z with x x-bar + y y-bar dividing
/// z z-bar + 1. The multiplier is the continuant of the Euclid
/// quotients reversed and conjugated, then repeated forward without
/// their last entry; divisibility is asserted before returning.
pub fn star_multiplier_from_pair(x: &RingValue, y: &RingValue) -> Result<RingValue> {
    let ring = x.ring();
    assert_eq!(ring, y.ring(), "inputs from different rings");
    let trace = euclidean_algorithm(x, y)?;
    if !trace.gcd().is_unit() {
        return Err(Error::NotCoprime);
    }
    let q = trace.quotients();
    let z = if q.is_empty() {
        RingValue::zero(&ring)
    } else {
        let mut seq: Vec<RingValue> = q.iter().rev().map(RingValue::conjugate).collect();
        seq.extend_from_slice(&q[..q.len() - 1]);
        continuant_slice(&ring, &seq)
    };
    let norm = |v: &RingValue| v.mul(&v.conjugate());
    let m = norm(x).add(&norm(y));
    assert!(!m.is_zero(), "coprime inputs have a nonzero combined norm");
    let lhs = norm(&z).add(&RingValue::one(&ring));
    let (_, r) = lhs.euclidean_divide(&m)?;
    assert!(r.is_zero(), "x x-bar + y y-bar must divide z z-bar + 1");
    Ok(z)
}
