//! Exact arithmetic for the rings the continuant algorithms run over:
//! the integers, prime fields, the rationals, dense polynomials over a
//! field, the Gaussian integers, the Eisenstein integers, Z[sqrt(3)], and
//! 2x2 integer matrices (a noncommutative test ring that carries a star
//! but no Euclidean function).
//!
//! Values are immutable and ring-tagged. Arithmetic between values of
//! different rings is a caller bug and panics; fallible entry points that
//! accept untrusted input validate first and return errors.

pub mod text;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// Identifies one of the supported rings. Polynomial rings carry their
/// coefficient field, which must be a field kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingId {
    Integers,
    PrimeField(u64),
    Rationals,
    PolyOverField(Box<RingId>),
    GaussianIntegers,
    EisensteinIntegers,
    ZSqrt3,
    IntMatrix2,
}

impl RingId {
    /// Checked constructor: the modulus must be prime (trial division;
    /// moduli are desk-scale).
    pub fn prime_field(p: u64) -> Result<Self> {
        if arith::is_prime_u64(p) {
            Ok(RingId::PrimeField(p))
        } else {
            Err(Error::PreconditionFailed(format!(
                "modulus {p} is not prime"
            )))
        }
    }

    /// Checked constructor: the coefficient ring must be a field.
    pub fn poly_over(base: RingId) -> Result<Self> {
        if base.is_field() {
            base.validate()?;
            Ok(RingId::PolyOverField(Box::new(base)))
        } else {
            Err(Error::PreconditionFailed(format!(
                "{base} is not a field, so it cannot be a coefficient ring"
            )))
        }
    }

    /// Re-checks the construction invariants on a ring tag that may have
    /// been built directly. Used at the untrusted-input boundary.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingId::PrimeField(p) => {
                if arith::is_prime_u64(*p) {
                    Ok(())
                } else {
                    Err(Error::PreconditionFailed(format!(
                        "modulus {p} is not prime"
                    )))
                }
            }
            RingId::PolyOverField(base) => {
                if base.is_field() {
                    base.validate()
                } else {
                    Err(Error::PreconditionFailed(format!(
                        "{base} is not a field, so it cannot be a coefficient ring"
                    )))
                }
            }
            _ => Ok(()),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingId::PrimeField(_) | RingId::Rationals)
    }

    /// Every supported ring except the matrix ring carries a Euclidean
    /// function.
    pub fn is_euclidean(&self) -> bool {
        !matches!(self, RingId::IntMatrix2)
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, RingId::IntMatrix2)
    }

    /// Rings whose star is the identity map.
    pub fn has_trivial_star(&self) -> bool {
        matches!(
            self,
            RingId::Integers | RingId::PrimeField(_) | RingId::Rationals | RingId::PolyOverField(_)
        )
    }
}

impl std::fmt::Display for RingId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingId::Integers => write!(f, "Z"),
            RingId::PrimeField(p) => write!(f, "F:{p}"),
            RingId::Rationals => write!(f, "Q"),
            RingId::PolyOverField(base) => write!(f, "{base}[X]"),
            RingId::GaussianIntegers => write!(f, "Z[i]"),
            RingId::EisensteinIntegers => write!(f, "Z[w]"),
            RingId::ZSqrt3 => write!(f, "Z[s]"),
            RingId::IntMatrix2 => write!(f, "M2"),
        }
    }
}

/// An exact element of one of the supported rings.
///
/// Payload conventions:
/// - `Poly` coefficients are dense, low degree first, and never end in a
///   zero (the zero polynomial is the empty list);
/// - `Rational` values are kept reduced with a positive denominator
///   (guaranteed by `BigRational`);
/// - `Residue` values are reduced into `[0, modulus)`;
/// - `Gaussian(a, b)` is a + bi, `Eisenstein(a, b)` is a + bj for a
///   primitive cube root of unity j (so j^2 = -1 - j), `Sqrt3(a, b)` is
///   a + b*sqrt(3);
/// - `Matrix2` entries are row-major `[a, b, c, d]` for [[a, b], [c, d]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingValue {
    Int(BigInt),
    Residue { modulus: u64, value: u64 },
    Rational(BigRational),
    Poly { base: RingId, coeffs: Vec<RingValue> },
    Gaussian(BigInt, BigInt),
    Eisenstein(BigInt, BigInt),
    Sqrt3(BigInt, BigInt),
    Matrix2(Box<[BigInt; 4]>),
}

impl RingValue {
    // ----- constructors -----------------------------------------------

    pub fn integer(n: i64) -> Self {
        RingValue::Int(BigInt::from(n))
    }

    pub fn int_big(n: BigInt) -> Self {
        RingValue::Int(n)
    }

    pub fn residue(modulus: u64, value: i64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        RingValue::Residue { modulus, value: v }
    }

    pub fn rational(numer: i64, denom: i64) -> Self {
        RingValue::Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn rational_big(r: BigRational) -> Self {
        RingValue::Rational(r)
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        RingValue::Gaussian(BigInt::from(re), BigInt::from(im))
    }

    pub fn gaussian_big(re: BigInt, im: BigInt) -> Self {
        RingValue::Gaussian(re, im)
    }

    pub fn eisenstein(a: i64, b: i64) -> Self {
        RingValue::Eisenstein(BigInt::from(a), BigInt::from(b))
    }

    pub fn eisenstein_big(a: BigInt, b: BigInt) -> Self {
        RingValue::Eisenstein(a, b)
    }

    pub fn sqrt3(a: i64, b: i64) -> Self {
        RingValue::Sqrt3(BigInt::from(a), BigInt::from(b))
    }

    pub fn sqrt3_big(a: BigInt, b: BigInt) -> Self {
        RingValue::Sqrt3(a, b)
    }

    pub fn matrix2(a: i64, b: i64, c: i64, d: i64) -> Self {
        RingValue::Matrix2(Box::new([
            BigInt::from(a),
            BigInt::from(b),
            BigInt::from(c),
            BigInt::from(d),
        ]))
    }

    pub fn matrix2_big(e: [BigInt; 4]) -> Self {
        RingValue::Matrix2(Box::new(e))
    }

    /// Builds a polynomial from low-to-high coefficients, trimming zero
    /// leading coefficients. Panics if a coefficient is not an element of
    /// the base field.
    pub fn poly(base: RingId, mut coeffs: Vec<RingValue>) -> Self {
        assert!(base.is_field(), "polynomial base must be a field");
        for c in &coeffs {
            assert_eq!(c.ring(), base, "coefficient from the wrong field");
        }
        while coeffs.last().is_some_and(RingValue::is_zero) {
            coeffs.pop();
        }
        RingValue::Poly { base, coeffs }
    }

    /// Convenience: a polynomial with small integer coefficients, low
    /// degree first, embedded into the given coefficient field.
    pub fn poly_from_ints(base: &RingId, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| Self::scalar_from_int(base, c)).collect();
        Self::poly(base.clone(), cs)
    }

    fn scalar_from_int(base: &RingId, n: i64) -> RingValue {
        match base {
            RingId::PrimeField(p) => RingValue::residue(*p, n),
            RingId::Rationals => RingValue::rational(n, 1),
            other => panic!("{other} is not a supported coefficient field"),
        }
    }

    pub fn zero(ring: &RingId) -> Self {
        match ring {
            RingId::Integers => RingValue::Int(BigInt::zero()),
            RingId::PrimeField(p) => RingValue::Residue { modulus: *p, value: 0 },
            RingId::Rationals => RingValue::Rational(BigRational::zero()),
            RingId::PolyOverField(base) => RingValue::Poly {
                base: (**base).clone(),
                coeffs: Vec::new(),
            },
            RingId::GaussianIntegers => RingValue::Gaussian(BigInt::zero(), BigInt::zero()),
            RingId::EisensteinIntegers => RingValue::Eisenstein(BigInt::zero(), BigInt::zero()),
            RingId::ZSqrt3 => RingValue::Sqrt3(BigInt::zero(), BigInt::zero()),
            RingId::IntMatrix2 => RingValue::matrix2(0, 0, 0, 0),
        }
    }

    pub fn one(ring: &RingId) -> Self {
        Self::embed_int(ring, 1)
    }

    /// Embeds a rational integer into any of the rings (n times the
    /// identity for matrices).
    pub fn embed_int(ring: &RingId, n: i64) -> Self {
        Self::embed_bigint(ring, &BigInt::from(n))
    }

    pub fn embed_bigint(ring: &RingId, n: &BigInt) -> Self {
        match ring {
            RingId::Integers => RingValue::Int(n.clone()),
            RingId::PrimeField(p) => {
                let v = n.mod_floor(&BigInt::from(*p)).to_u64().expect("reduced residue fits");
                RingValue::Residue { modulus: *p, value: v }
            }
            RingId::Rationals => RingValue::Rational(BigRational::from_integer(n.clone())),
            RingId::PolyOverField(base) => {
                let c = Self::embed_bigint(base, n);
                Self::poly((**base).clone(), vec![c])
            }
            RingId::GaussianIntegers => RingValue::Gaussian(n.clone(), BigInt::zero()),
            RingId::EisensteinIntegers => RingValue::Eisenstein(n.clone(), BigInt::zero()),
            RingId::ZSqrt3 => RingValue::Sqrt3(n.clone(), BigInt::zero()),
            RingId::IntMatrix2 => RingValue::Matrix2(Box::new([
                n.clone(),
                BigInt::zero(),
                BigInt::zero(),
                n.clone(),
            ])),
        }
    }

    // ----- inspection ---------------------------------------------------

    pub fn ring(&self) -> RingId {
        match self {
            RingValue::Int(_) => RingId::Integers,
            RingValue::Residue { modulus, .. } => RingId::PrimeField(*modulus),
            RingValue::Rational(_) => RingId::Rationals,
            RingValue::Poly { base, .. } => RingId::PolyOverField(Box::new(base.clone())),
            RingValue::Gaussian(..) => RingId::GaussianIntegers,
            RingValue::Eisenstein(..) => RingId::EisensteinIntegers,
            RingValue::Sqrt3(..) => RingId::ZSqrt3,
            RingValue::Matrix2(_) => RingId::IntMatrix2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Int(n) => n.is_zero(),
            RingValue::Residue { value, .. } => *value == 0,
            RingValue::Rational(r) => r.is_zero(),
            RingValue::Poly { coeffs, .. } => coeffs.is_empty(),
            RingValue::Gaussian(a, b) | RingValue::Eisenstein(a, b) | RingValue::Sqrt3(a, b) => {
                a.is_zero() && b.is_zero()
            }
            RingValue::Matrix2(e) => e.iter().all(BigInt::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.ring())
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            RingValue::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RingValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<(u64, u64)> {
        match self {
            RingValue::Residue { modulus, value } => Some((*modulus, *value)),
            _ => None,
        }
    }

    /// The (a, b) pair of a quadratic-ring value a + b*g, where g is i, j
    /// or sqrt(3).
    pub fn quad_pair(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            RingValue::Gaussian(a, b) | RingValue::Eisenstein(a, b) | RingValue::Sqrt3(a, b) => {
                Some((a, b))
            }
            _ => None,
        }
    }

    pub fn matrix_entries(&self) -> Option<&[BigInt; 4]> {
        match self {
            RingValue::Matrix2(e) => Some(e),
            _ => None,
        }
    }

    pub fn poly_coeffs(&self) -> Option<&[RingValue]> {
        match self {
            RingValue::Poly { coeffs, .. } => Some(coeffs),
            _ => None,
        }
    }

    /// Degree of a polynomial; `None` for the zero polynomial.
    pub fn poly_degree(&self) -> Option<usize> {
        match self {
            RingValue::Poly { coeffs, .. } => {
                if coeffs.is_empty() {
                    None
                } else {
                    Some(coeffs.len() - 1)
                }
            }
            _ => panic!("poly_degree on a non-polynomial value"),
        }
    }

    pub fn leading_coeff(&self) -> Option<RingValue> {
        match self {
            RingValue::Poly { coeffs, .. } => coeffs.last().cloned(),
            _ => panic!("leading_coeff on a non-polynomial value"),
        }
    }

    // ----- arithmetic ----------------------------------------------------

    fn expect_same_ring(&self, other: &RingValue) {
        assert_eq!(
            self.ring(),
            other.ring(),
            "arithmetic between values of different rings"
        );
    }

    pub fn neg(&self) -> RingValue {
        match self {
            RingValue::Int(n) => RingValue::Int(-n),
            RingValue::Residue { modulus, value } => RingValue::Residue {
                modulus: *modulus,
                value: if *value == 0 { 0 } else { modulus - value },
            },
            RingValue::Rational(r) => RingValue::Rational(-r),
            RingValue::Poly { base, coeffs } => RingValue::Poly {
                base: base.clone(),
                coeffs: coeffs.iter().map(RingValue::neg).collect(),
            },
            RingValue::Gaussian(a, b) => RingValue::Gaussian(-a, -b),
            RingValue::Eisenstein(a, b) => RingValue::Eisenstein(-a, -b),
            RingValue::Sqrt3(a, b) => RingValue::Sqrt3(-a, -b),
            RingValue::Matrix2(e) => {
                RingValue::Matrix2(Box::new([-&e[0], -&e[1], -&e[2], -&e[3]]))
            }
        }
    }

    pub fn add(&self, other: &RingValue) -> RingValue {
        self.expect_same_ring(other);
        match (self, other) {
            (RingValue::Int(x), RingValue::Int(y)) => RingValue::Int(x + y),
            (
                RingValue::Residue { modulus, value: x },
                RingValue::Residue { value: y, .. },
            ) => RingValue::Residue {
                modulus: *modulus,
                value: ((*x as u128 + *y as u128) % *modulus as u128) as u64,
            },
            (RingValue::Rational(x), RingValue::Rational(y)) => RingValue::Rational(x + y),
            (
                RingValue::Poly { base, coeffs: xs },
                RingValue::Poly { coeffs: ys, .. },
            ) => {
                let n = xs.len().max(ys.len());
                let zero = Self::zero(base);
                let mut out = Vec::with_capacity(n);
                for k in 0..n {
                    let a = xs.get(k).unwrap_or(&zero);
                    let b = ys.get(k).unwrap_or(&zero);
                    out.push(a.add(b));
                }
                Self::poly(base.clone(), out)
            }
            (RingValue::Gaussian(a, b), RingValue::Gaussian(c, d)) => {
                RingValue::Gaussian(a + c, b + d)
            }
            (RingValue::Eisenstein(a, b), RingValue::Eisenstein(c, d)) => {
                RingValue::Eisenstein(a + c, b + d)
            }
            (RingValue::Sqrt3(a, b), RingValue::Sqrt3(c, d)) => RingValue::Sqrt3(a + c, b + d),
            (RingValue::Matrix2(x), RingValue::Matrix2(y)) => RingValue::Matrix2(Box::new([
                &x[0] + &y[0],
                &x[1] + &y[1],
                &x[2] + &y[2],
                &x[3] + &y[3],
            ])),
            _ => unreachable!("ring tags already checked"),
        }
    }

    pub fn sub(&self, other: &RingValue) -> RingValue {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingValue) -> RingValue {
        self.expect_same_ring(other);
        match (self, other) {
            (RingValue::Int(x), RingValue::Int(y)) => RingValue::Int(x * y),
            (
                RingValue::Residue { modulus, value: x },
                RingValue::Residue { value: y, .. },
            ) => RingValue::Residue {
                modulus: *modulus,
                value: ((*x as u128 * *y as u128) % *modulus as u128) as u64,
            },
            (RingValue::Rational(x), RingValue::Rational(y)) => RingValue::Rational(x * y),
            (
                RingValue::Poly { base, coeffs: xs },
                RingValue::Poly { coeffs: ys, .. },
            ) => {
                if xs.is_empty() || ys.is_empty() {
                    return Self::zero(&self.ring());
                }
                let zero = Self::zero(base);
                let mut out = vec![zero; xs.len() + ys.len() - 1];
                for (i, a) in xs.iter().enumerate() {
                    for (j, b) in ys.iter().enumerate() {
                        out[i + j] = out[i + j].add(&a.mul(b));
                    }
                }
                Self::poly(base.clone(), out)
            }
            // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
            (RingValue::Gaussian(a, b), RingValue::Gaussian(c, d)) => {
                RingValue::Gaussian(a * c - b * d, a * d + b * c)
            }
            // j^2 = -1 - j, so (a + bj)(c + dj) = (ac - bd) + (ad + bc - bd)j
            (RingValue::Eisenstein(a, b), RingValue::Eisenstein(c, d)) => {
                RingValue::Eisenstein(a * c - b * d, a * d + b * c - b * d)
            }
            // (a + b s)(c + d s) = (ac + 3bd) + (ad + bc)s for s = sqrt(3)
            (RingValue::Sqrt3(a, b), RingValue::Sqrt3(c, d)) => {
                RingValue::Sqrt3(a * c + 3 * (b * d), a * d + b * c)
            }
            (RingValue::Matrix2(x), RingValue::Matrix2(y)) => RingValue::Matrix2(Box::new([
                &x[0] * &y[0] + &x[1] * &y[2],
                &x[0] * &y[1] + &x[1] * &y[3],
                &x[2] * &y[0] + &x[3] * &y[2],
                &x[2] * &y[1] + &x[3] * &y[3],
            ])),
            _ => unreachable!("ring tags already checked"),
        }
    }

    // ----- star ----------------------------------------------------------

    /// The anti-automorphism of the ring: the identity on Z, F_p, Q and
    /// F[X]; coordinatewise conjugation on the quadratic rings; the
    /// adjugate on 2x2 matrices.
    pub fn conjugate(&self) -> RingValue {
        match self {
            RingValue::Int(_)
            | RingValue::Residue { .. }
            | RingValue::Rational(_)
            | RingValue::Poly { .. } => self.clone(),
            RingValue::Gaussian(a, b) => RingValue::Gaussian(a.clone(), -b),
            // conj(j) = j^2 = -1 - j, so conj(a + bj) = (a - b) - bj
            RingValue::Eisenstein(a, b) => RingValue::Eisenstein(a - b, -b),
            RingValue::Sqrt3(a, b) => RingValue::Sqrt3(a.clone(), -b),
            RingValue::Matrix2(e) => RingValue::Matrix2(Box::new([
                e[3].clone(),
                -&e[1],
                -&e[2],
                e[0].clone(),
            ])),
        }
    }

    /// a * conj(a), as an element of the same ring.
    pub fn star_norm(&self) -> RingValue {
        self.mul(&self.conjugate())
    }

    /// a * conj(a) as a rational integer, for the rings where it is one:
    /// a^2 on Z, a^2 + b^2 on Z[i], a^2 - ab + b^2 on Z[j],
    /// a^2 - 3b^2 on Z[sqrt(3)] (sign unconstrained there).
    pub fn star_norm_int(&self) -> Result<BigInt> {
        match self {
            RingValue::Int(n) => Ok(n * n),
            RingValue::Gaussian(a, b) => Ok(a * a + b * b),
            RingValue::Eisenstein(a, b) => Ok(a * a - a * b + b * b),
            RingValue::Sqrt3(a, b) => Ok(a * a - 3 * (b * b)),
            other => Err(Error::UnsupportedRing(other.ring().to_string())),
        }
    }

    // ----- units ----------------------------------------------------------

    pub fn is_unit(&self) -> bool {
        match self {
            RingValue::Int(n) => n.abs().is_one(),
            RingValue::Residue { value, .. } => *value != 0,
            RingValue::Rational(r) => !r.is_zero(),
            RingValue::Poly { coeffs, .. } => coeffs.len() == 1,
            RingValue::Gaussian(..) | RingValue::Eisenstein(..) => {
                self.star_norm_int().expect("quadratic ring").is_one()
            }
            RingValue::Sqrt3(..) => {
                self.star_norm_int().expect("quadratic ring").abs().is_one()
            }
            RingValue::Matrix2(e) => (&e[0] * &e[3] - &e[1] * &e[2]).abs().is_one(),
        }
    }

    pub fn inverse(&self) -> Result<RingValue> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        Ok(match self {
            RingValue::Int(_) => self.clone(),
            RingValue::Residue { modulus, value } => RingValue::Residue {
                modulus: *modulus,
                value: arith::mod_inverse_u64(*value, *modulus).ok_or(Error::NotAUnit)?,
            },
            RingValue::Rational(r) => RingValue::Rational(r.recip()),
            RingValue::Poly { base, coeffs } => {
                let c = coeffs[0].inverse()?;
                Self::poly(base.clone(), vec![c])
            }
            // For norm-one elements the conjugate is the inverse; in
            // Z[sqrt(3)] the norm may be -1, which flips the sign.
            RingValue::Gaussian(..) | RingValue::Eisenstein(..) => self.conjugate(),
            RingValue::Sqrt3(..) => {
                let n = self.star_norm_int()?;
                let c = self.conjugate();
                if n.is_one() {
                    c
                } else {
                    c.neg()
                }
            }
            RingValue::Matrix2(e) => {
                let det = &e[0] * &e[3] - &e[1] * &e[2];
                let adj = self.conjugate();
                if det.is_one() {
                    adj
                } else {
                    adj.neg()
                }
            }
        })
    }

    // ----- Euclidean structure ---------------------------------------------

    /// The Euclidean function: |a| on Z; 0-or-1 on fields; 2^deg with
    /// nu(0) = 0 on polynomials; the star norm on Z[i] and Z[j]; its
    /// absolute value on Z[sqrt(3)]. Matrices carry none.
    pub fn euclidean_norm(&self) -> Result<BigInt> {
        match self {
            RingValue::Int(n) => Ok(n.abs()),
            RingValue::Residue { .. } | RingValue::Rational(_) => {
                Ok(if self.is_zero() { BigInt::zero() } else { BigInt::one() })
            }
            RingValue::Poly { coeffs, .. } => Ok(if coeffs.is_empty() {
                BigInt::zero()
            } else {
                BigInt::one() << (coeffs.len() - 1)
            }),
            RingValue::Gaussian(..) | RingValue::Eisenstein(..) => self.star_norm_int(),
            RingValue::Sqrt3(..) => Ok(self.star_norm_int()?.abs()),
            RingValue::Matrix2(_) => Err(Error::UnsupportedRing(RingId::IntMatrix2.to_string())),
        }
    }

    /// Division with remainder: a = q*b + r with nu(r) < nu(b).
    ///
    /// Quotient choice is fixed per ring so traces are reproducible:
    /// integers take 0 <= r < |b|; fields and polynomials divide exactly
    /// (long division); Gaussian integers round each coordinate of a/b to
    /// the nearest integer with ties toward zero; Eisenstein and
    /// Z[sqrt(3)] values try the four lattice quotients around the exact
    /// rational coordinates, keep those of minimal remainder norm, and
    /// break ties by the lexicographically smallest quotient pair.
    pub fn euclidean_divide(&self, b: &RingValue) -> Result<(RingValue, RingValue)> {
        self.expect_same_ring(b);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, b) {
            (RingValue::Int(x), RingValue::Int(y)) => {
                let (q, r) = arith::div_rem_euclid(x, y);
                Ok((RingValue::Int(q), RingValue::Int(r)))
            }
            (RingValue::Residue { .. }, _) | (RingValue::Rational(_), _) => {
                let q = self.mul(&b.inverse()?);
                Ok((q, Self::zero(&self.ring())))
            }
            (RingValue::Poly { .. }, RingValue::Poly { .. }) => self.poly_divmod(b),
            (RingValue::Gaussian(..), RingValue::Gaussian(..)) => {
                let nb = b.star_norm_int()?;
                let num = self.mul(&b.conjugate());
                let (na, nbm) = num.quad_pair().expect("gaussian product");
                let q = RingValue::Gaussian(
                    arith::round_half_toward_zero(na, &nb),
                    arith::round_half_toward_zero(nbm, &nb),
                );
                let r = self.sub(&q.mul(b));
                Ok((q, r))
            }
            (RingValue::Eisenstein(..), RingValue::Eisenstein(..))
            | (RingValue::Sqrt3(..), RingValue::Sqrt3(..)) => self.lattice_divide(b),
            (RingValue::Matrix2(_), _) => {
                Err(Error::UnsupportedRing(RingId::IntMatrix2.to_string()))
            }
            _ => unreachable!("ring tags already checked"),
        }
    }

    /// Shared quotient search for the two quadratic rings without unique
    /// rounding: enumerate floor/ceil lattice points around the exact
    /// coordinates of a/b, minimize the remainder norm, and break ties by
    /// the lexicographically smallest quotient.
    fn lattice_divide(&self, b: &RingValue) -> Result<(RingValue, RingValue)> {
        let num = self.mul(&b.conjugate());
        let mut den = b.star_norm_int()?;
        let (mut n1, mut n2) = {
            let (x, y) = num.quad_pair().expect("quadratic product");
            (x.clone(), y.clone())
        };
        if den.is_negative() {
            den = -den;
            n1 = -n1;
            n2 = -n2;
        }
        let cand = |n: &BigInt| -> Vec<BigInt> {
            let (q, r) = n.div_mod_floor(&den);
            if r.is_zero() {
                vec![q]
            } else {
                vec![q.clone(), q + 1]
            }
        };
        let mut best: Option<(BigInt, (BigInt, BigInt), RingValue)> = None;
        for qa in cand(&n1) {
            for qb in cand(&n2) {
                let q = match self {
                    RingValue::Eisenstein(..) => RingValue::Eisenstein(qa.clone(), qb.clone()),
                    RingValue::Sqrt3(..) => RingValue::Sqrt3(qa.clone(), qb.clone()),
                    _ => unreachable!(),
                };
                let r = self.sub(&q.mul(b));
                let nu = r.euclidean_norm()?;
                let key = (qa.clone(), qb.clone());
                let better = match &best {
                    None => true,
                    Some((bn, bk, _)) => nu < *bn || (nu == *bn && key < *bk),
                };
                if better {
                    best = Some((nu, key, q));
                }
            }
        }
        let (_, _, q) = best.expect("at least one candidate");
        let r = self.sub(&q.mul(b));
        debug_assert!(r.euclidean_norm()? < b.euclidean_norm()?);
        Ok((q, r))
    }

    fn poly_divmod(&self, b: &RingValue) -> Result<(RingValue, RingValue)> {
        let base = match self {
            RingValue::Poly { base, .. } => base.clone(),
            _ => unreachable!(),
        };
        let db = b.poly_degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = b.leading_coeff().expect("nonzero divisor").inverse()?;
        let mut rem = self.clone();
        let my_deg = match rem.poly_degree() {
            Some(d) => d,
            None => return Ok((Self::zero(&self.ring()), rem)),
        };
        if my_deg < db {
            return Ok((Self::zero(&self.ring()), rem));
        }
        let zero = Self::zero(&base);
        let mut q = vec![zero; my_deg - db + 1];
        while let Some(dr) = rem.poly_degree() {
            if dr < db {
                break;
            }
            let factor = rem.leading_coeff().unwrap().mul(&lead_inv);
            let k = dr - db;
            // rem -= factor * X^k * b
            let shifted: Vec<RingValue> = std::iter::repeat_n(Self::zero(&base), k)
                .chain(
                    b.poly_coeffs()
                        .unwrap()
                        .iter()
                        .map(|c| c.mul(&factor)),
                )
                .collect();
            let sub = Self::poly(base.clone(), shifted);
            rem = rem.sub(&sub);
            q[k] = factor;
        }
        Ok((Self::poly(base, q), rem))
    }

    /// Exact division: a / b when b divides a, `NotADivisor` otherwise.
    pub fn exact_div(&self, b: &RingValue) -> Result<RingValue> {
        let (q, r) = self.euclidean_divide(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor)
        }
    }
}

impl std::fmt::Display for RingValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", text::format_value(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(coeffs: &[i64]) -> RingValue {
        RingValue::poly_from_ints(&RingId::Rationals, coeffs)
    }

    #[test]
    fn euclidean_norms() {
        assert_eq!(RingValue::integer(-7).euclidean_norm().unwrap(), BigInt::from(7));
        assert_eq!(q_poly(&[1, 0, 1]).euclidean_norm().unwrap(), BigInt::from(4));
        assert_eq!(RingValue::sqrt3(7, 2).euclidean_norm().unwrap(), BigInt::from(37));
        assert_eq!(RingValue::gaussian(0, 0).euclidean_norm().unwrap(), BigInt::zero());
        assert_eq!(RingValue::residue(7, 3).euclidean_norm().unwrap(), BigInt::one());
        assert!(RingValue::matrix2(1, 0, 0, 1).euclidean_norm().is_err());
    }

    #[test]
    fn integer_division_keeps_remainder_nonnegative() {
        let (q, r) = RingValue::integer(13)
            .euclidean_divide(&RingValue::integer(5))
            .unwrap();
        assert_eq!((q, r), (RingValue::integer(2), RingValue::integer(3)));
    }

    #[test]
    fn eisenstein_division_matches_worked_example() {
        // (7 - 3j) / 2 chooses 3 - 2j, remainder 1 + j.
        let a = RingValue::eisenstein(7, -3);
        let b = RingValue::eisenstein(2, 0);
        let (q, r) = a.euclidean_divide(&b).unwrap();
        assert_eq!(q, RingValue::eisenstein(3, -2));
        assert_eq!(r, RingValue::eisenstein(1, 1));
    }

    #[test]
    fn sqrt3_division_matches_worked_example() {
        // (7 + 2s) / 2 chooses 3 + s, remainder 1.
        let a = RingValue::sqrt3(7, 2);
        let b = RingValue::sqrt3(2, 0);
        let (q, r) = a.euclidean_divide(&b).unwrap();
        assert_eq!(q, RingValue::sqrt3(3, 1));
        assert_eq!(r, RingValue::sqrt3(1, 0));
    }

    #[test]
    fn gaussian_division_rounds_to_nearest() {
        // (54 + 10i) / 7 -> 8 + i with remainder -2 + 3i.
        let a = RingValue::gaussian(54, 10);
        let b = RingValue::gaussian(7, 0);
        let (q, r) = a.euclidean_divide(&b).unwrap();
        assert_eq!(q, RingValue::gaussian(8, 1));
        assert_eq!(r, RingValue::gaussian(-2, 3));
        // (-2 + 3i) / 2: the -1 coordinate is exact, 3/2 rounds toward zero.
        let (q2, r2) = r.euclidean_divide(&RingValue::gaussian(2, 0)).unwrap();
        assert_eq!(q2, RingValue::gaussian(-1, 1));
        assert_eq!(r2, RingValue::gaussian(0, 1));
    }

    #[test]
    fn polynomial_long_division() {
        // 2X^3 + X = (2X^2 - X + 1)(X + 1/2) + (X/2 - 1/2)
        let a = q_poly(&[0, 1, 0, 2]);
        let b = q_poly(&[1, -1, 2]);
        let (q, r) = a.euclidean_divide(&b).unwrap();
        let half = RingValue::rational(1, 2);
        let one = RingValue::rational(1, 1);
        assert_eq!(
            q,
            RingValue::poly(RingId::Rationals, vec![half.clone(), one])
        );
        assert_eq!(
            r,
            RingValue::poly(RingId::Rationals, vec![half.neg(), half])
        );
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(
            RingValue::gaussian(54, 10).conjugate(),
            RingValue::gaussian(54, -10)
        );
        assert_eq!(
            RingValue::sqrt3(4, 3).conjugate(),
            RingValue::sqrt3(4, -3)
        );
        assert_eq!(
            RingValue::eisenstein(0, 1).conjugate(),
            RingValue::eisenstein(-1, -1)
        );
        assert_eq!(
            RingValue::matrix2(1, 2, 3, 4).conjugate(),
            RingValue::matrix2(4, -2, -3, 1)
        );
    }

    #[test]
    fn star_norms() {
        assert_eq!(
            RingValue::eisenstein(3, -2).star_norm_int().unwrap(),
            BigInt::from(19)
        );
        assert_eq!(
            RingValue::sqrt3(1, 1).star_norm_int().unwrap(),
            BigInt::from(-2)
        );
        // a * conj(a) embeds the norm back into the ring.
        assert_eq!(
            RingValue::gaussian(54, 10).star_norm(),
            RingValue::gaussian(3016, 0)
        );
        // For matrices a * adj(a) is det * identity.
        assert_eq!(
            RingValue::matrix2(1, 2, 3, 4).star_norm(),
            RingValue::matrix2(-2, 0, 0, -2)
        );
    }

    #[test]
    fn units_and_inverses() {
        assert!(RingValue::residue(7, 3).is_unit());
        assert!(RingValue::gaussian(0, -1).is_unit());
        assert!(RingValue::sqrt3(2, 1).is_unit()); // norm 1
        assert!(RingValue::sqrt3(1, 0).is_unit());
        assert!(!RingValue::sqrt3(1, 1).is_unit()); // norm -2
        assert!(RingValue::eisenstein(0, 1).is_unit());
        assert!(!RingValue::integer(2).is_unit());

        for u in [
            RingValue::integer(-1),
            RingValue::residue(7, 3),
            RingValue::rational(-2, 3),
            RingValue::gaussian(0, 1),
            RingValue::eisenstein(-1, -1),
            RingValue::sqrt3(2, 1),
            RingValue::matrix2(2, 1, 1, 1),
            RingValue::matrix2(0, 1, 1, 0), // det -1
        ] {
            let inv = u.inverse().unwrap();
            assert!(u.mul(&inv).is_one(), "unit {u:?}");
            assert!(inv.mul(&u).is_one(), "unit {u:?}");
        }
        assert_eq!(RingValue::integer(2).inverse(), Err(Error::NotAUnit));
    }

    #[test]
    #[should_panic(expected = "different rings")]
    fn mixed_ring_arithmetic_panics() {
        let _ = RingValue::integer(1).add(&RingValue::rational(1, 1));
    }

    #[test]
    fn residue_wraps_negative_inputs() {
        assert_eq!(RingValue::residue(7, -3), RingValue::residue(7, 4));
        assert_eq!(
            RingValue::embed_int(&RingId::PrimeField(5), -7),
            RingValue::residue(5, 3)
        );
    }

    #[test]
    fn poly_trims_leading_zeros() {
        let p = RingValue::poly(
            RingId::Rationals,
            vec![
                RingValue::rational(1, 1),
                RingValue::rational(0, 1),
                RingValue::rational(0, 1),
            ],
        );
        assert_eq!(p.poly_degree(), Some(0));
        let z = RingValue::poly(RingId::Rationals, vec![RingValue::rational(0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.poly_degree(), None);
    }

    #[test]
    fn ring_id_validation() {
        assert!(RingId::prime_field(7).is_ok());
        assert!(RingId::prime_field(6).is_err());
        assert!(RingId::poly_over(RingId::Rationals).is_ok());
        assert!(RingId::poly_over(RingId::Integers).is_err());
        assert!(RingId::PrimeField(9).validate().is_err());
    }

    #[test]
    fn exact_division() {
        let six = RingValue::integer(6);
        let two = RingValue::integer(2);
        assert_eq!(six.exact_div(&two).unwrap(), RingValue::integer(3));
        assert_eq!(
            RingValue::integer(7).exact_div(&two),
            Err(Error::NotADivisor)
        );
        // (2 + i) * (1 + i) = 1 + 3i, so division is exact.
        let prod = RingValue::gaussian(1, 3);
        assert_eq!(
            prod.exact_div(&RingValue::gaussian(1, 1)).unwrap(),
            RingValue::gaussian(2, 1)
        );
    }
}
