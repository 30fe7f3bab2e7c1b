//! Plain-text element syntax, one grammar per ring.
//!
//! Formatting is canonical and compact (no interior whitespace); parsing
//! accepts the formatted syntax back, ignores whitespace, and reports
//! failures with a byte position into the whitespace-stripped input.
//!
//! - integers: `-42`
//! - prime fields: a reduced residue, `5`
//! - rationals: `3`, `-1/2`
//! - polynomials: terms high degree first, `X^2-1/2*X+1/2`, `6*X+3`, `0`
//! - quadratic rings: `54+10i`, `7-3w`, `2s`, `-1`, using `i` for the
//!   Gaussian unit, `w` for the primitive cube root of unity, `s` for
//!   sqrt(3)
//! - 2x2 matrices: `[[1,2],[3,4]]`

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{RingId, RingValue};
use crate::error::{Error, Result};

// ---------------------------------------------------------------------
// formatting
// ---------------------------------------------------------------------

pub fn format_value(v: &RingValue) -> String {
    match v {
        RingValue::Int(n) => n.to_string(),
        RingValue::Residue { value, .. } => value.to_string(),
        RingValue::Rational(r) => r.to_string(),
        RingValue::Poly { coeffs, .. } => format_poly(coeffs),
        RingValue::Gaussian(a, b) => format_quadratic(a, b, 'i'),
        RingValue::Eisenstein(a, b) => format_quadratic(a, b, 'w'),
        RingValue::Sqrt3(a, b) => format_quadratic(a, b, 's'),
        RingValue::Matrix2(e) => format!("[[{},{}],[{},{}]]", e[0], e[1], e[2], e[3]),
    }
}

/// Splits a scalar (field element) into a sign flag and the rendering of
/// its magnitude, so polynomial terms can move the sign into the
/// `+`/`-` separator. Prime-field residues are never negative.
fn scalar_sign_magnitude(c: &RingValue) -> (bool, String) {
    match c {
        RingValue::Residue { value, .. } => (false, value.to_string()),
        RingValue::Rational(r) => {
            if r.is_negative() {
                (true, (-r).to_string())
            } else {
                (false, r.to_string())
            }
        }
        _ => unreachable!("polynomial coefficients are field scalars"),
    }
}

fn format_poly(coeffs: &[RingValue]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = scalar_sign_magnitude(c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let body = match k {
            0 => mag,
            _ => {
                let xpart = if k == 1 { "X".to_string() } else { format!("X^{k}") };
                if mag == "1" {
                    xpart
                } else {
                    format!("{mag}*{xpart}")
                }
            }
        };
        out.push_str(&body);
    }
    out
}

fn format_quadratic(a: &BigInt, b: &BigInt, letter: char) -> String {
    if a.is_zero() && b.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    if !a.is_zero() {
        out.push_str(&a.to_string());
    }
    if !b.is_zero() {
        if out.is_empty() {
            if b.is_negative() {
                out.push('-');
            }
        } else {
            out.push(if b.is_negative() { '-' } else { '+' });
        }
        let mag = b.abs();
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push(letter);
    }
    out
}

// ---------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------

/// Parses one element of `ring` from text. Whitespace is ignored;
/// `ParseError` positions index into the input with whitespace removed.
pub fn parse_value(ring: &RingId, input: &str) -> Result<RingValue> {
    ring.validate()?;
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err(0, "empty input"));
    }
    match ring {
        RingId::Integers => Ok(RingValue::Int(parse_bigint(&s, 0)?)),
        RingId::PrimeField(_) => {
            let n = parse_bigint(&s, 0)?;
            Ok(RingValue::embed_bigint(ring, &n))
        }
        RingId::Rationals => parse_rational(&s, 0),
        RingId::PolyOverField(base) => parse_poly(base, &s),
        RingId::GaussianIntegers => parse_quadratic(&s, 'i', RingValue::gaussian_big),
        RingId::EisensteinIntegers => parse_quadratic(&s, 'w', RingValue::eisenstein_big),
        RingId::ZSqrt3 => parse_quadratic(&s, 's', RingValue::sqrt3_big),
        RingId::IntMatrix2 => parse_matrix(&s),
    }
}

fn err(position: usize, message: &str) -> Error {
    Error::ParseError {
        position,
        message: message.to_string(),
    }
}

fn parse_bigint(s: &str, pos: usize) -> Result<BigInt> {
    if s.is_empty() {
        return Err(err(pos, "expected an integer"));
    }
    s.parse::<BigInt>()
        .map_err(|_| err(pos, "expected an integer"))
}

fn parse_rational(s: &str, pos: usize) -> Result<RingValue> {
    let (numer, denom) = match s.split_once('/') {
        None => (parse_bigint(s, pos)?, BigInt::one()),
        Some((n, d)) => {
            let dn = parse_bigint(d, pos + n.len() + 1)?;
            if dn.is_zero() {
                return Err(err(pos + n.len() + 1, "zero denominator"));
            }
            (parse_bigint(n, pos)?, dn)
        }
    };
    Ok(RingValue::Rational(BigRational::new(numer, denom)))
}

/// Splits `s` into signed terms: every `+`/`-` after position 0 starts a
/// new term (no term in any grammar carries an interior sign).
fn split_terms(s: &str) -> Result<Vec<(bool, usize, &str)>> {
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0usize;
    for i in 1..bytes.len() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            terms.push((start, &s[start..i]));
            start = i;
        }
    }
    terms.push((start, &s[start..]));
    terms
        .into_iter()
        .map(|(pos, t)| {
            let (neg, body, bpos) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..], pos + 1),
                Some(b'+') => (false, &t[1..], pos + 1),
                _ => (false, t, pos),
            };
            if body.is_empty() {
                Err(err(bpos, "empty term"))
            } else {
                Ok((neg, bpos, body))
            }
        })
        .collect()
}

fn parse_quadratic(
    s: &str,
    letter: char,
    build: fn(BigInt, BigInt) -> RingValue,
) -> Result<RingValue> {
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    for (neg, pos, body) in split_terms(s)? {
        let (coeff, is_unit_term) = if let Some(head) = body.strip_suffix(letter) {
            let head = head.strip_suffix('*').unwrap_or(head);
            if head.is_empty() {
                (BigInt::one(), true)
            } else {
                (parse_bigint(head, pos)?, true)
            }
        } else {
            (parse_bigint(body, pos)?, false)
        };
        let signed = if neg { -coeff } else { coeff };
        if is_unit_term {
            b += signed;
        } else {
            a += signed;
        }
    }
    Ok(build(a, b))
}

fn parse_scalar(base: &RingId, s: &str, pos: usize) -> Result<RingValue> {
    match base {
        RingId::Rationals => parse_rational(s, pos),
        RingId::PrimeField(_) => {
            let n = parse_bigint(s, pos)?;
            Ok(RingValue::embed_bigint(base, &n))
        }
        _ => Err(Error::UnsupportedRing(base.to_string())),
    }
}

fn parse_poly(base: &RingId, s: &str) -> Result<RingValue> {
    let normalized = s.replace('x', "X");
    let mut coeffs: Vec<RingValue> = Vec::new();
    let zero = RingValue::zero(base);
    for (neg, pos, body) in split_terms(&normalized)? {
        let (coeff, exp) = match body.find('X') {
            None => (parse_scalar(base, body, pos)?, 0usize),
            Some(xi) => {
                let head = &body[..xi];
                let tail = &body[xi + 1..];
                let coeff = if head.is_empty() {
                    RingValue::one(base)
                } else {
                    let head = head.strip_suffix('*').unwrap_or(head);
                    parse_scalar(base, head, pos)?
                };
                let exp = if tail.is_empty() {
                    1usize
                } else if let Some(e) = tail.strip_prefix('^') {
                    e.parse::<usize>()
                        .map_err(|_| err(pos + xi + 2, "expected an exponent"))?
                } else {
                    return Err(err(pos + xi + 1, "unexpected text after X"));
                };
                (coeff, exp)
            }
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, zero.clone());
        }
        let signed = if neg { coeff.neg() } else { coeff };
        coeffs[exp] = coeffs[exp].add(&signed);
    }
    Ok(RingValue::poly(base.clone(), coeffs))
}

fn parse_matrix(s: &str) -> Result<RingValue> {
    let inner = s
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| err(0, "expected [[a,b],[c,d]]"))?;
    let rows: Vec<&str> = inner.split("],[").collect();
    if rows.len() != 2 {
        return Err(err(0, "expected two rows"));
    }
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        if cols.len() != 2 {
            return Err(err(0, "expected two entries per row"));
        }
        for c in cols {
            entries.push(parse_bigint(c, 0)?);
        }
    }
    let e: [BigInt; 4] = entries.try_into().expect("exactly four entries");
    Ok(RingValue::matrix2_big(e))
}
