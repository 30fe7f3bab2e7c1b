//! The Euclidean algorithm as an instrumented engine: runs keep their
//! full quotient and remainder trails so callers can read answers off
//! intermediate remainders, stop early, and reconstruct the inputs
//! exactly from whatever prefix of the run they kept.

use crate::continuants::{continuant_slice, QuotientSeq};
use crate::error::{Error, Result};
use crate::ring::{RingId, RingValue};

/// A (possibly early-stopped) run of the Euclidean algorithm.
///
/// `remainders` starts with both inputs: r_0 = t1, r_1 = t2, and each
/// division step r_{i-1} = q_i * r_i + r_{i+1} appends one quotient and
/// one remainder. A run to completion ends with the remainder 0, and
/// `gcd` is the last nonzero remainder; for an early-stopped run `gcd`
/// is simply the last nonzero remainder seen so far, which is only a
/// gcd when the run is complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    ring: RingId,
    quotients: Vec<RingValue>,
    remainders: Vec<RingValue>,
    gcd: RingValue,
}

impl EuclidTrace {
    pub fn ring(&self) -> &RingId {
        &self.ring
    }

    pub fn quotients(&self) -> &[RingValue] {
        &self.quotients
    }

    pub fn remainders(&self) -> &[RingValue] {
        &self.remainders
    }

    pub fn gcd(&self) -> &RingValue {
        &self.gcd
    }

    /// Whether the run reached a zero remainder.
    pub fn is_complete(&self) -> bool {
        self.remainders.last().is_some_and(RingValue::is_zero)
    }

    /// The quotients as a sequence whose trailing factor is the gcd, so
    /// that the first input is `[q_1..q_n] * h`.
    pub fn to_quotient_seq(&self) -> QuotientSeq {
        QuotientSeq::with_unit(self.ring.clone(), self.quotients.clone(), self.gcd.clone())
            .expect("trace values share the ring")
    }
}

/// Runs the Euclidean algorithm to completion: divide, record, repeat
/// while the newest remainder is nonzero.
pub fn euclidean_algorithm(t1: &RingValue, t2: &RingValue) -> Result<EuclidTrace> {
    euclid_until(t1, t2, |_| false)
}

/// Runs the Euclidean algorithm, halting early the first time `stop`
/// holds for the newest remainder (t2 counts: a run may stop before any
/// division happens). A zero remainder ends the run regardless.
pub fn euclid_until(
    t1: &RingValue,
    t2: &RingValue,
    stop: impl Fn(&RingValue) -> bool,
) -> Result<EuclidTrace> {
    assert_eq!(t1.ring(), t2.ring(), "inputs from different rings");
    if t1.is_zero() && t2.is_zero() {
        return Err(Error::BothZero);
    }
    let ring = t1.ring();
    let mut quotients = Vec::new();
    let mut remainders = vec![t1.clone(), t2.clone()];
    let mut r0 = t1.clone();
    let mut r1 = t2.clone();
    while !r1.is_zero() && !stop(&r1) {
        let (q, r2) = r0.euclidean_divide(&r1)?;
        quotients.push(q);
        remainders.push(r2.clone());
        r0 = r1;
        r1 = r2;
    }
    let gcd = remainders
        .iter()
        .rev()
        .find(|r| !r.is_zero())
        .expect("not all remainders are zero")
        .clone();
    Ok(EuclidTrace {
        ring,
        quotients,
        remainders,
        gcd,
    })
}

/// Recovers the two inputs of a run from its trail alone, complete or
/// not: with k quotients and final remainders r_k, r_{k+1},
///
/// ```text
/// t1 = [q_1..q_k] r_k + [q_1..q_{k-1}] r_{k+1}
/// t2 = [q_2..q_k] r_k + [q_2..q_{k-1}] r_{k+1}
/// ```
///
/// For a complete run this is the classical `t1 = [q_1..q_k] h` with h
/// the gcd, since the trailing remainder is zero.
pub fn reconstruct(trace: &EuclidTrace) -> (RingValue, RingValue) {
    let k = trace.quotients.len();
    if k == 0 {
        return (trace.remainders[0].clone(), trace.remainders[1].clone());
    }
    let r_last = &trace.remainders[k];
    let r_after = &trace.remainders[k + 1];
    let q = &trace.quotients;
    let head_full = continuant_slice(&trace.ring, &q[..k]);
    let head_short = continuant_slice(&trace.ring, &q[..k - 1]);
    let t1 = head_full.mul(r_last).add(&head_short.mul(r_after));
    let tail_full = continuant_slice(&trace.ring, &q[1..k]);
    let tail_short = if k >= 2 {
        continuant_slice(&trace.ring, &q[1..k - 1])
    } else {
        // the two-shorter tail continuant degenerates to 0 when only one
        // quotient exists
        RingValue::zero(&trace.ring)
    };
    let t2 = tail_full.mul(r_last).add(&tail_short.mul(r_after));
    (t1, t2)
}

/// The two standard early-stopping rules.
pub mod stops {
    use num_bigint::BigInt;

    use crate::ring::RingValue;

    /// Stops an integer run at the first remainder whose square is below
    /// `m`. Panics when applied to values outside the integers.
    pub fn square_below(m: &RingValue) -> impl Fn(&RingValue) -> bool {
        let bound: BigInt = m.as_int().expect("integer bound").clone();
        move |r| {
            let r = r.as_int().expect("integer remainder");
            r * r < bound
        }
    }

    /// Stops a polynomial run at the first remainder r with
    /// 2 deg(r) <= deg(m); the zero polynomial always stops. Panics when
    /// `m` is zero or the values are not polynomials.
    pub fn half_degree(m: &RingValue) -> impl Fn(&RingValue) -> bool {
        let deg_m = m.poly_degree().expect("nonzero polynomial bound");
        move |r| match r.poly_degree() {
            None => true,
            Some(d) => 2 * d <= deg_m,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> RingValue {
        RingValue::integer(n)
    }

    fn ints(ns: &[i64]) -> Vec<RingValue> {
        ns.iter().map(|&n| int(n)).collect()
    }

    fn q_poly(coeffs_num_den: &[(i64, i64)]) -> RingValue {
        let cs = coeffs_num_den
            .iter()
            .map(|&(n, d)| RingValue::rational(n, d))
            .collect();
        RingValue::poly(RingId::Rationals, cs)
    }

    #[test]
    fn full_run_over_the_integers() {
        let trace = euclidean_algorithm(&int(13), &int(5)).unwrap();
        assert_eq!(trace.quotients(), ints(&[2, 1, 1, 2]).as_slice());
        assert_eq!(trace.remainders(), ints(&[13, 5, 3, 2, 1, 0]).as_slice());
        assert_eq!(trace.gcd(), &int(1));
        assert!(trace.is_complete());
        assert_eq!(reconstruct(&trace), (int(13), int(5)));
    }

    #[test]
    fn zero_second_input_skips_the_loop() {
        let trace = euclidean_algorithm(&int(9), &int(0)).unwrap();
        assert!(trace.quotients().is_empty());
        assert_eq!(trace.gcd(), &int(9));
        assert_eq!(reconstruct(&trace), (int(9), int(0)));
        assert_eq!(
            euclidean_algorithm(&int(0), &int(0)),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn polynomial_run_with_constant_gcd() {
        // t1 = 2X^3 + X, t2 = 2X^2 - X + 1
        let t1 = q_poly(&[(0, 1), (1, 1), (0, 1), (2, 1)]);
        let t2 = q_poly(&[(1, 1), (-1, 1), (2, 1)]);
        let trace = euclidean_algorithm(&t1, &t2).unwrap();
        assert_eq!(trace.quotients()[0], q_poly(&[(1, 2), (1, 1)])); // X + 1/2
        assert_eq!(trace.remainders()[2], q_poly(&[(-1, 2), (1, 2)])); // X/2 - 1/2
        assert_eq!(trace.gcd(), &q_poly(&[(2, 1)]));
        assert_eq!(
            trace.quotients()[1..],
            [q_poly(&[(2, 1), (4, 1)]), q_poly(&[(-1, 4), (1, 4)])]
        );
        assert_eq!(reconstruct(&trace), (t1.clone(), t2.clone()));
        // the gcd divides both inputs
        assert!(t1.exact_div(trace.gcd()).is_ok());
        assert!(t2.exact_div(trace.gcd()).is_ok());
    }

    #[test]
    fn early_stop_below_the_square_root() {
        let m = int(13);
        let trace = euclid_until(&m, &int(5), stops::square_below(&m)).unwrap();
        assert_eq!(trace.quotients(), ints(&[2]).as_slice());
        assert_eq!(trace.remainders(), ints(&[13, 5, 3]).as_slice());
        assert!(!trace.is_complete());
        assert_eq!(reconstruct(&trace), (int(13), int(5)));
    }

    #[test]
    fn early_stop_can_fire_before_any_division() {
        let m = int(5);
        let trace = euclid_until(&m, &int(2), stops::square_below(&m)).unwrap();
        assert!(trace.quotients().is_empty());
        assert_eq!(trace.remainders(), ints(&[5, 2]).as_slice());
        assert_eq!(reconstruct(&trace), (int(5), int(2)));
    }

    #[test]
    fn never_stopping_matches_the_full_run() {
        let full = euclidean_algorithm(&int(240), &int(46)).unwrap();
        let partial = euclid_until(&int(240), &int(46), |_| false).unwrap();
        assert_eq!(full, partial);
    }

    #[test]
    fn half_degree_stop_fires_at_the_first_eligible_remainder() {
        // m = 2X^4 - 2X^3 + 3X^2 - 2X + 1, z = 2X^3 + X; deg m = 4, so the
        // rule fires at the first remainder of degree <= 2.
        let m = q_poly(&[(1, 1), (-2, 1), (3, 1), (-2, 1), (2, 1)]);
        let z = q_poly(&[(0, 1), (1, 1), (0, 1), (2, 1)]);
        let trace = euclid_until(&m, &z, stops::half_degree(&m)).unwrap();
        assert_eq!(trace.remainders().len(), 3);
        assert_eq!(trace.remainders()[2], q_poly(&[(1, 1), (-1, 1), (2, 1)]));
        assert_eq!(reconstruct(&trace), (m.clone(), z.clone()));

        // run to completion: four quotients, constant gcd 2
        let full = euclidean_algorithm(&m, &z).unwrap();
        assert_eq!(
            full.quotients(),
            [
                q_poly(&[(-1, 1), (1, 1)]),
                q_poly(&[(1, 2), (1, 1)]),
                q_poly(&[(2, 1), (4, 1)]),
                q_poly(&[(-1, 4), (1, 4)]),
            ]
        );
        assert_eq!(full.gcd(), &q_poly(&[(2, 1)]));
        assert_eq!(reconstruct(&full), (m, z));
    }

    #[test]
    fn gaussian_run_round_trips() {
        let a = RingValue::gaussian(54, 10);
        let b = RingValue::gaussian(7, 0);
        let trace = euclidean_algorithm(&a, &b).unwrap();
        assert_eq!(reconstruct(&trace), (a, b));
        let seq = trace.to_quotient_seq();
        assert_eq!(seq.unit(), trace.gcd());
    }
}
