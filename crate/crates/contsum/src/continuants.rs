//! Continuants of finite sequences over any of the supported rings.
//!
//! The continuant of a sequence q_1, ..., q_n is defined by the
//! recurrence [ ] = 1, [q_1] = q_1, and
//! [q_1..q_n] = [q_1..q_{n-1}] q_n + [q_1..q_{n-2}], with products taken
//! in the written order so the definition survives noncommutative rings.
//!
//! Besides the recurrence this module evaluates continuants two more
//! ways (an adjacent-pair deletion rule and a tridiagonal determinant),
//! and provides the rescaling, Bezout, and quasi-palindrome identities
//! that the two-squares and descent algorithms rely on.

use crate::error::{Error, Result};
use crate::ring::{RingId, RingValue};

/// A finite sequence of ring elements together with a trailing factor.
///
/// The items are what continuants are taken of; the trailing factor `h`
/// tags along so a sequence can carry the gcd produced by a Euclidean
/// run (inputs are recovered as `[q_1..q_n] * h` and `[q_2..q_n] * h`).
/// It defaults to 1 and is ignored by plain continuant evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSeq {
    ring: RingId,
    items: Vec<RingValue>,
    unit: RingValue,
}

impl QuotientSeq {
    /// A sequence with trailing factor 1. Every item must belong to
    /// `ring`.
    pub fn new(ring: RingId, items: Vec<RingValue>) -> Result<Self> {
        let unit = RingValue::one(&ring);
        Self::with_unit(ring, items, unit)
    }

    /// A sequence with an explicit trailing factor.
    pub fn with_unit(ring: RingId, items: Vec<RingValue>, unit: RingValue) -> Result<Self> {
        ring.validate()?;
        for item in &items {
            if item.ring() != ring {
                return Err(Error::PreconditionFailed(format!(
                    "sequence item {item} does not belong to {ring}"
                )));
            }
        }
        if unit.ring() != ring {
            return Err(Error::PreconditionFailed(format!(
                "trailing factor {unit} does not belong to {ring}"
            )));
        }
        Ok(QuotientSeq { ring, items, unit })
    }

    /// Convenience constructor from small integers, embedded into `ring`.
    pub fn from_ints(ring: &RingId, items: &[i64]) -> Self {
        let vals = items.iter().map(|&n| RingValue::embed_int(ring, n)).collect();
        Self::new(ring.clone(), vals).expect("embedded items share the ring")
    }

    pub fn ring(&self) -> &RingId {
        &self.ring
    }

    pub fn items(&self) -> &[RingValue] {
        &self.items
    }

    pub fn unit(&self) -> &RingValue {
        &self.unit
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Evaluates a continuant directly from a slice; the workhorse behind
/// [`continuant`] and the internal algorithms.
pub(crate) fn continuant_slice(ring: &RingId, items: &[RingValue]) -> RingValue {
    let mut prev = RingValue::zero(ring);
    let mut cur = RingValue::one(ring);
    for q in items {
        let next = cur.mul(q).add(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The continuant `[q_1, ..., q_n]` by the defining recurrence. The
/// empty sequence has continuant 1.
pub fn continuant(q: &QuotientSeq) -> RingValue {
    continuant_slice(&q.ring, &q.items)
}

const EULER_LENGTH_LIMIT: usize = 20;

/// Evaluates the continuant by the adjacent-pair deletion rule: sum, over
/// every way of deleting disjoint adjacent pairs from the sequence, the
/// ordered product of what survives (the empty product is 1).
///
/// This enumerates all deletions explicitly, so it serves as an
/// independent oracle for [`continuant`]; sequences longer than 20 are
/// rejected.
pub fn continuant_euler(q: &QuotientSeq) -> Result<RingValue> {
    let n = q.items.len();
    if n > EULER_LENGTH_LIMIT {
        return Err(Error::LengthLimitExceeded {
            length: n,
            limit: EULER_LENGTH_LIMIT,
        });
    }
    let pair_slots = n.saturating_sub(1) as u32;
    let mut total = RingValue::zero(&q.ring);
    for mask in 0u32..(1u32 << pair_slots) {
        // A set bit at position i deletes the pair (q_{i+1}, q_{i+2});
        // adjacent bits would delete overlapping pairs.
        if mask & (mask << 1) != 0 {
            continue;
        }
        let mut covered = 0u32;
        for i in 0..pair_slots {
            if mask & (1 << i) != 0 {
                covered |= 0b11 << i;
            }
        }
        let mut term = RingValue::one(&q.ring);
        for (j, item) in q.items.iter().enumerate() {
            if covered & (1 << j) == 0 {
                term = term.mul(item);
            }
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// Evaluates the continuant as the determinant of the n-by-n tridiagonal
/// matrix with the sequence on the diagonal, +1 above it and -1 below
/// it. The determinant is computed by fraction-free elimination, a
/// genuinely different computation from the recurrence, which makes this
/// a second independent oracle. Requires a commutative ring.
pub fn continuant_matrix(q: &QuotientSeq) -> Result<RingValue> {
    if !q.ring.is_commutative() {
        return Err(Error::NoncommutativeRing);
    }
    let n = q.items.len();
    let zero = RingValue::zero(&q.ring);
    let one = RingValue::one(&q.ring);
    let mut m: Vec<Vec<RingValue>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        q.items[i].clone()
                    } else if j == i + 1 {
                        one.clone()
                    } else if i == j + 1 {
                        one.neg()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(bareiss_determinant(&q.ring, &mut m))
}

/// Fraction-free (Bareiss) determinant over an integral domain; every
/// interior division is exact.
fn bareiss_determinant(ring: &RingId, m: &mut [Vec<RingValue>]) -> RingValue {
    let n = m.len();
    if n == 0 {
        return RingValue::one(ring);
    }
    let mut negated = false;
    let mut prev_pivot = RingValue::one(ring);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&row| !m[row][k].is_zero()) else {
                return RingValue::zero(ring);
            };
            m.swap(k, swap);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev_pivot)
                    .expect("fraction-free elimination divides exactly");
            }
            m[i][k] = RingValue::zero(ring);
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negated {
        det.neg()
    } else {
        det
    }
}

/// Rescales a sequence by a unit `tau` in the zigzag pattern
/// (tau^{-1} q_1, tau q_2, tau^{-1} q_3, ...). The continuant of the
/// result equals the original for even length and tau^{-1} times it for
/// odd length; this is asserted.
///
/// `tau` must commute with every item (automatic in commutative rings;
/// asserted for matrices). The trailing factor is kept unchanged.
pub fn zigzag_rescale(q: &QuotientSeq, tau: &RingValue) -> Result<QuotientSeq> {
    if !tau.is_unit() {
        return Err(Error::NotAUnit);
    }
    let tau_inv = tau.inverse()?;
    for item in &q.items {
        assert_eq!(
            tau.mul(item),
            item.mul(tau),
            "zigzag rescaling needs a factor that commutes with every item"
        );
    }
    let items: Vec<RingValue> = q
        .items
        .iter()
        .enumerate()
        .map(|(k, item)| {
            // 1-indexed position k+1: odd positions get tau^{-1}.
            if k % 2 == 0 {
                tau_inv.mul(item)
            } else {
                tau.mul(item)
            }
        })
        .collect();
    let rescaled = QuotientSeq::with_unit(q.ring.clone(), items, q.unit.clone())?;
    let expected = if q.items.len() % 2 == 0 {
        continuant(q)
    } else {
        tau_inv.mul(&continuant(q))
    };
    assert_eq!(
        continuant(&rescaled),
        expected,
        "zigzag rescaling must preserve the continuant up to the unit"
    );
    Ok(rescaled)
}

/// Left Bezout coefficients for the head and tail continuants of a
/// nonempty sequence: returns (a, b) with
/// `a * [q_1..q_n] + b * [q_2..q_n] = 1`, taking
/// a = [-q_{n-1}, ..., -q_1, 0] and b = [-q_{n-1}, ..., -q_1].
///
/// Panics on the empty sequence.
pub fn bezout_from_quotients(q: &QuotientSeq) -> (RingValue, RingValue) {
    assert!(!q.items.is_empty(), "Bezout coefficients need a nonempty sequence");
    let rev_neg: Vec<RingValue> = q.items[..q.items.len() - 1]
        .iter()
        .rev()
        .map(RingValue::neg)
        .collect();
    let b = continuant_slice(&q.ring, &rev_neg);
    let mut extended = rev_neg;
    extended.push(RingValue::zero(&q.ring));
    let a = continuant_slice(&q.ring, &extended);
    (a, b)
}

/// Checks the quasi-palindromic continuant identity.
///
/// A sequence is quasi-palindromic when q_i = conj(q_{n+1-i}) for all i.
/// For such sequences of length n >= 2 the identity
/// `[q_1..q_n][q_2..q_{n-1}] = [q_1..q_{n-1}][q_2..q_n] + (-1)^n`
/// holds in both multiplication orders, even noncommutatively, provided
/// every a * conj(a) is central (true in all supported rings). Both
/// orders are checked and the conjunction returned.
pub fn check_noncomm_lewis_carroll(q: &QuotientSeq) -> Result<bool> {
    let n = q.items.len();
    if n < 2 {
        return Err(Error::NotQuasiPalindromic);
    }
    for i in 0..n {
        if q.items[i] != q.items[n - 1 - i].conjugate() {
            return Err(Error::NotQuasiPalindromic);
        }
    }
    let full = continuant_slice(&q.ring, &q.items);
    let inner = continuant_slice(&q.ring, &q.items[1..n - 1]);
    let head = continuant_slice(&q.ring, &q.items[..n - 1]);
    let tail = continuant_slice(&q.ring, &q.items[1..]);
    let sign = RingValue::embed_int(&q.ring, if n % 2 == 0 { 1 } else { -1 });
    let first = full.mul(&inner) == head.mul(&tail).add(&sign);
    let second = inner.mul(&full) == tail.mul(&head).add(&sign);
    Ok(first && second)
}
