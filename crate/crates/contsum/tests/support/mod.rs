//! Shared random-input machinery and identity-suite runners used by the
//! integration suites.

#![allow(dead_code)]

use contsum::continuants::{
    bezout_from_quotients, check_noncomm_lewis_carroll, continuant, continuant_euler,
    continuant_matrix, zigzag_rescale, QuotientSeq,
};
use contsum::euclid::euclidean_algorithm;
use contsum::ring::{RingId, RingValue};
use contsum::two_squares::{multiplier_from_representation, poly_two_squares, poly_two_squares_gcd};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small(rng: &mut StdRng) -> i64 {
    rng.random_range(-9..=9)
}

pub fn cont(ring: &RingId, items: &[RingValue]) -> RingValue {
    let seq = QuotientSeq::new(ring.clone(), items.to_vec()).expect("consistent items");
    continuant(&seq)
}

pub fn seq(ring: &RingId, items: &[RingValue]) -> QuotientSeq {
    QuotientSeq::new(ring.clone(), items.to_vec()).expect("consistent items")
}

pub fn int_items(rng: &mut StdRng, len: usize) -> Vec<RingValue> {
    (0..len).map(|_| RingValue::integer(small(rng))).collect()
}

pub fn gaussian_item(rng: &mut StdRng) -> RingValue {
    RingValue::gaussian(rng.random_range(-4..=4), rng.random_range(-4..=4))
}

pub fn eisenstein_item(rng: &mut StdRng) -> RingValue {
    RingValue::eisenstein(rng.random_range(-4..=4), rng.random_range(-4..=4))
}

pub fn sqrt3_item(rng: &mut StdRng) -> RingValue {
    RingValue::sqrt3(rng.random_range(-4..=4), rng.random_range(-4..=4))
}

pub fn matrix_item(rng: &mut StdRng) -> RingValue {
    RingValue::matrix2(
        rng.random_range(-4..=4),
        rng.random_range(-4..=4),
        rng.random_range(-4..=4),
        rng.random_range(-4..=4),
    )
}

pub fn rational_item(rng: &mut StdRng) -> RingValue {
    RingValue::rational(rng.random_range(-6..=6), rng.random_range(1..=4))
}

pub fn residue_item(rng: &mut StdRng, p: u64) -> RingValue {
    RingValue::residue(p, rng.random_range(0..p as i64))
}

/// A random element of the given ring, small enough for exact tests.
pub fn value_in(rng: &mut StdRng, ring: &RingId) -> RingValue {
    match ring {
        RingId::Integers => RingValue::integer(small(rng)),
        RingId::PrimeField(p) => residue_item(rng, *p),
        RingId::Rationals => rational_item(rng),
        RingId::GaussianIntegers => gaussian_item(rng),
        RingId::EisensteinIntegers => eisenstein_item(rng),
        RingId::ZSqrt3 => sqrt3_item(rng),
        RingId::IntMatrix2 => matrix_item(rng),
        RingId::PolyOverField(base) => {
            let deg = rng.random_range(0..=3);
            let coeffs: Vec<RingValue> = (0..=deg).map(|_| value_in(rng, base)).collect();
            RingValue::poly(base.as_ref().clone(), coeffs)
        }
    }
}

pub fn nonzero_value_in(rng: &mut StdRng, ring: &RingId) -> RingValue {
    loop {
        let v = value_in(rng, ring);
        if !v.is_zero() {
            return v;
        }
    }
}

fn items_in(rng: &mut StdRng, ring: &RingId, len: usize) -> Vec<RingValue> {
    (0..len).map(|_| value_in(rng, ring)).collect()
}

/// Dodgson condensation on plain integer matrices, checked with a
/// test-local cofactor determinant: det(A) * det(interior) equals
/// det(A del first row+col) * det(A del last row+col) minus
/// det(A del first row, last col) * det(A del last row, first col).
pub fn run_condensation_suite(cases: usize) {
    fn det(m: &[Vec<i128>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0];
        }
        let mut total = 0i128;
        for (j, lead) in m[0].iter().enumerate() {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let term = lead * det(&minor);
            total += if j % 2 == 0 { term } else { -term };
        }
        total
    }
    fn delete(m: &[Vec<i128>], row: usize, col: usize) -> Vec<Vec<i128>> {
        m.iter()
            .enumerate()
            .filter(|(i, _)| *i != row)
            .map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect()
    }

    let mut rng = rng(0x1ead5);
    for case in 0..cases {
        let n = rng.random_range(2..=5usize);
        let m: Vec<Vec<i128>> = (0..n)
            .map(|_| (0..n).map(|_| rng.random_range(-9..=9)).collect())
            .collect();
        let interior: Vec<Vec<i128>> = m[1..n - 1]
            .iter()
            .map(|row| row[1..n - 1].to_vec())
            .collect();
        let lhs = det(&m) * det(&interior);
        let rhs = det(&delete(&m, 0, 0)) * det(&delete(&m, n - 1, n - 1))
            - det(&delete(&m, 0, n - 1)) * det(&delete(&m, n - 1, 0));
        assert_eq!(lhs, rhs, "case {case}: condensation on {m:?}");
    }
}

/// Builds a quasi-palindromic sequence (entry i conjugate to entry
/// n+1-i) from a random half, optionally with a self-conjugate center.
pub fn quasi_palindrome(rng: &mut StdRng, ring: &RingId, half_len: usize, odd: bool) -> Vec<RingValue> {
    let half: Vec<RingValue> = (0..half_len).map(|_| value_in(rng, ring)).collect();
    let mut items = half.clone();
    if odd {
        items.push(RingValue::embed_int(ring, small(rng)));
    }
    items.extend(half.iter().rev().map(RingValue::conjugate));
    items
}

/// The quasi-palindromic continuant identity on random sequences of
/// length 2 through 8 over the matrix ring and the Gaussian integers.
pub fn run_quasi_palindrome_suite(cases: usize) {
    let mut rng = rng(0x1ead52);
    for case in 0..cases {
        let ring = if case % 2 == 0 {
            RingId::IntMatrix2
        } else {
            RingId::GaussianIntegers
        };
        let odd = rng.random_range(0..2) == 1;
        let half_len = if odd {
            rng.random_range(1..=3usize)
        } else {
            rng.random_range(1..=4usize)
        };
        let items = quasi_palindrome(&mut rng, &ring, half_len, odd);
        assert!(
            (2..=8).contains(&items.len()),
            "case {case}: bad length {}",
            items.len()
        );
        let verdict = check_noncomm_lewis_carroll(&seq(&ring, &items)).expect("quasi-palindromic");
        assert!(verdict, "case {case}: identity failed over {ring} on {items:?}");
    }
}

/// The cutting identity at every split index, on integer and matrix
/// sequences: [q1..qn] = [q1..q_{i-1}][q_{i+2}..qn] + [q1..qi][q_{i+1}..qn].
pub fn run_cutting_suite(cases: usize) {
    let mut rng = rng(0xc07);
    for case in 0..cases {
        let (ring, len) = if case % 2 == 0 {
            (RingId::Integers, rng.random_range(2..=10usize))
        } else {
            (RingId::IntMatrix2, rng.random_range(2..=6usize))
        };
        let q = items_in(&mut rng, &ring, len);
        let whole = cont(&ring, &q);
        for i in 1..len {
            let lhs = cont(&ring, &q[..i - 1])
                .mul(&cont(&ring, &q[i + 1..]))
                .add(&cont(&ring, &q[..i]).mul(&cont(&ring, &q[i..])));
            assert_eq!(whole, lhs, "case {case}: split {i} of {q:?}");
        }
    }
}

/// Prepending negated terms and a zero collapses a continuant:
/// [-q_h,...,-q_1,0,q_1,...,q_n] equals [q_{h+2},...,q_n] (so 1 when
/// h = n-1, and 0 when h = n).
pub fn run_zero_insertion_suite(cases: usize) {
    let mut rng = rng(0x2e40);
    let ring = RingId::Integers;
    for case in 0..cases {
        let n = rng.random_range(1..=8usize);
        let q = int_items(&mut rng, n);
        for h in 0..=n {
            let mut items: Vec<RingValue> = q[..h].iter().rev().map(RingValue::neg).collect();
            items.push(RingValue::zero(&ring));
            items.extend_from_slice(&q);
            let got = cont(&ring, &items);
            let want = if h == n {
                RingValue::zero(&ring)
            } else {
                cont(&ring, &q[h + 1..])
            };
            assert_eq!(got, want, "case {case}: h = {h} of {q:?}");
        }
    }
}

/// Reversal invariance in commutative rings, plus the fixed matrix
/// counterexample showing it is not universal.
pub fn run_reversal_suite(cases: usize) {
    let mut rng = rng(0x4e5e);
    for case in 0..cases {
        let ring = match case % 3 {
            0 => RingId::Integers,
            1 => RingId::GaussianIntegers,
            _ => RingId::PrimeField(7),
        };
        let len = rng.random_range(0..=10usize);
        let q = items_in(&mut rng, &ring, len);
        let reversed: Vec<RingValue> = q.iter().rev().cloned().collect();
        assert_eq!(
            cont(&ring, &q),
            cont(&ring, &reversed),
            "case {case}: reversal over {ring} on {q:?}"
        );
    }

    let a = RingValue::matrix2(1, 1, 0, 1);
    let b = RingValue::matrix2(1, 0, 1, 1);
    let ring = RingId::IntMatrix2;
    assert_ne!(
        cont(&ring, &[a.clone(), b.clone()]),
        cont(&ring, &[b, a]),
        "matrix continuants must notice the order"
    );
}

/// The commutative two-by-two consequence:
/// [q1..qn][q2..q_{n-1}] = [q1..q_{n-1}][q2..qn] + (-1)^n for n >= 2.
pub fn run_adjacent_product_suite(cases: usize) {
    let mut rng = rng(0xad7ace);
    for case in 0..cases {
        let ring = match case % 3 {
            0 => RingId::Integers,
            1 => RingId::Rationals,
            _ => RingId::PrimeField(11),
        };
        let n = rng.random_range(2..=10usize);
        let q = items_in(&mut rng, &ring, n);
        let sign = RingValue::embed_int(&ring, if n % 2 == 0 { 1 } else { -1 });
        let lhs = cont(&ring, &q).mul(&cont(&ring, &q[1..n - 1]));
        let rhs = cont(&ring, &q[..n - 1]).mul(&cont(&ring, &q[1..])).add(&sign);
        assert_eq!(lhs, rhs, "case {case}: over {ring} on {q:?}");
    }
}

/// Even-length palindromes: with half (q_1..q_t), the continuant z of
/// the palindrome minus its last entry satisfies
/// z^2 + 1 = [full] * [inner], and the two factors split as
/// x^2 + y^2 and x'^2 + y'^2 for the head continuants.
pub fn run_palindrome_square_suite(cases: usize) {
    let mut rng = rng(0x9a11);
    let ring = RingId::Integers;
    for case in 0..cases {
        let t = rng.random_range(2..=5usize);
        let half = int_items(&mut rng, t);
        let mut full = half.clone();
        full.extend(half.iter().rev().cloned());
        let z = cont(&ring, &full[..full.len() - 1]);
        let inner = cont(&ring, &full[1..full.len() - 1]);
        let whole = cont(&ring, &full);
        let one = RingValue::one(&ring);
        assert_eq!(
            z.mul(&z).add(&one),
            whole.mul(&inner),
            "case {case}: square identity on {half:?}"
        );
        let x = cont(&ring, &half);
        let y = cont(&ring, &half[..t - 1]);
        assert_eq!(whole, x.mul(&x).add(&y.mul(&y)), "case {case}: outer split");
        let xp = cont(&ring, &half[1..]);
        let yp = cont(&ring, &half[1..t - 1]);
        assert_eq!(
            inner,
            xp.mul(&xp).add(&yp.mul(&yp)),
            "case {case}: inner split"
        );
    }
}

/// Conjugating and reversing a sequence conjugates its continuant, in
/// every ring with a star.
pub fn run_conjugate_reversal_suite(cases: usize) {
    let mut rng = rng(0xc0521);
    for case in 0..cases {
        let ring = match case % 4 {
            0 => RingId::GaussianIntegers,
            1 => RingId::EisensteinIntegers,
            2 => RingId::ZSqrt3,
            _ => RingId::IntMatrix2,
        };
        let len = rng.random_range(0..=8usize);
        let q = items_in(&mut rng, &ring, len);
        let turned: Vec<RingValue> = q.iter().rev().map(RingValue::conjugate).collect();
        assert_eq!(
            cont(&ring, &turned),
            cont(&ring, &q).conjugate(),
            "case {case}: over {ring} on {q:?}"
        );
    }
}

/// The recurrence, the pair-deletion rule, and the tridiagonal
/// determinant all agree on commutative inputs.
pub fn run_three_way_suite(cases: usize) {
    let mut rng = rng(0x3a3);
    for case in 0..cases {
        let ring = match case % 3 {
            0 => RingId::Integers,
            1 => RingId::Rationals,
            _ => RingId::PrimeField(7),
        };
        let len = rng.random_range(0..=10usize);
        let q = seq(&ring, &items_in(&mut rng, &ring, len));
        let direct = continuant(&q);
        assert_eq!(
            continuant_euler(&q).expect("within length cap"),
            direct,
            "case {case}: pair-deletion rule over {ring}"
        );
        assert_eq!(
            continuant_matrix(&q).expect("commutative"),
            direct,
            "case {case}: determinant over {ring}"
        );
    }
}

/// Zigzag rescaling by a unit preserves the continuant for even
/// lengths and divides it by the unit for odd lengths.
pub fn run_zigzag_suite(cases: usize) {
    let mut rng = rng(0x2162a6);
    for case in 0..cases {
        let (ring, tau) = match case % 3 {
            0 => {
                let num = loop {
                    let n = rng.random_range(-5..=5i64);
                    if n != 0 {
                        break n;
                    }
                };
                (RingId::Rationals, RingValue::rational(num, rng.random_range(1..=5)))
            }
            1 => (
                RingId::PrimeField(7),
                RingValue::residue(7, rng.random_range(1..=6)),
            ),
            _ => (
                RingId::Integers,
                RingValue::integer(if rng.random_range(0..2) == 0 { 1 } else { -1 }),
            ),
        };
        let len = rng.random_range(0..=8usize);
        let q = seq(&ring, &items_in(&mut rng, &ring, len));
        let rescaled = zigzag_rescale(&q, &tau).expect("a unit factor");
        let original = continuant(&q);
        let scaled = continuant(&rescaled);
        if len % 2 == 0 {
            assert_eq!(scaled, original, "case {case}: even length over {ring}");
        } else {
            assert_eq!(
                tau.mul(&scaled),
                original,
                "case {case}: odd length over {ring}"
            );
        }
    }
}

/// The left Bezout coefficients built from negated quotients combine
/// the head and tail continuants into 1, even for matrices.
pub fn run_bezout_suite(cases: usize) {
    let mut rng = rng(0xbe2007);
    for case in 0..cases {
        let (ring, len) = match case % 4 {
            0 => (RingId::Integers, rng.random_range(1..=8usize)),
            1 => (RingId::Rationals, rng.random_range(1..=6usize)),
            2 => (RingId::PrimeField(11), rng.random_range(1..=8usize)),
            _ => (RingId::IntMatrix2, rng.random_range(1..=5usize)),
        };
        let items = items_in(&mut rng, &ring, len);
        let q = seq(&ring, &items);
        let (a, b) = bezout_from_quotients(&q);
        let head = cont(&ring, &items);
        let tail = cont(&ring, &items[1..]);
        assert_eq!(
            a.mul(&head).add(&b.mul(&tail)),
            RingValue::one(&ring),
            "case {case}: over {ring} on {items:?}"
        );
    }
}

/// One coprime instance for the polynomial two-squares routes: a
/// modulus m = x^2 + y^2 with coprime x, y, and a reduced z with
/// m dividing z^2 + 1.
pub fn poly_instance(rng: &mut StdRng, ring: &RingId) -> Option<(RingValue, RingValue)> {
    let base = match ring {
        RingId::PolyOverField(b) => b.as_ref().clone(),
        _ => panic!("polynomial ring expected"),
    };
    let deg_x = rng.random_range(1..=3usize);
    let deg_y = rng.random_range(0..deg_x.max(1));
    let rand_poly = |rng: &mut StdRng, deg: usize| -> RingValue {
        let mut coeffs: Vec<RingValue> = (0..=deg).map(|_| value_in(rng, &base)).collect();
        let last = coeffs.last_mut().expect("nonempty");
        if last.is_zero() {
            *last = RingValue::one(&base);
        }
        RingValue::poly(base.clone(), coeffs)
    };
    let x = rand_poly(rng, deg_x);
    let y = rand_poly(rng, deg_y);
    let trace = euclidean_algorithm(&x, &y).ok()?;
    if !trace.gcd().is_unit() {
        return None;
    }
    let m = x.mul(&x).add(&y.mul(&y));
    assert_eq!(
        m.poly_degree(),
        Some(2 * deg_x),
        "deg y < deg x keeps the leading term of x^2"
    );
    let (z, _) = multiplier_from_representation(&x, &y).ok()?;
    let (_, z) = z.euclidean_divide(&m).ok()?;
    Some((m, z))
}

/// Both polynomial two-squares routes on one instance; they must agree
/// exactly after canonicalization.
pub fn check_poly_routes_agree(m: &RingValue, z: &RingValue) {
    let direct = poly_two_squares(m, z).expect("direct route");
    let one = RingValue::one(&m.ring());
    let via_gcd = poly_two_squares_gcd(m, z, &one).expect("gcd route");
    assert_eq!(direct, via_gcd, "routes disagree for m = {m:?}, z = {z:?}");
    let rebuilt = direct
        .x
        .mul(&direct.x)
        .add(&direct.y.mul(&direct.y))
        .mul(&direct.unit);
    assert_eq!(rebuilt, *m, "the representation must rebuild m");
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
