//! Exact arithmetic foundation: arbitrary-precision integers and rationals,
//! 2D integer vectors, and 2x2 integer matrices.
//!
//! Everything here is exact. There are no modular or floating-point shortcuts
//! anywhere in this crate; matrix powers routinely push coordinates past
//! 10^10 and the statements being checked only hold in exact arithmetic.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, kept in canonical form by `num-rational`:
/// denominator positive, gcd(|num|, den) = 1, zero is 0/1.
pub type Rational = num_rational::BigRational;

/// Build a canonical rational from an integer pair. Panics if `den` is zero.
pub fn rational<N: Into<Int>, D: Into<Int>>(num: N, den: D) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Sign of a nonzero quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// Sign of a nonzero integer; `None` for zero.
    pub fn of(x: &Int) -> Option<Sign> {
        match x.sign() {
            num_bigint::Sign::Plus => Some(Sign::Plus),
            num_bigint::Sign::Minus => Some(Sign::Minus),
            num_bigint::Sign::NoSign => None,
        }
    }

    /// Sign of the ratio x/y, computed as sign(x)*sign(y) on the integers
    /// (never via division). `None` if either factor is zero.
    pub fn of_ratio(x: &Int, y: &Int) -> Option<Sign> {
        Some(Sign::of(x)? * Sign::of(y)?)
    }

    pub fn to_int(self) -> Int {
        match self {
            Sign::Plus => Int::one(),
            Sign::Minus => -Int::one(),
        }
    }

    /// Applies the sign to an integer.
    pub fn apply(self, x: &Int) -> Int {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => -x,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A lattice point / integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec2 {
    pub x: Int,
    pub y: Int,
}

impl IntVec2 {
    pub fn new<X: Into<Int>, Y: Into<Int>>(x: X, y: Y) -> Self {
        IntVec2 {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// gcd(|x|, |y|); zero for the zero vector.
    pub fn content(&self) -> Int {
        self.x.gcd(&self.y)
    }

    /// The primitive vector on the same ray. Panics on the zero vector.
    pub fn primitive(&self) -> IntVec2 {
        let g = self.content();
        assert!(!g.is_zero(), "zero vector has no primitive direction");
        IntVec2 {
            x: &self.x / &g,
            y: &self.y / &g,
        }
    }

    /// det(OA, OB) for A = self, B = other: the determinant of the matrix
    /// whose columns are the two vectors.
    pub fn det(&self, other: &IntVec2) -> Int {
        &self.x * &other.y - &self.y * &other.x
    }
}

impl fmt::Display for IntVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A 2x2 integer matrix, stored row-major.
///
/// The reduction-theory literature displays a matrix as
/// `(p r; q s)` acting on column vectors, so that the columns
/// `A = (p, q)` and `B = (r, s)` are the images of the basis vectors.
/// In that notation `a11 = p`, `a12 = r`, `a21 = q`, `a22 = s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a11: Int,
    pub a12: Int,
    pub a21: Int,
    pub a22: Int,
}

impl Mat2 {
    pub fn new<T: Into<Int>>(a11: T, a12: T, a21: T, a22: T) -> Self {
        Mat2 {
            a11: a11.into(),
            a12: a12.into(),
            a21: a21.into(),
            a22: a22.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// Exact determinant a11*a22 - a12*a21.
    pub fn det(&self) -> Int {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn trace(&self) -> Int {
        &self.a11 + &self.a22
    }

    /// True iff det is +1 or -1, i.e. the matrix lies in GL(2,Z).
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &Mat2) -> Mat2 {
        Mat2 {
            a11: &self.a11 * &other.a11 + &self.a12 * &other.a21,
            a12: &self.a11 * &other.a12 + &self.a12 * &other.a22,
            a21: &self.a21 * &other.a11 + &self.a22 * &other.a21,
            a22: &self.a21 * &other.a12 + &self.a22 * &other.a22,
        }
    }

    /// Image of a point under the matrix.
    pub fn apply(&self, p: &IntVec2) -> IntVec2 {
        IntVec2 {
            x: &self.a11 * &p.x + &self.a12 * &p.y,
            y: &self.a21 * &p.x + &self.a22 * &p.y,
        }
    }

    /// Exact k-th power by binary exponentiation; the zeroth power is the identity.
    pub fn pow(&self, k: u64) -> Mat2 {
        let mut result = Mat2::identity();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            a11: -&self.a11,
            a12: -&self.a12,
            a21: -&self.a21,
            a22: -&self.a22,
        }
    }

    /// Exact inverse of a unimodular matrix: the adjugate divided by det,
    /// which stays integral precisely because det is +-1.
    pub fn inverse_unimodular(&self) -> Option<Mat2> {
        let d = self.det();
        if d.is_one() {
            Some(Mat2 {
                a11: self.a22.clone(),
                a12: -&self.a12,
                a21: -&self.a21,
                a22: self.a11.clone(),
            })
        } else if (-&d).is_one() {
            Some(Mat2 {
                a11: -&self.a22,
                a12: self.a12.clone(),
                a21: self.a21.clone(),
                a22: -&self.a11,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::new(a, b, c, d)
    }

    #[test]
    fn det_examples() {
        assert_eq!(m(7, 32, 19, 87).det(), Int::from(1));
        assert_eq!(Mat2::identity().det(), Int::from(1));
        assert_eq!(m(7, -30, -10, 43).det(), Int::from(1));
    }

    #[test]
    fn mul_elementary_product() {
        let e = |a: i64| m(0, 1, 1, a);
        let p = e(3).mul(&e(-3)).mul(&e(-2)).mul(&e(5));
        assert_eq!(p, m(7, 32, 19, 87));
    }

    #[test]
    fn mul_identity_and_square() {
        let a = m(7, -30, -10, 43);
        assert_eq!(a.mul(&Mat2::identity()), a);
        let f = m(0, 1, 1, 1);
        assert_eq!(f.mul(&f), m(1, 1, 1, 2));
    }

    #[test]
    fn apply_reaches_large_coordinates() {
        let mm = m(7, -30, -10, 43);
        let p0 = IntVec2::new(1, 1);
        let p1 = mm.pow(4).apply(&p0);
        assert_eq!(p1, IntVec2::new(-2875199i64, 4119201i64));
        let p2 = mm.pow(6).apply(&p0);
        assert_eq!(p2, IntVec2::new(-7182245951i64, 10289762449i64));
        assert_eq!(Mat2::identity().apply(&p0), p0);
    }

    #[test]
    fn pow_examples() {
        let mm = m(1, 2, 1, 3);
        assert_eq!(mm.pow(0), Mat2::identity());
        let p0 = IntVec2::new(4, -1);
        assert_eq!(mm.pow(2).apply(&p0), IntVec2::new(4, 5));
        assert_eq!(mm.pow(3).apply(&p0), IntVec2::new(14, 19));
    }

    #[test]
    fn pow_far_beyond_example_scale() {
        // M^24 on the worked example matrix: coordinates blow up well past 10^40.
        let mm = m(7, -30, -10, 43);
        let p = mm.pow(24).apply(&IntVec2::new(1, 1));
        assert!(p.y.to_string().len() > 40);
        // Exactness cross-check: (M^12)^2 = M^24 entry by entry.
        assert_eq!(mm.pow(12).pow(2), mm.pow(24));
    }

    #[test]
    fn det_is_multiplicative_and_pow_matches_repeated_mul() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = m(
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
            );
            let b = m(
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
            );
            assert_eq!(a.mul(&b).det(), a.det() * b.det());
            let k = rng.gen_range(0..=12u64);
            assert_eq!(a.pow(k + 1), a.pow(k).mul(&a));
        }
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(rational(2, -4), rational(-1, 2));
        assert_eq!(rational(-6, -21), rational(2, 7));
        assert_eq!(rational(0, 5), rational(0, 1));
        let r = rational(2875199, 4119201);
        assert!(r.denom() > &Int::from(0));
    }

    #[test]
    fn ratio_sign_without_division() {
        assert_eq!(
            Sign::of_ratio(&Int::from(-3), &Int::from(5)),
            Some(Sign::Minus)
        );
        assert_eq!(
            Sign::of_ratio(&Int::from(-3), &Int::from(-5)),
            Some(Sign::Plus)
        );
        assert_eq!(Sign::of_ratio(&Int::from(0), &Int::from(5)), None);
    }

    #[test]
    fn unimodular_inverse() {
        let a = m(7, -30, -10, 43);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv), Mat2::identity());
        let swap = m(0, 1, 1, 0);
        let inv = swap.inverse_unimodular().unwrap();
        assert_eq!(swap.mul(&inv), Mat2::identity());
        assert_eq!(m(2, 0, 0, 2).inverse_unimodular(), None);
    }
}
