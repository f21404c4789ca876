//! Continuant polynomials, the word-to-matrix construction, and exact
//! continued fraction evaluation.
//!
//! A word (a_1, ..., a_n) of integers determines the matrix product of the
//! elementary blocks `(0 1; 1 a_i)`; its entries are continuants of subwords
//! and its determinant is (-1)^n. Continued fractions with arbitrary integer
//! elements (zeros and negatives included) are evaluated through this product
//! rather than by iterated division, so intermediate convergents are allowed
//! to pass through infinity.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Int, Mat2, Rational};

/// A finite sequence of integers. Elements may be negative or zero in
/// general; a word is *reduced* when it is nonempty and every element is
/// at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Int>);

impl Word {
    pub fn new(elements: Vec<Int>) -> Self {
        Word(elements)
    }

    pub fn from_i64s(elements: &[i64]) -> Self {
        Word(elements.iter().map(|&a| Int::from(a)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Int] {
        &self.0
    }

    /// Nonempty with all elements >= 1.
    pub fn is_reduced(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|a| a.is_positive())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    /// Cyclic left rotation by `k` places.
    pub fn rotated_left(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let n = self.0.len();
        let k = k % n;
        let mut v = Vec::with_capacity(n);
        v.extend(self.0[k..].iter().cloned());
        v.extend(self.0[..k].iter().cloned());
        Word(v)
    }

    /// Lexicographically smallest cyclic rotation.
    pub fn canonical_rotation(&self) -> Word {
        (0..self.0.len().max(1))
            .map(|k| self.rotated_left(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Smallest divisor d of the length such that the word is its length-d
    /// prefix repeated.
    pub fn minimal_period_len(&self) -> usize {
        let n = self.0.len();
        for d in 1..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            if (d..n).all(|i| self.0[i] == self.0[i - d]) {
                return d;
            }
        }
        n
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Continuant K_n(a_1, ..., a_n), via the three-term recursion
/// K_n = a_n * K_{n-1} + K_{n-2} with K_{-1} = 0 and K_0 = 1.
pub fn continuant(elements: &[Int]) -> Int {
    let mut prev = Int::zero(); // K_{-1}
    let mut cur = Int::one(); // K_0
    for a in elements {
        let next = a * &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The matrix associated to a nonempty word (a_1, ..., a_n):
///
/// ```text
/// [ K_{n-2}(a_2..a_{n-1})   K_{n-1}(a_2..a_n) ]
/// [ K_{n-1}(a_1..a_{n-1})   K_n(a_1..a_n)     ]
/// ```
///
/// which equals the product of the elementary matrices `(0 1; 1 a_i)` and has
/// determinant (-1)^n.
pub fn matrix_from_word(word: &Word) -> Result<Mat2> {
    let a = word.as_slice();
    let n = a.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let top_left = if n == 1 {
        Int::zero() // K_{-1} of the empty inner slice
    } else {
        continuant(&a[1..n - 1])
    };
    Ok(Mat2 {
        a11: top_left,
        a12: continuant(&a[1..n]),
        a21: continuant(&a[..n - 1]),
        a22: continuant(a),
    })
}

/// Value of a continued fraction: an exact rational, or infinity when the
/// denominator continuant vanishes. Infinity is a value, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CfValue {
    Finite(Rational),
    Infinite,
}

impl CfValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, CfValue::Finite(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            CfValue::Finite(r) => Some(r),
            CfValue::Infinite => None,
        }
    }
}

impl fmt::Display for CfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CfValue::Finite(r) => write!(f, "{r}"),
            CfValue::Infinite => write!(f, "infinity"),
        }
    }
}

impl From<Rational> for CfValue {
    fn from(r: Rational) -> Self {
        CfValue::Finite(r)
    }
}

/// Exact value of `[a_1; a_2 : ... : a_n]` = K_n(a_1..a_n) / K_{n-1}(a_2..a_n),
/// computed through the continuant matrix product. Zero and negative elements
/// are legal; the result is infinite when the denominator continuant is zero.
/// The empty continued fraction evaluates to infinity (1/0).
pub fn cf_value(word: &Word) -> CfValue {
    let m = fold_elements(word.as_slice().iter().map(|a| (a.clone(), Int::one())));
    ratio_to_value(m)
}

/// Same evaluation with rational elements. Each element p/q contributes the
/// projectively scaled block `(0 q; q p)`, which leaves the final ratio
/// untouched, so the whole computation stays in integers.
pub fn cf_value_rational(elements: &[Rational]) -> CfValue {
    let m = fold_elements(
        elements
            .iter()
            .map(|r| (r.numer().clone(), r.denom().clone())),
    );
    ratio_to_value(m)
}

fn fold_elements(elements: impl Iterator<Item = (Int, Int)>) -> Mat2 {
    let mut m = Mat2::identity();
    for (p, q) in elements {
        let block = Mat2 {
            a11: Int::zero(),
            a12: q.clone(),
            a21: q,
            a22: p,
        };
        m = m.mul(&block);
    }
    m
}

fn ratio_to_value(m: Mat2) -> CfValue {
    // Value = K_n / K_{n-1}(a_2..a_n): bottom-right over top-right.
    if m.a12.is_zero() {
        CfValue::Infinite
    } else {
        CfValue::Finite(Rational::new(m.a22, m.a12))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rational;
    use proptest::prelude::*;

    fn w(elements: &[i64]) -> Word {
        Word::from_i64s(elements)
    }

    fn elementary_product(word: &Word) -> Mat2 {
        let mut m = Mat2::identity();
        for a in word.as_slice() {
            m = m.mul(&Mat2 {
                a11: Int::zero(),
                a12: Int::one(),
                a21: Int::one(),
                a22: a.clone(),
            });
        }
        m
    }

    #[test]
    fn continuant_bases() {
        assert_eq!(continuant(&[]), Int::one());
        assert_eq!(continuant(w(&[5]).as_slice()), Int::from(5));
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(continuant(w(&[3, -3, -2, 5]).as_slice()), Int::from(87));
        assert_eq!(continuant(w(&[4, 1, 2, 3]).as_slice()), Int::from(47));
    }

    #[test]
    fn matrix_from_word_examples() {
        assert_eq!(
            matrix_from_word(&w(&[3, -3, -2, 5])).unwrap(),
            Mat2::new(7, 32, 19, 87)
        );
        assert_eq!(matrix_from_word(&w(&[-7])).unwrap(), Mat2::new(0, 1, 1, -7));
        assert_eq!(
            matrix_from_word(&w(&[1, 2, 3, 4])).unwrap(),
            Mat2::new(7, 30, 10, 43)
        );
        assert!(matches!(
            matrix_from_word(&Word::new(vec![])),
            Err(Error::EmptyWord)
        ));
    }

    #[test]
    fn cf_value_examples() {
        assert_eq!(cf_value(&w(&[3, -3, -2])), CfValue::Finite(rational(19, 7)));
        // [3; -3: -2: 5] = 87/32 = K_4 / K_3(-3,-2,5); the companion row
        // ratio 87/19 = K_4 / K_3(3,-3,-2) is the value of the reversed word.
        assert_eq!(
            cf_value(&w(&[3, -3, -2, 5])),
            CfValue::Finite(rational(87, 32))
        );
        assert_eq!(
            cf_value(&w(&[5, -2, -3, 3])),
            CfValue::Finite(rational(87, 19))
        );
        assert_eq!(
            cf_value(&w(&[-4, 0, 0, 3, 2])),
            CfValue::Finite(rational(-26, 7))
        );
        let long = w(&[
            -1, 0, 0, -1, -2, -3, -4, -1, -2, -3, -4, -1, -2, -3, -4, -1, -2, -3, -3,
        ]);
        assert_eq!(
            cf_value(&long),
            CfValue::Finite(rational(-6994400, 4119201))
        );
    }

    #[test]
    fn cf_value_infinite_cases() {
        // [0; 0] = 0 + 1/0.
        assert_eq!(cf_value(&w(&[0, 0])), CfValue::Infinite);
        assert_eq!(cf_value(&Word::new(vec![])), CfValue::Infinite);
        // ...but zeros collapse in pairs: [x; 0: 0] = x.
        assert_eq!(cf_value(&w(&[7, 0, 0])), CfValue::Finite(rational(7, 1)));
    }

    #[test]
    fn cf_value_rational_elements() {
        // [-4; 0: 2/7] = -26/7, the shortcut form of [-4; 0: 0: 3: 2].
        let elems = vec![rational(-4, 1), rational(0, 1), rational(2, 7)];
        assert_eq!(cf_value_rational(&elems), CfValue::Finite(rational(-26, 7)));
    }

    #[test]
    fn word_rotations_and_periods() {
        let word = w(&[4, 1, 2, 3]);
        assert_eq!(word.rotated_left(1), w(&[1, 2, 3, 4]));
        assert_eq!(word.rotated_left(4), word);
        assert_eq!(word.canonical_rotation(), w(&[1, 2, 3, 4]));
        assert_eq!(w(&[1, 2, 1, 2]).minimal_period_len(), 2);
        assert_eq!(w(&[3, 3, 3]).minimal_period_len(), 1);
        assert_eq!(w(&[1, 2, 3]).minimal_period_len(), 3);
        assert!(w(&[4, 1, 2, 3]).is_reduced());
        assert!(!w(&[4, 0, 2]).is_reduced());
        assert!(!Word::new(vec![]).is_reduced());
    }

    #[test]
    fn elementary_product_equivalence_bulk() {
        // 10^4 random words of length <= 8 with elements in [-9, 9].
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..10_000 {
            let len = rng.gen_range(1..=8);
            let word = Word::new(
                (0..len)
                    .map(|_| Int::from(rng.gen_range(-9i64..=9)))
                    .collect(),
            );
            let m = matrix_from_word(&word).unwrap();
            assert_eq!(m, elementary_product(&word), "mismatch for {word}");
            let expected_det = if len % 2 == 0 { 1 } else { -1 };
            assert_eq!(m.det(), Int::from(expected_det), "det for {word}");
        }
    }

    proptest! {
        // Continuant-formula matrix equals the elementary product, with det (-1)^n.
        #[test]
        fn matrix_matches_elementary_product(
            elems in prop::collection::vec(-9i64..=9, 1..=8)
        ) {
            let word = w(&elems);
            let m = matrix_from_word(&word).unwrap();
            prop_assert_eq!(&m, &elementary_product(&word));
            let expected_det = if word.len().is_multiple_of(2) { 1 } else { -1 };
            prop_assert_eq!(m.det(), Int::from(expected_det));
        }

        #[test]
        fn continuant_palindrome(elems in prop::collection::vec(-9i64..=9, 0..=10)) {
            let fwd = w(&elems);
            let rev: Vec<i64> = elems.iter().rev().cloned().collect();
            prop_assert_eq!(continuant(fwd.as_slice()), continuant(w(&rev).as_slice()));
        }

        // The word -> matrix map is a semigroup homomorphism for concatenation.
        #[test]
        fn semigroup_law(
            u in prop::collection::vec(-9i64..=9, 1..=6),
            v in prop::collection::vec(-9i64..=9, 1..=6),
        ) {
            let wu = w(&u);
            let wv = w(&v);
            let lhs = matrix_from_word(&wu.concat(&wv)).unwrap();
            let rhs = matrix_from_word(&wu).unwrap().mul(&matrix_from_word(&wv).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        // Regular continued fractions have finite value in lowest terms with
        // denominator K_{n-1}(a_2..a_n).
        #[test]
        fn regular_cf_finite_lowest_terms(
            head in -9i64..=9,
            tail in prop::collection::vec(1i64..=9, 0..=8),
        ) {
            let mut elems = vec![head];
            elems.extend(&tail);
            let word = w(&elems);
            let value = cf_value(&word);
            let r = value.as_rational().expect("regular CF must be finite");
            prop_assert_eq!(r.denom(), &continuant(&word.as_slice()[1..]));
        }
    }
}
