//! Regular continued fraction expansion of rationals, odd-length
//! normalization, and the long continued fraction that splices two odd
//! expansions around a central zero.
//!
//! Every rational has exactly one odd-length and one even-length regular
//! expansion; the two are exchanged by splitting the last element
//! `a_n -> (a_n - 1, 1)` or merging a trailing 1 into its predecessor.
//! The pipeline works exclusively with the odd-length normal form.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::continuants::{cf_value, cf_value_rational, CfValue, Word};
use crate::error::{Error, Result};
use crate::lattice::{Int, Rational, Sign};

/// A regular continued fraction of odd length: every element from the second
/// on is >= 1, and the leading element is a non-negative integer (the
/// expansions produced here are of non-negative rationals).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddRegularCF {
    elements: Word,
}

impl OddRegularCF {
    /// Validates an existing word as an odd regular continued fraction.
    pub fn from_word(elements: Word) -> Result<Self> {
        if elements.is_empty() || elements.len().is_multiple_of(2) {
            return Err(Error::InternalAssertion(format!(
                "odd regular continued fraction must have odd length, got {}",
                elements.len()
            )));
        }
        if elements.as_slice()[0].is_negative() {
            return Err(Error::NegativeRational {
                value: elements.as_slice()[0].to_string(),
            });
        }
        if let Some(bad) = elements.as_slice()[1..].iter().find(|a| !a.is_positive()) {
            return Err(Error::InternalAssertion(format!(
                "element {bad} past the first must be >= 1 in a regular continued fraction"
            )));
        }
        Ok(OddRegularCF { elements })
    }

    pub fn elements(&self) -> &Word {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // odd length is at least 1
    }

    pub fn value(&self) -> Rational {
        match cf_value(&self.elements) {
            CfValue::Finite(r) => r,
            CfValue::Infinite => unreachable!("regular continued fractions are finite-valued"),
        }
    }
}

impl fmt::Display for OddRegularCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.elements.as_slice();
        write!(f, "[{}", a[0])?;
        for (i, e) in a[1..].iter().enumerate() {
            write!(f, "{}{e}", if i == 0 { ";" } else { ":" })?;
        }
        write!(f, "]")
    }
}

/// Regular continued fraction of a non-negative rational, normalized to odd
/// length. The Euclidean expansion is followed by the parity fix: an
/// even-length result has its last element split `a_n -> (a_n - 1, 1)` when
/// a_n > 1, or merged into `a_{n-1} + 1` when a_n = 1.
///
/// Integers expand to single-element fractions (4 -> `[4]`, 0 -> `[0]`); signs
/// are the caller's business.
pub fn cf_expand_odd(r: &Rational) -> Result<OddRegularCF> {
    if r.is_negative() {
        return Err(Error::NegativeRational {
            value: r.to_string(),
        });
    }
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut elements: Vec<Int> = Vec::new();
    loop {
        let (q, rem) = num.div_rem(&den);
        elements.push(q);
        if rem.is_zero() {
            break;
        }
        num = den;
        den = rem;
    }
    OddRegularCF::from_word(Word::new(normalize_to_odd(elements)))
}

/// Parity fix taking a regular expansion to its odd-length form: split the
/// last element when it exceeds 1, merge a trailing 1 into its predecessor
/// otherwise. Odd inputs pass through.
fn normalize_to_odd(mut elements: Vec<Int>) -> Vec<Int> {
    if elements.len().is_multiple_of(2) {
        let last = elements.last().expect("expansion is nonempty").clone();
        if last > Int::one() {
            *elements.last_mut().unwrap() = last - 1;
            elements.push(Int::one());
        } else {
            elements.pop();
            *elements.last_mut().unwrap() += 1;
        }
    }
    elements
}

/// The long continued fraction word of two odd regular expansions:
/// `cf_a` reversed and scaled by `eps`, a central 0, then `cf_b` scaled by
/// `delta`. Its value is the tangent describing the spliced angle.
pub fn long_cf_combine(cf_a: &OddRegularCF, cf_b: &OddRegularCF, eps: Sign, delta: Sign) -> Word {
    let mut elements: Vec<Int> = Vec::with_capacity(cf_a.len() + cf_b.len() + 1);
    elements.extend(
        cf_a.elements()
            .as_slice()
            .iter()
            .rev()
            .map(|a| eps.apply(a)),
    );
    elements.push(Int::zero());
    elements.extend(cf_b.elements().as_slice().iter().map(|b| delta.apply(b)));
    Word::new(elements)
}

/// Shortcut evaluation of the long continued fraction: the second expansion
/// is replaced by its value as a single rational tail element, i.e.
/// `[eps*a_{2m} : ... : eps*a_0 : 0 : ratio]` evaluated over the rationals.
///
/// `ratio` is the signed coordinate ratio of the second vector (its sign is
/// exactly the delta of the full combination). Serves as an independent
/// cross-check of [`long_cf_combine`]; the two always agree.
pub fn long_cf_shortcut(cf_a: &OddRegularCF, ratio: &Rational, eps: Sign) -> CfValue {
    let mut elements: Vec<Rational> = Vec::with_capacity(cf_a.len() + 2);
    for a in cf_a.elements().as_slice().iter().rev() {
        elements.push(Rational::from(eps.apply(a)));
    }
    elements.push(Rational::zero());
    elements.push(ratio.clone());
    cf_value_rational(&elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rational;
    use proptest::prelude::*;

    fn expand(num: i64, den: i64) -> Vec<i64> {
        let cf = cf_expand_odd(&rational(num, den)).unwrap();
        cf.elements()
            .as_slice()
            .iter()
            .map(|a| i64::try_from(a).unwrap())
            .collect()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(2, 7), vec![0, 3, 2]);
        assert_eq!(expand(6, 21), vec![0, 3, 2]);
        assert_eq!(
            expand(2875199, 4119201),
            vec![0, 1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 3]
        );
        // Euclid gives [2; 3]; the parity fix splits the last element.
        assert_eq!(expand(7, 3), vec![2, 2, 1]);
        assert_eq!(
            cf_value(cf_expand_odd(&rational(7, 3)).unwrap().elements()),
            CfValue::Finite(rational(7, 3))
        );
    }

    #[test]
    fn expand_integers_and_zero() {
        assert_eq!(expand(4, 1), vec![4]);
        assert_eq!(expand(8, 2), vec![4]);
        assert_eq!(expand(0, 1), vec![0]);
        assert_eq!(expand(1, 1), vec![1]);
        assert_eq!(expand(26, 7), vec![3, 1, 2, 1, 1]);
    }

    #[test]
    fn expand_rejects_negatives() {
        assert!(matches!(
            cf_expand_odd(&rational(-1, 2)),
            Err(Error::NegativeRational { .. })
        ));
    }

    #[test]
    fn parity_fix_branches() {
        let fix = |v: &[i64]| -> Vec<i64> {
            normalize_to_odd(v.iter().map(|&a| Int::from(a)).collect())
                .iter()
                .map(|a| i64::try_from(a).unwrap())
                .collect()
        };
        assert_eq!(fix(&[3]), vec![3]);
        assert_eq!(fix(&[2, 3]), vec![2, 2, 1]);
        // Canonical Euclidean output never ends in 1, but the merge direction
        // of the split/merge bijection must still normalize correctly.
        assert_eq!(fix(&[2, 1]), vec![3]);
        assert_eq!(fix(&[0, 1]), vec![1]);
        assert_eq!(fix(&[0, 3, 2, 1]), vec![0, 3, 3]);
    }

    #[test]
    fn combine_examples() {
        let cf4 = cf_expand_odd(&rational(4, 1)).unwrap();
        let cf27 = cf_expand_odd(&rational(2, 7)).unwrap();
        assert_eq!(
            long_cf_combine(&cf4, &cf27, Sign::Minus, Sign::Plus),
            Word::from_i64s(&[-4, 0, 0, 3, 2])
        );

        let cf1 = cf_expand_odd(&rational(1, 1)).unwrap();
        let cf_big = cf_expand_odd(&rational(2875199, 4119201)).unwrap();
        assert_eq!(
            long_cf_combine(&cf1, &cf_big, Sign::Minus, Sign::Minus),
            Word::from_i64s(&[
                -1, 0, 0, -1, -2, -3, -4, -1, -2, -3, -4, -1, -2, -3, -4, -1, -2, -3, -3
            ])
        );

        let cfx = OddRegularCF::from_word(Word::from_i64s(&[5])).unwrap();
        let cfy = OddRegularCF::from_word(Word::from_i64s(&[9])).unwrap();
        assert_eq!(
            long_cf_combine(&cfx, &cfy, Sign::Plus, Sign::Plus),
            Word::from_i64s(&[5, 0, 9])
        );
    }

    #[test]
    fn shortcut_examples() {
        let cf4 = cf_expand_odd(&rational(4, 1)).unwrap();
        assert_eq!(
            long_cf_shortcut(&cf4, &rational(2, 7), Sign::Minus),
            CfValue::Finite(rational(-26, 7))
        );

        // Signed tail ratio: the second vector of the worked example has
        // ratio -2875199/4119201, and only the signed value reproduces the
        // full combination.
        let cf1 = cf_expand_odd(&rational(1, 1)).unwrap();
        let shortcut = long_cf_shortcut(&cf1, &rational(-2875199, 4119201), Sign::Minus);
        assert_eq!(shortcut, CfValue::Finite(rational(-6994400, 4119201)));
        let cf_big = cf_expand_odd(&rational(2875199, 4119201)).unwrap();
        let full = cf_value(&long_cf_combine(&cf1, &cf_big, Sign::Minus, Sign::Minus));
        assert_eq!(shortcut, full);

        // Degenerate zero ratio: [x; 0: 0] collapses to x.
        let cfx = OddRegularCF::from_word(Word::from_i64s(&[3])).unwrap();
        assert_eq!(
            long_cf_shortcut(&cfx, &rational(0, 1), Sign::Plus),
            CfValue::Finite(rational(3, 1))
        );
    }

    proptest! {
        // Round trip: value of the odd expansion is the input, length is odd,
        // and all elements from the second on are >= 1.
        #[test]
        fn expand_round_trip(num in 0i64..=1_000_000, den in 1i64..=1_000_000) {
            let r = rational(num, den);
            let cf = cf_expand_odd(&r).unwrap();
            prop_assert_eq!(cf.len() % 2, 1);
            prop_assert!(cf.elements().as_slice()[1..].iter().all(|a| a >= &Int::one()));
            prop_assert!(!cf.elements().as_slice()[0].is_negative());
            prop_assert_eq!(cf.value(), r);
        }

        // The shortcut path and the full combination agree.
        #[test]
        fn shortcut_matches_combination(
            a_num in 0i64..=400, a_den in 1i64..=400,
            b_num in 0i64..=400, b_den in 1i64..=400,
            eps_minus in any::<bool>(), delta_minus in any::<bool>(),
        ) {
            let eps = if eps_minus { Sign::Minus } else { Sign::Plus };
            let delta = if delta_minus { Sign::Minus } else { Sign::Plus };
            let cf_a = cf_expand_odd(&rational(a_num, a_den)).unwrap();
            let cf_b = cf_expand_odd(&rational(b_num, b_den)).unwrap();
            let full = cf_value(&long_cf_combine(&cf_a, &cf_b, eps, delta));
            let ratio = match delta {
                Sign::Plus => rational(b_num, b_den),
                Sign::Minus => rational(-b_num, b_den),
            };
            let short = long_cf_shortcut(&cf_a, &ratio, eps);
            prop_assert_eq!(full, short);
        }
    }
}
