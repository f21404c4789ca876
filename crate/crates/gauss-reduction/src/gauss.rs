//! The reduction pipeline for GL(2,Z) matrices: spectral classification,
//! LLS period extraction, enumeration of all reduced conjugates, and the
//! conjugacy decision.
//!
//! Matrices are compared up to PGL(2,Z)-conjugacy, i.e. B = +-C A C^(-1)
//! with C in GL(2,Z). Complex and rational spectra have finitely many
//! classes with explicit representatives; the real irrational case is
//! resolved by the period of the LLS sequence attached to the eigenline
//! cones, and every class is represented by finitely many reduced matrices
//! (products of the elementary blocks with positive word entries).

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::continuants::{matrix_from_word, Word};
use crate::error::{Error, Result};
use crate::lattice::{Int, IntVec2, Mat2};
use crate::lls::{lls_angle, seq_difference};

/// The three spectral cases of a GL(2,Z) matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    /// Complex conjugate eigenvalues: det = 1 and trace in {-1, 0, 1}.
    Complex,
    /// Rational eigenvalues (+-1): det = -1 with trace 0, or det = 1 with |trace| = 2.
    Rational,
    /// Distinct real irrational eigenvalues; the subject of reduction theory.
    RealIrrational,
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumKind::Complex => "complex",
            SpectrumKind::Rational => "rational",
            SpectrumKind::RealIrrational => "realIrrational",
        })
    }
}

/// Classification result; complex and rational kinds carry their canonical
/// class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumClass {
    pub kind: SpectrumKind,
    pub representative: Option<Mat2>,
}

/// Splits a GL(2,Z) matrix by the sign and squareness of the discriminant
/// trace^2 - 4 det. Errors when |det| != 1.
pub fn classify_spectrum(m: &Mat2) -> Result<SpectrumClass> {
    let det = m.det();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular { det });
    }
    let trace = m.trace();
    let disc = &trace * &trace - Int::from(4) * &det;
    if disc.is_negative() {
        // det = 1 and trace in {-1, 0, 1}; the three classes are
        // distinguished by the trace.
        let rep = match i64::try_from(&trace).expect("trace is -1, 0 or 1") {
            1 => Mat2::new(1, 1, -1, 0),
            0 => Mat2::new(0, 1, -1, 0),
            -1 => Mat2::new(0, 1, -1, -1),
            _ => unreachable!("negative discriminant forces |trace| < 2"),
        };
        return Ok(SpectrumClass {
            kind: SpectrumKind::Complex,
            representative: Some(rep),
        });
    }
    let root = disc.sqrt();
    if &root * &root == disc {
        let rep = rational_representative(m, &trace, &det);
        return Ok(SpectrumClass {
            kind: SpectrumKind::Rational,
            representative: Some(rep),
        });
    }
    Ok(SpectrumClass {
        kind: SpectrumKind::RealIrrational,
        representative: None,
    })
}

/// Primitive generator of the kernel of a rank-one integer matrix.
fn primitive_kernel_vector(m: &Mat2) -> IntVec2 {
    let (r1, r2) = if !m.a11.is_zero() || !m.a12.is_zero() {
        (&m.a11, &m.a12)
    } else {
        (&m.a21, &m.a22)
    };
    debug_assert!(!r1.is_zero() || !r2.is_zero());
    let v = IntVec2 {
        x: r2.clone(),
        y: -r1,
    };
    let v = v.primitive();
    debug_assert!(m.apply(&v).is_zero());
    v
}

fn rational_representative(m: &Mat2, trace: &Int, det: &Int) -> Mat2 {
    if det.is_one() {
        // Eigenvalues are both +1 or both -1: up to sign M = I + N with N
        // nilpotent, and the class is determined by the content of N.
        let m = if trace.is_negative() {
            m.neg()
        } else {
            m.clone()
        };
        let entries = [
            &m.a11 - Int::one(),
            m.a12.clone(),
            m.a21.clone(),
            &m.a22 - Int::one(),
        ];
        let g = entries.iter().fold(Int::zero(), |acc, e| acc.gcd(e));
        Mat2 {
            a11: Int::one(),
            a12: g,
            a21: Int::zero(),
            a22: Int::one(),
        }
    } else {
        // det = -1 forces trace 0: an involution. The two classes are told
        // apart by the index of the sum of the two eigenlattices in Z^2,
        // which is |det(v+, v-)| for primitive eigenvectors and is 1 or 2.
        debug_assert!(trace.is_zero());
        let id = Mat2::identity();
        let minus = Mat2 {
            a11: &m.a11 - &id.a11,
            a12: m.a12.clone(),
            a21: m.a21.clone(),
            a22: &m.a22 - &id.a22,
        };
        let plus = Mat2 {
            a11: &m.a11 + &id.a11,
            a12: m.a12.clone(),
            a21: m.a21.clone(),
            a22: &m.a22 + &id.a22,
        };
        let v_plus = primitive_kernel_vector(&minus);
        let v_minus = primitive_kernel_vector(&plus);
        let index = v_plus.det(&v_minus).abs();
        if index.is_one() {
            Mat2::new(1, 0, 0, -1)
        } else {
            debug_assert_eq!(index, Int::from(2));
            Mat2::new(1, 1, 0, -1)
        }
    }
}

/// Canonical representative of a rational-spectrum matrix: one of
/// `(1 m; 0 1)` for m >= 0, `(1 0; 0 -1)`, or `(1 1; 0 -1)`.
pub fn rational_normal_form(m: &Mat2) -> Result<Mat2> {
    let class = classify_spectrum(m)?;
    if class.kind != SpectrumKind::Rational {
        return Err(Error::WrongSpectralKind {
            expected: SpectrumKind::Rational,
            found: class.kind,
        });
    }
    Ok(class
        .representative
        .expect("rational kind has a representative"))
}

/// An LLS period: a word of positive integers together with the length of
/// its minimal repeating block (a divisor of the full length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Period {
    elements: Word,
    minimal_len: usize,
}

impl Period {
    fn from_word(elements: Word) -> Result<Period> {
        if elements.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(bad) = elements.as_slice().iter().find(|a| !a.is_positive()) {
            return Err(Error::NotReducedWord {
                element: bad.clone(),
            });
        }
        let minimal_len = elements.minimal_period_len();
        Ok(Period {
            elements,
            minimal_len,
        })
    }

    pub fn elements(&self) -> &Word {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // validated nonempty on construction
    }

    pub fn minimal_len(&self) -> usize {
        self.minimal_len
    }

    pub fn minimal_block(&self) -> &[Int] {
        &self.elements.as_slice()[..self.minimal_len]
    }

    /// Lexicographically smallest cyclic rotation; rotation-independent
    /// canonical form used to compare periods across seeds.
    pub fn canonical_rotation(&self) -> Word {
        self.elements.canonical_rotation()
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (minimal length {})", self.elements, self.minimal_len)
    }
}

/// The period of a reduced matrix built from a positive word is the word
/// itself.
pub fn period_of_reduced(word: &Word) -> Result<Period> {
    Period::from_word(word.clone())
}

/// A period together with how it was obtained.
#[derive(Debug, Clone)]
pub struct PeriodComputation {
    pub period: Period,
    /// Seed point that produced the period.
    pub seed: IntVec2,
    /// Number of seed candidates discarded before success.
    pub retries: usize,
}

/// Deterministic seed candidates: the user-supplied point first (when any),
/// then primitive positive points ordered by max coordinate.
fn seed_candidates(user: Option<&IntVec2>) -> Vec<IntVec2> {
    let mut seeds: Vec<IntVec2> = Vec::new();
    if let Some(p) = user {
        seeds.push(p.clone());
    }
    seeds.push(IntVec2::new(1, 1));
    for hi in 2i64..=12 {
        for lo in 1..hi {
            if lo.gcd(&hi) == 1 {
                seeds.push(IntVec2::new(lo, hi));
                seeds.push(IntVec2::new(hi, lo));
            }
        }
    }
    seeds
}

/// LLS period of a real-irrational-spectrum matrix.
///
/// For a seed P0, the difference of the LLS sequences of the angles
/// (P0, M^6 P0) and (P0, M^4 P0) is the period repeated twice; the first
/// half is returned. Seeds for which the angle formula preconditions fail,
/// the difference is undefined, or the halves disagree are skipped; running
/// out of candidates is an internal error.
pub fn lls_period_detailed(m: &Mat2, seed: Option<&IntVec2>) -> Result<PeriodComputation> {
    let class = classify_spectrum(m)?;
    if class.kind != SpectrumKind::RealIrrational {
        return Err(Error::WrongSpectralKind {
            expected: SpectrumKind::RealIrrational,
            found: class.kind,
        });
    }
    let m4 = m.pow(4);
    let m6 = m.pow(6);
    let candidates = seed_candidates(seed);
    let mut tried = 0;
    for p0 in candidates {
        tried += 1;
        let p1 = m4.apply(&p0);
        let p2 = m6.apply(&p0);
        let (Ok(s1), Ok(s2)) = (lls_angle(&p0, &p1), lls_angle(&p0, &p2)) else {
            continue;
        };
        let Some(diff) = seq_difference(s2.as_slice(), s1.as_slice()) else {
            continue;
        };
        if diff.is_empty() || diff.len() % 2 != 0 {
            continue;
        }
        let half = diff.len() / 2;
        if diff[..half] != diff[half..] {
            continue;
        }
        let period = Period::from_word(Word::new(diff[..half].to_vec()))?;
        return Ok(PeriodComputation {
            period,
            seed: p0,
            retries: tried - 1,
        });
    }
    Err(Error::PeriodSeedsExhausted { tried })
}

/// LLS period with the default seed schedule.
pub fn lls_period(m: &Mat2, seed: Option<&IntVec2>) -> Result<Period> {
    Ok(lls_period_detailed(m, seed)?.period)
}

/// One reduced matrix together with the word that generates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedItem {
    pub word: Word,
    pub matrix: Mat2,
}

/// All reduced matrices conjugate to a given one: exactly one per cyclic
/// shift of the period at minimal granularity, sorted by word for
/// deterministic output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSet {
    pub items: Vec<ReducedItem>,
}

impl ReducedSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains_matrix(&self, m: &Mat2) -> bool {
        self.items.iter().any(|item| &item.matrix == m)
    }

    pub fn matrices(&self) -> impl Iterator<Item = &Mat2> {
        self.items.iter().map(|item| &item.matrix)
    }
}

/// Expands a period into its reduced set: the matrices of the words
/// (a_{1+k}, ..., a_{n+k}) for k = 0, ..., m-1 with indices mod n.
pub fn reduced_set_of_period(period: &Period) -> Result<ReducedSet> {
    let mut items: Vec<ReducedItem> = (0..period.minimal_len())
        .map(|k| {
            let word = period.elements().rotated_left(k);
            let matrix = matrix_from_word(&word)?;
            Ok(ReducedItem { word, matrix })
        })
        .collect::<Result<_>>()?;
    items.sort_by(|a, b| a.word.cmp(&b.word));
    for pair in items.windows(2) {
        if pair[0].matrix == pair[1].matrix {
            return Err(Error::InternalAssertion(format!(
                "duplicate reduced matrix {} for distinct shifts",
                pair[0].matrix
            )));
        }
    }
    Ok(ReducedSet { items })
}

/// Full pipeline output: the period, its provenance, and the reduced set.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub computation: PeriodComputation,
    pub set: ReducedSet,
}

/// Runs the whole pipeline on a real-irrational-spectrum matrix.
pub fn reduce(m: &Mat2, seed: Option<&IntVec2>) -> Result<Reduction> {
    let computation = lls_period_detailed(m, seed)?;
    let set = reduced_set_of_period(&computation.period)?;
    Ok(Reduction { computation, set })
}

/// All reduced matrices PGL(2,Z)-conjugate to `m`.
pub fn reduced_set(m: &Mat2) -> Result<ReducedSet> {
    Ok(reduce(m, None)?.set)
}

/// Decides PGL(2,Z)-conjugacy.
///
/// Matrices of different spectral kinds are never conjugate. Rational kinds
/// compare by normal form and real irrational kinds by their reduced sets.
/// Complex kinds compare by |trace|: negation is a PGL-conjugacy, and it
/// exchanges the trace 1 and trace -1 classes (the swap matrix conjugates
/// the negated sixth-order representative onto the third-order one), so of
/// the three trace-distinguished representatives exactly those two merge.
pub fn is_conjugate(a: &Mat2, b: &Mat2) -> Result<bool> {
    let ca = classify_spectrum(a)?;
    let cb = classify_spectrum(b)?;
    if ca.kind != cb.kind {
        return Ok(false);
    }
    match ca.kind {
        SpectrumKind::Complex => Ok(a.trace().abs() == b.trace().abs()),
        SpectrumKind::Rational => Ok(ca.representative == cb.representative),
        SpectrumKind::RealIrrational => Ok(reduced_set(a)? == reduced_set(b)?),
    }
}
