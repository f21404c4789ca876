//! Machine-readable job results.
//!
//! Integers are rendered as decimal strings so consumers never overflow;
//! field order is fixed and collections are emitted in deterministic order,
//! making the JSON byte-stable for identical inputs.

use serde::{Deserialize, Serialize};

use crate::continuants::Word;
use crate::gauss::{Reduction, SpectrumClass};
use crate::lattice::{IntVec2, Mat2};
use crate::lls::LlsSeq;
use crate::oracle::Sail;

/// Row-major matrix as decimal strings.
pub type MatrixRepr = [[String; 2]; 2];

pub fn matrix_repr(m: &Mat2) -> MatrixRepr {
    [
        [m.a11.to_string(), m.a12.to_string()],
        [m.a21.to_string(), m.a22.to_string()],
    ]
}

pub fn vector_repr(v: &IntVec2) -> [String; 2] {
    [v.x.to_string(), v.y.to_string()]
}

pub fn word_repr(w: &Word) -> Vec<String> {
    w.as_slice().iter().map(|a| a.to_string()).collect()
}

pub fn lls_repr(s: &LlsSeq) -> Vec<String> {
    s.as_slice().iter().map(|a| a.to_string()).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PeriodRepr {
    pub elements: Vec<String>,
    pub minimal_len: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReducedItemRepr {
    pub word: Vec<String>,
    pub matrix: MatrixRepr,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Diagnostics {
    pub seed: [String; 2],
    pub retries: usize,
}

/// Result of one matrix job (classify / period / reduce).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JobResult {
    pub input: MatrixRepr,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representative: Option<MatrixRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<PeriodRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<Vec<ReducedItemRepr>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
}

impl JobResult {
    pub fn classified(input: &Mat2, class: &SpectrumClass) -> Self {
        JobResult {
            input: matrix_repr(input),
            kind: class.kind.to_string(),
            representative: class.representative.as_ref().map(matrix_repr),
            period: None,
            reduced: None,
            diagnostics: None,
        }
    }

    pub fn reduced(input: &Mat2, reduction: &Reduction, with_set: bool) -> Self {
        let comp = &reduction.computation;
        JobResult {
            input: matrix_repr(input),
            kind: "realIrrational".to_string(),
            representative: None,
            period: Some(PeriodRepr {
                elements: word_repr(comp.period.elements()),
                minimal_len: comp.period.minimal_len(),
            }),
            reduced: with_set.then(|| {
                reduction
                    .set
                    .items
                    .iter()
                    .map(|item| ReducedItemRepr {
                        word: word_repr(&item.word),
                        matrix: matrix_repr(&item.matrix),
                    })
                    .collect()
            }),
            diagnostics: Some(Diagnostics {
                seed: vector_repr(&comp.seed),
                retries: comp.retries,
            }),
        }
    }
}

/// Result of a conjugacy decision job.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConjugacyResult {
    pub a: MatrixRepr,
    pub b: MatrixRepr,
    pub conjugate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MatrixRepr>,
}

/// Result of an angle job (lls / sail).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AngleResult {
    pub a: [String; 2],
    pub b: [String; 2],
    pub lls: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sail: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg_path: Option<String>,
}

impl AngleResult {
    pub fn new(a: &IntVec2, b: &IntVec2, lls: &LlsSeq) -> Self {
        AngleResult {
            a: vector_repr(a),
            b: vector_repr(b),
            lls: lls_repr(lls),
            sail: None,
            svg_path: None,
        }
    }

    pub fn with_sail(mut self, sail: &Sail) -> Self {
        self.sail = Some(sail.vertices.iter().map(vector_repr).collect());
        self
    }
}
