//! Gauss reduction theory for GL(2,Z) matrices in exact arithmetic.
//!
//! The crate classifies 2x2 integer matrices with determinant +-1 by their
//! spectra, computes the LLS period of a real-irrational-spectrum matrix
//! through continued fractions, lists every reduced matrix conjugate to it,
//! and decides PGL(2,Z)-conjugacy. Independent geometric and brute-force
//! oracles (lattice sails, bounded conjugator search) validate the
//! continued-fraction pipeline.
//!
//! All arithmetic is arbitrary precision; there are no floating-point or
//! modular shortcuts. Values are immutable and the functions pure, so
//! everything is safe to use from multiple threads.
//!
//! ```
//! use gauss_reduction::{reduced_set, Mat2};
//!
//! let m = Mat2::new(7, -30, -10, 43);
//! let set = reduced_set(&m).unwrap();
//! assert_eq!(set.len(), 4);
//! assert!(set.contains_matrix(&Mat2::new(7, 30, 10, 43)));
//! ```
//!
//! The `examples/` directory walks through each capability; the
//! `gauss-reduce` binary exposes the same operations on the command line.

pub mod cfrac;
pub mod continuants;
pub mod error;
pub mod gauss;
pub mod lattice;
pub mod lls;
pub mod oracle;
pub mod report;
pub mod svg;

pub use cfrac::{cf_expand_odd, long_cf_combine, long_cf_shortcut, OddRegularCF};
pub use continuants::{cf_value, cf_value_rational, continuant, matrix_from_word, CfValue, Word};
pub use error::{Error, Result};
pub use gauss::{
    classify_spectrum, is_conjugate, lls_period, lls_period_detailed, period_of_reduced,
    rational_normal_form, reduce, reduced_set, reduced_set_of_period, Period, PeriodComputation,
    ReducedItem, ReducedSet, Reduction, SpectrumClass, SpectrumKind,
};
pub use lattice::{rational, Int, IntVec2, Mat2, Rational, Sign};
pub use lls::{lls_angle, seq_difference, LlsSeq};
pub use oracle::{
    brute_force_conjugate, integer_length, integer_sine, sail_lls, sail_vertices, Sail,
};
