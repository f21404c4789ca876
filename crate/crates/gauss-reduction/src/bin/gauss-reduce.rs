//! Command-line interface to the reduction pipeline.
//!
//! Matrices are four whitespace- or comma-separated integers in row-major
//! order `p r q s`; vectors are two integers `x y`. Without a matrix
//! argument, `classify`, `period` and `reduce` read one matrix per line from
//! standard input and emit one result per line, preserving input order.
//!
//! Exit codes: 0 ok, 2 parse error, 3 not unimodular, 4 wrong spectral kind,
//! 5 angle precondition, 6 internal assertion or verification mismatch.

use std::io::BufRead;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_traits::{Signed, Zero};

use gauss_reduction::gauss::{self, SpectrumKind};
use gauss_reduction::report::{matrix_repr, AngleResult, ConjugacyResult, JobResult};
use gauss_reduction::{
    brute_force_conjugate, cf_expand_odd, classify_spectrum, lls_angle, long_cf_shortcut, rational,
    sail_lls, sail_vertices, CfValue, Error, Int, IntVec2, LlsSeq, Mat2, Sign,
};

const PARSE_EXIT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "gauss-reduce",
    about = "Gauss reduction theory for GL(2,Z) matrices in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Emit a single JSON document per job instead of human-readable text.
    #[arg(long)]
    json: bool,
    /// Re-check the result through an independent route; mismatches exit 6.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a matrix by its spectrum (complex / rational / realIrrational).
    Classify {
        /// Matrix "p r q s"; omit to read one matrix per line from stdin.
        #[arg(allow_hyphen_values = true)]
        matrix: Option<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Compute the LLS period of a real-irrational-spectrum matrix.
    Period {
        #[arg(allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Seed point "x,y" tried before the default schedule.
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// List all reduced matrices conjugate to the input.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Decide PGL(2,Z)-conjugacy of two matrices.
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        matrix_a: String,
        #[arg(allow_hyphen_values = true)]
        matrix_b: String,
        /// Search for an explicit conjugator and print it when found.
        #[arg(long)]
        witness: bool,
        /// Entry bound for the witness search.
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// LLS sequence of the angle between two lattice vectors.
    Lls {
        #[arg(allow_hyphen_values = true)]
        vector_a: String,
        #[arg(allow_hyphen_values = true)]
        vector_b: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Sail of the angle between two lattice vectors, optionally as SVG.
    Sail {
        #[arg(allow_hyphen_values = true)]
        vector_a: String,
        #[arg(allow_hyphen_values = true)]
        vector_b: String,
        /// Write a figure of the angle, lattice points, and sail polyline.
        #[arg(long, value_name = "PATH")]
        svg: Option<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn parse_ints(s: &str, expected: usize, what: &str) -> Result<Vec<Int>, String> {
    let parts: Vec<&str> = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|p| !p.is_empty())
        .collect();
    if parts.len() != expected {
        return Err(format!(
            "expected {expected} integers for {what}, got {} in {s:?}",
            parts.len()
        ));
    }
    parts
        .iter()
        .map(|p| Int::from_str(p).map_err(|e| format!("bad integer {p:?} in {what}: {e}")))
        .collect()
}

fn parse_matrix(s: &str) -> Result<Mat2, String> {
    let v = parse_ints(s, 4, "matrix")?;
    let mut it = v.into_iter();
    Ok(Mat2 {
        a11: it.next().unwrap(),
        a12: it.next().unwrap(),
        a21: it.next().unwrap(),
        a22: it.next().unwrap(),
    })
}

fn parse_vector(s: &str) -> Result<IntVec2, String> {
    let v = parse_ints(s, 2, "vector")?;
    let mut it = v.into_iter();
    Ok(IntVec2 {
        x: it.next().unwrap(),
        y: it.next().unwrap(),
    })
}

fn fail_parse(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(PARSE_EXIT)
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(err.exit_code() as u8)
}

fn mismatch(msg: &str) -> ExitCode {
    eprintln!("verification mismatch: {msg}");
    ExitCode::from(6)
}

fn emit<T: serde::Serialize>(json: bool, doc: &T, human: String) {
    if json {
        println!("{}", serde_json::to_string(doc).expect("serializable"));
    } else {
        println!("{human}");
    }
}

fn run_classify(m: &Mat2, common: &CommonFlags) -> Result<(), ExitCode> {
    let class = classify_spectrum(m).map_err(|e| fail(&e))?;
    if common.verify {
        // Independent route: spectral kind from the sign / squareness of the
        // discriminant computed directly.
        let disc = m.trace() * m.trace() - Int::from(4) * m.det();
        let square = !disc.is_negative() && {
            let r = disc.sqrt();
            &r * &r == disc
        };
        let expected = if disc.is_negative() {
            SpectrumKind::Complex
        } else if square {
            SpectrumKind::Rational
        } else {
            SpectrumKind::RealIrrational
        };
        if expected != class.kind {
            return Err(mismatch("discriminant recomputation disagrees with kind"));
        }
    }
    let doc = JobResult::classified(m, &class);
    let human = match &class.representative {
        Some(rep) => format!("{}: {} (representative {})", m, class.kind, rep),
        None => format!("{}: {}", m, class.kind),
    };
    emit(common.json, &doc, human);
    Ok(())
}

fn run_period_or_reduce(
    m: &Mat2,
    seed: Option<&IntVec2>,
    with_set: bool,
    common: &CommonFlags,
) -> Result<(), ExitCode> {
    let reduction = gauss::reduce(m, seed).map_err(|e| fail(&e))?;
    if common.verify {
        // Every emitted word must regenerate the same canonical period.
        let canon = reduction.computation.period.canonical_rotation();
        for item in &reduction.set.items {
            let again = gauss::lls_period(&item.matrix, None).map_err(|e| fail(&e))?;
            if again.canonical_rotation() != canon {
                return Err(mismatch(&format!(
                    "reduced matrix {} regenerates period {} instead of {}",
                    item.matrix,
                    again.canonical_rotation(),
                    canon
                )));
            }
            if item.matrix.det() != m.det() || item.matrix.trace().abs() != m.trace().abs() {
                return Err(mismatch("trace/determinant invariant violated"));
            }
        }
    }
    let doc = JobResult::reduced(m, &reduction, with_set);
    let mut human = format!(
        "{}: period {} (seed {}, retries {})",
        m, reduction.computation.period, reduction.computation.seed, reduction.computation.retries
    );
    if with_set {
        for item in &reduction.set.items {
            human.push_str(&format!("\n  {} -> {}", item.word, item.matrix));
        }
    }
    emit(common.json, &doc, human);
    Ok(())
}

fn run_conjugate(
    a: &Mat2,
    b: &Mat2,
    witness: bool,
    bound: i64,
    common: &CommonFlags,
) -> Result<(), ExitCode> {
    let conjugate = gauss::is_conjugate(a, b).map_err(|e| fail(&e))?;
    if common.verify {
        let sym = gauss::is_conjugate(b, a).map_err(|e| fail(&e))?;
        if sym != conjugate {
            return Err(mismatch("conjugacy decision is not symmetric"));
        }
        if conjugate && (a.det() != b.det() || a.trace().abs() != b.trace().abs()) {
            return Err(mismatch("conjugate matrices must share |trace| and det"));
        }
    }
    let found = if witness && conjugate {
        brute_force_conjugate(a, b, bound)
    } else {
        None
    };
    let doc = ConjugacyResult {
        a: matrix_repr(a),
        b: matrix_repr(b),
        conjugate,
        witness: found.as_ref().map(matrix_repr),
    };
    let mut human = format!("{conjugate}");
    if witness && conjugate {
        match &found {
            Some(c) => human.push_str(&format!(" (witness {c})")),
            None => human.push_str(&format!(" (no witness with entries within {bound})")),
        }
    }
    emit(common.json, &doc, human);
    Ok(())
}

/// Cross-check an LLS sequence through the tail-substitution shortcut, which
/// works at any coordinate size.
fn shortcut_lls(a: &IntVec2, b: &IntVec2) -> Result<LlsSeq, Error> {
    let det = a.det(b);
    let sign_pq = Sign::of_ratio(&a.x, &a.y).ok_or(Error::AxisProportional {
        which: "A",
        vector: a.to_string(),
    })?;
    let sign_det = Sign::of(&det).ok_or(Error::CollinearVectors {
        a: a.to_string(),
        b: b.to_string(),
    })?;
    let (ratio_a, tail) = match sign_det * sign_pq {
        Sign::Minus => (
            rational(a.y.clone(), a.x.clone()).abs(),
            rational(b.y.clone(), b.x.clone()),
        ),
        Sign::Plus => (
            rational(a.x.clone(), a.y.clone()).abs(),
            rational(b.x.clone(), b.y.clone()),
        ),
    };
    let cf_a = cf_expand_odd(&ratio_a)?;
    let alpha = match long_cf_shortcut(&cf_a, &tail, -sign_pq) {
        CfValue::Finite(v) => v,
        CfValue::Infinite => {
            return Err(Error::InternalAssertion(
                "shortcut evaluation diverged".to_string(),
            ))
        }
    };
    let expansion = cf_expand_odd(&alpha.abs())?;
    let c = expansion.elements().as_slice();
    Ok(LlsSeq(if c[0].is_zero() {
        c[2..].to_vec()
    } else {
        c.to_vec()
    }))
}

fn run_lls(a: &IntVec2, b: &IntVec2, common: &CommonFlags) -> Result<(), ExitCode> {
    let lls = lls_angle(a, b).map_err(|e| fail(&e))?;
    if common.verify {
        let via_shortcut = shortcut_lls(a, b).map_err(|e| fail(&e))?;
        if via_shortcut != lls {
            return Err(mismatch("shortcut evaluation disagrees with full splice"));
        }
        // Geometry agrees too, whenever the coordinates are small enough for
        // exhaustive enumeration.
        match sail_lls(a, b) {
            Ok(geo) => {
                if geo != lls {
                    return Err(mismatch("sail geometry disagrees with formula"));
                }
            }
            Err(Error::GuardExceeded { .. }) => {}
            Err(e) => return Err(fail(&e)),
        }
    }
    let doc = AngleResult::new(a, b, &lls);
    emit(common.json, &doc, format!("{lls}"));
    Ok(())
}

fn run_sail(
    a: &IntVec2,
    b: &IntVec2,
    svg: Option<&str>,
    common: &CommonFlags,
) -> Result<(), ExitCode> {
    let sail = sail_vertices(a, b).map_err(|e| fail(&e))?;
    let lls = sail_lls(a, b).map_err(|e| fail(&e))?;
    if common.verify {
        // Formula route, applicable unless a vector sits on an axis.
        match lls_angle(a, b) {
            Ok(formula) => {
                if formula != lls {
                    return Err(mismatch("formula disagrees with sail geometry"));
                }
            }
            Err(Error::AxisProportional { .. }) => {}
            Err(e) => return Err(fail(&e)),
        }
    }
    let mut doc = AngleResult::new(a, b, &lls).with_sail(&sail);
    let mut human = format!("sail: {sail}\nlls: {lls}");
    if let Some(path) = svg {
        let figure = gauss_reduction::svg::sail_figure_svg(a, b, &sail);
        if let Err(e) = std::fs::write(path, figure) {
            eprintln!("error: cannot write {path}: {e}");
            return Err(ExitCode::from(1));
        }
        doc.svg_path = Some(path.to_string());
        human.push_str(&format!("\nsvg written to {path}"));
    }
    emit(common.json, &doc, human);
    Ok(())
}

/// Runs a per-matrix job either on the argument or on every stdin line.
fn matrix_driver(
    matrix: Option<&str>,
    mut job: impl FnMut(&Mat2) -> Result<(), ExitCode>,
) -> ExitCode {
    match matrix {
        Some(s) => match parse_matrix(s) {
            Ok(m) => job(&m).err().unwrap_or(ExitCode::SUCCESS),
            Err(msg) => fail_parse(&msg),
        },
        None => {
            let stdin = std::io::stdin();
            let mut status = ExitCode::SUCCESS;
            let mut failed = false;
            for line in stdin.lock().lines() {
                let line = match line {
                    Ok(l) => l,
                    Err(e) => {
                        eprintln!("error: cannot read stdin: {e}");
                        return ExitCode::from(1);
                    }
                };
                if line.trim().is_empty() {
                    continue;
                }
                let outcome = match parse_matrix(&line) {
                    Ok(m) => job(&m),
                    Err(msg) => Err(fail_parse(&msg)),
                };
                if let Err(code) = outcome {
                    if !failed {
                        status = code;
                        failed = true;
                    }
                }
            }
            status
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Classify { matrix, common } => {
            matrix_driver(matrix.as_deref(), |m| run_classify(m, common))
        }
        Command::Period {
            matrix,
            seed,
            common,
        }
        | Command::Reduce {
            matrix,
            seed,
            common,
        } => {
            let with_set = matches!(&cli.command, Command::Reduce { .. });
            let seed_point = match seed.as_deref().map(parse_vector).transpose() {
                Ok(p) => p,
                Err(msg) => return fail_parse(&msg),
            };
            matrix_driver(matrix.as_deref(), |m| {
                run_period_or_reduce(m, seed_point.as_ref(), with_set, common)
            })
        }
        Command::Conjugate {
            matrix_a,
            matrix_b,
            witness,
            bound,
            common,
        } => {
            let (a, b) = match (parse_matrix(matrix_a), parse_matrix(matrix_b)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(msg), _) | (_, Err(msg)) => return fail_parse(&msg),
            };
            run_conjugate(&a, &b, *witness, *bound, common)
                .err()
                .unwrap_or(ExitCode::SUCCESS)
        }
        Command::Lls {
            vector_a,
            vector_b,
            common,
        } => {
            let (a, b) = match (parse_vector(vector_a), parse_vector(vector_b)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(msg), _) | (_, Err(msg)) => return fail_parse(&msg),
            };
            run_lls(&a, &b, common).err().unwrap_or(ExitCode::SUCCESS)
        }
        Command::Sail {
            vector_a,
            vector_b,
            svg,
            common,
        } => {
            let (a, b) = match (parse_vector(vector_a), parse_vector(vector_b)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(msg), _) | (_, Err(msg)) => return fail_parse(&msg),
            };
            run_sail(&a, &b, svg.as_deref(), common)
                .err()
                .unwrap_or(ExitCode::SUCCESS)
        }
    }
}
