// Spectral trichotomy of GL(2,Z) matrices.
//
// Every matrix with determinant +-1 has complex, rational, or real
// irrational eigenvalues, and the first two cases collapse onto a short
// list of canonical representatives.
//
// Run with: cargo run --example classify

use gauss_reduction::{classify_spectrum, Mat2};

fn main() {
    let samples = [
        ("order-6 rotation-like", Mat2::new(1, 1, -1, 0)),
        ("quarter turn", Mat2::new(0, 1, -1, 0)),
        ("identity", Mat2::new(1, 0, 0, 1)),
        ("shear", Mat2::new(1, 4, 0, 1)),
        ("reflection", Mat2::new(-1, 0, 0, 1)),
        ("swap", Mat2::new(0, 1, 1, 0)),
        ("hyperbolic", Mat2::new(7, -30, -10, 43)),
        ("Fibonacci step", Mat2::new(0, 1, 1, 1)),
    ];

    for (name, m) in &samples {
        let class = classify_spectrum(m).expect("all samples are unimodular");
        match &class.representative {
            Some(rep) => println!("{name:22} {m}  ->  {} (representative {rep})", class.kind),
            None => println!("{name:22} {m}  ->  {}", class.kind),
        }
    }

    println!();
    println!("det 0 or |det| > 1 is rejected:");
    let err = classify_spectrum(&Mat2::new(2, 0, 0, 2)).unwrap_err();
    println!("  [[2, 0], [0, 2]] -> error: {err}");
}
