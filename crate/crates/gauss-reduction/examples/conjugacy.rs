// Deciding PGL(2,Z)-conjugacy, with explicit witnesses.
//
// Two matrices are conjugate exactly when their reduced sets coincide
// (real irrational spectra) or their canonical representatives match.
// A bounded brute-force search produces explicit conjugators as an
// independent confirmation.
//
// Run with: cargo run --example conjugacy

use gauss_reduction::{brute_force_conjugate, is_conjugate, matrix_from_word, Mat2, Word};

fn check(a: &Mat2, b: &Mat2, bound: i64) {
    let verdict = is_conjugate(a, b).unwrap();
    print!("{a} ~ {b} ?  {verdict}");
    if verdict {
        match brute_force_conjugate(a, b, bound) {
            Some(c) => println!("   (witness C = {c})"),
            None => println!("   (no witness with entries within {bound})"),
        }
    } else {
        println!();
    }
}

fn main() {
    let m = Mat2::new(7, -30, -10, 43);
    check(&m, &Mat2::new(7, 30, 10, 43), 5);
    check(&m, &m, 3);

    let m11 = matrix_from_word(&Word::from_i64s(&[1, 1])).unwrap();
    let m12 = matrix_from_word(&Word::from_i64s(&[1, 2])).unwrap();
    check(&m11, &m12, 10);

    // A conjugate in disguise: C (M_{2,3}) C^(-1) with a sign flip.
    let m23 = matrix_from_word(&Word::from_i64s(&[2, 3])).unwrap();
    let c = Mat2::new(4, 7, 1, 2);
    let disguised = c.mul(&m23).mul(&c.inverse_unimodular().unwrap()).neg();
    check(&disguised, &m23, 8);

    // Finite-order matrices: negation merges the trace 1 and trace -1
    // complex classes.
    check(&Mat2::new(1, 1, -1, 0), &Mat2::new(0, 1, -1, -1), 2);
    check(&Mat2::new(1, 1, -1, 0), &Mat2::new(0, 1, -1, 0), 4);
}
