// The full reduction pipeline, with every intermediate printed.
//
// For a matrix M with real irrational eigenvalues: take a seed point P0,
// compute the LLS sequences of the angles (P0, M^4 P0) and (P0, M^6 P0),
// subtract them to expose the period doubled, halve it, and expand every
// cyclic shift of the minimal block into a reduced matrix via continuants.
//
// Run with: cargo run --example reduce

use gauss_reduction::{lls_angle, reduce, seq_difference, IntVec2, Mat2, Word};

fn main() {
    let m = Mat2::new(7, -30, -10, 43);
    println!("input M = {m}   (det {}, trace {})", m.det(), m.trace());

    let p0 = IntVec2::new(1, 1);
    let p1 = m.pow(4).apply(&p0);
    let p2 = m.pow(6).apply(&p0);
    println!("seed P0 = {p0}");
    println!("P1 = M^4 P0 = {p1}");
    println!("P2 = M^6 P0 = {p2}");

    let s1 = lls_angle(&p0, &p1).expect("valid angle");
    let s2 = lls_angle(&p0, &p2).expect("valid angle");
    println!("LLS(P0, P1) = {s1}");
    println!("LLS(P0, P2) = {s2}");

    let diff = seq_difference(s2.as_slice(), s1.as_slice()).expect("difference defined");
    println!("difference  = {}  (the period, twice)", Word::new(diff));

    let reduction = reduce(&m, None).expect("real irrational spectrum");
    println!(
        "period      = {}  (seed {}, {} retries)",
        reduction.computation.period, reduction.computation.seed, reduction.computation.retries
    );

    println!("reduced matrices conjugate to M:");
    for item in &reduction.set.items {
        println!("  {} -> {}", item.word, item.matrix);
    }
}
