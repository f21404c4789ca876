// Sails from lattice geometry, and an SVG figure.
//
// The sail of an angle is the boundary of the convex hull of its nonzero
// lattice points, facing the vertex. Edge integer lengths and vertex
// integer sines interleave into the LLS sequence; this geometric reading is
// the independent check of the continued-fraction formula.
//
// Run with: cargo run --example sail

use gauss_reduction::{integer_length, integer_sine, sail_lls, sail_vertices, IntVec2};

fn main() {
    let a = IntVec2::new(8, 2);
    let b = IntVec2::new(6, 21);
    let sail = sail_vertices(&a, &b).unwrap();
    println!("angle A = {a}, B = {b}");
    println!("sail vertices: {sail}");

    let v = &sail.vertices;
    for k in 0..v.len() - 1 {
        if k > 0 {
            let sine = integer_sine(&v[k - 1], &v[k], &v[k + 1]).unwrap();
            println!("  integer sine at {}: {sine}", v[k]);
        }
        let len = integer_length(&v[k], &v[k + 1]).unwrap();
        println!("  edge {} - {}: integer length {len}", v[k], v[k + 1]);
    }
    println!(
        "LLS sequence read from the sail: {}",
        sail_lls(&a, &b).unwrap()
    );

    // Axis vectors are fine for the geometric path.
    let flat = sail_lls(&IntVec2::new(1, 0), &IntVec2::new(1, 5)).unwrap();
    println!("vertical sail ((1,0), (1,5)) reads {flat}");

    let path = std::env::temp_dir().join("sail.svg");
    let figure = gauss_reduction::svg::sail_figure_svg(&a, &b, &sail);
    std::fs::write(&path, figure).expect("writable temp dir");
    println!("figure written to {}", path.display());
}
