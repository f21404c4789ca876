// LLS sequences of rational angles through the spliced continued fraction.
//
// The ratios of the two vectors expand into odd regular continued
// fractions; reversing one, inserting a zero, and attaching the other
// yields a single fraction whose odd expansion reads off the LLS sequence.
//
// Run with: cargo run --example angle_lls

use gauss_reduction::{
    cf_expand_odd, cf_value, lls_angle, long_cf_combine, long_cf_shortcut, rational, IntVec2, Sign,
};

fn main() {
    let a = IntVec2::new(8, 2);
    let b = IntVec2::new(6, 21);
    println!("angle between A = {a} and B = {b}");

    // The splice, spelled out for this configuration: det(OA, OB) > 0 and
    // p/q > 0, so the ratios are p/q = 4 and r/s = 2/7, with eps = -1 and
    // delta = +1.
    let cf_a = cf_expand_odd(&rational(8, 2)).unwrap();
    let cf_b = cf_expand_odd(&rational(6, 21)).unwrap();
    println!("A-ratio 8/2   expands to {cf_a}");
    println!("B-ratio 6/21  expands to {cf_b}");

    let spliced = long_cf_combine(&cf_a, &cf_b, Sign::Minus, Sign::Plus);
    let alpha = cf_value(&spliced);
    println!("spliced word {spliced} has value {alpha}");

    // The tail-substitution shortcut reaches the same value without
    // expanding the second fraction at all.
    let shortcut = long_cf_shortcut(&cf_a, &rational(6, 21), Sign::Minus);
    println!("shortcut with rational tail 6/21: {shortcut}");

    let lls = lls_angle(&a, &b).unwrap();
    println!("LLS sequence: {lls}");

    println!();
    println!("more angles:");
    for (a, b) in [
        (IntVec2::new(4, -1), IntVec2::new(2, 1)),
        (IntVec2::new(1, 1), IntVec2::new(-2875199, 4119201)),
        (IntVec2::new(-5, 5), IntVec2::new(83, -49)),
    ] {
        println!("  ({a}, {b}) -> {}", lls_angle(&a, &b).unwrap());
    }

    println!();
    println!("preconditions are named when violated:");
    let err = lls_angle(&IntVec2::new(3, 0), &IntVec2::new(1, 1)).unwrap_err();
    println!("  ((3,0), (1,1)) -> error: {err}");
}
