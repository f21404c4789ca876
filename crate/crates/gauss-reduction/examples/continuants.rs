// Continuants, words, and exact continued fraction values.
//
// Run with: cargo run --example continuants

use gauss_reduction::{cf_value, continuant, matrix_from_word, Word};

fn main() {
    let word = Word::from_i64s(&[3, -3, -2, 5]);
    println!("word w = {word}");
    for n in 0..=word.len() {
        println!(
            "  K_{n}{} = {}",
            Word::new(word.as_slice()[..n].to_vec()),
            continuant(&word.as_slice()[..n])
        );
    }

    let m = matrix_from_word(&word).unwrap();
    println!("matrix of w: {m}   (det {} = (-1)^{})", m.det(), word.len());

    println!(
        "value of [3; -3: -2]    = {}",
        cf_value(&Word::from_i64s(&[3, -3, -2]))
    );
    println!("value of {word} = {}", cf_value(&word));

    // Zeros and negatives are legal because evaluation runs through the
    // continuant product, never through division.
    let with_zeros = Word::from_i64s(&[-4, 0, 0, 3, 2]);
    println!("value of {with_zeros} = {}", cf_value(&with_zeros));
    let diverging = Word::from_i64s(&[0, 0]);
    println!("value of {diverging} = {}", cf_value(&diverging));

    // Concatenation of words multiplies their matrices.
    let u = Word::from_i64s(&[1, 2]);
    let v = Word::from_i64s(&[3, 4]);
    let product = matrix_from_word(&u)
        .unwrap()
        .mul(&matrix_from_word(&v).unwrap());
    println!(
        "semigroup law: M{} * M{} = M{} = {product}",
        u,
        v,
        u.concat(&v)
    );
}
