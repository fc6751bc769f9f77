//! Exact arithmetic in ℚ(ζ₇): Galois action, the quadratic subfield and the
//! ideal tests applied to `α₁₂₃`.

use klein_volume::cyclotomic::{ideal_tests, CycElem, QuadElem};
use klein_volume::homology::{alpha, conj_alpha};

fn main() {
    let z = CycElem::zeta();
    let gauss_sum = &(&z + &z.pow(2)) + &z.pow(4);
    println!("ζ + ζ² + ζ⁴ = {gauss_sum}");
    println!("  embedded: {}", gauss_sum.to_complex());
    println!("  in ℚ(√−7): {:?}", QuadElem::from_cyc(&gauss_sum).unwrap());

    let s = CycElem::sqrt_minus_seven();
    println!("√−7 = {s}, squared = {}", &s * &s);
    println!("σ₂(ζ) = {}", z.galois(2).unwrap());

    let a = alpha(1, 2, 3);
    println!("α₁₂₃ = {a}");
    println!("  ideal tests: {:?}", ideal_tests(&a).unwrap());
    let sum = &a + &conj_alpha(1, 2, 3);
    println!("α₁₂₃ + ᾱ₁₂₃ = {sum}, tests: {:?}", ideal_tests(&sum).unwrap());
    let diff = QuadElem::from_cyc(&(&a - &conj_alpha(1, 2, 3))).unwrap();
    println!("(α₁₂₃ − ᾱ₁₂₃)/√−7 = {:?}", diff.div_sqrt_minus_seven());
}
