//! Poincaré duals `λ_i L_{7h_i}` of the normalized holomorphic forms; pairing
//! them with the loops reproduces the periods exactly.

use klein_volume::homology::{poincare_dual, HomClass, IntersectionMatrix};
use klein_volume::volume::period_exact;

fn main() {
    let k = IntersectionMatrix::klein();
    for i in 1..=3 {
        let dual = poincare_dual(i).unwrap();
        println!("ω{i}: λ = {}", dual.lambda);
        for m in 1..=6 {
            let paired = k.pairing(&dual.class(), &HomClass::loop_class(m));
            let period = period_exact(i, m as usize).unwrap();
            println!("  ℓ{m}: {paired}   {}", if paired == period { "= period" } else { "≠ period" });
        }
    }
}
