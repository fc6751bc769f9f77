//! The intersection matrix on `ℓ₁, …, ℓ₆` and its invariance under the deck
//! transformation.

use klein_volume::homology::{HomClass, IntersectionMatrix};

fn main() {
    let k = IntersectionMatrix::klein();
    println!("{k}");
    println!("antisymmetric: {}", k.is_antisymmetric());
    println!("determinant:   {}", k.determinant());

    for j in 1..=7 {
        let l1 = HomClass::loop_class(1);
        let lj = HomClass::loop_class(j);
        let shifted = k.pairing(&l1.shift(), &lj.shift());
        println!("(ℓ1, ℓ{j}) = {:>2}   after shift: {}", k.pairing(&l1, &lj), shifted);
    }
}
