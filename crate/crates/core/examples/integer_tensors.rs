//! The integer tensors `(D + D̄)/7` and `(D − D̄)/√−7` and their membership in
//! `(H^{⊗3})′`.

use klein_volume::homology::{build_integer_tensors, check_hprime, IntersectionMatrix};

fn main() {
    let k = IntersectionMatrix::klein();
    let t = build_integer_tensors().expect("exact division");
    for (name, tensor) in [("(D+D̄)/7", &t.plus), ("(D−D̄)/√−7", &t.minus)] {
        let support = tensor.iter().filter(|(_, v)| **v != 0).count();
        println!(
            "{name}: {support} nonzero entries, antisymmetric {}, in (H⊗3)′ {}",
            tensor.is_totally_antisymmetric(),
            check_hprime(tensor, &k)
        );
    }
    println!("entry (1,2,3): plus {}, minus {}", t.plus.get(1, 2, 3), t.minus.get(1, 2, 3));
}
