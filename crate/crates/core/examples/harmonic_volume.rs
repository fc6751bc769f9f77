//! `I₁₂₃` by the closed form and by the explicit loop sum, the two harmonic
//! volume values, and `2·I((D − D̄)/√−7) mod ℤ`.

use klein_volume::specfun::SeriesPolicy;
use klein_volume::volume::{harmonic_values, i123, theorem_display, Headline, XTable};

fn main() {
    let x = XTable::compute(&SeriesPolicy::default()).unwrap();
    let r = i123(&x).unwrap();
    println!("I123 closed form: {:.12}", r.closed_form.value());
    println!("I123 loop sum:    {:.12}", r.brute_force.value());
    println!("route difference: {:.1e}", r.route_difference);

    let v = harmonic_values(&r.value).unwrap();
    println!("I((D+D̄)/7)  mod 1: distance to 0 is {:.1e}", v.v_plus.distance_to_integer);
    println!("I((D−D̄)/√−7) mod 1: {:.10}", v.v_minus.representative);
    let t = theorem_display(&x, &v.v_minus).unwrap();
    println!("theorem display differs by {:.0} (an integer: {})", t.offset, t.agrees);

    let h = Headline::new(&v.twice_v_minus);
    println!(
        "2·I((D−D̄)/√−7) mod 1 = {:.8} ± {:.1e}; 0.72270 matches: {}, mirror 0.27730 matches: {}",
        h.value, h.error_bound, h.matches, h.mirror_matches
    );
}
