//! Periods and iterated integrals along the loops, with the shuffle relation
//! `∫ω_iω_j + ∫ω_jω_i = ∫ω_i·∫ω_j`.

use klein_volume::specfun::SeriesPolicy;
use klein_volume::volume::{antisym_integral, iterated_integral, period, XTable};

fn main() {
    let x = XTable::compute(&SeriesPolicy::default()).unwrap();
    for i in 1..=3 {
        let p = period(i, 1).unwrap();
        println!("∫_ℓ1 ω{i} = {}  ≈ {:.6}", p.exact, p.normalized.value());
    }

    let mut worst = 0.0f64;
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=7 {
                let lhs = iterated_integral(i, j, k, &x).unwrap().value() + iterated_integral(j, i, k, &x).unwrap().value();
                let rhs = period(i, k).unwrap().normalized.value() * period(j, k).unwrap().normalized.value();
                worst = worst.max((lhs - rhs).norm());
            }
        }
    }
    println!("shuffle relation, worst of 63 triples: {worst:.1e}");

    for k in 1..=7 {
        let v = antisym_integral(1, 2, k, &x).unwrap();
        println!("∫_ℓ{k} (ω1ω2 − ω2ω1) = {:.10}", v.value());
    }
}
