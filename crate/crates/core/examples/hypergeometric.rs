//! ₃F₂ at unit argument under each accelerator, on a Gauss-summable case and
//! on the series behind `x₃₁` (margin 3/7, the slowest of the three).

use klein_volume::specfun::{gamma, hyp3f2_at_1, klein_params, Accel, HypParams, SeriesPolicy};

fn main() {
    let (a, b, c, d) = (0.25, 0.5, 0.8, 1.3);
    let p = HypParams::new([a, b, c], [d, c]).unwrap();
    let g = |x: f64| gamma(x).unwrap().value;
    let exact = g(d) * g(d - a - b) / (g(d - a) * g(d - b));
    println!("Gauss case, exact {exact:.15}");
    for accel in [Accel::Levin, Accel::Richardson] {
        let r = hyp3f2_at_1(&p, &SeriesPolicy { accel, ..Default::default() }).unwrap();
        println!("  {accel:>10}: {:.15}  err {:.1e}  terms {}", r.value.value, r.value.value - exact, r.terms_used);
    }

    let k = klein_params(3, 1).unwrap();
    println!("x31 series, margin s = {:.6}", k.margin());
    for (accel, max_terms) in [(Accel::Levin, 2_000_000), (Accel::Richardson, 2_000_000), (Accel::None, 2_000_000)] {
        let policy = SeriesPolicy { tol: 1e-6, max_terms, accel };
        match hyp3f2_at_1(&k, &policy) {
            Ok(r) => println!(
                "  {accel:>10}: {:.12} ± {:.1e} ({} terms)",
                r.value.value, r.value.error_bound, r.terms_used
            ),
            Err(e) => println!("  {accel:>10}: {e}"),
        }
    }
    println!("  partial sum of 1000 terms: {:.12}", k.partial_sum(1000));
}
