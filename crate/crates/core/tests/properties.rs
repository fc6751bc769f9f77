use proptest::prelude::*;

use klein_volume::cyclotomic::{det3, ideal_tests, CycElem, QuadElem};
use klein_volume::homology::{HomClass, IntersectionMatrix};
use klein_volume::specfun::{
    beta, gamma, hyp3f2_at_1, klein_params, simplex_oracle, Accel, HypParams, SeriesPolicy,
};

fn cyc() -> impl Strategy<Value = CycElem> {
    prop::array::uniform6(-6i64..=6).prop_map(CycElem::from_int_coeffs)
}

fn matrix() -> impl Strategy<Value = [[CycElem; 3]; 3]> {
    prop::array::uniform3(prop::array::uniform3(cyc()))
}

fn hom_class() -> impl Strategy<Value = HomClass> {
    prop::array::uniform6(-4i64..=4).prop_map(HomClass::from_ints)
}

proptest! {
    #[test]
    fn ring_axioms(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &(-x.clone()), CycElem::zero());
        prop_assert_eq!(&x * &CycElem::one(), x.clone());
    }

    #[test]
    fn embedding_is_a_homomorphism(x in cyc(), y in cyc()) {
        let (ex, ey) = (x.embedding(), y.embedding());
        let exy = (&x * &y).embedding();
        let bound = ex.error_bound * ey.value.norm() + ey.error_bound * ex.value.norm() + exy.error_bound + 1e-13;
        prop_assert!((exy.value - ex.value * ey.value).norm() <= bound);
        let sum = (&x + &y).embedding();
        prop_assert!((sum.value - ex.value - ey.value).norm() <= ex.error_bound + ey.error_bound + sum.error_bound);
    }

    #[test]
    fn sigma_two_has_order_three(x in cyc(), y in cyc()) {
        let s = |v: &CycElem| v.galois(2).unwrap();
        prop_assert_eq!(s(&s(&s(&x))), x.clone());
        prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
        prop_assert_eq!(x.galois(6).unwrap(), x.conj());
    }

    #[test]
    fn inverse_is_two_sided(x in cyc()) {
        prop_assume!(!x.is_zero());
        let inv = x.inverse().unwrap();
        prop_assert_eq!(&x * &inv, CycElem::one());
    }

    #[test]
    fn det3_is_alternating(m in matrix()) {
        let d = det3(&m);
        let swapped = [m[1].clone(), m[0].clone(), m[2].clone()];
        prop_assert_eq!(det3(&swapped), -d);
        let repeated = [m[0].clone(), m[0].clone(), m[2].clone()];
        prop_assert!(det3(&repeated).is_zero());
    }

    #[test]
    fn det3_is_multilinear(m in matrix(), row in prop::array::uniform3(cyc()), c in cyc()) {
        let mut combined = m.clone();
        for k in 0..3 {
            combined[1][k] = &(&c * &m[1][k]) + &row[k];
        }
        let mut replaced = m.clone();
        replaced[1] = row;
        prop_assert_eq!(det3(&combined), &(&c * &det3(&m)) + &det3(&replaced));
    }

    #[test]
    fn quadratic_round_trip(a in -50i64..=50, b in -50i64..=50) {
        let q = QuadElem::from_ints(a, b);
        let c = q.to_cyc();
        prop_assert_eq!(c.galois(2).unwrap(), c.clone());
        prop_assert_eq!(QuadElem::from_cyc(&c).unwrap(), q);
    }

    #[test]
    fn sqrt_minus_seven_membership_gives_integral_quotient(a in -30i64..=30, b in -30i64..=30) {
        let x = QuadElem::from_ints(a, b).to_cyc();
        let flags = ideal_tests(&x).unwrap();
        let quotient = QuadElem::from_cyc(&x).unwrap().div_sqrt_minus_seven();
        prop_assert_eq!(flags.in_sqrt_minus7, quotient.is_integral());
        let multiple = &x * &CycElem::sqrt_minus_seven();
        prop_assert!(ideal_tests(&multiple).unwrap().in_sqrt_minus7);
        prop_assert!(ideal_tests(&multiple).unwrap().in_zeta_minus_1);
    }

    #[test]
    fn pairing_is_shift_invariant(u in hom_class(), v in hom_class()) {
        let k = IntersectionMatrix::klein();
        prop_assert_eq!(k.pairing(&u.shift(), &v.shift()), k.pairing(&u, &v));
        prop_assert_eq!(k.pairing(&u, &v), -k.pairing(&v, &u));
    }
}

fn admissible() -> impl Strategy<Value = (f64, f64, f64, f64, f64)> {
    (0.05f64..0.95, 0.05f64..0.95, 0.05f64..1.5, 0.2f64..1.2, 0.05f64..0.95)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // t_n ~ C·n^{−1−s}, so log(t_{2N}/t_N)/log 2 → −(1 + s)
    #[test]
    fn term_decay_exponent((a1, a2, a3, extra, b1) in admissible()) {
        let b2 = a1 + a2 + a3 + extra - b1;
        prop_assume!(b2 > 0.05);
        let p = HypParams::new([a1, a2, a3], [b1, b2]).unwrap();
        let s = p.margin();
        let n = 20_000usize;
        let terms: Vec<f64> = p.terms().take(2 * n + 1).map(|t| t.to_f64()).collect();
        let slope = (terms[2 * n] / terms[n]).ln() / 2f64.ln();
        prop_assert!((slope + 1.0 + s).abs() <= 0.1 * (1.0 + s), "slope {slope}, s {s}");
    }

    #[test]
    fn gauss_collapse(a in 0.05f64..0.9, b in 0.05f64..0.9, c in 0.1f64..1.5, extra in 0.3f64..1.2) {
        let d = a + b + extra;
        let p = HypParams::new([a, b, c], [d, c]).unwrap();
        let v = hyp3f2_at_1(&p, &SeriesPolicy::default()).unwrap();
        let g = |x: f64| gamma(x).unwrap().value;
        let exact = g(d) * g(d - a - b) / (g(d - a) * g(d - b));
        prop_assert!((v.value.value - exact).abs() <= 1e-9, "{} vs {exact}", v.value.value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    // ∫_{0<t₁<t₂<1} t₁^{a−1}(1−t₁)^{b−1} t₂^{p−1}(1−t₂)^{q−1}
    //   = B(a+p, q)/a · ₃F₂(a, 1−b, a+p; a+1, a+p+q; 1)
    #[test]
    fn simplex_oracle_matches_series(a in 0.1f64..1.0, b in 0.1f64..1.0, p in 0.1f64..1.0, q in 0.1f64..1.0) {
        let tol = 1e-8;
        let oracle = simplex_oracle(a, b, p, q, tol).unwrap();
        let params = HypParams::new([a, 1.0 - b, a + p], [a + 1.0, a + p + q]).unwrap();
        let f = hyp3f2_at_1(&params, &SeriesPolicy { tol: 1e-11, ..Default::default() }).unwrap();
        let series = beta(a + p, q).unwrap().value / a * f.value.value;
        prop_assert!((oracle.value - series).abs() <= 2.0 * tol, "{} vs {series}", oracle.value);
    }
}

#[test]
fn accelerated_and_plain_sums_agree_on_klein_series() {
    let plain = SeriesPolicy {
        tol: 1e-6,
        max_terms: 2_000_000,
        accel: Accel::None,
    };
    for (i, j) in [(1, 2), (2, 3), (3, 1)] {
        let p = klein_params(i, j).unwrap();
        let fast = hyp3f2_at_1(&p, &SeriesPolicy::default()).unwrap().value;
        let slow = hyp3f2_at_1(&p, &plain).unwrap().value;
        let diff = (fast.value - slow.value).abs();
        assert!(diff <= fast.error_bound + slow.error_bound, "({i},{j}): {diff:e}");
    }
}
