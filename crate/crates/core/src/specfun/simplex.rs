use std::cell::RefCell;

use super::gamma::beta;
use super::quadrature::tanh_sinh_unit;
use super::{BoundKind, NumValue, SpecfunError};

/// `∫_Δ u^{a−1}(1−u)^{b−1} v^{p−1}(1−v)^{q−1} du dv` over
/// `Δ = {0 ≤ u ≤ v ≤ 1}`, by nested tanh-sinh quadrature.
///
/// The substitution `u = v·w` maps Δ onto the unit square:
/// `∫₀¹∫₀¹ v^{a+p−1}(1−v)^{q−1} w^{a−1}(1−vw)^{b−1} dw dv`, and
/// `1 − vw = (1 − v) + v(1 − w)` is formed from complements so the corner
/// singularity at `v = w = 1` keeps full relative precision.
pub fn simplex_oracle(a: f64, b: f64, p: f64, q: f64, tol: f64) -> Result<NumValue, SpecfunError> {
    let admissible = [a, b, p, q].iter().all(|&x| x > 0.0 && x.is_finite());
    if !admissible {
        return Err(SpecfunError::InvalidParameters(format!(
            "simplex integral needs a, b, p, q > 0, got ({a}, {b}, {p}, {q})"
        )));
    }
    if !(tol > 0.0) {
        return Err(SpecfunError::InvalidTolerance(tol));
    }
    // the outer weight integrates to B(a+p, q), which scales the inner error
    let weight = beta(a + p, q)?.value.max(1.0);
    let inner_tol = 0.01 * tol / weight;
    let failure: RefCell<Option<SpecfunError>> = RefCell::new(None);

    let inner = |v: f64, vc: f64| -> f64 {
        let r = tanh_sinh_unit(
            |w, wc| w.powf(a - 1.0) * (vc + v * wc).powf(b - 1.0),
            inner_tol,
        );
        match r {
            Ok(r) => r.value,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    };
    let outer = tanh_sinh_unit(
        |v, vc| v.powf(a + p - 1.0) * vc.powf(q - 1.0) * inner(v, vc),
        0.99 * tol,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let outer = outer?;
    Ok(NumValue::new(
        outer.value,
        outer.error_bound + inner_tol * weight,
        BoundKind::Quadrature,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_exponents_give_triangle_area() {
        let r = simplex_oracle(1.0, 1.0, 1.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
    }

    #[test]
    fn polynomial_integrand() {
        // a=2, b=1, p=1, q=1: ∫₀¹∫₀^v u du dv = 1/6
        let r = simplex_oracle(2.0, 1.0, 1.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn bounded_by_product_of_betas() {
        let h = [1.0 / 7.0, 2.0 / 7.0, 4.0 / 7.0, 1.0 / 7.0];
        let r = simplex_oracle(h[0], h[1], h[1], h[2], 1e-9).unwrap();
        let cap = beta(h[0], h[1]).unwrap().value * beta(h[1], h[2]).unwrap().value;
        assert!(r.value > 0.0 && r.value < cap);
    }

    #[test]
    fn rejects_inadmissible() {
        assert!(simplex_oracle(0.0, 0.5, 1.0, 1.0, 1e-9).is_err());
        assert!(simplex_oracle(0.5, 0.5, -1.0, 1.0, 1e-9).is_err());
        assert!(simplex_oracle(0.5, 0.5, 1.0, 1.0, 0.0).is_err());
    }
}
