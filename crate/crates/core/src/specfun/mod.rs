//! Gamma and Beta functions, ₃F₂ at unit argument, and the simplex-integral
//! oracle used to cross-check the iterated integrals `x_{i,j}`.

pub mod accel;
mod dd;
mod gamma;
mod hyp;
pub mod quadrature;
mod simplex;

use serde::Serialize;
use thiserror::Error;

pub use accel::Accel;
pub use gamma::{beta, gamma, pochhammer, GAMMA_RELATIVE_BOUND};
pub use hyp::{hyp3f2_at_1, HypParams, SeriesPolicy, SeriesValue};
pub use simplex::simplex_oracle;

/// `(h₁, h₂, h₃, h₄)`; the holomorphic forms pull back to
/// `t^{h_i−1}(1−t)^{h_{i+1}−1}dt` along the base path.
pub const H: [f64; 4] = [1.0 / 7.0, 2.0 / 7.0, 4.0 / 7.0, 1.0 / 7.0];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecfunError {
    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),
    #[error("convergence margin s = {0} must be positive at unit argument")]
    MarginViolation(f64),
    #[error("{method} acceleration did not reach tol {tol:.3e} within {max_terms} terms (best {achieved:.3e})")]
    NoConvergence {
        method: Accel,
        max_terms: usize,
        achieved: f64,
        tol: f64,
    },
    #[error("quadrature error {achieved:.3e} did not reach tol {tol:.3e}")]
    SingularityUnresolved { achieved: f64, tol: f64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("x_(i,j) needs distinct i, j in 1..=3, got ({0}, {1})")]
    InvalidPair(usize, usize),
}

impl SpecfunError {
    /// Variant name, for reports that name the failure.
    pub fn kind(&self) -> &'static str {
        match self {
            SpecfunError::NonPositiveArgument(_) => "NonPositiveArgument",
            SpecfunError::MarginViolation(_) => "MarginViolation",
            SpecfunError::NoConvergence { .. } => "NoConvergence",
            SpecfunError::SingularityUnresolved { .. } => "SingularityUnresolved",
            SpecfunError::InvalidParameters(_) => "InvalidParameters",
            SpecfunError::InvalidTolerance(_) => "InvalidTolerance",
            SpecfunError::InvalidPair(..) => "InvalidPair",
        }
    }
}

/// How an error bound was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// Exact arithmetic; the bound only covers final rounding.
    Exact,
    /// A priori approximation error (Lanczos Gamma).
    Analytic,
    /// Step-halving difference of a double-exponential rule.
    Quadrature,
    /// Spread of accelerated estimates.
    Heuristic,
}

/// A real value with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumValue {
    pub value: f64,
    pub error_bound: f64,
    pub bound: BoundKind,
}

impl NumValue {
    pub fn new(value: f64, error_bound: f64, bound: BoundKind) -> Self {
        Self {
            value,
            error_bound,
            bound,
        }
    }

    pub fn exact(value: f64) -> Self {
        Self::new(value, 0.0, BoundKind::Exact)
    }

    fn rounding(value: f64) -> f64 {
        value.abs() * f64::EPSILON
    }

    pub fn add(&self, other: &Self) -> Self {
        let value = self.value + other.value;
        Self::new(
            value,
            self.error_bound + other.error_bound + Self::rounding(value),
            self.bound.max(other.bound),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let value = self.value * other.value;
        let error = self.error_bound * other.value.abs()
            + other.error_bound * self.value.abs()
            + self.error_bound * other.error_bound
            + Self::rounding(value);
        Self::new(value, error, self.bound.max(other.bound))
    }

    pub fn div(&self, other: &Self) -> Self {
        let value = self.value / other.value;
        let denom = other.value.abs() - other.error_bound;
        let error = if denom > 0.0 {
            (self.error_bound + value.abs() * other.error_bound) / denom + Self::rounding(value)
        } else {
            f64::INFINITY
        };
        Self::new(value, error, self.bound.max(other.bound))
    }

    pub fn scale(&self, factor: f64) -> Self {
        let value = self.value * factor;
        Self::new(
            value,
            self.error_bound * factor.abs() + Self::rounding(value),
            self.bound,
        )
    }
}

/// `h_k` for `k = 1..=4`.
pub fn h(k: usize) -> f64 {
    H[k - 1]
}

/// `B′_i = B(h_i, h_{i+1})`, the period of `ω′_i` along the base path.
pub fn base_period(i: usize) -> Result<NumValue, SpecfunError> {
    beta(h(i), h(i + 1))
}

fn check_pair(i: usize, j: usize) -> Result<(), SpecfunError> {
    if i == j || !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(SpecfunError::InvalidPair(i, j));
    }
    Ok(())
}

/// ₃F₂ parameters `(h_i, 1 − h_{i+1}, h_i + h_j; 1 + h_i, h_i + h_j + h_{j+1})`
/// for `x_{i,j}`.
pub fn klein_params(i: usize, j: usize) -> Result<HypParams, SpecfunError> {
    check_pair(i, j)?;
    HypParams::new(
        [h(i), 1.0 - h(i + 1), h(i) + h(j)],
        [1.0 + h(i), h(i) + h(j) + h(j + 1)],
    )
}

/// `B(h_i + h_j, h_{j+1}) / (h_i B′_i B′_j)`, the factor in front of the
/// ₃F₂ limit in `x_{i,j}`.
pub fn x_prefactor(i: usize, j: usize) -> Result<NumValue, SpecfunError> {
    check_pair(i, j)?;
    let num = beta(h(i) + h(j), h(j + 1))?;
    let den = base_period(i)?.mul(&base_period(j)?).scale(h(i));
    Ok(num.div(&den))
}

/// `x_{i,j}` together with the series evaluation that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XValue {
    pub value: NumValue,
    pub series: SeriesValue,
}

/// The normalized iterated integral `x_{i,j} = ∫_{e₀} ω_i ω_j` via the
/// ₃F₂ boundary value; `policy.tol` is the target for `x_{i,j}` itself.
pub fn x_ij(i: usize, j: usize, policy: &SeriesPolicy) -> Result<XValue, SpecfunError> {
    let prefactor = x_prefactor(i, j)?;
    let params = klein_params(i, j)?;
    let series_policy = SeriesPolicy {
        tol: 0.5 * policy.tol / prefactor.value.abs(),
        ..*policy
    };
    let series = hyp3f2_at_1(&params, &series_policy)?;
    Ok(XValue {
        value: prefactor.mul(&series.value),
        series,
    })
}

/// `x_{i,j}` by direct quadrature over the simplex, independent of the
/// series route.
pub fn x_ij_by_quadrature(i: usize, j: usize, tol: f64) -> Result<NumValue, SpecfunError> {
    check_pair(i, j)?;
    let norm = base_period(i)?.mul(&base_period(j)?);
    let integral = simplex_oracle(h(i), h(i + 1), h(j), h(j + 1), tol * norm.value)?;
    Ok(integral.div(&norm))
}

#[cfg(test)]
mod tests {
    use super::*;

    // 30-digit reference values from an independent arbitrary-precision
    // evaluation of the same ₃F₂ representation
    const X12: f64 = 0.549_009_449_536_074_9;
    const X23: f64 = 0.853_686_708_148_930_8;
    const X31: f64 = 0.169_083_122_329_291_5;

    #[test]
    fn numvalue_arithmetic_propagates_bounds() {
        let a = NumValue::new(2.0, 0.1, BoundKind::Analytic);
        let b = NumValue::new(4.0, 0.2, BoundKind::Heuristic);
        let p = a.mul(&b);
        assert_eq!(p.value, 8.0);
        assert!(p.error_bound >= 0.1 * 4.0 + 0.2 * 2.0);
        assert_eq!(p.bound, BoundKind::Heuristic);
        let q = a.div(&b);
        assert!((q.value - 0.5).abs() < 1e-16 && q.error_bound > 0.0);
        let d = a.sub(&a);
        assert_eq!(d.value, 0.0);
        assert!(d.error_bound >= 0.2);
    }

    #[test]
    fn x_values_against_reference() {
        let policy = SeriesPolicy::default();
        for (i, j, expected) in [(1, 2, X12), (2, 3, X23), (3, 1, X31)] {
            let x = x_ij(i, j, &policy).unwrap();
            assert!((x.value.value - expected).abs() < 1e-12, "x_{i}{j}: {}", x.value.value - expected);
            assert!(x.value.error_bound <= 1e-9);
        }
    }

    #[test]
    fn shuffle_pairs_sum_to_one() {
        let policy = SeriesPolicy::default();
        for (i, j) in [(1, 2), (2, 3), (3, 1)] {
            let a = x_ij(i, j, &policy).unwrap().value.value;
            let b = x_ij(j, i, &policy).unwrap().value.value;
            assert!((a + b - 1.0).abs() < 1e-11, "({i},{j}): {}", a + b - 1.0);
            assert!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0);
        }
    }

    #[test]
    fn pairs_are_validated() {
        let policy = SeriesPolicy::default();
        assert!(matches!(x_ij(1, 1, &policy), Err(SpecfunError::InvalidPair(1, 1))));
        assert!(x_ij(0, 2, &policy).is_err());
        assert!(x_ij(1, 4, &policy).is_err());
    }

    #[test]
    fn klein_margins() {
        let m = |i, j| klein_params(i, j).unwrap().margin();
        assert!((m(1, 2) - 6.0 / 7.0).abs() < 1e-15);
        assert!((m(2, 3) - 5.0 / 7.0).abs() < 1e-15);
        assert!((m(3, 1) - 3.0 / 7.0).abs() < 1e-15);
    }
}
