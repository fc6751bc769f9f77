//! Periods, iterated integrals along `ℓ_k`, the quantity `I₁₂₃` and the
//! harmonic-volume values of the Klein quartic.
//!
//! Every closed form here is a ℚ(ζ₇)-linear combination of the numbers
//! `x_{i,j}`. The coefficients are kept exact and only embedded into ℂ at the
//! last step, so the error of a value is the propagated error of the `x_{i,j}`
//! plus the rounding of the embedding.

mod harmonic;
mod report;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{CycElem, CycError};
use crate::homology::{self, HomClass, HomologyError, IntersectionMatrix};
use crate::specfun::{self, BoundKind, NumValue, SeriesPolicy, SeriesValue, SpecfunError};

pub use harmonic::{
    harmonic_values, theorem_display, HarmonicValues, ModValue, TheoremCheck, HEADLINE,
    HEADLINE_TOLERANCE,
};
pub use report::{CsvRow, Headline, IteratedEntry, ReportConfig, VolumeReport, XEntry};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VolumeError {
    #[error("index {name} = {value} out of range")]
    IndexOutOfRange { name: &'static str, value: usize },
    #[error("I123 routes disagree by {difference:e}, combined bound {budget:e}")]
    RouteMismatch { difference: f64, budget: f64 },
    #[error("{name} has imaginary residue {residue:e}, budget {budget:e}")]
    NonRealResult {
        name: &'static str,
        residue: f64,
        budget: f64,
    },
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Cyclotomic(#[from] CycError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

impl VolumeError {
    /// Variant name, for structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            VolumeError::IndexOutOfRange { .. } => "IndexOutOfRange",
            VolumeError::RouteMismatch { .. } => "RouteMismatch",
            VolumeError::NonRealResult { .. } => "NonRealResult",
            VolumeError::Specfun(e) => e.kind(),
            VolumeError::Cyclotomic(_) => "Cyclotomic",
            VolumeError::Homology(_) => "Homology",
        }
    }
}

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Exact cyclotomic closed form, embedded at the end.
    ClosedForm,
    /// Explicit sum over the loops `ℓ₁, …, ℓ₇`.
    BruteForce,
    /// Accelerated ₃F₂ boundary value.
    Series,
    /// Direct quadrature over the simplex.
    Oracle,
    /// Intersection pairing with a Poincaré dual.
    Pairing,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::BruteForce => "brute-force",
            Method::Series => "series",
            Method::Oracle => "oracle",
            Method::Pairing => "pairing",
        }
    }
}

/// A complex value with an absolute error bound (on the modulus).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
    pub error_bound: f64,
    pub bound: BoundKind,
}

impl ComplexValue {
    pub fn new(value: Complex64, error_bound: f64, bound: BoundKind) -> Self {
        Self {
            re: value.re,
            im: value.im,
            error_bound,
            bound,
        }
    }

    pub fn zero() -> Self {
        Self::new(Complex64::new(0.0, 0.0), 0.0, BoundKind::Exact)
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn conj(&self) -> Self {
        Self { im: -self.im, ..*self }
    }

    pub fn add(&self, other: &Self) -> Self {
        let value = self.value() + other.value();
        Self::new(
            value,
            self.error_bound + other.error_bound + rounding(value.norm()),
            self.bound.max(other.bound),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&Self { re: -other.re, im: -other.im, ..*other })
    }

    /// Product with an exact field element.
    pub fn mul_exact(&self, c: &CycElem) -> Self {
        let e = c.embedding();
        let value = self.value() * e.value;
        let error = self.error_bound * e.value.norm()
            + e.error_bound * self.value().norm()
            + self.error_bound * e.error_bound
            + 2.0 * rounding(value.norm());
        Self::new(value, error, self.bound)
    }
}

fn rounding(magnitude: f64) -> f64 {
    magnitude * f64::EPSILON
}

/// `c₀ + Σ c_m·x_m` with exact coefficients and real inputs carrying bounds.
pub fn embed_linear(constant: &CycElem, terms: &[(&CycElem, &NumValue)]) -> ComplexValue {
    let start = ComplexValue::new(
        constant.embedding().value,
        constant.embedding().error_bound,
        BoundKind::Exact,
    );
    terms.iter().fold(start, |acc, (c, x)| {
        let e = c.embedding();
        let value = e.value * x.value;
        let error = e.value.norm() * x.error_bound
            + e.error_bound * x.value.abs()
            + e.error_bound * x.error_bound
            + 2.0 * rounding(value.norm());
        let term = ComplexValue::new(value, error, x.bound);
        let sum = acc.add(&term);
        ComplexValue { bound: acc.bound.max(x.bound), ..sum }
    })
}

fn check_form(i: usize) -> Result<(), VolumeError> {
    if (1..=3).contains(&i) {
        Ok(())
    } else {
        Err(VolumeError::IndexOutOfRange { name: "i", value: i })
    }
}

fn check_loop(k: usize) -> Result<(), VolumeError> {
    if (1..=7).contains(&k) {
        Ok(())
    } else {
        Err(VolumeError::IndexOutOfRange { name: "k", value: k })
    }
}

fn xi_pow(i: usize, e: usize) -> CycElem {
    CycElem::zeta_pow(homology::XI_EXPONENTS[i - 1] * e as i64)
}

/// `∫_{ℓ_k} ω_i` in both normalizations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Period {
    pub form: usize,
    pub loop_index: usize,
    /// `ξ_i^{k−1} − ξ_i^k`, the period of the normalized form `ω_i`.
    pub exact: CycElem,
    pub normalized: ComplexValue,
    /// `∫_{ℓ_k} ω′_i = (ξ_i^{k−1} − ξ_i^k)·B′_i`.
    pub unnormalized: ComplexValue,
    pub method: Method,
}

/// The exact normalized period `ξ_i^{k−1} − ξ_i^k`.
pub fn period_exact(i: usize, k: usize) -> Result<CycElem, VolumeError> {
    check_form(i)?;
    check_loop(k)?;
    Ok(&xi_pow(i, k - 1) - &xi_pow(i, k))
}

pub fn period(i: usize, k: usize) -> Result<Period, VolumeError> {
    let exact = period_exact(i, k)?;
    let base = specfun::base_period(i)?;
    Ok(Period {
        form: i,
        loop_index: k,
        normalized: embed_linear(&exact, &[]),
        unnormalized: embed_linear(&CycElem::zero(), &[(&exact, &base)]),
        exact,
        method: Method::ClosedForm,
    })
}

/// `(λ_i L_{7h_i}, ℓ_k)`, which by duality equals `∫_{ℓ_k} ω_i`.
pub fn dual_period_exact(i: usize, k: usize) -> Result<CycElem, VolumeError> {
    check_loop(k)?;
    let dual = homology::poincare_dual(i)?;
    let k_matrix = IntersectionMatrix::klein();
    Ok(k_matrix.pairing(&dual.class(), &HomClass::loop_class(k as i64)))
}

pub fn dual_period(i: usize, k: usize) -> Result<ComplexValue, VolumeError> {
    Ok(embed_linear(&dual_period_exact(i, k)?, &[]))
}

/// The numbers `x_{i,j}` for all ordered pairs, with `x_{i,i} = 1/2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct XTable {
    values: [[NumValue; 3]; 3],
    series: [[Option<SeriesValue>; 3]; 3],
}

impl XTable {
    /// Evaluates all six off-diagonal `x_{i,j}` independently.
    pub fn compute(policy: &SeriesPolicy) -> Result<Self, VolumeError> {
        let mut values = [[NumValue::exact(0.5); 3]; 3];
        let mut series = [[None; 3]; 3];
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    let x = specfun::x_ij(i, j, policy)?;
                    values[i - 1][j - 1] = x.value;
                    series[i - 1][j - 1] = Some(x.series);
                }
            }
        }
        Ok(Self { values, series })
    }

    /// Builds a table from `x₁₂, x₂₃, x₃₁`, filling the reversed pairs by
    /// the shuffle relation `x_{j,i} = 1 − x_{i,j}`.
    pub fn from_cyclic(x12: NumValue, x23: NumValue, x31: NumValue) -> Self {
        let mut values = [[NumValue::exact(0.5); 3]; 3];
        for ((i, j), x) in [((1, 2), x12), ((2, 3), x23), ((3, 1), x31)] {
            values[i - 1][j - 1] = x;
            values[j - 1][i - 1] = NumValue::exact(1.0).sub(&x);
        }
        Self {
            values,
            series: [[None; 3]; 3],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &NumValue {
        &self.values[i - 1][j - 1]
    }

    pub fn series(&self, i: usize, j: usize) -> Option<&SeriesValue> {
        self.series[i - 1][j - 1].as_ref()
    }
}

/// Exact `(a, b)` with `∫_{ℓ_k} ω_iω_j = a·x_{i,j} + b`:
/// `a = (ξ_iξ_j)^{k−1}(1 − ξ_iξ_j)`, `b = (ξ_iξ_j)^{k−1}(ξ_iξ_j − ξ_j)`.
pub fn iterated_coefficients(i: usize, j: usize, k: usize) -> Result<(CycElem, CycElem), VolumeError> {
    check_form(i)?;
    check_form(j)?;
    check_loop(k)?;
    let prod = &xi_pow(i, 1) * &xi_pow(j, 1);
    let lead = prod.pow(k as u32 - 1);
    let one = CycElem::one();
    let a = &lead * &(&one - &prod);
    let b = &lead * &(&prod - &xi_pow(j, 1));
    Ok((a, b))
}

pub fn iterated_integral(i: usize, j: usize, k: usize, x: &XTable) -> Result<ComplexValue, VolumeError> {
    let (a, b) = iterated_coefficients(i, j, k)?;
    Ok(embed_linear(&b, &[(&a, x.get(i, j))]))
}

/// Exact `(a, b)` with `∫_{ℓ_k}(ω_iω_j − ω_jω_i) = a·x_{i,j} + b`:
/// `a = 2(ξ_iξ_j)^{k−1}(1 − ξ_iξ_j)`, `b = (ξ_iξ_j)^{k−1}(ξ_i − 1)(ξ_j + 1)`.
pub fn antisym_coefficients(i: usize, j: usize, k: usize) -> Result<(CycElem, CycElem), VolumeError> {
    let (a, _) = iterated_coefficients(i, j, k)?;
    let prod = &xi_pow(i, 1) * &xi_pow(j, 1);
    let one = CycElem::one();
    let b = &(&prod.pow(k as u32 - 1) * &(&xi_pow(i, 1) - &one)) * &(&xi_pow(j, 1) + &one);
    Ok((&a + &a, b))
}

pub fn antisym_integral(i: usize, j: usize, k: usize, x: &XTable) -> Result<ComplexValue, VolumeError> {
    let (a, b) = antisym_coefficients(i, j, k)?;
    Ok(embed_linear(&b, &[(&a, x.get(i, j))]))
}

/// `(pair, m)` with `I₁₂₃ = Σ λ_m Σ_k ξ_m^k ∫_{ℓ_k}(ω_iω_j − ω_jω_i)`.
const I123_TERMS: [((usize, usize), usize); 3] = [((1, 2), 3), ((2, 3), 1), ((3, 1), 2)];

/// Exact coefficients `[c₁₂, c₂₃, c₃₁, c₀]` of the closed form
/// `I₁₂₃ = c₁₂x₁₂ + c₂₃x₂₃ + c₃₁x₃₁ + c₀`, namely
/// `14(ζ²−ζ⁶)/(ζ+1)`, `14(ζ⁴−ζ⁵)/(ζ²+1)`, `14(ζ−ζ³)/(ζ⁴+1)` and `−21√−7`.
pub fn i123_closed_form_coefficients() -> [CycElem; 4] {
    let z = CycElem::zeta_pow;
    let one = CycElem::one();
    let fourteen = CycElem::from_int(14);
    let term = |num: CycElem, den: CycElem| -> CycElem {
        &fourteen * &num.checked_div(&den).expect("1 + ζ^k is a unit")
    };
    [
        term(&z(2) - &z(6), &z(1) + &one),
        term(&z(4) - &z(5), &z(2) + &one),
        term(&z(1) - &z(3), &z(4) + &one),
        &CycElem::from_int(-21) * &CycElem::sqrt_minus_seven(),
    ]
}

/// The same coefficients obtained by expanding the sum over `ℓ₁, …, ℓ₇`
/// term by term.
pub fn i123_brute_force_coefficients() -> Result<[CycElem; 4], VolumeError> {
    let mut coeffs: [CycElem; 4] = Default::default();
    for (slot, ((i, j), m)) in I123_TERMS.iter().enumerate() {
        let lambda = homology::lambda(*m);
        for k in 1..=7 {
            let (a, b) = antisym_coefficients(*i, *j, k)?;
            let weight = &lambda * &xi_pow(*m, k);
            coeffs[slot] += &(&weight * &a);
            coeffs[3] += &(&weight * &b);
        }
    }
    Ok(coeffs)
}

/// Both evaluations of `I₁₂₃` and the value carried forward.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct I123 {
    pub closed_form: ComplexValue,
    pub brute_force: ComplexValue,
    /// `|closed_form − brute_force|`.
    pub route_difference: f64,
    /// The closed-form value with the route difference added to its bound.
    pub value: ComplexValue,
}

pub fn i123_closed_form(x: &XTable) -> ComplexValue {
    let [c12, c23, c31, c0] = i123_closed_form_coefficients();
    embed_linear(&c0, &[(&c12, x.get(1, 2)), (&c23, x.get(2, 3)), (&c31, x.get(3, 1))])
}

/// Sums the 21 embedded products `λ_m ξ_m^k · ∫_{ℓ_k}(ω_iω_j − ω_jω_i)`.
pub fn i123_brute_force(x: &XTable) -> Result<ComplexValue, VolumeError> {
    let mut acc = ComplexValue::zero();
    for ((i, j), m) in I123_TERMS {
        let lambda = homology::lambda(m);
        for k in 1..=7 {
            let weight = &lambda * &xi_pow(m, k);
            acc = acc.add(&antisym_integral(i, j, k, x)?.mul_exact(&weight));
        }
    }
    Ok(acc)
}

pub fn i123(x: &XTable) -> Result<I123, VolumeError> {
    compare_routes(i123_closed_form(x), i123_brute_force(x)?)
}

/// Fails with [`VolumeError::RouteMismatch`] when the two evaluations differ
/// by more than the sum of their bounds.
pub fn compare_routes(closed_form: ComplexValue, brute_force: ComplexValue) -> Result<I123, VolumeError> {
    let route_difference = (closed_form.value() - brute_force.value()).norm();
    let budget = closed_form.error_bound + brute_force.error_bound;
    if !(route_difference <= budget) {
        return Err(VolumeError::RouteMismatch {
            difference: route_difference,
            budget,
        });
    }
    Ok(I123 {
        closed_form,
        brute_force,
        route_difference,
        value: ComplexValue {
            error_bound: closed_form.error_bound + route_difference,
            ..closed_form
        },
    })
}
