use num_complex::Complex64;
use serde::Serialize;

use super::{i123_closed_form_coefficients, ComplexValue, VolumeError, XTable};
use crate::cyclotomic::CycElem;

/// `2·I((D − D̄)/√−7) mod ℤ` as stated for the Klein quartic.
pub const HEADLINE: f64 = 0.72270;
pub const HEADLINE_TOLERANCE: f64 = 1e-5;

/// A real number read modulo ℤ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModValue {
    /// The value before reduction.
    pub raw: f64,
    /// Representative in `[0, 1)`.
    pub representative: f64,
    /// Distance from `raw` to the nearest integer.
    pub distance_to_integer: f64,
    pub error_bound: f64,
}

impl ModValue {
    pub fn new(raw: f64, error_bound: f64) -> Self {
        let mut representative = raw.rem_euclid(1.0);
        if representative >= 1.0 {
            representative = 0.0;
        }
        Self {
            raw,
            representative,
            distance_to_integer: representative.min(1.0 - representative),
            error_bound,
        }
    }

    /// Distance between the two classes in ℝ/ℤ.
    pub fn distance_to(&self, target: f64) -> f64 {
        let d = (self.representative - target).rem_euclid(1.0);
        d.min(1.0 - d)
    }

    pub fn double(&self) -> Self {
        Self::new(2.0 * self.raw, 2.0 * self.error_bound + f64::EPSILON * self.raw.abs())
    }
}

/// `I((D + D̄)/7)`, `I((D − D̄)/√−7)` and twice the latter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HarmonicValues {
    #[serde(rename = "value_plus")]
    pub v_plus: ModValue,
    #[serde(rename = "value_minus")]
    pub v_minus: ModValue,
    #[serde(rename = "twice_value_minus")]
    pub twice_v_minus: ModValue,
    /// Largest imaginary part left after the divisions by 7 and √−7.
    pub imaginary_residue: f64,
}

fn real_part(name: &'static str, z: Complex64, budget: f64) -> Result<f64, VolumeError> {
    if !(z.im.abs() <= budget) {
        return Err(VolumeError::NonRealResult {
            name,
            residue: z.im.abs(),
            budget,
        });
    }
    Ok(z.re)
}

/// Evaluates `(I₁₂₃ + Ī₁₂₃)/7` and `(I₁₂₃ − Ī₁₂₃)/√−7` by complex arithmetic
/// and reduces them mod ℤ. No correction term is added: the η-form vanishes
/// for these integrands because `ω_i ∧ ω_j = 0`.
pub fn harmonic_values(i123: &ComplexValue) -> Result<HarmonicValues, VolumeError> {
    let i = i123.value();
    let sqrt7 = 7f64.sqrt();
    let err = i123.error_bound;

    let plus = (i + i.conj()) / 7.0;
    let plus_bound = 2.0 * err / 7.0 + 2.0 * f64::EPSILON * plus.norm();
    let minus = (i - i.conj()) / Complex64::new(0.0, sqrt7);
    let minus_bound = 2.0 * err / sqrt7 + 4.0 * f64::EPSILON * minus.norm();

    let v_plus = ModValue::new(real_part("v_plus", plus, plus_bound)?, plus_bound);
    let v_minus = ModValue::new(real_part("v_minus", minus, minus_bound)?, minus_bound);
    Ok(HarmonicValues {
        v_plus,
        v_minus,
        twice_v_minus: v_minus.double(),
        imaginary_residue: plus.im.abs().max(minus.im.abs()),
    })
}

/// Cross-check of `v_minus` against the expression
/// `28/√−7·(c₁₂x₁₂ + c₂₃x₂₃ + c₃₁x₃₁)/14` displayed in the theorem, which
/// drops the constant `−21√−7` of `I₁₂₃` and so may differ by an integer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub display: ModValue,
    /// `display.raw − v_minus.raw`.
    pub offset: f64,
    /// Distance of the offset to the nearest integer.
    pub offset_residue: f64,
    pub agrees: bool,
}

pub fn theorem_display(x: &XTable, v_minus: &ModValue) -> Result<TheoremCheck, VolumeError> {
    let [c12, c23, c31, _] = i123_closed_form_coefficients();
    let scale = CycElem::from_int(2).checked_div(&CycElem::sqrt_minus_seven())?;
    let terms = [(&scale * &c12, x.get(1, 2)), (&scale * &c23, x.get(2, 3)), (&scale * &c31, x.get(3, 1))];
    let refs: Vec<_> = terms.iter().map(|(c, v)| (c, *v)).collect();
    let value = super::embed_linear(&CycElem::zero(), &refs);
    let raw = real_part("theorem display", value.value(), value.error_bound)?;
    let display = ModValue::new(raw, value.error_bound);
    let offset = display.raw - v_minus.raw;
    let offset_residue = (offset - offset.round()).abs();
    let slack = display.error_bound + v_minus.error_bound + 8.0 * f64::EPSILON * display.raw.abs().max(1.0);
    Ok(TheoremCheck {
        display,
        offset,
        offset_residue,
        agrees: offset_residue <= slack,
    })
}
