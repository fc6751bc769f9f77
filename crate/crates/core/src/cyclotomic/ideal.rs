use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{CycElem, CycError, QuadElem, DEGREE};

/// Principal-ideal memberships of an element of ℤ[ζ₇].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    /// `x ∈ (ζ₇ − 1)ℤ[ζ₇]`.
    pub in_zeta_minus_1: bool,
    /// `x ∈ (√−7)ℤ[(1+√−7)/2]`; false when `x` is not in ℚ(√−7).
    pub in_sqrt_minus7: bool,
    /// `x ∈ 7ℤ`; false when `x` is not a rational integer.
    pub in_7z: bool,
}

/// Exact quotient `x/(ζ − 1)` in ℤ[ζ₇], or `None` when `x` is not a multiple.
///
/// Writing `P(t)` for the reduced polynomial of `x`, `P(t) = (t − 1)Q(t) + P(1)`.
/// Since `ℤ[ζ]/(ζ − 1) ≅ 𝔽₇`, membership holds iff `7 | P(1)`, and then
/// `P(1)/(ζ − 1) = −(P(1)/7)·R(ζ)` with `R(t) = Σ_{j<6} (6 − j)tʲ`.
pub fn divide_by_zeta_minus_one(x: &CycElem) -> Result<Option<CycElem>, CycError> {
    let c = x.int_coeffs().ok_or(CycError::NonIntegral)?;
    // synthetic division by (t − 1), highest degree first
    let mut q = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
    let mut carry = BigInt::zero();
    for k in (1..DEGREE).rev() {
        carry += &c[k];
        q[k - 1] = carry.clone();
    }
    let remainder = carry + &c[0];
    let (m, r) = remainder.div_rem(&BigInt::from(7));
    if !r.is_zero() {
        return Ok(None);
    }
    for (j, qj) in q.iter_mut().enumerate() {
        *qj -= &m * BigInt::from(6 - j as i64);
    }
    Ok(Some(CycElem::from_coeffs(q.map(BigRational::from_integer))))
}

/// Membership tests for `(ζ₇ − 1)`, `(√−7)` and `7ℤ`, all by exact division.
pub fn ideal_tests(x: &CycElem) -> Result<IdealFlags, CycError> {
    let in_zeta_minus_1 = divide_by_zeta_minus_one(x)?.is_some();
    let in_sqrt_minus7 = match QuadElem::from_cyc(x) {
        Ok(q) => q.is_integral() && q.div_sqrt_minus_seven().is_integral(),
        Err(CycError::NotInSubfield) => false,
        Err(e) => return Err(e),
    };
    let in_7z = x
        .as_rational()
        .map(|r| r.to_integer().is_multiple_of(&BigInt::from(7)))
        .unwrap_or(false);
    Ok(IdealFlags {
        in_zeta_minus_1,
        in_sqrt_minus7,
        in_7z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> CycElem {
        CycElem::zeta_pow(k)
    }

    #[test]
    fn generator_is_member() {
        let g = &z(1) - &CycElem::one();
        let flags = ideal_tests(&g).unwrap();
        assert!(flags.in_zeta_minus_1);
        assert!(!flags.in_sqrt_minus7);
        assert!(!flags.in_7z);
        assert_eq!(divide_by_zeta_minus_one(&g).unwrap(), Some(CycElem::one()));
    }

    #[test]
    fn quotient_multiplies_back() {
        let x = CycElem::from_int_coeffs([4, -1, 2, 0, 3, -1]);
        let g = &z(1) - &CycElem::one();
        let y = &x * &g;
        let q = divide_by_zeta_minus_one(&y).unwrap().unwrap();
        assert_eq!(q, x);
        // 7 itself is divisible, 1 is not
        assert!(divide_by_zeta_minus_one(&CycElem::from_int(7)).unwrap().is_some());
        assert!(divide_by_zeta_minus_one(&CycElem::one()).unwrap().is_none());
    }

    #[test]
    fn sqrt_minus_seven_membership() {
        let s = CycElem::sqrt_minus_seven();
        let f = ideal_tests(&s).unwrap();
        assert!(f.in_zeta_minus_1 && f.in_sqrt_minus7 && !f.in_7z);
        let seven = ideal_tests(&CycElem::from_int(14)).unwrap();
        assert!(seven.in_zeta_minus_1 && seven.in_sqrt_minus7 && seven.in_7z);
        let one = ideal_tests(&CycElem::one()).unwrap();
        assert!(!one.in_zeta_minus_1 && !one.in_sqrt_minus7 && !one.in_7z);
        // ω has norm 2, so it is not a multiple of √−7
        assert!(!ideal_tests(&QuadElem::omega()).unwrap().in_sqrt_minus7);
    }

    #[test]
    fn rejects_rational_coefficients() {
        let half = CycElem::from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(ideal_tests(&half), Err(CycError::NonIntegral));
    }
}
