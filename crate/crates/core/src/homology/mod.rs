//! First homology of the Klein quartic `y⁷ = x(1 − x)²`.
//!
//! The basis is `ℓ₁, …, ℓ₆` where `ℓ_k = σ^{k−1}(e₀)·σ^k(e₀)⁻¹` and `σ` is the
//! deck transformation `y ↦ ζ₇y`. The seventh loop satisfies
//! `ℓ₇ = −(ℓ₁ + … + ℓ₆)` and is always stored reduced.

mod intersection;
mod tensor;

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{CycElem, CycError};

pub use intersection::{IntersectionMatrix, FIRST_ROW, PRINTED, RANK};
pub use tensor::{
    alpha, alpha_tensor, alpha_tensor_from_eigenvectors, build_integer_tensors, check_hprime,
    conj_alpha, conj_alpha_tensor, contractions, IntegerTensors, Tensor3,
};

/// Exponents `7h_i` with `ξ_i = ζ₇^{7h_i}`, for the forms ω₁, ω₂, ω₃.
pub const XI_EXPONENTS: [i64; 3] = [1, 2, 4];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HomologyError {
    #[error("entry ({p},{q},{r}) is not exactly divisible: {detail}")]
    DivisionFailure {
        p: usize,
        q: usize,
        r: usize,
        detail: String,
    },
    #[error("index {0} out of range")]
    IndexOutOfRange(i64),
    #[error(transparent)]
    Cyclotomic(#[from] CycError),
}

/// A class in `H₁(C; ℚ(ζ₇))` in coordinates over `ℓ₁, …, ℓ₆`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomClass {
    coords: [CycElem; RANK],
}

impl HomClass {
    pub fn zero() -> Self {
        Self {
            coords: std::array::from_fn(|_| CycElem::zero()),
        }
    }

    pub fn from_coords(coords: [CycElem; RANK]) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: [i64; RANK]) -> Self {
        Self {
            coords: coords.map(CycElem::from_int),
        }
    }

    /// The loop class `ℓ_k` for any integer `k`, indices mod 7; `ℓ₇ = ℓ₀` is
    /// returned reduced.
    pub fn loop_class(k: i64) -> Self {
        let k = k.rem_euclid(7);
        if k == 0 {
            return Self::from_ints([-1; RANK]);
        }
        let mut c = [0; RANK];
        c[k as usize - 1] = 1;
        Self::from_ints(c)
    }

    pub fn coords(&self) -> &[CycElem; RANK] {
        &self.coords
    }

    /// Coordinates as integers, when all are rational integers.
    pub fn int_coords(&self) -> Option<[i64; RANK]> {
        let mut out = [0i64; RANK];
        for (o, c) in out.iter_mut().zip(self.coords.iter()) {
            let r = c.as_rational()?;
            if !r.is_integer() {
                return None;
            }
            *o = i64::try_from(r.to_integer()).ok()?;
        }
        Some(out)
    }

    pub fn scale(&self, s: &CycElem) -> Self {
        Self {
            coords: std::array::from_fn(|i| s * &self.coords[i]),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coords: std::array::from_fn(|i| &self.coords[i] + &other.coords[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coords: std::array::from_fn(|i| &self.coords[i] - &other.coords[i]),
        }
    }

    /// Coordinate-wise complex conjugation.
    pub fn conj(&self) -> Self {
        Self {
            coords: std::array::from_fn(|i| self.coords[i].conj()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(CycElem::is_zero)
    }

    /// The deck action `σ_*(ℓ_m) = ℓ_{m+1}`, with `ℓ₆ ↦ ℓ₇ = −Σ ℓ_k`.
    pub fn shift(&self) -> Self {
        let top = &self.coords[RANK - 1];
        Self {
            coords: std::array::from_fn(|i| {
                let carried = if i == 0 {
                    CycElem::zero()
                } else {
                    self.coords[i - 1].clone()
                };
                &carried - top
            }),
        }
    }
}

/// The eigenvector `L_k = Σ_{m=1}^{7} ζ₇^{mk} ℓ_m` of the deck action.
///
/// After reducing `ℓ₇`, the `ℓ_m` coordinate is `ζ₇^{mk} − ζ₇^{7k} = ζ₇^{mk} − 1`.
pub fn l_vector(k: i64) -> HomClass {
    let mut acc = HomClass::zero();
    for m in 1..=7 {
        acc = acc.add(&HomClass::loop_class(m).scale(&CycElem::zeta_pow(m * k)));
    }
    acc
}

/// Poincaré dual of a normalized holomorphic form: `P.D.(ω_i) = λ_i·L_{7h_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareDual {
    /// Which form, 1..=3.
    pub form: usize,
    /// `7h_i`, the eigenvector index.
    pub exponent: i64,
    pub lambda: CycElem,
    pub eigenvector: HomClass,
}

impl PoincareDual {
    /// `λ_i L_{7h_i}` as a single class.
    pub fn class(&self) -> HomClass {
        self.eigenvector.scale(&self.lambda)
    }

    /// Dual of the conjugate form `ω̄_i`, namely `λ̄_i L̄_{7h_i}`.
    pub fn conj_class(&self) -> HomClass {
        self.eigenvector.conj().scale(&self.lambda.conj())
    }
}

/// `ξ_i = ζ₇^{7h_i}` for `i = 1, 2, 3`.
pub fn xi(i: usize) -> CycElem {
    CycElem::zeta_pow(XI_EXPONENTS[i - 1])
}

/// `λ_i = −1/(ξ_i³(ξ_i² + 1))`.
pub fn lambda(i: usize) -> CycElem {
    let x = xi(i);
    let denom = &x.pow(3) * &(&x.pow(2) + &CycElem::one());
    -denom.inverse().expect("ξ³(ξ²+1) is a nonzero field element")
}

pub fn poincare_dual(i: usize) -> Result<PoincareDual, HomologyError> {
    if !(1..=3).contains(&i) {
        return Err(HomologyError::IndexOutOfRange(i as i64));
    }
    let exponent = XI_EXPONENTS[i - 1];
    Ok(PoincareDual {
        form: i,
        exponent,
        lambda: lambda(i),
        eigenvector: l_vector(exponent),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> CycElem {
        CycElem::zeta_pow(k)
    }

    #[test]
    fn loop_seven_is_reduced() {
        let sum = (1..=7).fold(HomClass::zero(), |acc, k| acc.add(&HomClass::loop_class(k)));
        assert!(sum.is_zero());
        assert_eq!(HomClass::loop_class(0), HomClass::loop_class(7));
    }

    #[test]
    fn shift_moves_loops() {
        for k in 1..=7 {
            assert_eq!(HomClass::loop_class(k).shift(), HomClass::loop_class(k + 1));
        }
        let mut c = HomClass::loop_class(3);
        for _ in 0..7 {
            c = c.shift();
        }
        assert_eq!(c, HomClass::loop_class(3));
    }

    #[test]
    fn pairing_with_loop_seven() {
        let k = IntersectionMatrix::klein();
        let l1 = HomClass::loop_class(1);
        assert!(k.pairing(&l1, &l1).is_zero());
        assert!(k.pairing(&l1, &HomClass::loop_class(7)).is_zero());
        assert_eq!(
            k.pairing(&l1, &HomClass::loop_class(7)),
            k.pairing(&HomClass::loop_class(2), &l1)
        );
    }

    #[test]
    fn eigenvectors_diagonalize_shift() {
        for k in 1..=6 {
            let l = l_vector(k);
            assert_eq!(l.shift(), l.scale(&z(-k)), "k = {k}");
        }
        assert!(l_vector(0).is_zero());
        assert!(l_vector(7).is_zero());
    }

    #[test]
    fn l1_coordinates() {
        let l = l_vector(1);
        for m in 1..=6 {
            assert_eq!(l.coords()[m - 1], &z(m as i64) - &CycElem::one());
        }
    }

    #[test]
    fn eigenvector_pairing_with_first_loop() {
        let k = IntersectionMatrix::klein();
        for i in 1..=3 {
            let x = xi(i);
            let expected = -(&(&CycElem::one() - &x) * &(&x.pow(3) * &(&x.pow(2) + &CycElem::one())));
            let got = k.pairing(&l_vector(XI_EXPONENTS[i - 1]), &HomClass::loop_class(1));
            assert_eq!(got, expected, "i = {i}");
        }
    }

    #[test]
    fn lambda_product_is_minus_one() {
        let prod = &(&lambda(1) * &lambda(2)) * &lambda(3);
        assert_eq!(prod, CycElem::from_int(-1));
    }

    #[test]
    fn dual_predicts_normalized_periods() {
        // (λ_i L, ℓ_m) = ξ_i^{m−1} − ξ_i^m exactly
        let k = IntersectionMatrix::klein();
        for i in 1..=3 {
            let pd = poincare_dual(i).unwrap().class();
            for m in 1..=7 {
                let x = xi(i);
                let expected = &x.pow(m as u32 - 1) - &x.pow(m as u32);
                assert_eq!(k.pairing(&pd, &HomClass::loop_class(m)), expected);
            }
        }
    }

    #[test]
    fn conjugate_dual_is_conjugate() {
        for i in 1..=3 {
            let pd = poincare_dual(i).unwrap();
            let a = pd.class();
            let b = pd.conj_class();
            for (x, y) in a.coords().iter().zip(b.coords()) {
                assert!((x.to_complex().conj() - y.to_complex()).norm() < 1e-12);
            }
        }
        assert!(poincare_dual(0).is_err());
        assert!(poincare_dual(4).is_err());
    }
}
