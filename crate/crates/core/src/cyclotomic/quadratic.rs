use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_rational, CycElem, CycError};

/// An element `a + b·ω` of ℚ(√−7), with `ω = (1 + √−7)/2`.
///
/// Integral when both coordinates are integers, i.e. when it lies in the ring
/// of integers ℤ[ω]. The minimal polynomial of `ω` is `ω² − ω + 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadElem {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// ω expressed in ℚ(ζ₇): ω = 1 + ζ + ζ² + ζ⁴.
    pub fn omega() -> CycElem {
        CycElem::from_int_coeffs([1, 1, 1, 0, 1, 0])
    }

    /// Re-expands into the cyclotomic basis.
    pub fn to_cyc(&self) -> CycElem {
        &CycElem::from_rational(self.a.clone()) + &Self::omega().scale(&self.b)
    }

    /// Recovers `(a, b)` from a σ₂-fixed cyclotomic element.
    ///
    /// Such an element is `A + B·η` with `η = ζ + ζ² + ζ⁴ = ω − 1`, so in the
    /// reduced basis `A` is the constant coefficient and `B` the coefficient
    /// of ζ.
    pub fn from_cyc(x: &CycElem) -> Result<Self, CycError> {
        if x.galois(2)? != *x {
            return Err(CycError::NotInSubfield);
        }
        let c = x.coeffs();
        let q = Self::new(&c[0] - &c[1], c[1].clone());
        debug_assert_eq!(q.to_cyc(), *x);
        Ok(q)
    }

    pub fn conj(&self) -> Self {
        // ω̄ = 1 − ω
        Self::new(&self.a + &self.b, -&self.b)
    }

    /// Norm `a² + ab + 2b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b + BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    /// Exact quotient by √−7 (which is `2ω − 1`), in ℚ(√−7).
    ///
    /// Uses `x/√−7 = −x·√−7/7`; multiplying out with `ω² = ω − 2` gives
    /// `((a + 4b) − (2a + b)ω)/7`.
    pub fn div_sqrt_minus_seven(&self) -> Self {
        let seven = BigRational::from_integer(7.into());
        let four = BigRational::from_integer(4.into());
        let two = BigRational::from_integer(2.into());
        Self::new(
            (&self.a + &four * &self.b) / &seven,
            -(&two * &self.a + &self.b) / &seven,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElem({} + {}·ω)", self.a, self.b)
    }
}

#[derive(Serialize, Deserialize)]
struct QuadRepr {
    a: String,
    b: String,
}

impl Serialize for QuadElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QuadRepr {
            a: format_rational(&self.a),
            b: format_rational(&self.b),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = QuadRepr::deserialize(deserializer)?;
        Ok(Self::new(
            parse_rational(&r.a).map_err(D::Error::custom)?,
            parse_rational(&r.b).map_err(D::Error::custom)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions() {
        assert_eq!(QuadElem::from_cyc(&CycElem::one()).unwrap(), QuadElem::from_ints(1, 0));
        let eta = CycElem::from_int_coeffs([0, 1, 1, 0, 1, 0]);
        assert_eq!(QuadElem::from_cyc(&eta).unwrap(), QuadElem::from_ints(-1, 1));
        assert_eq!(
            QuadElem::from_cyc(&CycElem::zeta()),
            Err(CycError::NotInSubfield)
        );
        // the conjugate period ζ³ + ζ⁵ + ζ⁶ = −1 − η
        let eta_bar = CycElem::from_int_coeffs([-1, -1, -1, 0, -1, 0]);
        let q = QuadElem::from_cyc(&eta_bar).unwrap();
        assert_eq!(q, QuadElem::from_cyc(&eta).unwrap().conj());
    }

    #[test]
    fn sqrt_minus_seven_coordinates() {
        let s = QuadElem::from_cyc(&CycElem::sqrt_minus_seven()).unwrap();
        assert_eq!(s, QuadElem::from_ints(-1, 2));
        assert_eq!(s.norm(), BigRational::from_integer(7.into()));
        assert!(s.div_sqrt_minus_seven().is_one());
    }

    #[test]
    fn numeric_roundtrip() {
        let q = QuadElem::from_ints(3, -5);
        let w = num_complex::Complex64::new(0.5, 7f64.sqrt() / 2.0);
        let expected = 3.0 - 5.0 * w;
        assert!((q.to_cyc().to_complex() - expected).norm() < 1e-13);
    }

    #[test]
    fn json_shape() {
        let q = QuadElem::from_ints(-1, 1);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"a":"-1/1","b":"1/1"}"#);
        let back: QuadElem = serde_json::from_str(r#"{"a":"-1","b":"2/2"}"#).unwrap();
        assert_eq!(back, q);
    }
}
