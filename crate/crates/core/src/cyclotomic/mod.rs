//! Exact arithmetic in the seventh cyclotomic field ℚ(ζ₇).
//!
//! Elements are stored in the reduced power basis `{1, ζ, …, ζ⁵}`; the
//! relation `ζ⁶ = −(1 + ζ + … + ζ⁵)` is applied after every operation so that
//! equality is coefficient-wise. Coefficients are exact rationals, which lets
//! the same type carry both ring elements of ℤ[ζ₇] and field quotients such as
//! `−1/(ζ³(ζ²+1))`.

mod ideal;
mod matrix;
mod quadratic;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use ideal::{divide_by_zeta_minus_one, ideal_tests, IdealFlags};
pub use matrix::det3;
pub use quadratic::QuadElem;

/// Degree of ℚ(ζ₇) over ℚ.
pub const DEGREE: usize = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CycError {
    #[error("galois index {0} is divisible by 7")]
    InvalidGaloisIndex(i64),
    #[error("element is not fixed by ζ ↦ ζ² and does not lie in ℚ(√−7)")]
    NotInSubfield,
    #[error("element has non-integral coefficients")]
    NonIntegral,
    #[error("zero has no inverse")]
    NotInvertible,
    #[error("requested precision {requested:e} is below the attainable bound {attainable:e}")]
    PrecisionUnattainable { requested: f64, attainable: f64 },
    #[error("precision must be positive, got {0}")]
    InvalidPrecision(f64),
    #[error("cannot parse rational `{0}`")]
    Parse(String),
}

/// An element `c₀ + c₁ζ + … + c₅ζ⁵` of ℚ(ζ₇), `ζ = exp(2πi/7)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    coeffs: [BigRational; DEGREE],
}

/// Complex image of a [`CycElem`] together with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Embedded {
    pub value: Complex64,
    pub error_bound: f64,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CycElem {
    pub fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut out = Self::zero();
        out.coeffs[0] = r;
        out
    }

    pub fn from_coeffs(coeffs: [BigRational; DEGREE]) -> Self {
        Self { coeffs }
    }

    pub fn from_int_coeffs(coeffs: [i64; DEGREE]) -> Self {
        Self {
            coeffs: coeffs.map(rat),
        }
    }

    /// Builds an element from coefficients on `1, ζ, …, ζ⁶` (length 7),
    /// folding the top power back into the reduced basis.
    fn from_full(mut full: [BigRational; 7]) -> Self {
        let top = std::mem::take(&mut full[6]);
        let mut coeffs: [BigRational; DEGREE] = std::array::from_fn(|i| std::mem::take(&mut full[i]));
        if !top.is_zero() {
            for c in coeffs.iter_mut() {
                *c -= &top;
            }
        }
        Self { coeffs }
    }

    /// `ζ₇^k` for any integer `k` (negative exponents allowed).
    pub fn zeta_pow(k: i64) -> Self {
        let mut full: [BigRational; 7] = std::array::from_fn(|_| BigRational::zero());
        full[k.rem_euclid(7) as usize] = BigRational::one();
        Self::from_full(full)
    }

    /// `ζ₇`.
    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// `√−7 = 1 + 2(ζ + ζ² + ζ⁴)`, the branch with positive imaginary part.
    pub fn sqrt_minus_seven() -> Self {
        Self::from_int_coeffs([1, 2, 2, 0, 2, 0])
    }

    pub fn coeffs(&self) -> &[BigRational; DEGREE] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn int_coeffs(&self) -> Option<[BigInt; DEGREE]> {
        if !self.is_integral() {
            return None;
        }
        Some(std::array::from_fn(|i| self.coeffs[i].to_integer()))
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * r),
        }
    }

    /// Image under the automorphism `σ_i : ζ ↦ ζ^i`.
    pub fn galois(&self, i: i64) -> Result<Self, CycError> {
        if i.rem_euclid(7) == 0 {
            return Err(CycError::InvalidGaloisIndex(i));
        }
        let mut full: [BigRational; 7] = std::array::from_fn(|_| BigRational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = (i * k as i64).rem_euclid(7) as usize;
            full[e] += c;
        }
        Ok(Self::from_full(full))
    }

    /// Complex conjugate, i.e. `σ₆`.
    pub fn conj(&self) -> Self {
        self.galois(6).expect("6 is a unit mod 7")
    }

    /// Multiplicative inverse, by solving `x·y = 1` as a 6×6 rational system.
    pub fn inverse(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::NotInvertible);
        }
        // column j of the multiplication matrix is x·ζʲ
        let columns: Vec<CycElem> = (0..DEGREE as i64)
            .map(|j| self * &Self::zeta_pow(j))
            .collect();
        let mut m: Vec<Vec<BigRational>> = (0..DEGREE)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    columns.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..DEGREE {
            let pivot = (col..DEGREE)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(CycError::NotInvertible)?;
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for v in m[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..DEGREE {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (v, pv) in m[r].iter_mut().zip(pivot_row.iter()) {
                        *v -= &f * pv;
                    }
                }
            }
        }
        Ok(Self {
            coeffs: std::array::from_fn(|r| m[r][DEGREE].clone()),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CycError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value under `ζ ↦ exp(2πi/7)` in double precision.
    pub fn to_complex(&self) -> Complex64 {
        self.embed_unchecked().value
    }

    /// Value in double precision with the bound on its rounding error.
    pub fn embedding(&self) -> Embedded {
        self.embed_unchecked()
    }

    fn embed_unchecked(&self) -> Embedded {
        let roots = root_table();
        let mut value = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0;
        for (c, z) in self.coeffs.iter().zip(roots.iter()) {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            value += z * cf;
            magnitude += cf.abs();
        }
        // coefficient conversion, root table, product and accumulation roundings
        let error_bound = if self.coeffs[1..].iter().all(Zero::is_zero) && is_exact_f64(&self.coeffs[0]) {
            0.0
        } else {
            magnitude * 5.0 * f64::EPSILON
        };
        Embedded { value, error_bound }
    }

    /// Complex value with an absolute error bound no larger than `precision`.
    pub fn embed(&self, precision: f64) -> Result<Embedded, CycError> {
        if !(precision > 0.0) {
            return Err(CycError::InvalidPrecision(precision));
        }
        let e = self.embed_unchecked();
        if e.error_bound > precision {
            return Err(CycError::PrecisionUnattainable {
                requested: precision,
                attainable: e.error_bound,
            });
        }
        Ok(e)
    }
}

fn is_exact_f64(r: &BigRational) -> bool {
    r.denom().is_one() && r.numer().abs() < BigInt::from(1i64 << 53)
}

fn root_table() -> [Complex64; DEGREE] {
    std::array::from_fn(|k| {
        if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 7.0)
        }
    })
}

impl Default for CycElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem({self})")
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{abs}*z^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn add(self, rhs: &'a CycElem) -> CycElem {
        CycElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl<'a> Sub<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &'a CycElem) -> CycElem {
        CycElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl<'a> Mul<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &'a CycElem) -> CycElem {
        let mut full: [BigRational; 7] = std::array::from_fn(|_| BigRational::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % 7] += a * b;
                }
            }
        }
        CycElem::from_full(full)
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycElem> for CycElem {
            type Output = CycElem;
            fn $m(self, rhs: CycElem) -> CycElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycElem> for CycElem {
            type Output = CycElem;
            fn $m(self, rhs: &'a CycElem) -> CycElem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycElem> for &'a CycElem {
            type Output = CycElem;
            fn $m(self, rhs: CycElem) -> CycElem {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

impl AddAssign<&CycElem> for CycElem {
    fn add_assign(&mut self, rhs: &CycElem) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&CycElem> for CycElem {
    fn sub_assign(&mut self, rhs: &CycElem) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl std::iter::Sum for CycElem {
    fn sum<I: Iterator<Item = CycElem>>(iter: I) -> Self {
        iter.fold(CycElem::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl From<i64> for CycElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// Formats a rational as `"num/den"`, always including the denominator.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational, CycError> {
    let err = || CycError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s.trim()).map_err(|_| err())?,
        )),
    }
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings: Vec<String> = Vec::deserialize(deserializer)?;
        if strings.len() != DEGREE {
            return Err(D::Error::invalid_length(strings.len(), &"6 coefficients"));
        }
        let mut coeffs: [BigRational; DEGREE] = std::array::from_fn(|_| BigRational::zero());
        for (c, s) in coeffs.iter_mut().zip(strings.iter()) {
            *c = parse_rational(s).map_err(D::Error::custom)?;
        }
        Ok(Self { coeffs })
    }
}
