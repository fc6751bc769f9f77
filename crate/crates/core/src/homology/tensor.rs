use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::{l_vector, HomologyError, IntersectionMatrix, RANK, XI_EXPONENTS};
use crate::cyclotomic::{det3, CycElem, QuadElem};

/// A 6×6×6 array of coefficients of `ℓ_p ⊗ ℓ_q ⊗ ℓ_r`; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3<T> {
    entries: Vec<T>,
}

impl<T: Clone> Tensor3<T> {
    pub fn filled(value: T) -> Self {
        Self {
            entries: vec![value; RANK * RANK * RANK],
        }
    }
}

impl<T> Tensor3<T> {
    pub fn from_fn(mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(RANK * RANK * RANK);
        for p in 1..=RANK {
            for q in 1..=RANK {
                for r in 1..=RANK {
                    entries.push(f(p, q, r));
                }
            }
        }
        Self { entries }
    }

    fn offset(p: usize, q: usize, r: usize) -> usize {
        assert!((1..=RANK).contains(&p) && (1..=RANK).contains(&q) && (1..=RANK).contains(&r));
        ((p - 1) * RANK + (q - 1)) * RANK + (r - 1)
    }

    pub fn get(&self, p: usize, q: usize, r: usize) -> &T {
        &self.entries[Self::offset(p, q, r)]
    }

    pub fn set(&mut self, p: usize, q: usize, r: usize, value: T) {
        let o = Self::offset(p, q, r);
        self.entries[o] = value;
    }

    /// Entries with their 1-based indices, in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), &T)> {
        self.entries.iter().enumerate().map(|(o, v)| {
            let r = o % RANK + 1;
            let q = (o / RANK) % RANK + 1;
            let p = o / (RANK * RANK) + 1;
            ((p, q, r), v)
        })
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Tensor3<U> {
        Tensor3 {
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }
}

impl Tensor3<i64> {
    /// Basis tensor `ℓ_p ⊗ ℓ_q ⊗ ℓ_r`.
    pub fn basis(p: usize, q: usize, r: usize) -> Self {
        let mut t = Self::filled(0);
        t.set(p, q, r, 1);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Whether `t_{μ(p,q,r)} = sgn(μ)·t_{p,q,r}` for every permutation μ.
    pub fn is_totally_antisymmetric(&self) -> bool {
        self.iter().all(|((p, q, r), &v)| {
            *self.get(q, p, r) == -v && *self.get(p, r, q) == -v && *self.get(r, q, p) == -v
        })
    }
}

impl<T: Serialize> Serialize for Tensor3<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut outer = serializer.serialize_seq(Some(RANK))?;
        for plane in self.entries.chunks(RANK * RANK) {
            let rows: Vec<&[T]> = plane.chunks(RANK).collect();
            outer.serialize_element(&rows)?;
        }
        outer.end()
    }
}

fn vandermonde_like(exponents: [i64; 3], p: i64, q: i64, r: i64) -> CycElem {
    let m: [[CycElem; 3]; 3] = [p, q, r].map(|idx| exponents.map(|e| CycElem::zeta_pow(e * idx)));
    -det3(&m)
}

/// Coefficient `α_{p,q,r}` of `ℓ_p ⊗ ℓ_q ⊗ ℓ_r` in D, for `p, q, r ∈ 1..=7`
/// before reducing `ℓ₇`; includes the overall minus sign of D.
pub fn alpha(p: i64, q: i64, r: i64) -> CycElem {
    vandermonde_like(XI_EXPONENTS, p, q, r)
}

/// Coefficient `ᾱ_{p,q,r}` of D̄ (exponents 6, 5, 3).
pub fn conj_alpha(p: i64, q: i64, r: i64) -> CycElem {
    vandermonde_like([6, 5, 3], p, q, r)
}

/// Folds every index equal to 7 through `ℓ₇ = −Σ ℓ_k`.
fn fold_loop_seven(coeff: impl Fn(i64, i64, i64) -> CycElem) -> Tensor3<CycElem> {
    Tensor3::from_fn(|p, q, r| {
        let mut acc = CycElem::zero();
        for (a, sa) in [(p as i64, 1), (7, -1)] {
            for (b, sb) in [(q as i64, 1), (7, -1)] {
                for (c, sc) in [(r as i64, 1), (7, -1)] {
                    let v = coeff(a, b, c);
                    if sa * sb * sc > 0 {
                        acc += &v;
                    } else {
                        acc -= &v;
                    }
                }
            }
        }
        acc
    })
}

/// D as a tensor over the reduced basis `ℓ₁, …, ℓ₆`.
pub fn alpha_tensor() -> Tensor3<CycElem> {
    fold_loop_seven(alpha)
}

/// D̄ over the reduced basis.
pub fn conj_alpha_tensor() -> Tensor3<CycElem> {
    fold_loop_seven(conj_alpha)
}

/// D computed as `−Σ sgn(μ) L_{7h_μ(1)} ⊗ L_{7h_μ(2)} ⊗ L_{7h_μ(3)}` directly
/// from the reduced eigenvector coordinates.
pub fn alpha_tensor_from_eigenvectors() -> Tensor3<CycElem> {
    let ls = XI_EXPONENTS.map(l_vector);
    Tensor3::from_fn(|p, q, r| {
        let m: [[CycElem; 3]; 3] =
            [p, q, r].map(|idx| std::array::from_fn(|c| ls[c].coords()[idx - 1].clone()));
        -det3(&m)
    })
}

/// The integer tensors `(D + D̄)/7` and `(D − D̄)/√−7`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerTensors {
    pub plus: Tensor3<i64>,
    pub minus: Tensor3<i64>,
}

fn as_small_integer(x: &CycElem) -> Option<i64> {
    let r = x.as_rational()?;
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.to_integer()).ok()
}

pub fn build_integer_tensors() -> Result<IntegerTensors, HomologyError> {
    let d = alpha_tensor();
    let d_bar = conj_alpha_tensor();
    let seventh = num_rational::BigRational::new(1.into(), 7.into());
    let mut plus = Tensor3::filled(0i64);
    let mut minus = Tensor3::filled(0i64);
    for ((p, q, r), a) in d.iter() {
        let b = d_bar.get(p, q, r);
        let fail = |detail: String| HomologyError::DivisionFailure { p, q, r, detail };

        let sum = (a + b).scale(&seventh);
        let s = as_small_integer(&sum).ok_or_else(|| fail(format!("(α+ᾱ)/7 = {sum}")))?;
        plus.set(p, q, r, s);

        let diff = QuadElem::from_cyc(&(a - b))?;
        let quotient = diff.div_sqrt_minus_seven();
        if !quotient.is_integral() {
            return Err(fail(format!("(α−ᾱ)/√−7 = {quotient:?} is not integral")));
        }
        let m = as_small_integer(&quotient.to_cyc())
            .ok_or_else(|| fail(format!("(α−ᾱ)/√−7 = {quotient:?} is not a rational integer")))?;
        minus.set(p, q, r, m);
    }
    Ok(IntegerTensors { plus, minus })
}

/// The three contractions of `t` against the intersection pairing:
/// `Σ t_{pqr}(ℓ_p,ℓ_q)ℓ_r`, `Σ t_{pqr}(ℓ_q,ℓ_r)ℓ_p` and `Σ t_{pqr}(ℓ_r,ℓ_p)ℓ_q`.
pub fn contractions(t: &Tensor3<i64>, k: &IntersectionMatrix) -> [[i64; RANK]; 3] {
    let mut out = [[0i64; RANK]; 3];
    for ((p, q, r), &v) in t.iter() {
        if v == 0 {
            continue;
        }
        out[0][r - 1] += v * k.entry(p, q);
        out[1][p - 1] += v * k.entry(q, r);
        out[2][q - 1] += v * k.entry(r, p);
    }
    out
}

/// Whether `t` lies in `(H^{⊗3})′`, the kernel of all three contractions.
pub fn check_hprime(t: &Tensor3<i64>, k: &IntersectionMatrix) -> bool {
    contractions(t, k).iter().all(|v| v.iter().all(|&c| c == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_vanishes_on_repeated_indices_and_is_alternating() {
        for p in 1..=7 {
            for r in 1..=7 {
                assert!(alpha(p, p, r).is_zero());
            }
        }
        assert_eq!(alpha(1, 2, 5), -alpha(2, 1, 5));
        assert_eq!(alpha(3, 6, 7), -alpha(6, 3, 7));
    }

    #[test]
    fn conjugate_is_sigma_six() {
        for (p, q, r) in [(1, 2, 3), (2, 5, 7), (4, 6, 1), (7, 3, 5)] {
            assert_eq!(alpha(p, q, r).galois(6).unwrap(), conj_alpha(p, q, r));
        }
    }

    #[test]
    fn fold_agrees_with_eigenvector_route() {
        assert_eq!(alpha_tensor(), alpha_tensor_from_eigenvectors());
        // frozen from an independent symbolic expansion
        assert_eq!(*alpha_tensor().get(1, 2, 3), CycElem::from_int(-7));
    }

    #[test]
    fn hprime_edge_cases() {
        let k = IntersectionMatrix::klein();
        assert!(check_hprime(&Tensor3::filled(0), &k));
        let t = Tensor3::basis(1, 3, 1);
        assert_eq!(contractions(&t, &k)[0], [1, 0, 0, 0, 0, 0]);
        assert!(!check_hprime(&t, &k));
    }

    #[test]
    fn integer_tensors_lie_in_hprime() {
        let k = IntersectionMatrix::klein();
        let t = build_integer_tensors().unwrap();
        assert!(t.minus.is_totally_antisymmetric());
        assert!(t.plus.is_totally_antisymmetric());
        assert!(!t.plus.is_zero() && !t.minus.is_zero());
        assert!(check_hprime(&t.plus, &k));
        assert!(check_hprime(&t.minus, &k));
    }

    #[test]
    fn nested_json_shape() {
        let t = Tensor3::basis(1, 1, 2);
        let v: serde_json::Value = serde_json::to_value(&t).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 6);
        assert_eq!(v[0][0][1], 1);
        assert_eq!(v[0][0][0], 0);
    }

    #[test]
    fn iter_indices_roundtrip() {
        let t = Tensor3::from_fn(|p, q, r| (p * 100 + q * 10 + r) as i64);
        for ((p, q, r), &v) in t.iter() {
            assert_eq!(v, (p * 100 + q * 10 + r) as i64);
        }
    }
}
