use std::fmt;

use serde::Serialize;

use super::HomClass;
use crate::cyclotomic::CycElem;

/// Number of basis loops `ℓ₁, …, ℓ₆`.
pub const RANK: usize = 6;

/// `(ℓ₁, ℓ_k)` for `k = 1, …, 6`, from `(ℓ₁, ℓ_k) = (c₁, c_k) − (c₁, c_{k−1})`.
pub const FIRST_ROW: [i64; RANK] = [0, 0, 1, -1, 1, -1];

/// The intersection matrix as printed for the Klein quartic, used to check
/// the generated one.
pub const PRINTED: [[i64; RANK]; RANK] = [
    [0, 0, 1, -1, 1, -1],
    [0, 0, 0, 1, -1, 1],
    [-1, 0, 0, 0, 1, -1],
    [1, -1, 0, 0, 0, 1],
    [-1, 1, -1, 0, 0, 0],
    [1, -1, 1, -1, 0, 0],
];

/// The 6×6 integer matrix `K′` with `(i, j)` entry `(ℓ_i, ℓ_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionMatrix {
    pub entries: [[i64; RANK]; RANK],
}

impl IntersectionMatrix {
    /// Generates `K′` from [`FIRST_ROW`] and shift invariance
    /// `(ℓ_i, ℓ_j) = (ℓ_{i+1}, ℓ_{j+1})`, with indices taken mod 7.
    ///
    /// The missing value `(ℓ₁, ℓ₇) = −Σ_k (ℓ₁, ℓ_k)` comes from `ℓ₇ = −Σ ℓ_k`.
    pub fn klein() -> Self {
        let mut by_offset = [0i64; 7];
        by_offset[..RANK].copy_from_slice(&FIRST_ROW);
        by_offset[6] = -FIRST_ROW.iter().sum::<i64>();
        let entries = std::array::from_fn(|i| {
            std::array::from_fn(|j| by_offset[(j as i64 - i as i64).rem_euclid(7) as usize])
        });
        Self { entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..RANK).all(|i| (0..RANK).all(|j| self.entries[i][j] == -self.entries[j][i]))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i64 {
        let mut m: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..RANK {
            if m[k][k] == 0 {
                match (k + 1..RANK).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..RANK {
                for j in k + 1..RANK {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        (sign * m[RANK - 1][RANK - 1]) as i64
    }

    /// `uᵀ K′ v`.
    pub fn pairing(&self, u: &HomClass, v: &HomClass) -> CycElem {
        let mut acc = CycElem::zero();
        for (i, ui) in u.coords().iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let mut row = CycElem::zero();
            for (j, vj) in v.coords().iter().enumerate() {
                match self.entries[i][j] {
                    0 => {}
                    1 => row += vj,
                    -1 => row -= vj,
                    k => row += &vj.scale(&num_rational::BigRational::from_integer(k.into())),
                }
            }
            acc += &(ui * &row);
        }
        acc
    }

    /// Integer pairing of integer coordinate vectors.
    pub fn pairing_int(&self, u: &[i64; RANK], v: &[i64; RANK]) -> i64 {
        (0..RANK)
            .map(|i| u[i] * (0..RANK).map(|j| self.entries[i][j] * v[j]).sum::<i64>())
            .sum()
    }
}

impl fmt::Display for IntersectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}
