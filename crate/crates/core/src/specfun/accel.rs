//! Convergence acceleration for slowly convergent positive series.
//!
//! Terms of a ₃F₂ series at unit argument decay like `n^{−1−s}`, so partial
//! sums converge logarithmically. Two independent accelerators are provided:
//! the Levin u-transform on the leading partial sums, evaluated in
//! double-double arithmetic to keep its alternating-sign combination from
//! cancelling away the answer, and Richardson extrapolation on partial sums
//! at geometrically spaced cut-offs using the known tail exponents
//! `s, s + 1, s + 2, …`.

use serde::{Deserialize, Serialize};

use super::dd::Dd;

/// Which accelerator evaluates a boundary series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Accel {
    /// Levin u-transform, falling back to Richardson if it stagnates.
    Levin,
    Richardson,
    /// Plain partial sums plus a leading-order tail estimate.
    None,
}

impl Accel {
    pub fn as_str(self) -> &'static str {
        match self {
            Accel::Levin => "levin",
            Accel::Richardson => "richardson",
            Accel::None => "none",
        }
    }
}

impl std::fmt::Display for Accel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(self.as_str())
    }
}

/// A limit estimate and its heuristic error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    pub value: f64,
    /// Spread of the last three accelerated estimates around the chosen one,
    /// floored at the final rounding to f64.
    pub error_bound: f64,
    pub terms_used: usize,
}

fn spread(estimates: &[Dd], k: usize) -> f64 {
    let d1 = (estimates[k] - estimates[k - 1]).to_f64().abs();
    let d2 = (estimates[k] - estimates[k - 2]).to_f64().abs();
    d1.max(d2)
}

fn pick_best(estimates: &[Dd], terms_for: impl Fn(usize) -> usize) -> Option<Extrapolation> {
    let best = (2..estimates.len()).min_by(|&i, &j| spread(estimates, i).total_cmp(&spread(estimates, j)))?;
    let value = estimates[best].to_f64();
    Some(Extrapolation {
        value,
        error_bound: spread(estimates, best).max(2.0 * f64::EPSILON * value.abs()),
        terms_used: terms_for(best),
    })
}

/// Levin u-transform of the series `Σ terms[n]`, with `β = 1`.
///
/// The order-k estimate uses `S_0, …, S_k` and remainder estimates
/// `ω_j = (β + j)·a_j`:
///
/// ```text
///        Σ_j (−1)^j C(k,j) ((β+j)/(β+k))^{k−1} S_j/ω_j
/// L_k = ───────────────────────────────────────────────
///        Σ_j (−1)^j C(k,j) ((β+j)/(β+k))^{k−1} 1/ω_j
/// ```
///
/// The order whose estimate has the smallest three-point spread is returned.
/// Returns `None` when fewer than five terms are available.
pub fn levin_u(terms: &[Dd]) -> Option<Extrapolation> {
    const BETA: f64 = 1.0;
    if let Some(stop) = terms.iter().position(|t| t.hi() == 0.0) {
        // terminating series: the partial sum is exact
        let s: Dd = terms[..stop].iter().fold(Dd::new(0.0), |acc, &t| acc + t);
        let value = s.to_f64();
        return Some(Extrapolation {
            value,
            error_bound: 2.0 * f64::EPSILON * value.abs(),
            terms_used: stop,
        });
    }
    if terms.len() < 5 {
        return None;
    }
    let mut partial = Vec::with_capacity(terms.len());
    let mut s = Dd::new(0.0);
    for &t in terms {
        s += t;
        partial.push(s);
    }
    let inv_omega: Vec<Dd> = terms
        .iter()
        .enumerate()
        .map(|(j, &t)| (Dd::new(BETA + j as f64) * t).recip())
        .collect();

    let mut estimates = Vec::with_capacity(terms.len());
    for k in 1..terms.len() {
        let mut num = Dd::new(0.0);
        let mut den = Dd::new(0.0);
        let mut binom = 1.0f64;
        for j in 0..=k {
            let ratio = Dd::new(BETA + j as f64) / Dd::new(BETA + k as f64);
            let mut w = ratio.powi((k - 1) as u32) * binom;
            if j % 2 == 1 {
                w = -w;
            }
            num += w * partial[j] * inv_omega[j];
            den += w * inv_omega[j];
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
        estimates.push(num / den);
    }
    // estimates[i] has order i + 1 and uses i + 2 terms
    pick_best(&estimates, |i| i + 2)
}

/// Richardson extrapolation of partial sums `S(N_m)` taken at
/// `N_m = N_0·2^m`, assuming `S(N) = S + Σ_k c_k N^{−(s+k)}`.
///
/// `sums` holds `(N_m, S(N_m))` in increasing order.
pub fn richardson(sums: &[(usize, Dd)], s: f64) -> Option<Extrapolation> {
    if sums.len() < 3 {
        return None;
    }
    let mut column: Vec<Dd> = sums.iter().map(|&(_, v)| v).collect();
    // diagonal[k] eliminates k tail powers using the finest levels
    let mut diagonal = vec![*column.last().expect("nonempty")];
    for k in 0..sums.len() - 1 {
        let factor = Dd::new(2f64.powf(s + k as f64));
        let one = Dd::new(1.0);
        column = column
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - one))
            .collect();
        diagonal.push(*column.last().expect("nonempty"));
    }
    let finest = sums.last().expect("nonempty").0;
    pick_best(&diagonal, |_| finest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta2_terms(n: usize) -> Vec<Dd> {
        (1..=n)
            .map(|k| Dd::new(1.0) / Dd::new((k * k) as f64))
            .collect()
    }

    #[test]
    fn levin_accelerates_basel_series() {
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        let r = levin_u(&zeta2_terms(40)).unwrap();
        assert!((r.value - exact).abs() < 1e-14, "{}", r.value - exact);
        assert!(r.error_bound < 1e-12);
        assert!(r.terms_used <= 40);
    }

    #[test]
    fn levin_handles_terminating_series() {
        let terms: Vec<Dd> = [1.0, 0.5, 0.25, 0.0, 0.0, 0.0]
            .iter()
            .map(|&x| Dd::new(x))
            .collect();
        let r = levin_u(&terms).unwrap();
        assert_eq!(r.value, 1.75);
        assert_eq!(r.terms_used, 3);
    }

    #[test]
    fn levin_needs_five_terms() {
        assert!(levin_u(&zeta2_terms(4)).is_none());
    }

    #[test]
    fn richardson_on_basel_series() {
        // tail of Σ 1/n² behaves like N^{−1}, N^{−2}, …, i.e. s = 1
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        let mut sums = Vec::new();
        let mut acc = Dd::new(0.0);
        let mut n = 1usize;
        for m in 0..12 {
            let cut = 8usize << m;
            while n < cut {
                acc += Dd::new(1.0) / Dd::new((n * n) as f64);
                n += 1;
            }
            sums.push((cut, acc));
        }
        let r = richardson(&sums, 1.0).unwrap();
        assert!((r.value - exact).abs() < 1e-13, "{}", r.value - exact);
        assert!(richardson(&sums[..2], 1.0).is_none());
    }
}
