use serde::Serialize;

use super::accel::{levin_u, richardson, Accel, Extrapolation};
use super::dd::Dd;
use super::{BoundKind, NumValue, SpecfunError};

/// Most terms handed to the Levin transform; higher orders only add noise.
const LEVIN_TERMS: usize = 48;
/// First Richardson cut-off and number of doublings.
const RICHARDSON_START: usize = 8;
const RICHARDSON_LEVELS: u32 = 15;

/// Parameters `(α₁, α₂, α₃; β₁, β₂)` of ₃F₂.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypParams {
    pub numer: [f64; 3],
    pub denom: [f64; 2],
}

/// How a boundary value is to be evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesPolicy {
    pub tol: f64,
    pub max_terms: usize,
    pub accel: Accel,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_terms: 2_000_000,
            accel: Accel::Levin,
        }
    }
}

/// A boundary value with the raw number of series terms consumed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: NumValue,
    pub terms_used: usize,
    pub method: Accel,
}

impl HypParams {
    /// All parameters must exceed −1 and the denominators must avoid
    /// nonpositive integers.
    pub fn new(numer: [f64; 3], denom: [f64; 2]) -> Result<Self, SpecfunError> {
        let finite = numer.iter().chain(denom.iter()).all(|x| x.is_finite() && *x > -1.0);
        let poles = denom.iter().any(|&b| b <= 0.0 && b.fract() == 0.0);
        if !finite || poles {
            return Err(SpecfunError::InvalidParameters(format!(
                "3F2 parameters {numer:?}; {denom:?} out of range"
            )));
        }
        Ok(Self { numer, denom })
    }

    /// Convergence margin `s = β₁ + β₂ − α₁ − α₂ − α₃`.
    pub fn margin(&self) -> f64 {
        self.denom.iter().sum::<f64>() - self.numer.iter().sum::<f64>()
    }

    /// `t_{n+1}/t_n = Π(n + α_i) / (Π(n + β_j)·(n + 1))`.
    pub fn term_ratio(&self, n: usize) -> f64 {
        let n = n as f64;
        let num: f64 = self.numer.iter().map(|a| n + a).product();
        let den: f64 = self.denom.iter().map(|b| n + b).product::<f64>() * (n + 1.0);
        num / den
    }

    fn term_ratio_dd(&self, n: usize) -> Dd {
        let n = Dd::new(n as f64);
        let mut num = Dd::new(1.0);
        for &a in &self.numer {
            num *= n + a;
        }
        let mut den = n + 1.0;
        for &b in &self.denom {
            den *= n + b;
        }
        num / den
    }

    /// Iterator over the unit-argument series terms `t_0 = 1, t_1, …`.
    pub fn terms(&self) -> impl Iterator<Item = Dd> + '_ {
        let mut t = Dd::new(1.0);
        let mut n = 0usize;
        std::iter::from_fn(move || {
            let current = t;
            t *= self.term_ratio_dd(n);
            n += 1;
            Some(current)
        })
    }

    /// Plain partial sum `Σ_{n<count} t_n` at unit argument.
    pub fn partial_sum(&self, count: usize) -> f64 {
        self.terms().take(count).sum::<Dd>().to_f64()
    }
}

fn levin_route(p: &HypParams, policy: &SeriesPolicy) -> Option<Extrapolation> {
    let terms: Vec<Dd> = p.terms().take(policy.max_terms.min(LEVIN_TERMS)).collect();
    levin_u(&terms)
}

fn richardson_route(p: &HypParams, policy: &SeriesPolicy) -> Option<Extrapolation> {
    let mut sums = Vec::new();
    let mut acc = Dd::new(0.0);
    let mut terms = p.terms();
    let mut n = 0usize;
    for m in 0..RICHARDSON_LEVELS {
        let cut = RICHARDSON_START << m;
        if cut > policy.max_terms {
            break;
        }
        while n < cut {
            acc += terms.next().expect("infinite iterator");
            n += 1;
        }
        sums.push((cut, acc));
    }
    richardson(&sums, p.margin())
}

/// Partial sum plus `t_N·N^{1+s}·(N − ½)^{−s}/s`, the midpoint estimate of
/// the tail under pure power decay. The neglected relative corrections are
/// of order `1/N`; their size is bounded heuristically by the parameter
/// magnitudes.
fn tail_route(p: &HypParams, policy: &SeriesPolicy) -> Extrapolation {
    let s = p.margin();
    let count = policy.max_terms;
    let mut acc = Dd::new(0.0);
    let mut terms = p.terms();
    for _ in 0..count {
        acc += terms.next().expect("infinite iterator");
    }
    let next = terms.next().expect("infinite iterator").to_f64();
    let n = count as f64;
    let tail = next * n.powf(1.0 + s) * (n - 0.5).powf(-s) / s;
    let spread = 1.0 + p.numer.iter().chain(p.denom.iter()).map(|x| x.abs()).sum::<f64>();
    let value = (acc + tail).to_f64();
    Extrapolation {
        value,
        error_bound: (tail.abs() * spread / n).max(2.0 * f64::EPSILON * value.abs()),
        terms_used: count,
    }
}

/// `lim_{t→1−0} ₃F₂(α₁, α₂, α₃; β₁, β₂; t)`, to absolute tolerance
/// `policy.tol`.
///
/// With [`Accel::Levin`] the Levin estimate is tried first and Richardson is
/// used when its spread exceeds the tolerance. All reported bounds are
/// heuristic.
pub fn hyp3f2_at_1(p: &HypParams, policy: &SeriesPolicy) -> Result<SeriesValue, SpecfunError> {
    let s = p.margin();
    if !(s > 0.0) {
        return Err(SpecfunError::MarginViolation(s));
    }
    if !(policy.tol > 0.0) {
        return Err(SpecfunError::InvalidTolerance(policy.tol));
    }
    let mut best: Option<(Extrapolation, Accel)> = None;
    let mut consider = |e: Option<Extrapolation>, method: Accel| -> Option<SeriesValue> {
        let e = e?;
        let done = e.error_bound <= policy.tol;
        if best.is_none_or(|(b, _)| e.error_bound < b.error_bound) {
            best = Some((e, method));
        }
        done.then_some(SeriesValue {
            value: NumValue::new(e.value, e.error_bound, BoundKind::Heuristic),
            terms_used: e.terms_used,
            method,
        })
    };

    let accepted = match policy.accel {
        Accel::Levin => consider(levin_route(p, policy), Accel::Levin)
            .or_else(|| consider(richardson_route(p, policy), Accel::Richardson)),
        Accel::Richardson => consider(richardson_route(p, policy), Accel::Richardson),
        Accel::None if policy.max_terms >= 1 => consider(Some(tail_route(p, policy)), Accel::None),
        Accel::None => None,
    };
    accepted.ok_or_else(|| SpecfunError::NoConvergence {
        method: policy.accel,
        max_terms: policy.max_terms,
        achieved: best.map_or(f64::INFINITY, |(b, _)| b.error_bound),
        tol: policy.tol,
    })
}
