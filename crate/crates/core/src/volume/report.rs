use serde::Serialize;

use super::{
    harmonic_values, i123, iterated_integral, period, theorem_display, ComplexValue, HarmonicValues,
    Method, ModValue, Period, TheoremCheck, VolumeError, XTable, I123, HEADLINE, HEADLINE_TOLERANCE,
};
use crate::specfun::{self, Accel, NumValue, SeriesPolicy};

/// The settings a report was produced with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReportConfig {
    pub tolerance: f64,
    pub max_terms: usize,
    pub accel: Accel,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IteratedEntry {
    #[serde(flatten)]
    pub value: ComplexValue,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XEntry {
    pub pair: [usize; 2],
    pub value: NumValue,
    pub method: Method,
    /// Accelerator that produced the accepted estimate.
    pub accelerator: Accel,
    pub terms_used: usize,
    /// `x_{j,i}`, evaluated from its own series.
    pub reversed: NumValue,
    /// `x_{i,j}` from quadrature over the simplex.
    pub oracle: NumValue,
}

/// Comparison of `2·v_minus mod ℤ` with the stated value and its mirror
/// `1 − 0.72270`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Headline {
    pub target: f64,
    pub tolerance: f64,
    pub value: f64,
    pub error_bound: f64,
    pub distance: f64,
    pub mirror_distance: f64,
    pub matches: bool,
    pub mirror_matches: bool,
}

impl Headline {
    pub fn new(twice_v_minus: &ModValue) -> Self {
        let distance = twice_v_minus.distance_to(HEADLINE);
        let mirror_distance = twice_v_minus.distance_to(1.0 - HEADLINE);
        Self {
            target: HEADLINE,
            tolerance: HEADLINE_TOLERANCE,
            value: twice_v_minus.representative,
            error_bound: twice_v_minus.error_bound,
            distance,
            mirror_distance,
            matches: distance <= HEADLINE_TOLERANCE,
            mirror_matches: mirror_distance <= HEADLINE_TOLERANCE,
        }
    }

    /// Exactly one of the value and its mirror matches.
    pub fn is_unambiguous(&self) -> bool {
        self.matches != self.mirror_matches
    }
}

/// Every intermediate quantity of the computation with its bound and method.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeReport {
    pub config: ReportConfig,
    /// `periods[i−1][k−1]` for `ω_i` along `ℓ_k`, `k ≤ 6`.
    pub periods: Vec<Vec<Period>>,
    /// `iterated[i−1][j−1][k−1] = ∫_{ℓ_k} ω_iω_j`.
    pub iterated: Vec<Vec<Vec<IteratedEntry>>>,
    pub x_values: Vec<XEntry>,
    #[serde(rename = "I123")]
    pub i123: I123,
    pub values: HarmonicValues,
    pub theorem_display: TheoremCheck,
    pub headline: Headline,
    /// Error bound on `twice_value_minus`, accumulated linearly from the
    /// `x_{i,j}` bounds and the difference between the two `I₁₂₃` routes.
    pub error_budget: f64,
}

/// One line of the CSV export.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CsvRow {
    pub name: String,
    pub re: f64,
    pub im: f64,
    pub error_bound: f64,
    pub method: &'static str,
}

impl CsvRow {
    fn complex(name: String, v: &ComplexValue, method: Method) -> Self {
        Self {
            name,
            re: v.re,
            im: v.im,
            error_bound: v.error_bound,
            method: method.as_str(),
        }
    }

    fn real(name: String, value: f64, error_bound: f64, method: &'static str) -> Self {
        Self {
            name,
            re: value,
            im: 0.0,
            error_bound,
            method,
        }
    }
}

impl VolumeReport {
    pub fn compute(policy: &SeriesPolicy) -> Result<Self, VolumeError> {
        let x = XTable::compute(policy)?;

        let periods = (1..=3)
            .map(|i| (1..=6).map(|k| period(i, k)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;

        let mut iterated = Vec::with_capacity(3);
        for i in 1..=3 {
            let mut row = Vec::with_capacity(3);
            for j in 1..=3 {
                let cells = (1..=7)
                    .map(|k| {
                        Ok(IteratedEntry {
                            value: iterated_integral(i, j, k, &x)?,
                            method: Method::ClosedForm,
                        })
                    })
                    .collect::<Result<Vec<_>, VolumeError>>()?;
                row.push(cells);
            }
            iterated.push(row);
        }

        let mut x_values = Vec::with_capacity(3);
        for (i, j) in [(1, 2), (2, 3), (3, 1)] {
            let series = x.series(i, j).expect("off-diagonal entries come from a series");
            x_values.push(XEntry {
                pair: [i, j],
                value: *x.get(i, j),
                method: Method::Series,
                accelerator: series.method,
                terms_used: series.terms_used,
                reversed: *x.get(j, i),
                oracle: specfun::x_ij_by_quadrature(i, j, policy.tol)?,
            });
        }

        let i123 = i123(&x)?;
        let values = harmonic_values(&i123.value)?;
        let theorem_display = theorem_display(&x, &values.v_minus)?;
        Ok(Self {
            config: ReportConfig {
                tolerance: policy.tol,
                max_terms: policy.max_terms,
                accel: policy.accel,
            },
            periods,
            iterated,
            x_values,
            i123,
            headline: Headline::new(&values.twice_v_minus),
            error_budget: values.twice_v_minus.error_bound,
            values,
            theorem_display,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields serialize")
    }

    /// One row per intermediate quantity, in a fixed order.
    pub fn csv_rows(&self) -> Vec<CsvRow> {
        let mut rows = Vec::new();
        for p in self.periods.iter().flatten() {
            let name = format!("period({},{})", p.form, p.loop_index);
            rows.push(CsvRow::complex(name, &p.normalized, p.method));
        }
        for p in self.periods.iter().flatten() {
            let name = format!("period_unnormalized({},{})", p.form, p.loop_index);
            rows.push(CsvRow::complex(name, &p.unnormalized, p.method));
        }
        for (i, row) in self.iterated.iter().enumerate() {
            for (j, cells) in row.iter().enumerate() {
                for (k, e) in cells.iter().enumerate() {
                    let name = format!("iterated({},{},{})", i + 1, j + 1, k + 1);
                    rows.push(CsvRow::complex(name, &e.value, e.method));
                }
            }
        }
        for e in &self.x_values {
            let [i, j] = e.pair;
            let method = e.method.as_str();
            rows.push(CsvRow::real(format!("x({i},{j})"), e.value.value, e.value.error_bound, method));
            rows.push(CsvRow::real(format!("x({j},{i})"), e.reversed.value, e.reversed.error_bound, method));
            rows.push(CsvRow::real(
                format!("x({i},{j})"),
                e.oracle.value,
                e.oracle.error_bound,
                Method::Oracle.as_str(),
            ));
        }
        rows.push(CsvRow::complex("I123".into(), &self.i123.closed_form, Method::ClosedForm));
        rows.push(CsvRow::complex("I123".into(), &self.i123.brute_force, Method::BruteForce));
        let closed = Method::ClosedForm.as_str();
        for (name, v) in [
            ("value_plus", &self.values.v_plus),
            ("value_minus", &self.values.v_minus),
            ("twice_value_minus", &self.values.twice_v_minus),
            ("theorem_display", &self.theorem_display.display),
        ] {
            rows.push(CsvRow::real(name.into(), v.representative, v.error_bound, closed));
        }
        rows
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in self.csv_rows() {
            w.serialize(row).expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }
}
