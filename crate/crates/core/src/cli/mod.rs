//! Command-line front end: `verify`, `compute <target>` and `report`.
//!
//! Exit status is 0 on success, 1 when a check or computation fails and 2 on
//! a usage error.

pub mod checks;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::specfun::{self, Accel, SeriesPolicy};
use crate::volume::{self, ComplexValue, Headline, ModValue, VolumeError, VolumeReport, XTable};

pub use checks::Check;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    X12,
    X23,
    X31,
    #[value(name = "I123", alias = "i123")]
    I123,
    #[value(name = "v_plus", alias = "v-plus")]
    VPlus,
    #[value(name = "v_minus", alias = "v-minus")]
    VMinus,
    Final,
}

/// Settings shared by every subcommand. All computation is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunConfig {
    pub tolerance: f64,
    pub max_terms: usize,
    pub accel: Accel,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            max_terms: 2_000_000,
            accel: Accel::Levin,
            output: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn policy(&self) -> SeriesPolicy {
        SeriesPolicy {
            tol: self.tolerance,
            max_terms: self.max_terms,
            accel: self.accel,
        }
    }

    fn validate(&self) -> Result<(), String> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(format!("--tol must be a positive number, got {}", self.tolerance));
        }
        if self.max_terms == 0 {
            return Err("--max-terms must be at least 1".into());
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "klein-volume", version, about = "Harmonic volume of the Klein quartic")]
struct Cli {
    /// Absolute tolerance for each x_(i,j).
    #[arg(long = "tol", global = true, default_value_t = 1e-9, allow_negative_numbers = true)]
    tol: f64,
    /// Largest number of series terms any accelerator may use.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_terms: usize,
    #[arg(long, global = true, value_enum, default_value_t = Accel::Levin)]
    accel: Accel,
    /// `report` prints JSON for both text and json.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the exact and numeric check suites.
    Verify,
    /// Compute one quantity.
    Compute {
        #[arg(value_enum)]
        target: Target,
        /// Evaluate x_(j,i) instead of x_(i,j).
        #[arg(long)]
        swap: bool,
    },
    /// Emit every intermediate quantity.
    Report,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let config = RunConfig {
        tolerance: cli.tol,
        max_terms: cli.max_terms,
        accel: cli.accel,
        output: cli.format,
    };
    if let Err(msg) = config.validate() {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    let result = match cli.command {
        Command::Verify => cmd_verify(&config, out),
        Command::Compute { target, swap } => cmd_compute(target, swap, &config, out),
        Command::Report => cmd_report(&config, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

/// Runs all checks and prints one line per check; exit 0 iff all pass.
pub fn cmd_verify(config: &RunConfig, out: &mut dyn Write) -> std::io::Result<i32> {
    let mut all = checks::exact_suites();
    all.extend(checks::numeric_suites(&config.policy()));
    let passed = all.iter().all(|c| c.passed);
    match config.output {
        OutputFormat::Text => {
            for c in &all {
                writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            }
            let failed = all.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {} failed", all.len(), failed)?;
        }
        OutputFormat::Json => {
            let doc = json!({ "config": config, "passed": passed, "checks": all });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &all {
                w.serialize(c).map_err(std::io::Error::other)?;
            }
            out.write_all(&w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

/// A computed quantity ready for printing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Computed {
    pub name: String,
    pub re: f64,
    pub im: f64,
    pub error_bound: f64,
    pub method: String,
    /// Present for values read mod ℤ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_to_integer: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub headline: Option<Headline>,
}

impl Computed {
    fn real(name: String, value: f64, error_bound: f64, method: String) -> Self {
        Self {
            name,
            re: value,
            im: 0.0,
            error_bound,
            method,
            distance_to_integer: None,
            headline: None,
        }
    }

    fn modular(name: &str, v: &ModValue) -> Self {
        Self {
            distance_to_integer: Some(v.distance_to_integer),
            ..Self::real(name.into(), v.representative, v.error_bound, "closed-form".into())
        }
    }

    fn complex(name: &str, v: &ComplexValue, method: &str) -> Self {
        Self {
            im: v.im,
            ..Self::real(name.into(), v.re, v.error_bound, method.into())
        }
    }
}

pub fn compute(target: Target, swap: bool, config: &RunConfig) -> Result<Computed, VolumeError> {
    let policy = config.policy();
    let pair = match target {
        Target::X12 => Some((1, 2)),
        Target::X23 => Some((2, 3)),
        Target::X31 => Some((3, 1)),
        _ => None,
    };
    if let Some((i, j)) = pair {
        let (i, j) = if swap { (j, i) } else { (i, j) };
        let x = specfun::x_ij(i, j, &policy)?;
        let method = format!("series/{}", x.series.method);
        return Ok(Computed::real(format!("x{i}{j}"), x.value.value, x.value.error_bound, method));
    }
    let x = XTable::compute(&policy)?;
    let i123 = volume::i123(&x)?;
    if target == Target::I123 {
        return Ok(Computed::complex("I123", &i123.value, "closed-form"));
    }
    let values = volume::harmonic_values(&i123.value)?;
    Ok(match target {
        Target::VPlus => Computed::modular("v_plus", &values.v_plus),
        Target::VMinus => Computed::modular("v_minus", &values.v_minus),
        _ => Computed {
            headline: Some(Headline::new(&values.twice_v_minus)),
            ..Computed::modular("final", &values.twice_v_minus)
        },
    })
}

pub fn cmd_compute(target: Target, swap: bool, config: &RunConfig, out: &mut dyn Write) -> std::io::Result<i32> {
    let c = match compute(target, swap, config) {
        Ok(c) => c,
        Err(e) => return write_error(config.output, &e, out),
    };
    match config.output {
        OutputFormat::Text => {
            match c.distance_to_integer {
                // near an integer the [0, 1) representative reads as 0 or 1;
                // show the signed residue instead
                Some(d) if d < 1e-6 => {
                    let residue = if c.re > 0.5 { c.re - 1.0 } else { c.re };
                    writeln!(
                        out,
                        "{} = {:+.3e} ± {:.3e} mod 1 (representative {}) [{}]",
                        c.name, residue, c.error_bound, c.re, c.method
                    )?;
                }
                Some(d) => writeln!(
                    out,
                    "{} = {:.12} ± {:.3e} mod 1 (distance to nearest integer {d:.3e}) [{}]",
                    c.name, c.re, c.error_bound, c.method
                )?,
                None if c.im != 0.0 => writeln!(
                    out,
                    "{} = {:.12} {:+.12}i ± {:.3e} [{}]",
                    c.name, c.re, c.im, c.error_bound, c.method
                )?,
                None => writeln!(out, "{} = {:.12} ± {:.3e} [{}]", c.name, c.re, c.error_bound, c.method)?,
            }
            if let Some(h) = &c.headline {
                writeln!(
                    out,
                    "{}: distance to {:.5} is {:.3e}, to mirror {:.5} is {:.3e}",
                    if h.is_unambiguous() && h.matches {
                        "matches"
                    } else if h.is_unambiguous() {
                        "mirror matches"
                    } else {
                        "no unique match"
                    },
                    h.target,
                    h.distance,
                    1.0 - h.target,
                    h.mirror_distance
                )?;
            }
        }
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&c).expect("serializable"))?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "re", "im", "error_bound", "method"])?;
            w.serialize((&c.name, c.re, c.im, c.error_bound, &c.method))
                .map_err(std::io::Error::other)?;
            out.write_all(&w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)?;
        }
    }
    Ok(match &c.headline {
        Some(h) if !(h.matches && h.is_unambiguous()) => EXIT_FAILURE,
        _ => EXIT_OK,
    })
}

pub fn cmd_report(config: &RunConfig, out: &mut dyn Write) -> std::io::Result<i32> {
    let report = match VolumeReport::compute(&config.policy()) {
        Ok(r) => r,
        // structured errors: JSON unless CSV was asked for
        Err(e) if config.output == OutputFormat::Csv => return write_error(OutputFormat::Csv, &e, out),
        Err(e) => return write_error(OutputFormat::Json, &e, out),
    };
    match config.output {
        OutputFormat::Csv => out.write_all(report.to_csv().as_bytes())?,
        OutputFormat::Text | OutputFormat::Json => writeln!(out, "{}", report.to_json())?,
    }
    Ok(EXIT_OK)
}

fn write_error(format: OutputFormat, e: &VolumeError, out: &mut dyn Write) -> std::io::Result<i32> {
    match format {
        OutputFormat::Json => {
            let doc = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        _ => writeln!(out, "error: {}: {e}", e.kind())?,
    }
    Ok(EXIT_FAILURE)
}
