//! The `qweight` command line.
//!
//! Exit status is 0 whenever a computation finishes, whatever its verdict;
//! 2 for usage errors (unknown flags, malformed or out-of-range values) and
//! 3 for validation, JSON, I/O or resource failures.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::ame::{check_ame_uniform, mixed_shadow_scan, scan_grid, scan_to_csv, DimensionProfile};
use crate::enumerators::{
    a_from_unitary, macwilliams, shadow_from_unitary, shadow_transform, unitary_from_a, EnumeratorKind,
    EnumeratorVector,
};
use crate::error::{Error, Result};
use crate::exactmath::{krawtchouk, krawtchouk_like, Rational};
use crate::qecclp::{check_code_params, CodeParams, StabilizerParity};
use crate::states::{
    code_distance, is_ame, marginal_deviation, phi_2333, shor_laflamme_from_operators, unitary_enum_from_operators,
    StateVector,
};

/// Environment variable capping the worker threads of `ame scan`.
pub const THREADS_ENV: &str = "QWEIGHT_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qweight", version, about = "Exact quantum weight enumerators, shadow inequalities and LP bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate K_m(k; n), or the generalized form with --gamma/--delta.
    Krawtchouk(KrawtchoukArgs),
    /// Apply an exact transform to an enumerator JSON file.
    Transform(TransformArgs),
    /// Existence tests for AME states.
    #[command(subcommand)]
    Ame(AmeCommand),
    /// Linear-programming bound for ((n, K, d))_q codes.
    Lp(LpArgs),
    /// Numerical checks on explicit states.
    #[command(subcommand)]
    State(StateCommand),
}

#[derive(Debug, Args)]
struct KrawtchoukArgs {
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    #[arg(long)]
    n: u64,
    #[arg(long, requires = "delta", allow_hyphen_values = true)]
    gamma: Option<BigInt>,
    #[arg(long, requires = "gamma", allow_hyphen_values = true)]
    delta: Option<BigInt>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TransformOp {
    /// A ↔ B.
    Macwilliams,
    /// A → S or A′ → S.
    Shadow,
    /// A → A′ or B → B′.
    Unitary,
    /// A′ → A or B′ → B.
    FromUnitary,
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(long = "in", value_name = "ENUM_JSON")]
    input: PathBuf,
    #[arg(long, value_enum)]
    op: TransformOp,
}

#[derive(Debug, Subcommand)]
enum AmeCommand {
    /// Scott, A-coefficient and shadow criteria for uniform local dimension.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long = "D")]
        dim: u32,
    },
    /// Classify every (n, D) with 2 ≤ D ≤ dmax up to the odd Scott bound.
    Scan {
        #[arg(long)]
        dmax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct shadow-inequality scan for a mixed dimension profile.
    Mixed {
        #[arg(long, value_name = "D1,D2,...")]
        dims: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    #[value(name = "I")]
    One,
    #[value(name = "II")]
    Two,
    #[value(name = "either")]
    Either,
}

#[derive(Debug, Args)]
struct LpArgs {
    #[arg(long)]
    n: usize,
    /// Code dimension K.
    #[arg(long)]
    k: u64,
    #[arg(long)]
    d: usize,
    /// Local dimension.
    #[arg(long)]
    q: u32,
    #[arg(long)]
    pure: bool,
    #[arg(long, value_enum)]
    stabilizer_parity: Option<ParityArg>,
    /// Require S_{n-j} = 0 for odd j (self-dual codes only).
    #[arg(long)]
    self_dual: bool,
}

#[derive(Debug, Subcommand)]
enum StateCommand {
    /// Marginal and distance report for a state file.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        ame: bool,
        #[arg(long)]
        distance: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Measured A, B, A′ and B′ enumerators of |ψ⟩⟨ψ|.
    Enum {
        #[arg(long)]
        file: PathBuf,
    },
    /// Write the 2×3×3×3 AME state.
    Phi2333 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "qweight: {e}");
            exit_code(&e)
        }
    }
}

/// Status for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Parameter(_) | Error::Kind { .. } | Error::Parse { .. } => EXIT_USAGE,
        Error::Resource(_) | Error::Validation(_) | Error::Json(_) | Error::Io(_) => EXIT_FAILURE,
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Krawtchouk(a) => {
            let v = match (a.gamma, a.delta) {
                (Some(g), Some(d)) => krawtchouk_like(a.m, a.k, a.n, &g, &d)?,
                _ => krawtchouk(a.m, a.k, a.n)?,
            };
            writeln!(out, "{v}")?;
        }
        Command::Transform(a) => {
            let v: EnumeratorVector = read_json(&a.input)?;
            let r = match a.op {
                TransformOp::Macwilliams => macwilliams(&v)?,
                TransformOp::Shadow if v.kind() == EnumeratorKind::UnitaryA => shadow_from_unitary(&v)?,
                TransformOp::Shadow => shadow_transform(&v)?,
                TransformOp::Unitary => unitary_from_a(&v)?,
                TransformOp::FromUnitary => a_from_unitary(&v)?,
            };
            emit_json(out, &r)?;
        }
        Command::Ame(AmeCommand::Check { n, dim }) => emit_json(out, &check_ame_uniform(n, dim)?)?,
        Command::Ame(AmeCommand::Scan { dmax, out: path }) => {
            let csv = scan_to_csv(&scan_grid(dmax, threads_from_env()?)?);
            if let Some(p) = path {
                std::fs::write(&p, &csv)?;
            }
            out.write_all(csv.as_bytes())?;
        }
        Command::Ame(AmeCommand::Mixed { dims }) => {
            let profile = DimensionProfile::parse_list(&dims)?;
            let scan = mixed_shadow_scan(&profile)?;
            emit_json(out, &MixedReport::new(&scan.profile, &scan.min_value, scan.witness_t, scan.verdict()))?;
        }
        Command::Lp(a) => {
            let mut p = CodeParams::new(a.n, a.k, a.d, a.q)?.with_pure(a.pure || a.k == 1)?;
            if let Some(par) = a.stabilizer_parity {
                p = p.with_stabilizer_parity(match par {
                    ParityArg::One => StabilizerParity::TypeI,
                    ParityArg::Two => StabilizerParity::TypeII,
                    ParityArg::Either => StabilizerParity::Either,
                })?;
            }
            if a.self_dual {
                p = p.with_self_dual_odd_shadow(true)?;
            }
            emit_json(out, &check_code_params(&p)?)?;
        }
        Command::State(StateCommand::Verify { file, ame, distance, tol }) => {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
            }
            let psi: StateVector = read_json(&file)?;
            let mut report = VerifyReport {
                dims: psi.profile().dims().to_vec(),
                norm: psi.norm(),
                tol,
                is_ame: None,
                max_marginal_deviation: None,
                code_distance: None,
            };
            if ame {
                let dev = marginal_deviation(&psi)?;
                report.max_marginal_deviation = Some(dev);
                report.is_ame = Some(is_ame(&psi, tol)?);
            }
            if distance {
                report.code_distance = Some(code_distance(&psi.density()?, 1)?);
            }
            emit_json(out, &report)?;
        }
        Command::State(StateCommand::Enum { file }) => {
            let psi: StateVector = read_json(&file)?;
            let rho = psi.density()?;
            let unitary = unitary_enum_from_operators(&rho, &rho)?;
            let (a, b, skipped) = match shor_laflamme_from_operators(&rho, &rho) {
                Ok(e) => (Some(e.a), Some(e.b), None),
                Err(e @ (Error::Domain(_) | Error::Resource(_))) => (None, None, Some(e.to_string())),
                Err(e) => return Err(e),
            };
            emit_json(
                out,
                &EnumReport {
                    dims: psi.profile().dims().to_vec(),
                    a,
                    b,
                    a_prime: unitary.a_prime,
                    b_prime: unitary.b_prime,
                    shor_laflamme_skipped: skipped,
                },
            )?;
        }
        Command::State(StateCommand::Phi2333 { out: path }) => {
            let json = phi_2333().to_json();
            match path {
                Some(p) => std::fs::write(p, json + "\n")?,
                None => writeln!(out, "{json}")?,
            }
        }
    }
    Ok(())
}

fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| Error::Parse { what: THREADS_ENV, input: v }),
        Err(_) => Ok(None),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| match e.classify() {
        // wrap data errors raised by our own validation with the file name
        serde_json::error::Category::Data => {
            Error::Validation(format!("{}: {e}", path.display()))
        }
        _ => Error::Json(e),
    })
}

fn emit_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct MixedReport {
    dims: Vec<u32>,
    min_value: Rational,
    /// Parties of the minimizing `T`, numbered from 1.
    witness_t: Vec<usize>,
    witness_mask: u64,
    verdict: &'static str,
}

impl MixedReport {
    fn new(profile: &DimensionProfile, min: &Rational, mask: u64, verdict: &'static str) -> Self {
        MixedReport {
            dims: profile.dims().to_vec(),
            min_value: min.clone(),
            witness_t: (0..profile.n()).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
            witness_mask: mask,
            verdict,
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    dims: Vec<u32>,
    norm: f64,
    tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_ame: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_marginal_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    code_distance: Option<usize>,
}

#[derive(Serialize)]
struct EnumReport {
    dims: Vec<u32>,
    #[serde(rename = "A")]
    a: Option<Vec<f64>>,
    #[serde(rename = "B")]
    b: Option<Vec<f64>>,
    #[serde(rename = "Aprime")]
    a_prime: Vec<f64>,
    #[serde(rename = "Bprime")]
    b_prime: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shor_laflamme_skipped: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let argv = std::iter::once("qweight").chain(args.iter().copied()).map(OsString::from).collect();
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(argv, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn krawtchouk_values() {
        assert_eq!(call(&["krawtchouk", "--m", "3", "--k", "1", "--n", "4"]).1.trim(), "-2");
        assert_eq!(
            call(&["krawtchouk", "--m", "2", "--k", "1", "--n", "3", "--gamma", "1", "--delta", "3"]).1.trim(),
            "3"
        );
        assert_eq!(call(&["krawtchouk", "--m", "1", "--k", "5", "--n", "4"]).0, EXIT_USAGE);
        assert_eq!(call(&["krawtchouk", "--m", "1", "--k", "1", "--n", "4", "--gamma", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["ame", "check", "--n", "4", "--D", "2", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["lp", "--n", "4", "--k", "1", "--d", "9", "--q", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn ame_check_reports_shadow() {
        let (code, out, _) = call(&["ame", "check", "--n", "4", "--D", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"min_shadow_coeff\": \"-1/2\""), "{out}");
    }

    #[test]
    fn mixed_report() {
        let (code, out, _) = call(&["ame", "mixed", "--dims", "2,2,2,3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"min_value\": \"-1/6\""));
        assert!(out.contains("\"verdict\": \"excluded\""));
        assert_eq!(call(&["ame", "mixed", "--dims", "2,x"]).0, EXIT_USAGE);
    }

    #[test]
    fn lp_feasible_case() {
        let (code, out, _) = call(&["lp", "--n", "7", "--k", "1", "--d", "4", "--q", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"feasible\": true"));
    }
}
