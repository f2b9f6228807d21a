//! Batch front end over the report runners: algebra self-tests, squaring
//! verifications, named-solution residual suites, and the radial integrator.
//! Reports are line-delimited JSON; exit code 0 means all checks passed,
//! 1 means a residual failure, 2 a usage or configuration error.

use clap::{Parser, Subcommand};
use spinform::report::{self, SquaresKindArg};
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spinform", version, about = "complex spinorial forms verification engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the Kähler-Atiyah algebra invariant suite for one signature.
    Algebra {
        #[arg(long)]
        p: u8,
        #[arg(long)]
        q: u8,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Run the spinor squaring suite for one signature.
    Squares {
        #[arg(long)]
        p: u8,
        #[arg(long)]
        q: u8,
        /// Branch label for odd dimensions (±1).
        #[arg(long)]
        ell: Option<i8>,
        /// Adjoint type of the pairings (±1).
        #[arg(long, default_value_t = 1)]
        s: i8,
        /// hermitian | bilinear | both
        #[arg(long, default_value = "both")]
        kind: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Residual suite for a named solution family.
    Verify {
        /// freedman | black_brane | radial | killing_warped (may come from
        /// the params file instead)
        #[arg(long)]
        family: Option<String>,
        /// Inline `k=v,k=v` parameters or a path to a JSON/TOML file of the
        /// shape {family, params}.
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Perturbation `key=eps` applied before checking (sensitivity runs).
        #[arg(long)]
        perturb: Option<String>,
    },
    /// Integrate the radial profile system and report constraint drift.
    Ode {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        e: f64,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0.0)]
        r0: f64,
        #[arg(long)]
        r1: f64,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Root sign for ℱ′ when completing initial data from the constraint.
        #[arg(long, default_value_t = -1)]
        fp_sign: i8,
        /// Trajectory output path (JSON).
        #[arg(long)]
        out: Option<String>,
    },
}

fn parse_inline_params(s: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for piece in s.split(',') {
        if piece.trim().is_empty() {
            continue;
        }
        let (k, v) = piece
            .split_once('=')
            .ok_or_else(|| format!("bad parameter `{piece}`, expected k=v"))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn load_params(arg: Option<&str>) -> Result<(Option<String>, BTreeMap<String, String>), String> {
    let Some(arg) = arg else {
        return Ok((None, BTreeMap::new()));
    };
    let path = std::path::Path::new(arg);
    if !path.exists() {
        return Ok((None, parse_inline_params(arg)?));
    }
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let value: serde_json::Value = if arg.ends_with(".toml") {
        let t: toml::Value = toml::from_str(&text).map_err(|e| e.to_string())?;
        serde_json::to_value(t).map_err(|e| e.to_string())?
    } else {
        serde_json::from_str(&text).map_err(|e| e.to_string())?
    };
    let family = value.get("family").and_then(|v| v.as_str()).map(String::from);
    let mut map = BTreeMap::new();
    if let Some(obj) = value.get("params").and_then(|v| v.as_object()) {
        for (k, v) in obj {
            let vs = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            map.insert(k.clone(), vs);
        }
    }
    Ok((family, map))
}

fn emit(report: &spinform::report::Report) -> ExitCode {
    print!("{}", report.to_ndjson());
    if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Algebra { p, q, samples, seed, tol } => {
            match report::run_algebra_suite(p, q, samples, seed, tol) {
                Ok(r) => emit(&r),
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Squares { p, q, ell, s, kind, samples, seed } => {
            let kind = match kind.as_str() {
                "hermitian" => SquaresKindArg::Hermitian,
                "bilinear" => SquaresKindArg::Bilinear,
                "both" => SquaresKindArg::Both,
                other => return usage_error(&format!("unknown kind `{other}`")),
            };
            match report::run_squares_suite(p, q, ell, s, kind, samples, seed) {
                Ok(r) => emit(&r),
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Verify { family, params, points, tol, seed, perturb } => {
            let (file_family, map) = match load_params(params.as_deref()) {
                Ok(v) => v,
                Err(e) => return usage_error(&e),
            };
            let Some(family) = family.or(file_family) else {
                return usage_error("no family given (flag --family or params file)");
            };
            let perturb = match perturb {
                None => None,
                Some(s) => match s.split_once('=') {
                    Some((k, v)) => match v.parse::<f64>() {
                        Ok(eps) => Some((k.to_string(), eps)),
                        Err(_) => return usage_error(&format!("bad perturbation `{s}`")),
                    },
                    None => return usage_error(&format!("bad perturbation `{s}`")),
                },
            };
            match report::run_verify_family(&family, &map, points, tol, seed, perturb) {
                Ok(r) => emit(&r),
                Err(spinform::Error::InvalidParameter(msg)) => usage_error(&msg),
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Ode { lambda, e, c, r0, r1, step, fp_sign, out } => {
            match report::run_ode(lambda, e, c, r0, r1, step, fp_sign) {
                Ok((r, traj)) => {
                    if let Some(path) = out {
                        match serde_json::to_string_pretty(&traj) {
                            Ok(json) => {
                                if let Err(err) = std::fs::write(&path, json) {
                                    return usage_error(&format!("cannot write `{path}`: {err}"));
                                }
                            }
                            Err(err) => return usage_error(&err.to_string()),
                        }
                    }
                    emit(&r)
                }
                Err(spinform::Error::ConstraintUnsolvable(msg)) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(1)
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
    }
}
