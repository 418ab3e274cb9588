//! The `immaculate` command-line front end.
//!
//! All results go to stdout as JSON (or DOT with `module --dot`); logs go to
//! stderr. Exit codes: 0 when every requested check passes, 1 on a failed
//! check or internal error (with a JSON error report), 2 on usage errors.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use immaculate_core::analysis::certificate_for;
use immaculate_core::export::{certificate_json, compact_expansion, module_dot, module_json};
use immaculate_core::verify::sweep;
use immaculate_core::{
    characteristic, compositions_of, dual_immaculate_via_fundamentals, dual_immaculate_via_kostka,
    h_in_qsym, immaculate_in_h, kostka, quotient_module, word_module, BasisExpansion, Composition,
    HeckeModule,
};

/// Environment variable capping `--all-n` sweeps.
pub const MAX_N_VAR: &str = "IMMACULATE_MAX_N";
pub const DEFAULT_MAX_N: usize = 7;

#[derive(Debug, Parser)]
#[command(name = "immaculate", version, about = "Immaculate tableaux, dual immaculate functions and their 0-Hecke modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Immaculate Kostka number K_{shape,content}.
    Kostka {
        #[arg(long, value_parser = parse_composition)]
        shape: Composition,
        #[arg(long, value_parser = parse_composition)]
        content: Composition,
    },
    /// Expansion of a basis element.
    Expand {
        #[arg(long, value_enum)]
        what: Element,
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, value_enum)]
        basis: TargetBasis,
    },
    /// Dump a module as JSON or as a DOT action graph.
    Module {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Characteristic of a module in the fundamental basis.
    Char {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Indecomposability certificate(s) for V_alpha.
    Certify(Target),
    /// Invariant sweep over all compositions of N.
    Verify {
        #[arg(long = "all-n", value_name = "N")]
        all_n: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Target {
    #[arg(long, value_parser = parse_composition)]
    alpha: Option<Composition>,
    #[arg(long = "all-n", value_name = "N")]
    all_n: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Element {
    /// The dual immaculate function S*_alpha (QSym).
    DualImmaculate,
    /// The immaculate function S_alpha (NSym).
    Immaculate,
    /// The product h_{alpha_1} h_{alpha_2} ... (QSym).
    H,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetBasis {
    M,
    F,
    H,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Word,
    Quotient,
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: immaculate_core::Error| e.to_string())
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn json(value: &Value, pass: bool) -> Self {
        Outcome {
            code: if pass { 0 } else { 1 },
            stdout: format!("{}\n", serde_json::to_string_pretty(value).expect("JSON values serialize")),
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }

    fn failure(message: String) -> Self {
        let report = json!({ "error": message });
        Outcome {
            code: 1,
            stdout: format!("{}\n", serde_json::to_string_pretty(&report).expect("JSON values serialize")),
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome::ok(rendered),
                _ => Outcome::usage(rendered),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(Failure::Usage(msg)) => Outcome::usage(format!("error: {msg}\n")),
        Err(Failure::Internal(msg)) => Outcome::failure(msg),
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<immaculate_core::Error> for Failure {
    fn from(e: immaculate_core::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_N_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_sweep_size(n: usize) -> Result<(), Failure> {
    let cap = max_n()?;
    if n > cap {
        return Err(Failure::Usage(format!("--all-n {n} exceeds the sweep cap {cap} (set {MAX_N_VAR} to raise it)")));
    }
    Ok(())
}

fn build(alpha: &Composition, kind: Kind) -> HeckeModule {
    match kind {
        Kind::Word => word_module(alpha),
        Kind::Quotient => quotient_module(alpha),
    }
}

fn expansion_outcome(x: &BasisExpansion) -> Outcome {
    Outcome::json(&serde_json::to_value(x).expect("expansions serialize"), true)
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Kostka { shape, content } => {
            let k = kostka(&shape, &content).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(Outcome::ok(format!("{k}\n")))
        }
        Command::Expand { what, alpha, basis } => {
            let x = match (what, basis) {
                (Element::DualImmaculate, TargetBasis::M) => dual_immaculate_via_kostka(&alpha),
                (Element::DualImmaculate, TargetBasis::F) => dual_immaculate_via_fundamentals(&alpha),
                (Element::Immaculate, TargetBasis::H) => immaculate_in_h(&alpha)?,
                (Element::H, TargetBasis::M) => h_in_qsym(&alpha),
                (Element::H, TargetBasis::F) => immaculate_core::monomial_to_fundamental(&h_in_qsym(&alpha))?,
                (what, basis) => {
                    return Err(Failure::Usage(format!("{what:?} cannot be expanded in basis {basis:?}")));
                }
            };
            Ok(expansion_outcome(&x))
        }
        Command::Module { alpha, kind, json: _, dot } => {
            let m = build(&alpha, kind);
            if dot {
                Ok(Outcome::ok(module_dot(&m)))
            } else {
                Ok(Outcome::json(&module_json(&m), true))
            }
        }
        Command::Char { alpha, kind } => {
            let m = build(&alpha, kind);
            Ok(Outcome::json(&compact_expansion(&characteristic(&m)), true))
        }
        Command::Certify(Target { alpha: Some(alpha), .. }) => {
            let cert = certificate_for(&quotient_module(&alpha));
            Ok(Outcome::json(&certificate_json(&cert), cert.is_valid()))
        }
        Command::Certify(Target { all_n: Some(n), .. }) => {
            check_sweep_size(n)?;
            log::info!("certifying all {} compositions of {n}", compositions_of(n).len());
            let certs: Vec<_> = compositions_of(n)
                .par_iter()
                .map(|a| certificate_for(&quotient_module(a)))
                .collect();
            let pass = certs.iter().all(|c| c.is_valid());
            let values: Vec<Value> = certs.iter().map(certificate_json).collect();
            Ok(Outcome::json(&Value::Array(values), pass))
        }
        Command::Certify(Target { .. }) => Err(Failure::Usage("certify needs --alpha or --all-n".into())),
        Command::Verify { all_n } => {
            check_sweep_size(all_n)?;
            log::info!("verifying all compositions of {all_n}");
            let report = sweep(all_n);
            for (alpha, check) in report.failures() {
                log::warn!("{} failed for {:?}", check.check, alpha);
            }
            let value = serde_json::to_value(&report).expect("reports serialize");
            Ok(Outcome::json(&value, report.passed))
        }
    }
}
