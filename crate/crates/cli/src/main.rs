//! `liedef`: batch front end for Lie algebra deformations, jet systems and
//! Vessiot structure equations.

mod commands;
mod error;
mod input;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use error::{CliError, CliResult};
use liedef::vessiot::McSign;
use std::io::Write;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Sign {
    Vessiot,
    MaurerCartan,
}

#[derive(Parser, Debug)]
#[command(
    name = "liedef",
    version,
    about = "Exact Lie algebra deformations, jet systems and Vessiot structure equations"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Write the report to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for generic points (never changes reported numbers)
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check the Jacobi identity / Jacobi condition
    Jacobi { input: String },
    /// Dimensions of the adjoint Chevalley-Eilenberg cohomology
    Cohomology {
        input: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Sufficient rigidity test H^2 = 0
    Rigidity { input: String },
    /// Extend a 2-cocycle (or a (C', C'') pair) order by order
    Deform {
        input: String,
        cocycle: String,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Spencer delta-cohomology of the symbol tower
    Delta {
        input: String,
        #[arg(long, default_value_t = 1)]
        r_max: usize,
    },
    /// Prolong a system r times
    Prolong {
        input: String,
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Cartan test, delta-exactness and involutivity verdict
    Involutive { input: String },
    /// Projection drops and algebroid closure
    Integrability {
        input: String,
        #[arg(long, default_value_t = 2)]
        r_max: usize,
        #[arg(long, default_value_t = 1)]
        degree_bound: usize,
    },
    /// Vessiot structure constants of a geometric object
    Vessiot {
        input: String,
        #[arg(long, value_enum, default_value = "vessiot")]
        mc_sign: Sign,
    },
    /// Apply the label transformation given by "label_params"
    Labels { input: String },
    /// Deformation sequence on invariant sections
    Sequence { input: String },
    /// Normalizer quotient and centralizer dimensions
    Normalizer { input: String },
    /// Consolidated report over the built-in special sections
    ReportPaper {
        /// Use the objects and constants in this directory instead
        #[arg(long)]
        fixtures: Option<String>,
    },
}

fn run(cli: &Cli) -> CliResult<commands::Output> {
    let seed = cli.seed;
    match &cli.verb {
        Verb::Jacobi { input } => commands::jacobi(input),
        Verb::Cohomology { input, degree } => commands::cohomology_cmd(input, *degree),
        Verb::Rigidity { input } => commands::rigidity(input),
        Verb::Deform { input, cocycle, order } => commands::deform(input, cocycle, *order),
        Verb::Delta { input, r_max } => commands::delta(input, *r_max, seed),
        Verb::Prolong { input, order } => commands::prolong(input, *order),
        Verb::Involutive { input } => commands::involutive(input, seed),
        Verb::Integrability {
            input,
            r_max,
            degree_bound,
        } => commands::integrability(input, *r_max, *degree_bound, seed),
        Verb::Vessiot { input, mc_sign } => {
            let sign = match mc_sign {
                Sign::Vessiot => McSign::Vessiot,
                Sign::MaurerCartan => McSign::MaurerCartan,
            };
            commands::vessiot(input, sign)
        }
        Verb::Labels { input } => commands::labels(input),
        Verb::Sequence { input } => commands::sequence(input),
        Verb::Normalizer { input } => commands::normalizer(input),
        Verb::ReportPaper { fixtures } => report::report_paper(fixtures.as_deref(), seed),
    }
}

fn emit(cli: &Cli, out: &commands::Output) -> CliResult<()> {
    let body = match cli.format {
        Format::Text => format!("{}\n", out.text),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable")),
    };
    match &cli.out {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::input(format!("cannot write {p}: {e}"))),
        None => {
            let _ = std::io::stdout().write_all(body.as_bytes());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|out| emit(&cli, &out).map(|_| out.code));
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code as u8)
        }
    }
}
