//! Command-line front end for the preab workbench: canned reproductions
//! of the worked examples (`repro`) and checkers over user-supplied JSON
//! (`check`).
//!
//! Exit codes: 0 on success, 1 when a reproduction fails, 2 on invalid
//! input.

mod checks;
mod repro;

use clap::{Parser, Subcommand, ValueEnum};
use preab::abcat::LiftBound;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "preab", version, about = "Exact purity and lifting checkers for preabelian categories")]
struct Cli {
    /// Emit machine-readable JSON instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for all randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Scalar field for quiver computations: Q or Fp:<p> with p in {2,3,5,7}.
    #[arg(long, global = true, default_value = "Fp:2")]
    field: String,
    /// Per-level dimension bound for exhaustive quiver scans.
    #[arg(long, global = true, default_value_t = 3)]
    dim_bound: usize,
    /// Bound gens,rels,max-entry for the abelian lifting oracle.
    #[arg(long, global = true, default_value = "2,2,3")]
    ab_bound: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-run a canned reproduction and report pass/fail per check.
    Repro {
        #[arg(value_enum)]
        case: ReproCase,
    },
    /// Run a checker on a JSON input file.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        /// Path to the JSON input.
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ReproCase {
    Unions,
    LeftQuiver,
    RightQuiver,
    ClosureAb,
    ClosureQuiver,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CheckKind {
    Purity,
    Classify,
    EffectiveUnion,
    Semiabelian,
    Injective,
}

pub struct Flags {
    pub json: bool,
    pub seed: u64,
    pub field: String,
    pub dim_bound: usize,
    pub lift_bound: LiftBound,
}

fn parse_ab_bound(s: &str) -> Result<LiftBound, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected --ab-bound gens,rels,max-entry".into());
    }
    let gens = parts[0].trim().parse().map_err(|_| "bad gens bound")?;
    let rels = parts[1].trim().parse().map_err(|_| "bad rels bound")?;
    let max_entry = parts[2].trim().parse().map_err(|_| "bad entry bound")?;
    Ok(LiftBound {
        gens,
        rels,
        max_entry,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let lift_bound = match parse_ab_bound(&cli.ab_bound) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let flags = Flags {
        json: cli.json,
        seed: cli.seed,
        field: cli.field.clone(),
        dim_bound: cli.dim_bound,
        lift_bound,
    };
    let outcome = match cli.command {
        Command::Repro { case } => repro::run(case, &flags),
        Command::Check { kind, input } => checks::run(kind, &input, &flags),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
