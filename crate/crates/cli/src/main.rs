//! `strongdiv`: runs verification suites and prints one report per claim.

mod idealsys;
mod rees;
mod report;
mod s21;
mod w22;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{exit_code_for, Sink, EXIT_CLAIM_FAILED, EXIT_OK};

#[derive(Parser, Debug)]
#[command(
    name = "strongdiv",
    version,
    about = "Exact checks for strongly divisorial ideal constructions"
)]
struct Cli {
    /// Emit newline-delimited JSON reports.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Search bound; meaning depends on the subcommand.
    #[arg(long, global = true, allow_negative_numbers = true)]
    bound: Option<i64>,
    /// Tower level for `rees member`.
    #[arg(long, global = true)]
    level: Option<usize>,
    #[command(subcommand)]
    suite: Suite,
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// The dyadic monoid generated by n + 1 + 1/2^n.
    S21(s21::Args),
    /// Star operations on ideals of numerical semigroups and their products.
    Idealsys(idealsys::Args),
    /// Weights and initial forms of Laurent polynomials.
    W22 {
        #[command(subcommand)]
        cmd: w22::Cmd,
    },
    /// The iterated extended-Rees tower.
    Rees {
        #[command(subcommand)]
        cmd: rees::Cmd,
    },
}

pub struct Globals {
    pub seed: u64,
    pub bound: Option<i64>,
    pub level: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let replay: Vec<String> = std::env::args().skip(1).filter(|a| a != "--json").collect();
    let globals = Globals {
        seed: cli.seed.unwrap_or(0),
        bound: cli.bound,
        level: cli.level,
    };
    let mut sink = Sink::new(replay);
    let run = match &cli.suite {
        Suite::S21(args) => s21::run(args, &globals, &mut sink),
        Suite::Idealsys(args) => idealsys::run(args, &globals, &mut sink),
        Suite::W22 { cmd } => w22::run(cmd, &globals, &mut sink),
        Suite::Rees { cmd } => rees::run(cmd, &globals, &mut sink),
    };
    if let Err(e) = run {
        eprintln!("error: {e}");
        return ExitCode::from(exit_code_for(&e) as u8);
    }
    let mut reports = sink.reports;
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    for r in &reports {
        if cli.json {
            println!("{}", serde_json::to_string(r).expect("reports serialize"));
        } else {
            println!("{:<13} {}  {}", r.status.to_string(), r.claim_id, r.witness);
        }
    }
    let code = if reports.iter().all(|r| r.status.ok()) {
        EXIT_OK
    } else {
        EXIT_CLAIM_FAILED
    };
    ExitCode::from(code as u8)
}
