use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use implication_tables::monoid::{SuiteConfig, Tamper};
use implication_tables::{BruteBudget, Error, Semantics, SeriesName};

mod commands;
mod output;

/// Exit statuses shared by every subcommand.
pub mod status {
    pub const OK: u8 = 0;
    pub const COUNTEREXAMPLE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const BUDGET: u8 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Bfile,
}

#[derive(Parser, Debug)]
#[command(
    name = "imptab",
    version,
    about = "Truth tables of bracketed implications and their generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, global = true, default_value = "plain")]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,

    /// Largest n enumerated by brute force (both logics).
    #[arg(long, global = true, env = "IMPTAB_BUDGET")]
    budget: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients 1..n of a generating function (t, f, u, g, r, s, g2, i).
    Series {
        name: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Full truth table of one bracketing.
    Table {
        #[arg(long)]
        n: usize,
        /// Position in the canonical bracketing order, from 0.
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, default_value_t = 3, value_parser = parse_radix)]
        semantics: usize,
    },
    /// Brute force, recurrence and closed forms side by side.
    Verify {
        /// Largest variable count compared.
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Truncation order of the closed-form expansions (defaults to n).
        #[arg(long, env = "IMPTAB_ORDER")]
        order: Option<usize>,
        #[arg(long, default_value_t = 3, value_parser = parse_radix)]
        semantics: usize,
    },
    /// Checks the commutative-monoid claims on a finite slice.
    Monoid {
        /// Order for commutativity, associativity, bounds and ideal samples.
        #[arg(long, default_value_t = 40, env = "IMPTAB_ORDER")]
        order: usize,
        /// Order for the power and partition identities.
        #[arg(long, default_value_t = 50)]
        identity_order: usize,
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        #[arg(long, env = "IMPTAB_SEED")]
        seed: Option<u64>,
        /// Corrupt one generator coefficient, GEN:N:DELTA (negative control).
        #[arg(long, hide = true)]
        tamper: Option<String>,
    },
    /// Entries classified by the values of the root's two subformulae.
    Colors {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2, value_parser = parse_radix)]
        semantics: usize,
    },
}

fn parse_radix(s: &str) -> Result<usize, String> {
    match s {
        "2" => Ok(2),
        "3" => Ok(3),
        _ => Err("semantics must be 2 (classical) or 3 (Kleene)".into()),
    }
}

fn semantics(radix: usize) -> Semantics {
    Semantics::from_radix(radix).expect("validated by clap")
}

/// What a command produced: text to emit and an exit status.
pub struct Outcome {
    pub text: String,
    pub status: u8,
}

fn error_status(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => status::BUDGET,
        Error::Domain(_) | Error::Range { .. } | Error::Unsupported(_) => status::USAGE,
        Error::Consistency(_) => status::COUNTEREXAMPLE,
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let budget = cli
        .budget
        .map(BruteBudget::uniform)
        .unwrap_or_default();
    match cli.command {
        Command::Series { name, n } => {
            let name = SeriesName::parse(&name)?;
            commands::series(name, n, cli.format)
        }
        Command::Table { n, index, semantics: r } => {
            commands::table(n, index, semantics(r), &budget, cli.format)
        }
        Command::Verify { n, order, semantics: r } => {
            commands::verify(n, order.unwrap_or(n), semantics(r), &budget, cli.format)
        }
        Command::Monoid {
            order,
            identity_order,
            k_max,
            seed,
            tamper,
        } => {
            let mut cfg = SuiteConfig {
                order,
                identity_order,
                k_max,
                budget,
                ..SuiteConfig::default()
            };
            if let Some(seed) = seed {
                cfg.sample.seed = seed;
            }
            cfg.tamper = tamper.as_deref().map(Tamper::parse).transpose()?;
            commands::monoid(&cfg, cli.format)
        }
        Command::Colors { n, semantics: r } => {
            commands::colors(n, semantics(r), &budget, cli.format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let destination = cli.output.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_status(&e));
        }
    };
    let written = match destination {
        Some(path) => fs::write(&path, &outcome.text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(outcome.text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(status::USAGE);
    }
    ExitCode::from(outcome.status)
}
