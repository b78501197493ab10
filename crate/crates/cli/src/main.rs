mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use commands::{Kind, Method, Report, Status};
use sidon_core::{Enumerator, DEFAULT_MAX_TUPLES};

#[derive(Parser)]
#[command(name = "sidon", version)]
#[command(about = "Exact Sidon-set computations for linear forms over the rationals", long_about = None)]
struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Refuse enumerations larger than this many tuples
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TUPLES)]
    max_tuples: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the image φ(A) of a set under a linear form
    Image {
        /// Comma-separated rationals, e.g. "0,1,3/2"; may be empty
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// Comma-separated nonzero coefficients c1,...,ch
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Decide whether a set is a Sidon set (of a given order) for a form
    Check {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// Maximum allowed number of representations per value
        #[arg(long, default_value_t = 1)]
        order: u64,
    },
    /// Print the exception set of monic binary forms x1 + c*x2
    Exceptions {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value_t = Method::Enumerate)]
        method: Method,
    },
    /// Print the hyperplane arrangement of failing h-ary coefficient vectors
    Hyperplanes {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        arity: usize,
    },
    /// Build a form for which the set is a Sidon set
    Construct {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        arity: usize,
        /// Base for the g-adic form; defaults to max(A) + 1
        #[arg(long, allow_hyphen_values = true)]
        g: Option<BigInt>,
    },
    /// Map a set affinely onto one containing 0 and 1
    Normalize {
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// Element sent to 0; defaults to the smallest element
        #[arg(long, allow_hyphen_values = true)]
        a0: Option<String>,
        /// Element sent to 1; defaults to the smallest element other than a0
        #[arg(long, allow_hyphen_values = true)]
        a1: Option<String>,
    },
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    let enumerator = Enumerator::new(cli.max_tuples);
    match cli.command {
        Command::Image { set, form } => commands::image(
            &commands::parse_set(&set)?,
            &commands::parse_form(&form)?,
            &enumerator,
        ),
        Command::Check { set, form, order } => commands::check(
            &commands::parse_set(&set)?,
            &commands::parse_form(&form)?,
            order,
            &enumerator,
        ),
        Command::Exceptions { set, method } => {
            commands::exceptions(&commands::parse_set(&set)?, method)
        }
        Command::Hyperplanes { set, arity } => {
            commands::hyperplanes(&commands::parse_set(&set)?, arity, &enumerator)
        }
        Command::Construct {
            set,
            kind,
            arity,
            g,
        } => commands::construct(&commands::parse_set(&set)?, kind, arity, g, &enumerator),
        Command::Normalize { set, a0, a1 } => {
            let a0 = a0.as_deref().map(commands::parse_rational).transpose()?;
            let a1 = a1.as_deref().map(commands::parse_rational).transpose()?;
            commands::normalize(&commands::parse_set(&set)?, a0, a1)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Mismatch => ExitCode::from(2),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
