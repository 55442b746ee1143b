//! `iwalink`: Iwasawa invariants of branched cyclic covers of links.

mod commands;
mod render;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::render::Output;

#[derive(Parser, Debug)]
#[command(name = "iwalink", version, about = "Iwasawa invariants of branched p-cyclic covers of links")]
struct Cli {
    /// Print key-sorted JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// Where the link polynomial comes from: an expression or a named family.
#[derive(Args, Debug, Clone, Default)]
pub struct SourceArgs {
    /// Polynomial expression in t1..tr (or t when r = 1).
    #[arg(long)]
    pub delta: Option<String>,
    /// Number of variables (components); also the component count for hosokawa.
    #[arg(long)]
    pub r: Option<usize>,
    /// Named family: figure1, conway, c4, hosokawa, bailey, bezout, knot.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<i64>,
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    /// The prime p.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct TowerArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Direction z as comma-separated integers; defaults to the family's
    /// recommended direction or all ones.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub z: Option<Vec<i64>>,
    /// Component knot polynomials separated by ';', used for the lowest levels
    /// when p divides some entry of z.
    #[arg(long)]
    pub knot_polys: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// lambda, mu, nu and the stabilization data of a tower.
    Invariants(TowerArgs),
    /// Homology orders of the covers at levels 0..=nmax.
    Orders {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
    /// List or build the catalogued link families.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Check the Torres conditions for a two-variable polynomial.
    Torres {
        #[command(flatten)]
        source: SourceArgs,
        /// Linking number; defaults to the family's.
        #[arg(long, allow_negative_numbers = true)]
        l12: Option<String>,
    },
    /// Pseudonullity verdict from the factor criterion.
    Pseudonull {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Bezout certificate N F + B G = 2^m, optionally with its link.
    Bezout {
        #[arg(long)]
        m: u32,
        /// Also build the link polynomial with this exponent.
        #[arg(long)]
        s: Option<u32>,
    },
    /// Recompute the reference values and compare.
    Repro,
}

#[derive(Subcommand, Debug)]
enum FamilyAction {
    List,
    Make(SourceArgs),
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(iwalink_core::Error),
    /// `repro` found mismatches; the report is still printed.
    Mismatch(Output),
}

impl From<iwalink_core::Error> for CliError {
    fn from(e: iwalink_core::Error) -> Self {
        CliError::Domain(e)
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("IWALINK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("IWALINK_THREADS must be a nonnegative integer, got {raw:?}")))?;
    // 0 leaves the choice to rayon
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure thread pool: {e}")))
}

fn dispatch(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Invariants(t) => commands::invariants(&t),
        Command::Orders { tower, nmax } => commands::orders(&tower, nmax),
        Command::Family { action: FamilyAction::List } => Ok(commands::family_list()),
        Command::Family { action: FamilyAction::Make(s) } => commands::family_make(&s),
        Command::Torres { source, l12 } => commands::torres(&source, l12.as_deref()),
        Command::Pseudonull { source } => commands::pseudonull(&source),
        Command::Bezout { m, s } => commands::bezout(m, s),
        Command::Repro => commands::repro(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let json = cli.json;
    let result = configure_threads().and_then(|_| dispatch(cli.command));
    match result {
        Ok(out) => {
            out.print(json);
            ExitCode::SUCCESS
        }
        Err(CliError::Mismatch(out)) => {
            out.print(json);
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            render::print_error(json, "usage", &msg);
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            render::print_error(json, e.code(), &e.to_string());
            ExitCode::from(1)
        }
    }
}
