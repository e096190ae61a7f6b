mod commands;
mod output;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use realgr_core::realform::{catalog, Catalog};

#[derive(Parser, Debug)]
#[command(name = "realgr", version, about = "Real forms, associated dual subgroups and real loop Grassmannian combinatorics")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Catalog file to use instead of the built-in one.
    #[arg(long, global = true, env = "REALGR_CATALOG")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the associated subgroup for every tabulated form and diff it
    /// against the catalog expectations.
    Table1 {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Summary of one real form.
    Classify { label: String },
    /// Restricted roots `σ(R)`, `σ(R_0)` and `Ξ`.
    Restricted { label: String },
    /// Components of the real loop Grassmannian.
    Components { label: String },
    /// Orbit closure poset as a Graphviz graph.
    Poset {
        /// Catalog label or Cartan type (adjoint group).
        target: String,
        #[arg(long)]
        height: usize,
        /// Use real dominant coweights and real dominance.
        #[arg(long)]
        real: bool,
    },
    /// Weight multiplicities of an irreducible representation of the dual group.
    Character {
        /// Cartan type of the adjoint group `G`.
        cartan: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Graded specialization character of `V_λ`.
    Specialize {
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Branching of `V_λ` to the associated subgroup, degree by degree.
    Branch {
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Satake catalog tools.
    Satake {
        #[command(subcommand)]
        action: SatakeAction,
    },
    /// Run the invariant suites.
    Selftest {
        /// Larger height bounds.
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum SatakeAction {
    /// Load and validate a catalog file.
    Validate { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = !matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            if !usage {
                return ExitCode::SUCCESS;
            }
            let names: Vec<String> = Cli::command()
                .get_subcommands()
                .map(|c| c.get_name().to_string())
                .collect();
            eprintln!("valid subcommands: {}", names.join(", "));
            return ExitCode::from(2);
        }
    };
    let owned;
    let cat: &Catalog = match &cli.catalog {
        None => catalog(),
        Some(path) => match Catalog::from_path(path) {
            Ok(c) => {
                owned = c;
                &owned
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        },
    };
    match commands::run(&cli.command, cat) {
        Ok(outcome) => {
            output::emit(cli.format, &cli.command, cat, &outcome);
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
