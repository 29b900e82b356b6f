//! `pebble`: command-line access to the pebbling-core computations.
//!
//! Exit status is 0 on success (including reports that disagree with expected
//! tables), 1 on usage or input errors and 2 when a search budget runs out.

mod input;
mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use pebbling_core::domination::{DominationError, DominationLimits};
use pebbling_core::families::{FamilyError, FamilyOptions, ReproduceOptions, Suite};
use pebbling_core::graph::GraphError;
use pebbling_core::optimal::{Cap, SearchOptions};
use pebbling_core::pebbling::{PebblingError, SolveOptions};
use pebbling_core::symmetry::SymmetryError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pebbling(#[from] PebblingError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("writing output: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let budget = matches!(
            self,
            CliError::Pebbling(PebblingError::BudgetExceeded { .. })
                | CliError::Domination(DominationError::BudgetExceeded { .. })
                | CliError::Family(FamilyError::Pebbling(PebblingError::BudgetExceeded { .. }))
                | CliError::Family(FamilyError::Domination(
                    DominationError::BudgetExceeded { .. }
                ))
        );
        if budget {
            2
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "pebble",
    version,
    about = "Exact optimal and t-restricted optimal graph pebbling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Configurations visited per target before the generic solver gives up.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget: u64,
    /// Enumeration nodes allowed over a whole optimal search.
    #[arg(long, global = true, default_value_t = 50_000_000_000)]
    pub max_nodes: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Include move certificates (solve, verify).
    #[arg(long, global = true)]
    pub certificates: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Common {
    pub fn search(&self) -> SearchOptions {
        SearchOptions {
            solve: SolveOptions {
                max_states: self.budget,
                ..SolveOptions::default()
            },
            threads: self.threads,
            max_nodes: self.max_nodes,
            ..SearchOptions::default()
        }
    }

    pub fn domination(&self) -> DominationLimits {
        DominationLimits::default()
    }
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Generator spec (path:6, star:4, spider:2:1,1,2, alkane:3,
    /// named:neopentane, cycle:5, complete:4), a file with an edge list or
    /// graph6 text, or a graph6 string.
    #[arg(long)]
    pub graph: String,
}

#[derive(Debug, Args)]
pub struct CapArg {
    /// Per-vertex cap on the starting configuration, or `unbounded`.
    #[arg(long = "t", default_value = "2", value_parser = input::parse_cap)]
    pub t: Cap,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Optimal value, count and every optimal configuration.
    Solve {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cap: CapArg,
    },
    /// The optimal value only.
    Value {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cap: CapArg,
    },
    /// The number of optimal configurations.
    Count {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Domination, Roman and total domination numbers and the upper bounds
    /// they imply.
    Bounds {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Automorphism group order, orbits and distinguishing number.
    Sym {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Radius at most 2 trees with distinguishing number 2 and their
    /// invariants.
    Family,
    /// Alkane table and family comparison against the expected values.
    Reproduce {
        #[arg(long, default_value = "all", value_parser = ["alkanes", "family", "all"])]
        suite: String,
    },
    /// Whether a configuration is solvable, with move certificates.
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated pebble counts, one per vertex.
        #[arg(long)]
        config: String,
        /// Check only this target.
        #[arg(long)]
        target: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let common = &cli.common;
    match cli.command {
        Command::Solve { graph, cap } => render::solve(&graph.graph, cap.t, common),
        Command::Value { graph, cap } => render::value(&graph.graph, cap.t, common, false),
        Command::Count { graph, cap } => render::value(&graph.graph, cap.t, common, true),
        Command::Bounds { graph } => render::bounds(&graph.graph, common),
        Command::Sym { graph } => render::sym(&graph.graph, common),
        Command::Family => render::family(&family_options(common), common),
        Command::Reproduce { suite } => {
            let suite: Suite = suite.parse()?;
            let options = ReproduceOptions {
                suite,
                family: family_options(common),
            };
            render::reproduce(&options, common)
        }
        Command::Verify {
            graph,
            config,
            target,
        } => render::verify(&graph.graph, &config, target, common),
    }
}

fn family_options(common: &Common) -> FamilyOptions {
    FamilyOptions {
        search: SearchOptions {
            threads: 1,
            ..common.search()
        },
        threads: common.threads,
        ..FamilyOptions::default()
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let out = cli.common.out.clone();
    let result = run(cli).and_then(|text| {
        match out {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pebble: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
