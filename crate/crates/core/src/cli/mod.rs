//! Command-line front end: argument parsing, subcommands, JSON reports and
//! the scenario runner, plus the constructions behind the shipped data.

pub mod construct;
pub mod data;
pub mod labels;
pub mod report;
pub mod scenario;

mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use commands::execute;
pub use report::{Report, Timer, FORMAT_VERSION};
pub use scenario::{run_named, Scenario, ScenarioOutcome, SCENARIOS};

use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "brauerbox", version, about = "Modular representations, Brauer quotients and Green correspondents over F_p")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Characteristic.
    #[arg(long, global = true, default_value_t = 3)]
    pub p: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the full report as JSON to this path.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Largest group order for searches (normalizers, Sylow subgroups).
    #[arg(long, global = true)]
    pub bound: Option<u128>,
    /// Leave timings out of the JSON report.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Permutation group operations.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Module operations.
    #[command(subcommand)]
    Mod(ModCmd),
    /// Fixed points, Brauer quotients, marks and Green correspondents.
    #[command(subcommand)]
    Brauer(BrauerCmd),
    /// Linear characters, idempotents and projections.
    #[command(subcommand)]
    Blocks(BlocksCmd),
    /// Shipped scenarios.
    #[command(subcommand)]
    Scenario(ScenarioCmd),
    /// Regenerate the data files.
    Bootstrap {
        /// Target directory (default: the data directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    Info {
        #[arg(long)]
        group: String,
    },
    Sylow {
        #[arg(long)]
        group: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Normalizer {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Action on the right cosets of a subgroup.
    Cosets {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModCmd {
    Chop {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        group: Option<String>,
    },
    Radseries {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        group: Option<String>,
    },
    Socseries {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        group: Option<String>,
    },
    Decompose {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        group: Option<String>,
    },
    Hom {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        rep2: String,
        #[arg(long)]
        group: Option<String>,
    },
    /// Induce a module of `--group` up to `--to`.
    Induce {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Restrict {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Dual {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Tensor {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        rep2: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BrauerCmd {
    Fixed {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        rep: String,
    },
    Quotient {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        rep: String,
        /// Normalizer file; computed when absent.
        #[arg(long)]
        normalizer: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fixed points of `--k` on the cosets of `--sub` in `--group`.
    Marks {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        k: String,
    },
    Green {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        normalizer: Option<String>,
        /// Restrict, decompose and strip instead of the Brauer quotient.
        #[arg(long)]
        generic: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BlocksCmd {
    Chars {
        #[arg(long)]
        group: String,
    },
    /// Idempotent of a character given by its values on the generators.
    Idem {
        #[arg(long)]
        group: String,
        #[arg(long, value_delimiter = ',')]
        values: Vec<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Project {
        #[arg(long)]
        rep: String,
        /// Group of the module.
        #[arg(long)]
        group: String,
        /// Support group of the idempotent.
        #[arg(long)]
        e: String,
        #[arg(long)]
        idem: String,
        /// Subgroup whose action is kept.
        #[arg(long)]
        sub: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScenarioCmd {
    Run { name: String },
    List,
}

/// 2 for inconclusive certification, 1 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_inconclusive() {
        2
    } else {
        1
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let echo = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, echo) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if let Some(path) = &cli.global.json {
                if let Err(e) = data::write_text(path, &outcome.report.to_json()) {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
