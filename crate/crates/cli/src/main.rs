use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use pegraph::{GraphKind, DEFAULT_NODE_BUDGET};
use pegraph_cli::{
    cmd_build, cmd_graph, cmd_iso, cmd_spectrum, cmd_verify, Exit, Format, VerifyArgs,
};

/// Enhanced power graphs of finite groups.
#[derive(Parser)]
#[command(name = "pegraph", version)]
struct Cli {
    /// Node budget for every isomorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    iso_budget: u64,
    /// Where `verify` writes its JSON report.
    #[arg(long, global = true)]
    report_path: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from an expression and write its JSON.
    Build {
        expr: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write a graph of a group as DOT or JSON.
    Graph {
        /// Group JSON file or group expression.
        group: String,
        #[arg(long, default_value = "enhanced")]
        kind: GraphKind,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two groups have isomorphic graphs.
    Iso {
        a: String,
        b: String,
        #[arg(default_value = "enhanced")]
        kind: GraphKind,
    },
    /// Print the order spectrum of a group as JSON.
    Spectrum { group: String },
    /// Build the corpus and replay the checks.
    Verify {
        #[arg(long, default_value_t = pegraph::verify::DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// Only run the uniqueness checks for these families (comma separated).
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Exit::Input as u8),
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Build { expr, out: path } => cmd_build(&mut out, &expr, path.as_deref()),
        Command::Graph {
            group,
            kind,
            format,
            out: path,
        } => cmd_graph(&mut out, &group, kind, format, path.as_deref()),
        Command::Iso { a, b, kind } => cmd_iso(&mut out, &a, &b, kind, cli.iso_budget),
        Command::Spectrum { group } => cmd_spectrum(&mut out, &group),
        Command::Verify {
            max_order,
            families,
        } => cmd_verify(
            &mut out,
            &VerifyArgs {
                max_order,
                families,
                iso_budget: cli.iso_budget,
                report_path: cli.report_path,
            },
        ),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Exit::Input as u8)
        }
    }
}
