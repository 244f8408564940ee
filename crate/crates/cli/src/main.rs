use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use krstrata_cli::{cmd_counts, cmd_enumerate, cmd_stratum, cmd_table, cmd_verify, parse_word, Format};

#[derive(Parser)]
#[command(name = "krstrata", version, about = "Kottwitz–Rapoport strata of Siegel modular varieties with Iwahori level")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Summary table for genus 1 up to --g.
    Table {
        #[arg(long, default_value_t = 5)]
        g: usize,
    },
    /// List every stratum of genus --g.
    Enumerate {
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Keep only strata with this p-rank.
        #[arg(long = "filter-prank")]
        filter_prank: Option<usize>,
    },
    /// Report on the stratum of s_{w1}…s_{wk}·τ.
    Stratum {
        #[arg(long)]
        g: usize,
        /// Simple reflection indices, separated by spaces or commas.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Residue characteristic; with --N adds the component count.
        #[arg(long, requires = "level")]
        p: Option<u64>,
        #[arg(long = "N", id = "level", requires = "p")]
        level: Option<u64>,
    },
    /// Mass, point count of A_τ and component counts of superspecial strata.
    Counts {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        p: u64,
        #[arg(long = "N")]
        level: u64,
    },
    /// Run the built-in oracle cross-checks.
    Verify,
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let text = match cli.command {
        Command::Table { g } => cmd_table(g)?,
        Command::Enumerate { g, format, filter_prank } => {
            let format = match format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            cmd_enumerate(g, format, filter_prank)?
        }
        Command::Stratum { g, word, p, level } => {
            let output = cmd_stratum(g, &parse_word(&word)?, p.zip(level))?;
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            serde_json::to_string_pretty(&output.row)? + "\n"
        }
        Command::Counts { g, p, level } => cmd_counts(g, p, level)?,
        Command::Verify => {
            let (report, ok) = cmd_verify();
            emit(&cli.out, &report)?;
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    };
    emit(&cli.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
