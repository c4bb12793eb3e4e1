use std::path::PathBuf;
use std::process::ExitCode;

use altlex_cli::commands::{cmd_align, cmd_kappa, cmd_mine};
use altlex_cli::config::{InputKind, RunArgs, RunConfig, UsageError};
use clap::{Parser, Subcommand};

/// Mine alternative lexicalizations of discourse relations from
/// complex/simple parallel corpora.
#[derive(Debug, Parser)]
#[command(name = "altlex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Align an article directory at sentence level and write aligned.tsv.
    Align(RunArgs),
    /// Mine AltLexes and write cases.tsv, altlexes.tsv, senses.tsv and altlexes.json.
    Mine(RunArgs),
    /// Print Cohen's kappa of a `pair_id<TAB>0|1<TAB>0|1` agreement file.
    Kappa {
        /// Agreement TSV.
        input: PathBuf,
    },
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Align(args) => {
            let mut config = RunConfig::from_args(&args)?;
            if args.input_kind.is_none() {
                config.input_kind = InputKind::ArticleDir;
            }
            let n = cmd_align(&config)?;
            println!("{n} aligned pairs");
        }
        Command::Mine(args) => {
            let config = RunConfig::from_args(&args)?;
            let summary = cmd_mine(&config)?;
            let inv = &summary.inventory;
            println!("{} pairs", inv.total_pairs());
            for (case, n) in &inv.per_case_counts {
                println!("  {case}: {n}");
            }
            println!("{} AltLex types", inv.records.len());
            for (resource, mean) in &summary.expansions {
                println!("mean {resource} expansions per connective: {mean:.2}");
            }
            for path in &summary.written {
                println!("wrote {}", path.display());
            }
        }
        Command::Kappa { input } => {
            println!("{:.3}", cmd_kappa(&input)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
