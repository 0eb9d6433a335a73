use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use pi_index::harness::corpus::{builtin_by_name, Constructor, GroupFile, Recipe};
use pi_index::harness::{default_pi_sets, run_corpus, Checks, RunConfig};
use pi_index::{Group, IndexProfile, PrimeSet, DEFAULT_ORDER_CAP};

/// Environment variable overriding the group-order enumeration cap.
const ORDER_CAP_VAR: &str = "PI_INDEX_ORDER_CAP";

#[derive(Parser)]
#[command(name = "pi-index", version, about = "Class pi-indices, Frattini and upper pi-series of finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the index profile of one group as JSON.
    Info {
        /// Group file, built-in corpus name, or constructor expression.
        target: String,
        /// Prime set such as `2,3`; repeatable. Defaults to singletons and pairs.
        #[arg(long = "pi")]
        pi: Vec<PrimeSet>,
    },
    /// Check the bounds and lemmas over a corpus.
    Verify {
        /// Directory of group JSON files.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Include the built-in corpus (implied when --corpus is absent).
        #[arg(long)]
        builtin: bool,
        /// Comma-separated subset of t1,cor,t2,ex1,neg,lemmas,all.
        #[arg(long, default_value = "all")]
        check: Checks,
        /// Skip groups above this order.
        #[arg(long)]
        max_order: Option<usize>,
        /// Prime sets to use instead of the defaults; repeatable.
        #[arg(long = "pi")]
        pi: Vec<PrimeSet>,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
    },
    /// Write a group file from a constructor expression.
    Make {
        /// e.g. `direct_product(quaternion8,cyclic(3))`
        constructor: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Name stored in the file; defaults to the expression.
        #[arg(long)]
        name: Option<String>,
    },
}

fn order_cap() -> Result<usize> {
    match std::env::var(ORDER_CAP_VAR) {
        Ok(v) => v.parse().with_context(|| format!("{ORDER_CAP_VAR}={v} is not an integer")),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn resolve(target: &str, cap: usize) -> Result<(String, Group)> {
    let path = Path::new(target);
    if path.is_file() {
        let file = GroupFile::load(path)?;
        let g = file.build(cap)?;
        return Ok((file.name, g));
    }
    if let Some(entry) = builtin_by_name(target) {
        let Recipe::Named(c) = &entry.recipe else {
            unreachable!("built-in entries are named constructors")
        };
        return Ok((entry.name.clone(), c.build_capped(cap)?));
    }
    match target.parse::<Constructor>() {
        Ok(c) => Ok((c.to_string(), c.build_capped(cap)?)),
        Err(e) => bail!("`{target}` is not a file, built-in group, or constructor: {e}"),
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) -> Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    let cap = order_cap()?;
    match cli.command {
        Command::Info { target, pi } => {
            let (name, g) = resolve(&target, cap)?;
            let pis = if pi.is_empty() { default_pi_sets(g.order() as u64) } else { pi };
            let profile = IndexProfile::build(&name, &g, &pis);
            emit(&(serde_json::to_string_pretty(&profile)? + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { corpus, builtin, check, max_order, pi, json: _, table } => {
            let config = RunConfig {
                builtin: builtin || corpus.is_none(),
                corpus_dir: corpus,
                checks: check,
                max_order,
                order_cap: cap,
                pi_sets: pi,
            };
            let report = run_corpus(&config)?;
            if table {
                emit(&report.to_table())?;
            } else {
                emit(&report.to_json())?;
            }
            Ok(if report.summary.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Make { constructor, output, name } => {
            let c: Constructor = constructor.parse()?;
            let g = c.build_capped(cap)?;
            let name = name.unwrap_or_else(|| c.to_string());
            GroupFile::from_group(&name, &g).save(&output)?;
            eprintln!("wrote {} (order {}) to {}", name, g.order(), output.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
