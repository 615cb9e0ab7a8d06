use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use soliton_forge::lie::{catalog_get, families_matching, parse_catalog_id, table_brackets, Family, Params};
use soliton_forge::soliton::Reading;
use soliton_forge::Error;

mod analyze;
mod error;
mod examples;
mod verify;

use error::CliError;

/// Exact pseudo-Riemannian geometry and algebraic Ricci solitons on Lie algebras.
#[derive(Parser)]
#[command(name = "soliton-forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Connection, curvature, Ricci operator and soliton test for one metric Lie algebra.
    Analyze {
        /// Lie algebra JSON file.
        algebra: PathBuf,
        /// Metric JSON file (`{"g": [[...]]}`).
        metric: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The four-dimensional catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Cross-check the catalog criteria against the generic soliton solver.
    Verify(VerifyArgs),
    /// Recompute the worked examples and compare with reference values.
    Examples {
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        corrupt_golden: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List all families.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print the brackets of one algebra.
    Show {
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, env = "SOLITON_FORGE_SEED", default_value_t = 1)]
    seed: u64,
    /// Restrict to families whose id starts with this prefix.
    #[arg(long)]
    id: Option<String>,
    /// Fail on completeness gaps as well as soundness violations.
    #[arg(long)]
    strict: bool,
    /// Use the condition lists exactly as tabulated, without corrections.
    #[arg(long)]
    as_printed: bool,
    /// Directory for per-algebra JSON reports.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct FamilyEntry {
    id: &'static str,
    label: &'static str,
    decomposable: bool,
    condition: &'static str,
    grid: Vec<Params>,
}

#[derive(Serialize)]
struct ShownAlgebra {
    id: String,
    label: &'static str,
    condition: &'static str,
    brackets: Vec<String>,
}

/// Writes to stdout, ignoring a closed pipe (e.g. output piped into `head`).
fn emit(s: &str) {
    let _ = io::stdout().lock().write_all(s.as_bytes());
}

macro_rules! emitln {
    ($($t:tt)*) => {
        emit(&format!("{}\n", format_args!($($t)*)))
    };
}

fn print_json(value: &impl Serialize) {
    emitln!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

/// Accepts a bare prefix such as `g4.6` when it names a single family.
fn resolve_family(id: &str) -> Result<Family, CliError> {
    match families_matching(id)?.as_slice() {
        [f] => Ok(*f),
        many => Err(Error::UnknownFamily(format!(
            "{id} (ambiguous: {})",
            many.iter().map(|f| f.id()).collect::<Vec<_>>().join(", ")
        ))
        .into()),
    }
}

fn catalog(cmd: CatalogCommand) -> Result<(), CliError> {
    match cmd {
        CatalogCommand::List { json } => {
            let entries: Vec<FamilyEntry> = Family::ALL
                .into_iter()
                .map(|f| FamilyEntry {
                    id: f.id(),
                    label: f.label(),
                    decomposable: f.is_decomposable(),
                    condition: f.param_condition(),
                    grid: f.parameter_grid(),
                })
                .collect();
            if json {
                print_json(&entries);
            } else {
                for e in &entries {
                    emitln!("{:<10} {:<12} {}", e.id, e.label, e.condition);
                }
            }
        }
        CatalogCommand::Show { id, alpha, beta, json } => {
            let family = resolve_family(&id)?;
            let ids = if alpha.is_none() && beta.is_none() && !family.param_condition().is_empty() {
                family.grid_ids()
            } else {
                vec![parse_catalog_id(family.id(), alpha.as_deref(), beta.as_deref())?]
            };
            let mut shown = Vec::new();
            for cid in &ids {
                catalog_get(cid)?;
                shown.push(ShownAlgebra {
                    id: cid.to_string(),
                    label: family.label(),
                    condition: family.param_condition(),
                    brackets: table_brackets(cid)?,
                });
            }
            if json {
                print_json(&shown);
            } else {
                emitln!("{}", family.label());
                if ids.len() > 1 {
                    emitln!("parameters: {}", family.param_condition());
                    emitln!("grid points:");
                }
                for s in &shown {
                    if ids.len() > 1 {
                        emitln!("{}", s.id);
                    }
                    for b in &s.brackets {
                        emitln!("  {b}");
                    }
                    if s.brackets.is_empty() {
                        emitln!("  abelian");
                    }
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { algebra, metric, json } => {
            let report = analyze::load_and_analyze(&algebra, &metric)?;
            if json {
                print_json(&report);
            } else {
                emit(&analyze::render_text(&report));
            }
        }
        Command::Catalog(cmd) => catalog(cmd)?,
        Command::Verify(args) => {
            let opts = verify::VerifyOptions {
                samples: args.samples,
                seed: args.seed,
                id: args.id,
                reading: if args.as_printed { Reading::AsPrinted } else { Reading::Corrected },
                out: args.out,
            };
            let summary = verify::run(&opts)?;
            if args.json {
                print_json(&summary);
            } else {
                emit(&verify::render_text(&summary));
            }
            let violations = summary.soundness_total();
            if violations > 0 {
                return Err(CliError::Soundness(violations));
            }
            let gaps = summary.gaps_total();
            if args.strict && gaps > 0 {
                return Err(CliError::Strict(gaps));
            }
        }
        Command::Examples { json, corrupt_golden } => {
            let report = examples::run(corrupt_golden)?;
            if json {
                print_json(&report);
            } else {
                for c in &report.checks {
                    let mark = if c.pass { "ok  " } else { "FAIL" };
                    emitln!("{mark} {}: {} = {}", c.example, c.name, c.actual);
                }
            }
            if let Some(bad) = report.failures().next() {
                return Err(CliError::GoldenMismatch(format!(
                    "{} {}: expected {}, got {}",
                    bad.example, bad.name, bad.expected, bad.actual
                )));
            }
            let n = report.checks.len();
            if !json {
                emitln!("examples: {n} checks passed");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
