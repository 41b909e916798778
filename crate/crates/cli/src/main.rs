use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use blockalg::groups::{inertial_candidate, INERTIAL_TYPES};
use blockalg::pipeline::{run_pipeline, PipelineConfig};
use blockalg::quiverlab::{build_comm_presented, build_path_algebra, parse_comm, parse_quiver};
use blockalg::{Algebra, PrimeField, RadicalStrategy, Subspace};
use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand};

/// Exact invariants of small algebras over GF(p).
#[derive(Parser)]
#[command(name = "blockalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification pipeline and print the report.
    Verify {
        /// Emit the report as JSON.
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the report as a table (the default).
        #[arg(long)]
        text: bool,
        /// Characteristic of the ground field.
        #[arg(long, default_value_t = 3, value_parser = parse_prime)]
        p: u32,
        /// Directory holding replacement input files.
        #[arg(long)]
        specs: Option<PathBuf>,
    },
    /// Quiver presentations.
    Quiver {
        #[command(subcommand)]
        action: BuildAction,
    },
    /// Commutative presentations.
    Comm {
        #[command(subcommand)]
        action: BuildAction,
    },
    /// Number of orbits of an inertial quotient candidate on GF(3)^2.
    Orbits {
        #[arg(long, value_parser = PossibleValuesParser::new(INERTIAL_TYPES))]
        group: String,
    },
}

#[derive(Subcommand)]
enum BuildAction {
    /// Build the algebra and print its basis, or a summary with --info.
    Build {
        file: PathBuf,
        #[arg(long)]
        info: bool,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|e| format!("{e}"))?;
    PrimeField::new(p).map_err(|e| e.to_string())?;
    Ok(p)
}

fn summary(a: &Algebra, j: &Subspace) -> Result<String, String> {
    let layers = a.radical_layers(j).map_err(|e| e.to_string())?;
    Ok(format!(
        "dim {}, center {}, radical layers {}",
        a.dim(),
        a.center().dim(),
        layers.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    ))
}

fn print_build(a: &Algebra, j: &Subspace, info: bool) -> Result<(), String> {
    if info {
        emit(&format!("{}\n", summary(a, j)?));
    } else {
        emit(&format!("dim {}\n{}\n", a.dim(), a.labels().join("\n")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify { json, text: _, p, specs } => {
            let report = run_pipeline(&PipelineConfig { p, specs_dir: specs }).map_err(|e| e.to_string())?;
            if json {
                emit(&format!("{}\n", report.to_json()));
            } else {
                emit(&report.to_text());
            }
            Ok(report.passed())
        }
        Command::Quiver {
            action: BuildAction::Build { file, info },
        } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let pa = parse_quiver(&text).and_then(|s| build_path_algebra(&s)).map_err(|e| e.to_string())?;
            let a = pa.algebra();
            let j = a
                .radical(&RadicalStrategy::ArrowIdeal(pa.arrow_ideal()))
                .map_err(|e| e.to_string())?;
            print_build(a, &j, info)?;
            Ok(true)
        }
        Command::Comm {
            action: BuildAction::Build { file, info },
        } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let pa = parse_comm(&text).and_then(|s| build_comm_presented(&s)).map_err(|e| e.to_string())?;
            let a = pa.algebra();
            let j = a.radical(&RadicalStrategy::SplitLocal).map_err(|e| e.to_string())?;
            print_build(a, &j, info)?;
            Ok(true)
        }
        Command::Orbits { group } => {
            let g = inertial_candidate(&group).map_err(|e| e.to_string())?;
            emit(&format!("{}\n", g.orbit_count()));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
