//! `k3toric` command-line tool.
//!
//! Every command except `verify-paper` prints one JSON document on stdout and
//! a one-line summary on stderr. Exit codes: 0 success, 1 computation
//! failure, 2 bad input.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use k3toric::report::{verify_paper, GRID_RADIUS};

use commands::{CliError, Output};

#[derive(Parser)]
#[command(name = "k3toric", version, about = "Toric K3 Picard lattices, lattice invariants and torus sextics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on a 3-dimensional lattice polytope file.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// K3 hypersurfaces of a reflexive polytope.
    #[command(subcommand)]
    K3(K3Cmd),
    /// Gram matrix files.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Torus-type sextic curves.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Recompute every reference claim and print the report.
    VerifyPaper {
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum PolytopeCmd {
    /// Polar dual; rational vertices are reported as non-integral.
    Dual { file: PathBuf },
    /// Reflexivity test.
    Reflexive { file: PathBuf },
    /// All lattice points.
    Points { file: PathBuf },
}

#[derive(Subcommand)]
enum K3Cmd {
    /// Divisor intersection graph and Picard lattice.
    Picard { file: PathBuf },
    /// Duality check between the Picard lattices of two polytopes.
    Duality { file_s: PathBuf, file_t: PathBuf },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Rank, signature, determinant and discriminant form.
    Invariants { file: PathBuf },
    /// Match against the catalog of standard lattices.
    Recognize { file: PathBuf },
    /// Compare `s` with `U + t` as orthogonal complements in the K3 lattice.
    Duality { file_s: PathBuf, file_t: PathBuf },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Singular points of `f2^3 + f3^2 = 0`.
    Classify {
        file: PathBuf,
        /// Search radius for further rational singular points.
        #[arg(long, default_value_t = GRID_RADIUS)]
        grid: i64,
    },
}

/// Print to stdout, ignoring a closed pipe.
fn write_stdout(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit(result: Result<Output, CliError>) -> ExitCode {
    match result {
        Ok(out) => {
            write_stdout(&(serde_json::to_string_pretty(&out.doc).expect("serializable") + "\n"));
            eprintln!("{}", out.summary);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Polytope(PolytopeCmd::Dual { file }) => commands::polytope_dual(&file),
        Command::Polytope(PolytopeCmd::Reflexive { file }) => commands::polytope_reflexive(&file),
        Command::Polytope(PolytopeCmd::Points { file }) => commands::polytope_points(&file),
        Command::K3(K3Cmd::Picard { file }) => commands::k3_picard(&file),
        Command::K3(K3Cmd::Duality { file_s, file_t }) => commands::k3_duality(&file_s, &file_t),
        Command::Lattice(LatticeCmd::Invariants { file }) => commands::lattice_invariants(&file),
        Command::Lattice(LatticeCmd::Recognize { file }) => commands::lattice_recognize(&file),
        Command::Lattice(LatticeCmd::Duality { file_s, file_t }) => commands::lattice_duality(&file_s, &file_t),
        Command::Curve(CurveCmd::Classify { file, grid }) => commands::curve_classify(&file, grid),
        Command::VerifyPaper { json } => {
            let report = verify_paper();
            write_stdout(&if json { report.to_json() } else { report.to_text() });
            let s = &report.summary;
            eprintln!(
                "claims: {}  pass: {}  fail: {}  computed-with-note: {}  skipped: {}",
                s.total, s.pass, s.fail, s.computed_with_note, s.skipped
            );
            return ExitCode::from(report.exit_code() as u8);
        }
    };
    emit(result)
}
