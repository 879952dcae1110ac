use clap::{Parser, Subcommand};
use edge_spectra_cli::commands::{
    cmd_charpoly, cmd_check, cmd_matrix, cmd_sweep, CharpolyArgs, CheckArgs, MatrixArgs,
    Outcome, SweepArgs,
};
use edge_spectra_cli::{exit, CliError};

/// Exact spectra of the non-backtracking edge adjacency matrix M and the
/// edge Laplacian N = D - M of a simple undirected graph.
///
/// All arithmetic is exact (arbitrary-precision integers); spectra are
/// reported as integer polynomial identities and root multiplicities.
/// Exit codes: 0 all checks passed or not applicable, 1 a theorem check
/// failed, 2 usage or input error.
#[derive(Parser)]
#[command(name = "edgespectra", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print M, D, and N for one graph (optionally their m x m blocks)
    Matrix(MatrixArgs),
    /// Print an exact characteristic polynomial and its integer roots
    Charpoly(CharpolyArgs),
    /// Run one named theorem checker (or all of them) against one graph
    Check(CheckArgs),
    /// Run the checker battery over a graph corpus, exhaustively or from a file
    Sweep(SweepArgs),
}

fn main() {
    let cli = Cli::parse();
    let result: Result<Outcome, CliError> = match &cli.command {
        Command::Matrix(args) => cmd_matrix(args),
        Command::Charpoly(args) => cmd_charpoly(args),
        Command::Check(args) => cmd_check(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if !outcome.stdout.ends_with('\n') && !outcome.stdout.is_empty() {
                println!();
            }
            std::process::exit(outcome.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit::USAGE);
        }
    }
}
