//! Subcommand implementations. Each returns the text to print and the exit
//! code; `main.rs` only parses arguments and forwards.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use edge_spectra::charpoly::charpoly;
use edge_spectra::edge_matrix::{
    adjacency_matrix, assemble, blocks, render_edge_matrix, BlockDecomposition, EdgeMatrices,
};
use edge_spectra::graph6;
use edge_spectra::orient::orient;
use edge_spectra::spectrum::integer_root_table;
use edge_spectra::theorems::Checker;
use edge_spectra::{BigInt, IntMatrix};
use serde_json::json;

use crate::input::{load, GraphInput, OrientationChoice};
use crate::report::{CheckRun, RunReport};
use crate::sweep::{parse_checkers, run_sweep, SweepOptions};
use crate::{exit, CliError};

/// What a subcommand wants printed and how the process should exit.
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            exit_code: exit::OK,
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Edge-list file: one "u v" pair per line, '#' comments, optional
    /// "n <count>" header
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// graph6 string
    #[arg(long, value_name = "STR")]
    pub graph6: Option<String>,
    /// Family descriptor: path:N, cycle:N, complete:N, kpq:P,Q, star:LEAVES,
    /// petersen, hypercube:D, pruefer[:V,V,...]
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<GraphInput, CliError> {
        load(
            self.edges.as_deref(),
            self.graph6.as_deref(),
            self.family.as_deref(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format; the EDGESPECTRA_FORMAT environment variable overrides
    /// the default
    #[arg(long, value_enum, env = "EDGESPECTRA_FORMAT", default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Also print the m x m blocks of N, M, and D
    #[arg(long)]
    pub blocks: bool,
    /// Orientation: canonical, bipartite, or random:SEED
    #[arg(long, default_value = "canonical", value_name = "STRATEGY")]
    pub orient: String,
    #[command(flatten)]
    pub fmt: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichMatrix {
    /// Edge Laplacian N = D - M
    N,
    /// Degree matrix D
    D,
    /// Signless edge Laplacian D + M
    Signless,
    /// Vertex adjacency matrix A
    Adjacency,
}

impl WhichMatrix {
    fn label(&self) -> &'static str {
        match self {
            WhichMatrix::N => "n",
            WhichMatrix::D => "d",
            WhichMatrix::Signless => "signless",
            WhichMatrix::Adjacency => "adjacency",
        }
    }
}

#[derive(Debug, Args)]
pub struct CharpolyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Which matrix to take the characteristic polynomial of
    #[arg(long, value_enum, default_value = "n")]
    pub which: WhichMatrix,
    /// Orientation: canonical, bipartite, or random:SEED
    #[arg(long, default_value = "canonical", value_name = "STRATEGY")]
    pub orient: String,
    #[command(flatten)]
    pub fmt: FormatArg,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Checker name (bipartite, tree, nilpotent, regular-spectrum,
    /// kpq-spectrum, double-cover, line-graph, zero-simple,
    /// regular-symmetries) or "all"
    #[arg(value_name = "CHECKER")]
    pub checker: String,
    #[command(flatten)]
    pub fmt: FormatArg,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Sweep every connected graph with up to N vertices (N <= 9),
    /// exhaustively up to isomorphism
    #[arg(long, value_name = "N")]
    pub max_n: Option<usize>,
    /// Sweep the graphs in a file instead, one graph6 string per line
    #[arg(long, value_name = "FILE")]
    pub graph6_file: Option<PathBuf>,
    /// Comma-separated checker names, or "all"
    #[arg(long, default_value = "all")]
    pub checkers: String,
    /// Worker count for the fan-out (results are identical for any value)
    #[arg(long, value_name = "J")]
    pub jobs: Option<usize>,
    /// Group graphs sharing a characteristic polynomial of N
    #[arg(long)]
    pub report_collisions: bool,
    #[command(flatten)]
    pub fmt: FormatArg,
}

fn oriented_matrices(
    args_input: &InputArgs,
    orient_flag: &str,
) -> Result<(GraphInput, OrientationChoice, EdgeMatrices<BigInt>), CliError> {
    let input = args_input.load()?;
    let choice = OrientationChoice::parse(orient_flag)?;
    let strategy = choice.resolve(&input.graph)?;
    let oe = orient(&input.graph, &strategy)
        .map_err(|e| CliError::input(e.to_string()))?;
    let em = assemble::<BigInt>(&oe).expect("degree formula matches row sums");
    Ok((input, choice, em))
}

pub fn cmd_matrix(args: &MatrixArgs) -> Result<Outcome, CliError> {
    let input = args.input.load()?;
    let choice = OrientationChoice::parse(&args.orient)?;
    let strategy = choice.resolve(&input.graph)?;
    let oe = orient(&input.graph, &strategy).map_err(|e| CliError::input(e.to_string()))?;
    let em = assemble::<BigInt>(&oe).expect("degree formula matches row sums");
    let bd = args.blocks.then(|| blocks(&em));
    match args.fmt.format {
        OutputFormat::Json => {
            let mut doc = json!({
                "schema": crate::report::SCHEMA_VERSION,
                "input": input.descriptor,
                "graph6": graph6::encode(&input.graph),
                "n": input.graph.n(),
                "m": input.graph.m(),
                "orientation": choice.label(),
                "matrices": {
                    "m": em.adjacency,
                    "d": em.degree,
                    "n": em.laplacian,
                },
            });
            if let Some(bd) = &bd {
                doc["blocks"] = block_json(bd);
            }
            Ok(Outcome::ok(serde_json::to_string_pretty(&doc).expect("serializable")))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{} (graph6 {}, n={}, m={}), orientation {}\n\n",
                input.descriptor,
                graph6::encode(&input.graph),
                input.graph.n(),
                input.graph.m(),
                choice.label()
            ));
            out.push_str("M (edge adjacency):\n");
            out.push_str(&render_edge_matrix(&em.adjacency, &oe));
            out.push_str("\nD (diagonal of row sums of M):\n");
            out.push_str(&render_edge_matrix(&em.degree, &oe));
            out.push_str("\nN = D - M (edge Laplacian):\n");
            out.push_str(&render_edge_matrix(&em.laplacian, &oe));
            if let Some(bd) = &bd {
                out.push('\n');
                out.push_str(&render_blocks(bd));
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn block_json(bd: &BlockDecomposition<BigInt>) -> serde_json::Value {
    json!({
        "p": bd.lap_ff, "q": bd.lap_fr, "r": bd.lap_rf, "s": bd.lap_rr,
        "m11": bd.adj_ff, "m12": bd.adj_fr, "m21": bd.adj_rf, "m22": bd.adj_rr,
        "d1": bd.deg_f, "d2": bd.deg_r,
    })
}

fn render_blocks(bd: &BlockDecomposition<BigInt>) -> String {
    let mut out = String::new();
    let sections: [(&str, &IntMatrix); 10] = [
        ("P = N[fwd, fwd]", &bd.lap_ff),
        ("Q = N[fwd, rev]", &bd.lap_fr),
        ("R = N[rev, fwd]", &bd.lap_rf),
        ("S = N[rev, rev]", &bd.lap_rr),
        ("M11 = M[fwd, fwd]", &bd.adj_ff),
        ("M12 = M[fwd, rev]", &bd.adj_fr),
        ("M21 = M[rev, fwd]", &bd.adj_rf),
        ("M22 = M[rev, rev]", &bd.adj_rr),
        ("D1 = D[fwd, fwd]", &bd.deg_f),
        ("D2 = D[rev, rev]", &bd.deg_r),
    ];
    for (label, mat) in sections {
        out.push_str(label);
        out.push_str(":\n");
        out.push_str(&mat.render(None, None));
        out.push('\n');
    }
    out
}

pub fn cmd_charpoly(args: &CharpolyArgs) -> Result<Outcome, CliError> {
    let (input, choice, em) = oriented_matrices(&args.input, &args.orient)?;
    let matrix: IntMatrix = match args.which {
        WhichMatrix::N => em.laplacian,
        WhichMatrix::D => em.degree,
        WhichMatrix::Signless => em.signless,
        WhichMatrix::Adjacency => adjacency_matrix(&input.graph),
    };
    let phi = charpoly(&matrix).expect("square");
    // every eigenvalue obeys the row-sum bound, so the scan is exhaustive
    let roots = integer_root_table(&phi, &matrix.row_abs_bound());
    match args.fmt.format {
        OutputFormat::Json => {
            let doc = json!({
                "schema": crate::report::SCHEMA_VERSION,
                "input": input.descriptor,
                "graph6": graph6::encode(&input.graph),
                "orientation": choice.label(),
                "which": args.which.label(),
                "charpoly": phi,
                "pretty": phi.to_string(),
                "roots": roots.map(|table| {
                    table
                        .into_iter()
                        .map(|(root, mult)| json!({"root": root.to_string(), "multiplicity": mult}))
                        .collect::<Vec<_>>()
                }),
            });
            Ok(Outcome::ok(serde_json::to_string_pretty(&doc).expect("serializable")))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{} (graph6 {}), orientation {}\n",
                input.descriptor,
                graph6::encode(&input.graph),
                choice.label()
            ));
            out.push_str(&format!("phi_{}(x) = {}\n", args.which.label(), phi));
            out.push_str(&format!(
                "{}\n",
                serde_json::to_string(&phi).expect("serializable")
            ));
            match roots {
                Some(table) => {
                    let rendered: Vec<String> = table
                        .iter()
                        .map(|(root, mult)| format!("{root}: {mult}"))
                        .collect();
                    out.push_str(&format!("integer roots: {{{}}}\n", rendered.join(", ")));
                }
                None => out.push_str("integer roots: not all roots are integers\n"),
            }
            Ok(Outcome::ok(out))
        }
    }
}

pub fn cmd_check(args: &CheckArgs) -> Result<Outcome, CliError> {
    let input = args.input.load()?;
    let checkers: Vec<Checker> = if args.checker == "all" {
        Checker::ALL.to_vec()
    } else {
        vec![Checker::from_name(&args.checker).ok_or_else(|| {
            let valid: Vec<&str> = Checker::ALL.iter().map(Checker::name).collect();
            CliError::input(format!(
                "unknown checker {:?}; expected one of {} or all",
                args.checker,
                valid.join(", ")
            ))
        })?]
    };
    let checks: Vec<CheckRun> = checkers
        .iter()
        .map(|checker| {
            let start = Instant::now();
            let verdict = checker.run(&input.graph);
            CheckRun {
                verdict,
                ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    let report = RunReport::new(input.descriptor, checks);
    let stdout = match args.fmt.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => report.render_text(),
    };
    Ok(Outcome {
        stdout,
        exit_code: report.exit_code(),
    })
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Outcome, CliError> {
    let opts = SweepOptions {
        max_n: args.max_n,
        graph6_file: args.graph6_file.clone(),
        checkers: parse_checkers(&args.checkers)?,
        jobs: args.jobs.unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, usize::from)
        }),
        report_collisions: args.report_collisions,
    };
    let report = run_sweep(&opts)?;
    let stdout = match args.fmt.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => report.render_text(),
    };
    Ok(Outcome {
        stdout,
        exit_code: report.exit_code(),
    })
}
