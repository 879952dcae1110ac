//! The sweep engine: run a checker battery over a graph corpus.
//!
//! Graphs come from the built-in connected-graph enumerator (exhaustive up
//! to isomorphism, `--max-n` at most 9) or from a graph6 file, one graph
//! per line. Checks fan out over a bounded rayon pool; results are sorted
//! by graph6 key and checker order, so the report is byte-identical
//! regardless of the worker count. With collision reporting enabled the
//! engine also groups graphs by the characteristic polynomial of N and
//! reports every group with two or more distinct members.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use edge_spectra::charpoly::charpoly;
use edge_spectra::edge_matrix::assemble;
use edge_spectra::enumerate::connected_graphs;
use edge_spectra::graph::Graph;
use edge_spectra::graph6;
use edge_spectra::orient::{orient, Strategy};
use edge_spectra::theorems::Checker;
use edge_spectra::{BigInt, IntPoly};
use rayon::prelude::*;

use crate::report::{CheckRun, CospectralGroup, RunReport};
use crate::CliError;

/// Largest `--max-n` the built-in enumerator accepts.
pub const MAX_SWEEP_N: usize = 9;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_n: Option<usize>,
    pub graph6_file: Option<PathBuf>,
    pub checkers: Vec<Checker>,
    pub jobs: usize,
    pub report_collisions: bool,
}

/// Parse a comma-separated checker list, or `all`.
pub fn parse_checkers(text: &str) -> Result<Vec<Checker>, CliError> {
    if text.trim() == "all" {
        return Ok(Checker::ALL.to_vec());
    }
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|name| {
            Checker::from_name(name).ok_or_else(|| {
                let valid: Vec<&str> = Checker::ALL.iter().map(Checker::name).collect();
                CliError::input(format!(
                    "unknown checker {name:?}; expected one of {} or all",
                    valid.join(", ")
                ))
            })
        })
        .collect()
}

fn corpus(opts: &SweepOptions) -> Result<(String, Vec<Graph>), CliError> {
    match (&opts.max_n, &opts.graph6_file) {
        (Some(_), Some(_)) | (None, None) => Err(CliError::input(
            "exactly one of --max-n and --graph6-file is required",
        )),
        (Some(max_n), None) => {
            let max_n = *max_n;
            if !(1..=MAX_SWEEP_N).contains(&max_n) {
                return Err(CliError::input(format!(
                    "--max-n must be between 1 and {MAX_SWEEP_N}, got {max_n}"
                )));
            }
            let graphs: Vec<Graph> = (1..=max_n).flat_map(connected_graphs).collect();
            Ok((format!("sweep max-n={max_n}"), graphs))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = graph6::parse(line).map_err(|e| {
                    CliError::input(format!("{}:{}: {e}", path.display(), i + 1))
                })?;
                graphs.push(g);
            }
            Ok((format!("sweep graph6-file={}", path.display()), graphs))
        }
    }
}

fn laplacian_charpoly(g: &Graph) -> IntPoly {
    let oe = orient(g, &Strategy::Canonical).expect("canonical orientation");
    let em = assemble::<BigInt>(&oe).expect("consistent degree matrix");
    charpoly(&em.laplacian).expect("square")
}

pub fn run_sweep(opts: &SweepOptions) -> Result<RunReport, CliError> {
    let (descriptor, graphs) = corpus(opts)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| CliError::input(format!("cannot start {} workers: {e}", opts.jobs)))?;

    type PerGraph = (String, Vec<CheckRun>, Option<IntPoly>);
    let mut rows: Vec<PerGraph> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let key = graph6::encode(g);
                let runs: Vec<CheckRun> = opts
                    .checkers
                    .iter()
                    .map(|checker| {
                        let start = Instant::now();
                        let verdict = checker.run(g);
                        CheckRun {
                            verdict,
                            ms: start.elapsed().as_millis() as u64,
                        }
                    })
                    .collect();
                let phi = opts.report_collisions.then(|| laplacian_charpoly(g));
                (key, runs, phi)
            })
            .collect()
    });
    rows.sort_by(|a, b| a.0.cmp(&b.0));

    let mut checks = Vec::with_capacity(rows.len() * opts.checkers.len());
    let mut by_charpoly: BTreeMap<Vec<BigInt>, Vec<String>> = BTreeMap::new();
    for (key, runs, phi) in rows {
        checks.extend(runs);
        if let Some(phi) = phi {
            by_charpoly
                .entry(phi.coeffs().to_vec())
                .or_default()
                .push(key);
        }
    }
    let mut report = RunReport::new(descriptor, checks);
    if opts.report_collisions {
        let groups: Vec<CospectralGroup> = by_charpoly
            .into_iter()
            .filter_map(|(coeffs, mut graphs)| {
                graphs.dedup();
                (graphs.len() >= 2).then(|| CospectralGroup {
                    charpoly: IntPoly::new(coeffs),
                    graphs,
                })
            })
            .collect();
        report.cospectral_groups = Some(groups);
    }
    Ok(report)
}
