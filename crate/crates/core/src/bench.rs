//! Benchmark sweeps over graph families, reported as CSV.

use std::fmt::Write as _;

use thiserror::Error;

use crate::enumerate::{enumerate, Algorithm, EnumOptions};
use crate::error::{CheckError, FamilyError};
use crate::families::FamilyKind;
use crate::graph::Graph;
use crate::separators::separators;

pub const CSV_HEADER: &str = "graph,n,m,algo,pmcs,seps,ispmc_calls,peak_sets,ms";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("empty size range {from}..={to}")]
    EmptyRange { from: usize, to: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Measurement {
    pub pmcs: usize,
    pub seps: usize,
    pub ispmc_calls: u64,
    pub peak_sets: usize,
    pub ms: f64,
}

/// One CSV row. `measurement` is `None` for a run skipped by the size
/// cutoff.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub measurement: Option<Measurement>,
}

impl BenchRecord {
    /// The CSV line without a trailing newline. Without timing the `ms`
    /// column holds `-` so that repeated runs are byte-identical.
    pub fn csv_row(&self, timing: bool) -> String {
        let head = format!("{},{},{},{}", self.graph, self.n, self.m, self.algorithm);
        match &self.measurement {
            None => format!("{head},skipped,,,,"),
            Some(r) => {
                let ms = if timing {
                    format!("{:.3}", r.ms)
                } else {
                    "-".to_string()
                };
                format!(
                    "{head},{},{},{},{},{ms}",
                    r.pmcs, r.seps, r.ispmc_calls, r.peak_sets
                )
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    /// `bt` is skipped on graphs with more vertices than this.
    pub bt_cutoff: Option<usize>,
    pub options: EnumOptions,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            algorithms: Algorithm::ALL.to_vec(),
            bt_cutoff: None,
            options: EnumOptions::default(),
        }
    }
}

/// Runs every configured algorithm on one graph.
pub fn bench_graph(
    id: &str,
    g: &Graph,
    config: &BenchConfig,
) -> Result<Vec<BenchRecord>, CheckError> {
    let seps = separators(&g.view()).count();
    let mut rows = Vec::new();
    for &algorithm in &config.algorithms {
        let skip = algorithm == Algorithm::Bt && config.bt_cutoff.is_some_and(|c| g.n() > c);
        let measurement = if skip {
            None
        } else {
            let run = enumerate(g, algorithm, &config.options)?;
            Some(Measurement {
                pmcs: run.pmcs.len(),
                seps,
                ispmc_calls: run.metrics.is_pmc_calls,
                peak_sets: run.metrics.peak_retained_sets,
                ms: run.metrics.wall_time.as_secs_f64() * 1e3,
            })
        };
        rows.push(BenchRecord {
            graph: id.to_string(),
            n: g.n(),
            m: g.m(),
            algorithm,
            measurement,
        });
    }
    Ok(rows)
}

/// Benchmarks `kind` at every size in `from..=to`. The size is `k` for
/// theta and `n` otherwise; `p` and `seed` only matter for random graphs.
pub fn bench_family(
    kind: FamilyKind,
    from: usize,
    to: usize,
    p: f64,
    seed: u64,
    config: &BenchConfig,
) -> Result<Vec<BenchRecord>, BenchError> {
    if from > to {
        return Err(BenchError::EmptyRange { from, to });
    }
    let mut rows = Vec::new();
    for size in from..=to {
        let family = kind.with_size(size, p, seed);
        let g = family.build()?;
        rows.extend(bench_graph(&family.id(), &g, config)?);
    }
    Ok(rows)
}

pub fn to_csv(records: &[BenchRecord], timing: bool) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for r in records {
        writeln!(out, "{}", r.csv_row(timing)).unwrap();
    }
    out
}
