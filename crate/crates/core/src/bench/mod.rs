//! Runtime benchmarks over vertex-count and edge-probability sweeps.
//!
//! For every `(size or probability, seed)` one graph is generated and shared
//! by all requested algorithms; its content hash is stored on each record.
//! Measurements run one after another on the calling thread.

mod emit;
mod fit;

pub use emit::{
    emit_fits_csv, emit_records_csv, emit_svg, emit_table_csv, mean_series, parse_records_csv,
    Series, RECORD_COLUMNS,
};
pub use fit::{fit_runtime, fit_xy, FitModel, FitResult};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::baselines::{timed_run, ClassicalAlgorithm};
use crate::error::{Error, Result};
use crate::graph::{generate_ba, generate_er, Graph};
use crate::qubo::{build_qubo, CoefficientSet};
use crate::solvers::{sample_sa_serial, solve_exact_lowest, SaParams, EXACT_CAP};

/// Sizes of the default vertex sweep.
pub const DEFAULT_SIZES: [usize; 14] = [
    10, 25, 50, 100, 150, 200, 250, 300, 350, 400, 450, 500, 550, 600,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Classical(ClassicalAlgorithm),
    SaSampler,
    Exact,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Classical(c) => c.name(),
            Algorithm::SaSampler => "sa_sampler",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sa_sampler" | "sa" => Ok(Algorithm::SaSampler),
            "exact" => Ok(Algorithm::Exact),
            other => other.parse().map(Algorithm::Classical),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum GraphModel {
    BarabasiAlbert { n0: usize, n: usize },
    ErdosRenyi { p: f64 },
}

impl GraphModel {
    fn generate(&self, vertices: usize, seed: u64) -> Result<Graph> {
        match *self {
            GraphModel::BarabasiAlbert { n0, n } => generate_ba(n0, n, vertices, seed),
            GraphModel::ErdosRenyi { p } => generate_er(vertices, p, seed),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchConfig {
    /// Annealer settings; `seed` is replaced by the record seed.
    pub sa: SaParams,
    pub coefficients: CoefficientSet,
    /// Include QUBO construction in the measured time of QUBO solvers.
    pub include_setup: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sa: SaParams {
                reads: 10,
                sweeps: 100,
                ..SaParams::with_seed(0)
            },
            coefficients: CoefficientSet::default(),
            include_setup: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algorithm: String,
    pub input_size: usize,
    pub probability: Option<f64>,
    pub seed: u64,
    pub graph_hash: String,
    pub wall_seconds: f64,
    pub edge_count: usize,
    /// Largest vertex degree of the benchmarked graph.
    pub max_degree: usize,
}

fn check_algorithms(algorithms: &[Algorithm], largest: usize) -> Result<()> {
    if algorithms.is_empty() {
        return Err(Error::Empty("algorithm list"));
    }
    if algorithms.contains(&Algorithm::Exact) && largest > EXACT_CAP {
        return Err(Error::CapExceeded {
            n: largest,
            cap: EXACT_CAP,
        });
    }
    Ok(())
}

/// Times one algorithm on `g` for terminals `0` and `V − 1`.
pub fn time_algorithm(
    algorithm: Algorithm,
    g: &Graph,
    config: &BenchConfig,
    seed: u64,
) -> Result<f64> {
    let source = 0;
    let target = g.vertex_count().saturating_sub(1);
    match algorithm {
        Algorithm::Classical(c) => timed_run(c, g, source).map(|(_, secs)| secs),
        Algorithm::SaSampler | Algorithm::Exact => {
            let setup_start = Instant::now();
            let p = build_qubo(g, &config.coefficients, source, target)?;
            let setup = setup_start.elapsed().as_secs_f64();
            let solve_start = Instant::now();
            if algorithm == Algorithm::Exact {
                solve_exact_lowest(&p, 1)?;
            } else {
                sample_sa_serial(&p, &SaParams { seed, ..config.sa })?;
            }
            let solve = solve_start.elapsed().as_secs_f64();
            Ok(if config.include_setup {
                setup + solve
            } else {
                solve
            })
        }
    }
}

fn record(
    algorithm: Algorithm,
    g: &Graph,
    probability: Option<f64>,
    seed: u64,
    hash: &str,
    secs: f64,
) -> BenchRecord {
    BenchRecord {
        algorithm: algorithm.name().to_string(),
        input_size: g.vertex_count(),
        probability,
        seed,
        graph_hash: hash.to_string(),
        wall_seconds: secs,
        edge_count: g.edge_count(),
        max_degree: g.max_degree(),
    }
}

/// Records ordered by size, then seed, then algorithm as given.
pub fn bench_vertices(
    sizes: &[usize],
    algorithms: &[Algorithm],
    model: GraphModel,
    seeds: &[u64],
    config: &BenchConfig,
) -> Result<Vec<BenchRecord>> {
    if sizes.is_empty() || seeds.is_empty() {
        return Err(Error::Empty("size or seed list"));
    }
    if sizes.iter().any(|&s| s < 2) || sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter(
            "sizes must be at least 2 and ascending".into(),
        ));
    }
    check_algorithms(algorithms, *sizes.iter().max().expect("non-empty"))?;

    let mut out = Vec::new();
    for &size in sizes {
        for &seed in seeds {
            let g = model.generate(size, seed)?;
            let hash = g.content_hash();
            for &alg in algorithms {
                let secs = time_algorithm(alg, &g, config, seed)?;
                out.push(record(alg, &g, None, seed, &hash, secs));
            }
        }
    }
    Ok(out)
}

/// Erdős–Rényi graphs on `vertices` vertices for each probability in `probs`.
pub fn bench_edge_probability(
    vertices: usize,
    probs: &[f64],
    algorithms: &[Algorithm],
    seeds: &[u64],
    config: &BenchConfig,
) -> Result<Vec<BenchRecord>> {
    if probs.is_empty() || seeds.is_empty() {
        return Err(Error::Empty("probability or seed list"));
    }
    if let Some(p) = probs.iter().find(|&&p| !(p > 0.0 && p <= 1.0)) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside (0, 1]"
        )));
    }
    if vertices < 2 {
        return Err(Error::InvalidParameter("need at least 2 vertices".into()));
    }
    check_algorithms(algorithms, vertices)?;

    let mut out = Vec::new();
    for &p in probs {
        for &seed in seeds {
            let g = generate_er(vertices, p, seed)?;
            let hash = g.content_hash();
            for &alg in algorithms {
                let secs = time_algorithm(alg, &g, config, seed)?;
                out.push(record(alg, &g, Some(p), seed, &hash, secs));
            }
        }
    }
    Ok(out)
}
