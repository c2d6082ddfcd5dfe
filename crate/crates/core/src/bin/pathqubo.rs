use std::error::Error as StdError;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pathqubo::baselines::{timed_run, ClassicalAlgorithm, RunOutput};
use pathqubo::bench::{
    bench_edge_probability, bench_vertices, emit_records_csv, emit_svg, emit_table_csv,
    fit_runtime, mean_series, parse_records_csv, Algorithm, BenchConfig, FitModel, GraphModel,
    DEFAULT_SIZES,
};
use pathqubo::chimera::{check_feasibility, chimera};
use pathqubo::fixtures;
use pathqubo::graph::{
    fit_power_law, fit_power_law_free, generate_ba, generate_er, load_graph, reweight, store_graph,
    DegreeHistogram, Graph,
};
use pathqubo::qubo::{build_qubo, load_qubo, store_qubo, BitState, CoefficientSet, QuboProblem};
use pathqubo::solvers::{
    analyze_formulation, coefficient_sweep, decode_path, sample_sa, sample_sa_serial, solve_exact,
    solve_exact_lowest, CoefficientGrid, PathResult, SaParams,
};
use pathqubo::spectrum::gap_profile;

type CliResult<T> = std::result::Result<T, Box<dyn StdError>>;

#[derive(Parser)]
#[command(name = "pathqubo", version, about = "Shortest-path QUBO toolkit")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random graph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Redraw every edge weight uniformly from {1, 2, 3}.
    Reweight {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        seed: u64,
    },
    /// Build the shortest-path QUBO for a graph and terminal pair.
    Build {
        #[command(flatten)]
        terminals: Terminals,
        #[command(flatten)]
        coeffs: CoeffArgs,
    },
    /// Solve a stored QUBO.
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Decode a bitstring back into a path.
    Decode {
        #[command(flatten)]
        terminals: Terminals,
        /// Bitstring, first character is vertex 0.
        #[arg(long)]
        state: String,
    },
    /// Check whether the QUBO minimum is a true shortest path (JSON).
    Analyze {
        #[command(flatten)]
        terminals: Terminals,
        #[command(flatten)]
        coeffs: CoeffArgs,
    },
    /// Run `analyze` over a Cartesian coefficient grid.
    SweepCoeffs {
        #[command(flatten)]
        terminals: Terminals,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        alpha: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        beta: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        gamma: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "3")]
        delta: Vec<f64>,
    },
    /// Run a classical shortest-path algorithm.
    Baseline {
        /// dijkstra, dijkstra_array, bellman, floyd or minplus
        algorithm: String,
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        source: usize,
    },
    /// Minimum-gap profile of the interpolated Hamiltonian.
    Gap {
        #[arg(long)]
        qubo: PathBuf,
        #[arg(long, default_value_t = 201)]
        points: usize,
    },
    /// Qubit budget check against a Chimera lattice.
    Feas {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 16)]
        rows: usize,
        #[arg(long, default_value_t = 16)]
        cols: usize,
        #[arg(long, default_value_t = 4)]
        shore: usize,
    },
    /// Degree histogram, optionally with a power-law fit.
    Degrees {
        #[arg(long)]
        graph: String,
        /// Fit p(k) = (ak + b)^-3.
        #[arg(long)]
        fit: bool,
        /// Also fit the exponent.
        #[arg(long)]
        free_exponent: bool,
    },
    /// Runtime sweeps.
    #[command(subcommand)]
    Bench(BenchCommand),
    /// Fit runtime models to a records CSV.
    Fit {
        #[arg(long)]
        records: PathBuf,
        /// affine_log, affine_invsqrt or affine; all three when omitted.
        #[arg(long)]
        model: Option<String>,
        /// Fit only this algorithm's records.
        #[arg(long)]
        algorithm: Option<String>,
    },
    /// Plot mean runtime per algorithm from a records CSV.
    Plot {
        #[arg(long)]
        records: PathBuf,
        #[arg(long, default_value = "runtime")]
        title: String,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    Ba {
        #[arg(long, default_value_t = 10)]
        n0: usize,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        seed: u64,
    },
    Er {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum SolveCommand {
    Exact {
        #[arg(long)]
        qubo: PathBuf,
        /// Keep only the k lowest states.
        #[arg(long)]
        lowest: Option<usize>,
    },
    Sa {
        #[arg(long)]
        qubo: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        reads: usize,
        #[arg(long, default_value_t = 1000)]
        sweeps: usize,
        #[arg(long, default_value_t = 0.1)]
        beta_start: f64,
        #[arg(long, default_value_t = 10.0)]
        beta_end: f64,
        /// Run reads on one thread.
        #[arg(long)]
        serial: bool,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    Vertices {
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[command(flatten)]
        common: BenchArgs,
        #[arg(long, value_enum, default_value = "ba")]
        model: ModelKind,
        #[arg(long, default_value_t = 2)]
        n0: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
    },
    Edges {
        #[arg(long, default_value_t = 200)]
        vertices: usize,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0"
        )]
        probs: Vec<f64>,
        #[command(flatten)]
        common: BenchArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelKind {
    Ba,
    Er,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "dijkstra,bellman_ford,floyd_warshall,sa_sampler"
    )]
    algorithms: Vec<String>,
    /// One or more seeds, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    seed: Vec<u64>,
    #[arg(long, default_value_t = 10)]
    reads: usize,
    #[arg(long, default_value_t = 100)]
    sweeps: usize,
    /// Count QUBO construction towards sampler time.
    #[arg(long)]
    include_setup: bool,
}

#[derive(Args)]
struct Terminals {
    /// Graph file, or `fixture:one` / `fixture:two`.
    #[arg(long)]
    graph: String,
    #[arg(long)]
    start: usize,
    #[arg(long)]
    end: usize,
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, default_value_t = 2.0)]
    gamma: f64,
    #[arg(long, default_value_t = 3.0)]
    delta: f64,
}

impl CoeffArgs {
    fn to_set(&self) -> pathqubo::Result<CoefficientSet> {
        CoefficientSet::new(self.alpha, self.beta, self.gamma, self.delta)
    }
}

fn read_graph(arg: &str) -> CliResult<Graph> {
    match arg {
        "fixture:one" => Ok(fixtures::graph_one()),
        "fixture:two" => Ok(fixtures::graph_two()),
        path => Ok(load_graph(&fs::read_to_string(path)?)?),
    }
}

fn read_qubo(path: &PathBuf) -> CliResult<QuboProblem> {
    Ok(load_qubo(&fs::read_to_string(path)?)?)
}

fn algorithms(names: &[String]) -> CliResult<Vec<Algorithm>> {
    names
        .iter()
        .map(|n| n.parse::<Algorithm>().map_err(Into::into))
        .collect()
}

fn bench_config(a: &BenchArgs) -> BenchConfig {
    let d = BenchConfig::default();
    BenchConfig {
        sa: SaParams {
            reads: a.reads,
            sweeps: a.sweeps,
            ..d.sa
        },
        include_setup: a.include_setup,
        ..d
    }
}

fn render_records(
    records: &[pathqubo::bench::BenchRecord],
    format: Format,
    x_label: &str,
) -> CliResult<String> {
    Ok(match format {
        Format::Csv => emit_records_csv(records)?,
        Format::Text => emit_table_csv(records)?,
        Format::Svg => emit_svg(&mean_series(records), "runtime", x_label, "seconds")?,
    })
}

fn run(cli: Cli) -> CliResult<String> {
    let format = cli.format;
    let text = match cli.command {
        Command::Gen(GenCommand::Ba {
            n0,
            n,
            vertices,
            seed,
        }) => store_graph(&generate_ba(n0, n, vertices, seed)?),
        Command::Gen(GenCommand::Er { vertices, p, seed }) => {
            store_graph(&generate_er(vertices, p, seed)?)
        }
        Command::Reweight { graph, seed } => store_graph(&reweight(&read_graph(&graph)?, seed)),
        Command::Build {
            terminals: t,
            coeffs,
        } => {
            let p = build_qubo(&read_graph(&t.graph)?, &coeffs.to_set()?, t.start, t.end)?;
            match format {
                Some(Format::Csv) => p.to_csv(),
                _ => store_qubo(&p),
            }
        }
        Command::Solve(SolveCommand::Exact { qubo, lowest }) => {
            let p = read_qubo(&qubo)?;
            match lowest {
                Some(k) => solve_exact_lowest(&p, k)?.to_csv(),
                None => solve_exact(&p)?.to_csv(),
            }
        }
        Command::Solve(SolveCommand::Sa {
            qubo,
            seed,
            reads,
            sweeps,
            beta_start,
            beta_end,
            serial,
        }) => {
            let p = read_qubo(&qubo)?;
            let params = SaParams {
                reads,
                sweeps,
                beta_start,
                beta_end,
                seed,
            };
            let table = if serial {
                sample_sa_serial(&p, &params)?
            } else {
                sample_sa(&p, &params)?
            };
            table.to_csv()
        }
        Command::Decode {
            terminals: t,
            state,
        } => {
            let g = read_graph(&t.graph)?;
            match decode_path(&g, &BitState::parse(&state)?, t.start, t.end) {
                PathResult::Valid {
                    vertices,
                    total_weight,
                } => {
                    let route: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
                    format!("valid path={} weight={total_weight}\n", route.join("-"))
                }
                PathResult::Invalid(why) => format!("invalid reason={why:?}\n"),
            }
        }
        Command::Analyze {
            terminals: t,
            coeffs,
        } => {
            let g = read_graph(&t.graph)?;
            let mut json = analyze_formulation(&g, &coeffs.to_set()?, t.start, t.end)?.to_json();
            json.push('\n');
            json
        }
        Command::SweepCoeffs {
            terminals: t,
            alpha,
            beta,
            gamma,
            delta,
        } => {
            let g = read_graph(&t.graph)?;
            let grid = CoefficientGrid {
                alpha,
                beta,
                gamma_q: gamma,
                delta,
            };
            let mut out = String::from("alpha,beta,gamma,delta,valid,min_energy,decoded_weight\n");
            for (c, r) in coefficient_sweep(&g, &grid, t.start, t.end)? {
                let w = r.decoded_weight.map(|w| w.to_string()).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{w}\n",
                    c.alpha, c.beta, c.gamma_q, c.delta, r.decodes_to_shortest_path, r.min_energy
                ));
            }
            out
        }
        Command::Baseline {
            algorithm,
            graph,
            source,
        } => {
            let alg: ClassicalAlgorithm = algorithm.parse()?;
            let (result, _) = timed_run(alg, &read_graph(&graph)?, source)?;
            match result {
                RunOutput::AllPairs(m) => m.to_csv(),
                RunOutput::SingleSource(sp) => {
                    let mut out = String::from("vertex,distance,predecessor\n");
                    for (v, (d, p)) in sp.distances.iter().zip(&sp.predecessors).enumerate() {
                        let p = p.map(|p| p.to_string()).unwrap_or_default();
                        out.push_str(&format!("{v},{d},{p}\n"));
                    }
                    out
                }
            }
        }
        Command::Gap { qubo, points } => gap_profile(&read_qubo(&qubo)?, points)?.to_csv(),
        Command::Feas {
            graph,
            rows,
            cols,
            shore,
        } => check_feasibility(&read_graph(&graph)?, &chimera(rows, cols, shore)?).to_string(),
        Command::Degrees {
            graph,
            fit,
            free_exponent,
        } => {
            let hist = DegreeHistogram::of_graph(&read_graph(&graph)?);
            let mut out = hist.to_csv();
            if fit || free_exponent {
                let f = if free_exponent {
                    fit_power_law_free(&hist)?
                } else {
                    fit_power_law(&hist)?
                };
                out.push('\n');
                out.push_str(&f.to_csv());
            }
            out
        }
        Command::Bench(BenchCommand::Vertices {
            sizes,
            common,
            model,
            n0,
            n,
            p,
        }) => {
            let sizes = sizes.unwrap_or_else(|| DEFAULT_SIZES.to_vec());
            let model = match model {
                ModelKind::Ba => GraphModel::BarabasiAlbert { n0, n },
                ModelKind::Er => GraphModel::ErdosRenyi { p },
            };
            let records = bench_vertices(
                &sizes,
                &algorithms(&common.algorithms)?,
                model,
                &common.seed,
                &bench_config(&common),
            )?;
            render_records(&records, format.unwrap_or(Format::Csv), "vertices")?
        }
        Command::Bench(BenchCommand::Edges {
            vertices,
            probs,
            common,
        }) => {
            let records = bench_edge_probability(
                vertices,
                &probs,
                &algorithms(&common.algorithms)?,
                &common.seed,
                &bench_config(&common),
            )?;
            render_records(&records, format.unwrap_or(Format::Csv), "edge probability")?
        }
        Command::Fit {
            records,
            model,
            algorithm,
        } => {
            let records = parse_records_csv(&fs::read_to_string(records)?)?;
            let models = match model {
                Some(m) => vec![m.parse::<FitModel>()?],
                None => vec![
                    FitModel::AffineLog,
                    FitModel::AffineInvSqrt,
                    FitModel::Affine,
                ],
            };
            let mut names: Vec<&str> = Vec::new();
            for r in &records {
                if !names.contains(&r.algorithm.as_str()) {
                    names.push(&r.algorithm);
                }
            }
            if let Some(only) = algorithm.as_deref() {
                names.retain(|n| *n == only);
            }
            let mut out = String::from("algorithm,model,a,b,sse\n");
            for name in names {
                let subset: Vec<_> = records
                    .iter()
                    .filter(|r| r.algorithm == name)
                    .cloned()
                    .collect();
                for &m in &models {
                    let f = fit_runtime(&subset, m)?;
                    out.push_str(&format!("{name},{},{},{},{}\n", m.name(), f.a, f.b, f.sse));
                }
            }
            out
        }
        Command::Plot { records, title } => {
            let records = parse_records_csv(&fs::read_to_string(records)?)?;
            let x_label = if records.iter().any(|r| r.probability.is_some()) {
                "edge probability"
            } else {
                "vertices"
            };
            emit_svg(&mean_series(&records), &title, x_label, "seconds")?
        }
    };
    Ok(text)
}

fn main() {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|text| match out {
        Some(path) => fs::write(path, text).map_err(Into::into),
        None => io::stdout().write_all(text.as_bytes()).map_err(Into::into),
    });
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
