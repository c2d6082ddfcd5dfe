//! Vertex and edge-probability runtime sweeps with model fits and an SVG
//! chart in the temp directory.
//!
//! ```bash
//! cargo run --release -p pathqubo --example runtime_scaling
//! ```

use pathqubo::baselines::ClassicalAlgorithm;
use pathqubo::bench::{
    bench_edge_probability, bench_vertices, emit_fits_csv, emit_svg, emit_table_csv, fit_runtime,
    mean_series, Algorithm, BenchConfig, FitModel, GraphModel,
};

fn main() -> pathqubo::Result<()> {
    let config = BenchConfig::default();
    let algs = [
        Algorithm::Classical(ClassicalAlgorithm::Dijkstra),
        Algorithm::Classical(ClassicalAlgorithm::BellmanFord),
        Algorithm::Classical(ClassicalAlgorithm::FloydWarshall),
        Algorithm::SaSampler,
    ];
    let sizes = [25, 50, 100, 150, 200, 300];
    let model = GraphModel::BarabasiAlbert { n0: 2, n: 2 };
    let records = bench_vertices(&sizes, &algs, model, &[1, 2, 3], &config)?;
    println!("mean seconds by vertex count");
    print!("{}", emit_table_csv(&records)?);

    let svg = emit_svg(
        &mean_series(&records),
        "runtime vs vertices",
        "vertices",
        "seconds",
    )?;
    let path = std::env::temp_dir().join("pathqubo_vertices.svg");
    std::fs::write(&path, svg).expect("writable temp dir");
    println!("chart written to {}", path.display());

    let probs: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
    let sa = bench_edge_probability(60, &probs, &[Algorithm::SaSampler], &[1, 2], &config)?;
    let fits = [FitModel::AffineLog, FitModel::AffineInvSqrt]
        .into_iter()
        .map(|m| fit_runtime(&sa, m))
        .collect::<pathqubo::Result<Vec<_>>>()?;
    println!("\nsampler time vs edge probability, fits:");
    print!("{}", emit_fits_csv(&fits)?);
    Ok(())
}
