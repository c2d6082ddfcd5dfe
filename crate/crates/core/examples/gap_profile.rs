//! Spectral gap of the interpolated Hamiltonian for the path QUBO on a
//! six-vertex weighted graph, written as CSV.
//!
//! ```bash
//! cargo run --release -p pathqubo --example gap_profile
//! ```

use pathqubo::graph::Graph;
use pathqubo::qubo::{build_qubo, CoefficientSet};
use pathqubo::spectrum::gap_profile;

fn main() -> pathqubo::Result<()> {
    let g = Graph::from_edges(
        6,
        [
            (0, 1, 1),
            (1, 5, 1),
            (0, 2, 1),
            (2, 5, 2),
            (2, 3, 1),
            (3, 4, 1),
            (4, 5, 1),
        ],
    )?;
    let p = build_qubo(&g, &CoefficientSet::default(), 0, 5)?;
    for points in [51, 201, 401] {
        let prof = gap_profile(&p, points)?;
        println!(
            "{points:>4} points: min gap {:.6} at s={:.4}, tau {:?}",
            prof.min_gap, prof.min_gap_s, prof.tau_estimate
        );
    }
    let prof = gap_profile(&p, 201)?;
    let path = std::env::temp_dir().join("pathqubo_gap.csv");
    std::fs::write(&path, prof.to_csv()).expect("writable temp dir");
    println!("profile written to {}", path.display());
    Ok(())
}
