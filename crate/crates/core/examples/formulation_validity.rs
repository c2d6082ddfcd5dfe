//! Where the default coefficients do and do not pick out the shortest path,
//! and a small sweep over the start/end bonus on a five-vertex path.
//!
//! ```bash
//! cargo run -p pathqubo --example formulation_validity
//! ```

use pathqubo::fixtures::{complete_graph, graph_one, graph_two, path_graph};
use pathqubo::qubo::CoefficientSet;
use pathqubo::solvers::{analyze_formulation, coefficient_sweep, CoefficientGrid};

fn main() -> pathqubo::Result<()> {
    let c = CoefficientSet::default();
    let cases = [
        ("graph one", graph_one(), 0, 7),
        ("graph two", graph_two(), 0, 7),
        ("path P5", path_graph(5), 0, 4),
        ("triangle K3", complete_graph(3), 0, 2),
    ];
    for (name, g, s, t) in &cases {
        let r = analyze_formulation(g, &c, *s, *t)?;
        let argmin: Vec<String> = r.argmin_states.iter().map(|s| s.to_string()).collect();
        println!(
            "{name:<12} valid={:<5} min={:>4} argmin={argmin:?} shortest={:?}",
            r.decodes_to_shortest_path, r.min_energy, r.true_shortest_weight
        );
    }

    let grid = CoefficientGrid {
        delta: (1..=12).map(|d| d as f64 * 0.5).collect(),
        ..CoefficientGrid::single(c)
    };
    println!("\nP5 endpoint bonus sweep:");
    for (c, r) in coefficient_sweep(&path_graph(5), &grid, 0, 4)? {
        println!(
            "  delta={:<4} valid={} min={}",
            c.delta, r.decodes_to_shortest_path, r.min_energy
        );
    }
    Ok(())
}
