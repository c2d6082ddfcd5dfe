//! Simulated-annealing reads on the two eight-vertex fixtures, printed in the
//! same shape as a sampler's result table.
//!
//! ```bash
//! cargo run --release -p pathqubo --example anneal_sampling
//! ```

use pathqubo::fixtures::{graph_one, graph_two, FIXTURE_END, FIXTURE_START};
use pathqubo::qubo::{build_qubo, CoefficientSet};
use pathqubo::solvers::{decode_path, sample_sa, PathResult, SaParams};

fn main() -> pathqubo::Result<()> {
    let params = SaParams::with_seed(2024);
    for (name, g) in [("graph one", graph_one()), ("graph two", graph_two())] {
        let p = build_qubo(&g, &CoefficientSet::default(), FIXTURE_START, FIXTURE_END)?;
        let table = sample_sa(&p, &params)?;
        println!(
            "{name}: {} reads, {} distinct states",
            table.total_reads(),
            table.rows().len()
        );
        println!(
            "{:>8}  {:<24} {:>6}",
            "energy", "route (1-indexed)", "count"
        );
        for row in table.rows().iter().take(6) {
            let route = match decode_path(&g, &row.state, FIXTURE_START, FIXTURE_END) {
                PathResult::Valid { vertices, .. } => vertices
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" <-> "),
                PathResult::Invalid(reason) => format!("{:?} {}", reason, row.state),
            };
            println!("{:>8}  {:<24} {:>6}", row.energy, route, row.occurrences);
        }
        println!();
    }
    Ok(())
}
