//! The five classical shortest-path routines on one weighted random graph,
//! with agreement and timing.
//!
//! ```bash
//! cargo run --release -p pathqubo --example classical_oracles
//! ```

use pathqubo::baselines::{reconstruct_path, timed_run, ClassicalAlgorithm, RunOutput};
use pathqubo::graph::{generate_er, reweight};

fn main() -> pathqubo::Result<()> {
    let g = reweight(&generate_er(200, 0.05, 7)?, 8);
    println!(
        "G(200, 0.05): {} edges, max degree {}",
        g.edge_count(),
        g.max_degree()
    );

    let mut reference = None;
    for alg in ClassicalAlgorithm::ALL {
        let (out, secs) = timed_run(alg, &g, 0)?;
        let row: Vec<_> = (0..g.vertex_count()).map(|v| out.distance(0, v)).collect();
        let agrees = reference.get_or_insert_with(|| row.clone()) == &row;
        println!("{:<16} {:>10.6}s  agrees={agrees}", alg.name(), secs);
        if let RunOutput::SingleSource(sp) = &out {
            if alg == ClassicalAlgorithm::Dijkstra {
                let far = (0..g.vertex_count())
                    .filter(|&v| sp.distances[v].is_finite())
                    .max_by_key(|&v| sp.distances[v].finite())
                    .unwrap_or(0);
                println!(
                    "  farthest from 0: {far} at {}, via {:?}",
                    sp.distances[far],
                    reconstruct_path(sp, far)
                );
            }
        }
    }
    Ok(())
}
