//! Random graph generators. All outputs are pure functions of their
//! parameters and seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Barabási–Albert preferential attachment.
///
/// Starts from a complete graph on `n0` vertices; every later vertex attaches
/// `n` edges to distinct existing vertices drawn with probability
/// proportional to their current degree. Duplicate draws are rejected and
/// redrawn. All weights are 1.
pub fn generate_ba(n0: usize, n: usize, total_vertices: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n > n0 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} exceeds seed clique size n0 = {n0}"
        )));
    }
    if total_vertices < n0 {
        return Err(Error::InvalidParameter(format!(
            "total_vertices = {total_vertices} is smaller than n0 = {n0}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(total_vertices);
    // Each edge endpoint appears once, so a uniform draw from this list is a
    // degree-proportional draw over vertices.
    let mut endpoints: Vec<VertexId> = Vec::with_capacity(2 * (n0 * n0 / 2 + n * total_vertices));

    for u in 0..n0 {
        for v in (u + 1)..n0 {
            g.add_edge(u, v, 1)?;
            endpoints.extend([u, v]);
        }
    }

    let mut chosen = Vec::with_capacity(n);
    for v in n0..total_vertices {
        chosen.clear();
        while chosen.len() < n {
            let target = if endpoints.is_empty() {
                // n0 = 1: the seed "clique" has no edges yet.
                rng.random_range(0..v)
            } else {
                endpoints[rng.random_range(0..endpoints.len())]
            };
            if !chosen.contains(&target) {
                chosen.push(target);
            }
        }
        for &u in &chosen {
            g.add_edge(u, v, 1)?;
            endpoints.extend([u, v]);
        }
    }
    Ok(g)
}

/// Erdős–Rényi G(V, p): each unordered pair is an edge independently with
/// probability `p`. All weights are 1.
pub fn generate_er(total_vertices: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(total_vertices);
    for u in 0..total_vertices {
        for v in (u + 1)..total_vertices {
            if rng.random::<f64>() < p {
                g.add_edge(u, v, 1)?;
            }
        }
    }
    Ok(g)
}

/// Same edge set with every weight redrawn uniformly from `{1, 2, 3}`.
pub fn reweight(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Graph::new(g.vertex_count());
    for (u, v, _) in g.edges() {
        out.add_edge(u, v, rng.random_range(1..=3))
            .expect("edge set already satisfies the invariants");
    }
    out
}
