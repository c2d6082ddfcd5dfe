use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::Distance;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Single-source distances plus one predecessor per reached vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortestPaths {
    pub source: VertexId,
    pub distances: Vec<Distance>,
    pub predecessors: Vec<Option<VertexId>>,
}

fn check_source(g: &Graph, source: VertexId) -> Result<()> {
    if source < g.vertex_count() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex: source,
            vertex_count: g.vertex_count(),
        })
    }
}

/// Dijkstra with a binary heap, O((E + V) log V).
pub fn dijkstra(g: &Graph, source: VertexId) -> Result<ShortestPaths> {
    check_source(g, source)?;
    let n = g.vertex_count();
    let mut dist = vec![Distance::Infinite; n];
    let mut pred = vec![None; n];
    let mut heap = BinaryHeap::new();
    dist[source] = Distance::ZERO;
    heap.push(Reverse((0u64, source)));

    while let Some(Reverse((d, v))) = heap.pop() {
        if Distance::Finite(d) > dist[v] {
            continue;
        }
        for &(u, w) in g.neighbors(v) {
            let cand = d + w.get();
            if Distance::Finite(cand) < dist[u] {
                dist[u] = Distance::Finite(cand);
                pred[u] = Some(v);
                heap.push(Reverse((cand, u)));
            }
        }
    }
    Ok(ShortestPaths {
        source,
        distances: dist,
        predecessors: pred,
    })
}

/// Dijkstra with a linear scan for the next vertex, O(V²).
pub fn dijkstra_array(g: &Graph, source: VertexId) -> Result<ShortestPaths> {
    check_source(g, source)?;
    let n = g.vertex_count();
    let mut dist = vec![Distance::Infinite; n];
    let mut pred = vec![None; n];
    let mut done = vec![false; n];
    dist[source] = Distance::ZERO;

    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !done[v] && dist[v].is_finite())
            .min_by_key(|&v| dist[v]);
        let Some(v) = next else { break };
        done[v] = true;
        for &(u, w) in g.neighbors(v) {
            let cand = dist[v] + Distance::Finite(w.get());
            if cand < dist[u] {
                dist[u] = cand;
                pred[u] = Some(v);
            }
        }
    }
    Ok(ShortestPaths {
        source,
        distances: dist,
        predecessors: pred,
    })
}

/// Bellman–Ford relaxing every edge in both directions, stopping early once
/// a pass changes nothing.
pub fn bellman_ford(g: &Graph, source: VertexId) -> Result<ShortestPaths> {
    check_source(g, source)?;
    let n = g.vertex_count();
    let mut dist = vec![Distance::Infinite; n];
    let mut pred = vec![None; n];
    dist[source] = Distance::ZERO;
    let edges: Vec<_> = g.edges().collect();

    for _ in 1..n.max(1) {
        let mut changed = false;
        for &(u, v, w) in &edges {
            let w = Distance::Finite(w.get());
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                pred[v] = Some(u);
                changed = true;
            }
            if dist[v] + w < dist[u] {
                dist[u] = dist[v] + w;
                pred[u] = Some(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(ShortestPaths {
        source,
        distances: dist,
        predecessors: pred,
    })
}

/// Follows predecessors back from `target`; `None` when unreachable.
pub fn reconstruct_path(sp: &ShortestPaths, target: VertexId) -> Option<Vec<VertexId>> {
    if !sp.distances.get(target)?.is_finite() {
        return None;
    }
    let mut path = vec![target];
    let mut cur = target;
    while cur != sp.source {
        cur = sp.predecessors[cur]?;
        path.push(cur);
    }
    path.reverse();
    Some(path)
}
