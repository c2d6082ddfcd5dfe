//! Turning a selection of vertices back into a route.

use serde::Serialize;

use crate::graph::{Graph, VertexId};
use crate::qubo::BitState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathFailure {
    /// Start or end is not selected.
    EndpointsMissing,
    /// A selected vertex has three or more selected neighbours.
    Branching,
    /// Start and end lie on a cycle of the induced subgraph.
    Cycle,
    /// Start and end are not connected, or extra selected vertices hang off
    /// elsewhere.
    Disconnected,
    /// Start or end sits in the interior of the induced path.
    NotAPath,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathResult {
    Valid {
        vertices: Vec<VertexId>,
        total_weight: u64,
    },
    Invalid(PathFailure),
}

impl PathResult {
    pub fn is_valid(&self) -> bool {
        matches!(self, PathResult::Valid { .. })
    }

    pub fn total_weight(&self) -> Option<u64> {
        match self {
            PathResult::Valid { total_weight, .. } => Some(*total_weight),
            PathResult::Invalid(_) => None,
        }
    }
}

/// Valid iff the subgraph induced by the selected vertices is a simple path
/// whose two ends are exactly `start` and `end`.
pub fn decode_path(g: &Graph, s: &BitState, start: VertexId, end: VertexId) -> PathResult {
    let n = g.vertex_count();
    let on = |v: VertexId| v < s.len() && s.get(v);
    if !on(start) || !on(end) {
        return PathResult::Invalid(PathFailure::EndpointsMissing);
    }

    let induced = |v: VertexId| g.neighbors(v).iter().filter(move |(u, _)| on(*u));
    let selected: Vec<VertexId> = (0..n.min(s.len())).filter(|&v| on(v)).collect();
    if selected.iter().any(|&v| induced(v).count() > 2) {
        return PathResult::Invalid(PathFailure::Branching);
    }

    // Component of `start` in the induced subgraph. With every degree at
    // most 2 it is a path (edges = vertices − 1) or a cycle.
    let mut component = vec![start];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut edge_ends = 0;
    let mut head = 0;
    while head < component.len() {
        let v = component[head];
        head += 1;
        for &(u, _) in induced(v) {
            edge_ends += 1;
            if !seen[u] {
                seen[u] = true;
                component.push(u);
            }
        }
    }
    if !seen[end] {
        return PathResult::Invalid(PathFailure::Disconnected);
    }
    if edge_ends / 2 == component.len() {
        return PathResult::Invalid(PathFailure::Cycle);
    }
    if induced(start).count() != 1 || induced(end).count() != 1 {
        return PathResult::Invalid(PathFailure::NotAPath);
    }
    if component.len() != selected.len() {
        return PathResult::Invalid(PathFailure::Disconnected);
    }

    let mut vertices = vec![start];
    let mut total_weight = 0;
    let mut prev = usize::MAX;
    let mut cur = start;
    while cur != end {
        let &(next, w) = induced(cur)
            .find(|(u, _)| *u != prev)
            .expect("path component continues until its other end");
        total_weight += w.get();
        vertices.push(next);
        prev = cur;
        cur = next;
    }
    PathResult::Valid {
        vertices,
        total_weight,
    }
}
