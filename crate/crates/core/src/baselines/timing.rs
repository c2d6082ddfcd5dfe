use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::{
    apsp_minplus, bellman_ford, dijkstra, dijkstra_array, floyd_warshall, Distance, DistanceMatrix,
    ShortestPaths,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalAlgorithm {
    Dijkstra,
    DijkstraArray,
    BellmanFord,
    FloydWarshall,
    MinPlus,
}

impl ClassicalAlgorithm {
    pub const ALL: [ClassicalAlgorithm; 5] = [
        ClassicalAlgorithm::Dijkstra,
        ClassicalAlgorithm::DijkstraArray,
        ClassicalAlgorithm::BellmanFord,
        ClassicalAlgorithm::FloydWarshall,
        ClassicalAlgorithm::MinPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalAlgorithm::Dijkstra => "dijkstra",
            ClassicalAlgorithm::DijkstraArray => "dijkstra_array",
            ClassicalAlgorithm::BellmanFord => "bellman_ford",
            ClassicalAlgorithm::FloydWarshall => "floyd_warshall",
            ClassicalAlgorithm::MinPlus => "minplus",
        }
    }
}

impl fmt::Display for ClassicalAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassicalAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dijkstra" => Ok(ClassicalAlgorithm::Dijkstra),
            "dijkstra_array" => Ok(ClassicalAlgorithm::DijkstraArray),
            "bellman_ford" | "bellman" => Ok(ClassicalAlgorithm::BellmanFord),
            "floyd_warshall" | "floyd" => Ok(ClassicalAlgorithm::FloydWarshall),
            "minplus" => Ok(ClassicalAlgorithm::MinPlus),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunOutput {
    SingleSource(ShortestPaths),
    AllPairs(DistanceMatrix),
}

impl RunOutput {
    pub fn distance(&self, source: VertexId, target: VertexId) -> Distance {
        match self {
            RunOutput::SingleSource(sp) => {
                debug_assert_eq!(sp.source, source);
                sp.distances[target]
            }
            RunOutput::AllPairs(m) => m.get(source, target),
        }
    }
}

/// Runs one algorithm on the calling thread and reports wall-clock seconds
/// from a monotonic clock.
pub fn timed_run(
    algorithm: ClassicalAlgorithm,
    g: &Graph,
    source: VertexId,
) -> Result<(RunOutput, f64)> {
    if source >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            vertex_count: g.vertex_count(),
        });
    }
    let started = Instant::now();
    let out = match algorithm {
        ClassicalAlgorithm::Dijkstra => RunOutput::SingleSource(dijkstra(g, source)?),
        ClassicalAlgorithm::DijkstraArray => RunOutput::SingleSource(dijkstra_array(g, source)?),
        ClassicalAlgorithm::BellmanFord => RunOutput::SingleSource(bellman_ford(g, source)?),
        ClassicalAlgorithm::FloydWarshall => RunOutput::AllPairs(floyd_warshall(g)),
        ClassicalAlgorithm::MinPlus => RunOutput::AllPairs(apsp_minplus(g)),
    };
    Ok((out, started.elapsed().as_secs_f64()))
}
