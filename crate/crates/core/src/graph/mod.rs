//! Undirected graphs with small integer edge weights.
//!
//! Vertices are `0..vertex_count`. Every stored edge has weight 1, 2 or 3;
//! a missing pair is the implicit weight 0.

mod degree;
mod generate;
mod io;

pub use degree::{
    fit_inverse_power, fit_power_law, fit_power_law_free, DegreeHistogram, PowerLawFit,
};
pub use generate::{generate_ba, generate_er, reweight};
pub use io::{load_graph, store_graph};

use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Edge weight restricted to `{1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u8);

impl Weight {
    pub const ONE: Weight = Weight(1);

    pub fn new(w: i64) -> Result<Self> {
        if (1..=3).contains(&w) {
            Ok(Weight(w as u8))
        } else {
            Err(Error::WeightRange(w))
        }
    }

    pub fn get(self) -> u64 {
        self.0 as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeMap<(VertexId, VertexId), Weight>,
    adjacency: Vec<Vec<(VertexId, Weight)>>,
}

impl Graph {
    /// An edgeless graph. A zero-vertex graph is allowed so that empty inputs
    /// can flow through feasibility checks.
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: BTreeMap::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from `(u, v, w)` triples, checking every invariant.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, i64)>,
    {
        let mut g = Graph::new(vertex_count);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Adds the undirected edge `{u, v}` with weight `w`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, w: i64) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let w = Weight::new(w)?;
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        self.edges.insert(key, w);
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[a];
            let at = list.partition_point(|&(x, _)| x < b);
            list.insert(at, (b, w));
        }
        Ok(())
    }

    /// Consuming variant of [`Graph::add_edge`].
    pub fn with_edge(mut self, u: VertexId, v: VertexId, w: i64) -> Result<Self> {
        self.add_edge(u, v, w)?;
        Ok(self)
    }

    /// Weight of `{u, v}`, or `None` if the pair is not an edge.
    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.weight(u, v).is_some()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, Weight)] {
        &self.adjacency[v]
    }

    /// Edges in canonical `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Weight)> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    /// Hex SHA-256 prefix of the canonical edge-list text.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(store_graph(self).as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}
