//! Classical shortest-path algorithms used as oracles and as benchmark
//! opponents.

mod apsp;
mod sssp;
mod timing;

pub use apsp::{apsp_minplus, floyd_warshall, minplus_product};
pub use sssp::{bellman_ford, dijkstra, dijkstra_array, reconstruct_path, ShortestPaths};
pub use timing::{timed_run, ClassicalAlgorithm, RunOutput};

use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path length, with a dedicated infinity that absorbs under addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub const ZERO: Distance = Distance::Finite(0);

    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Square matrix of distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    /// Min-plus identity: zero diagonal, infinity elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = DistanceMatrix {
            n,
            d: vec![Distance::Infinite; n * n],
        };
        for i in 0..n {
            m.set(i, i, Distance::ZERO);
        }
        m
    }

    /// One-hop matrix of `g`: zero diagonal, edge weights, infinity for
    /// non-adjacent pairs.
    pub fn weights(g: &Graph) -> Self {
        let mut m = Self::identity(g.vertex_count());
        for (u, v, w) in g.edges() {
            m.set(u, v, Distance::Finite(w.get()));
            m.set(v, u, Distance::Finite(w.get()));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Distance>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(n, bad.len()));
        }
        Ok(DistanceMatrix {
            n,
            d: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Distance {
        self.d[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Distance) {
        self.d[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Distance] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// CSV without header; `inf` marks unreachable pairs.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|d| d.to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}
