//! Chimera qubit topology and logical-to-physical budget checks.
//!
//! A Chimera graph is a `rows × cols` grid of unit cells. Each cell is a
//! complete bipartite `K_{shore,shore}` between a vertical and a horizontal
//! shore. Vertical-shore qubit `k` couples to qubit `k` of the cell below,
//! horizontal-shore qubit `k` to qubit `k` of the cell to the right.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Physical qubits budgeted per logical variable.
pub const QUBITS_PER_VARIABLE: usize = 3;

/// Logical degree above which a feasibility report carries a warning.
pub const DEGREE_WARNING: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChimeraTopology {
    pub rows: usize,
    pub cols: usize,
    pub shore: usize,
    couplers: Vec<(usize, usize)>,
}

impl ChimeraTopology {
    pub fn qubit_count(&self) -> usize {
        self.rows * self.cols * 2 * self.shore
    }

    pub fn couplers(&self) -> &[(usize, usize)] {
        &self.couplers
    }

    /// Linear index of qubit `k` on shore `side` (0 vertical, 1 horizontal)
    /// of cell `(row, col)`.
    pub fn qubit(&self, row: usize, col: usize, side: usize, k: usize) -> usize {
        ((row * self.cols + col) * 2 + side) * self.shore + k
    }

    /// Coupler graph in the edge-list representation, unit weights.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(
            self.qubit_count(),
            self.couplers.iter().map(|&(u, v)| (u, v, 1)),
        )
        .expect("couplers are distinct, in range and loop-free")
    }
}

pub fn chimera(rows: usize, cols: usize, shore: usize) -> Result<ChimeraTopology> {
    if rows == 0 || cols == 0 || shore == 0 {
        return Err(Error::InvalidParameter(format!(
            "chimera dimensions must be positive, got {rows}×{cols}×{shore}"
        )));
    }
    let mut topo = ChimeraTopology {
        rows,
        cols,
        shore,
        couplers: Vec::new(),
    };
    let mut couplers = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            for a in 0..shore {
                for b in 0..shore {
                    couplers.push((topo.qubit(r, c, 0, a), topo.qubit(r, c, 1, b)));
                }
            }
            for k in 0..shore {
                if r + 1 < rows {
                    couplers.push((topo.qubit(r, c, 0, k), topo.qubit(r + 1, c, 0, k)));
                }
                if c + 1 < cols {
                    couplers.push((topo.qubit(r, c, 1, k), topo.qubit(r, c + 1, 1, k)));
                }
            }
        }
    }
    couplers.sort_unstable();
    topo.couplers = couplers;
    Ok(topo)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub logical_vars: usize,
    pub required_qubits: usize,
    pub available_qubits: usize,
    pub fits: bool,
    pub max_graph_degree: usize,
    pub degree_warning: bool,
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "logical_vars={}", self.logical_vars)?;
        writeln!(f, "required_qubits={}", self.required_qubits)?;
        writeln!(f, "available_qubits={}", self.available_qubits)?;
        writeln!(f, "fits={}", self.fits)?;
        writeln!(f, "max_graph_degree={}", self.max_graph_degree)?;
        writeln!(f, "degree_warning={}", self.degree_warning)
    }
}

pub fn check_feasibility(g: &Graph, topo: &ChimeraTopology) -> FeasibilityReport {
    let logical_vars = g.vertex_count();
    let required_qubits = QUBITS_PER_VARIABLE * logical_vars;
    let available_qubits = topo.qubit_count();
    let max_graph_degree = g.max_degree();
    FeasibilityReport {
        logical_vars,
        required_qubits,
        available_qubits,
        fits: required_qubits <= available_qubits,
        max_graph_degree,
        degree_warning: max_graph_degree > DEGREE_WARNING,
    }
}
