//! Shortest-path search as a QUBO.
//!
//! A graph and a pair of terminals are encoded as a quadratic binary model
//! whose minimum selects the vertices of a shortest path. The crate solves
//! that model exactly and by simulated annealing, checks the answer
//! against classical shortest-path algorithms, inspects the spectral gap of
//! the matching transverse-field anneal, checks Chimera qubit budgets, and
//! benchmarks everything on random graphs.
//!
//! Each module has a runnable counterpart under `examples/`.

pub mod baselines;
pub mod bench;
pub mod chimera;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod qubo;
pub mod solvers;
pub mod spectrum;

pub use error::{Error, Result};
