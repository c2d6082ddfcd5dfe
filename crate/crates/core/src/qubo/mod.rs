//! QUBO model for single-pair shortest path.
//!
//! For a graph with adjacency-weight matrix `A`, complement indicator `N`
//! (1 where `i ≠ j` and there is no edge, zero diagonal) and identity `I`,
//! the symmetric matrix `M = −α·A + β·I + γ·N` is reduced to its upper
//! triangle and the endpoint reward `−δ·(s_start + s_end + s_start·s_end)`
//! is folded into the same coefficient map:
//!
//! ```text
//! H(s) = Σ_i M_ii·s_i + Σ_{i<j} M_ij·s_i·s_j − δ·(s_start + s_end + s_start·s_end)
//! ```
//!
//! Off-diagonal entries are taken once, not as `M_ij + M_ji`.

mod io;
mod ising;

pub use io::{load_qubo, store_qubo};
pub use ising::{to_ising, IsingProblem};

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Scalar weights of the encoding. All must be strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientSet {
    /// Reward per unit of edge weight inside the selection.
    pub alpha: f64,
    /// Cost per selected vertex.
    pub beta: f64,
    /// Penalty per selected pair that is not an edge.
    pub gamma_q: f64,
    /// Reward for selecting the terminals.
    pub delta: f64,
}

impl Default for CoefficientSet {
    fn default() -> Self {
        CoefficientSet {
            alpha: 1.0,
            beta: 1.0,
            gamma_q: 2.0,
            delta: 3.0,
        }
    }
}

impl CoefficientSet {
    pub fn new(alpha: f64, beta: f64, gamma_q: f64, delta: f64) -> Result<Self> {
        let c = CoefficientSet {
            alpha,
            beta,
            gamma_q,
            delta,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.alpha, self.beta, self.gamma_q, self.delta];
        if all.iter().all(|&x| x > 0.0 && x.is_finite()) {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "coefficients must be strictly positive: {self:?}"
            )))
        }
    }
}

/// Binary assignment, one entry per variable. Ordering is lexicographic
/// with variable 0 most significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BitState(Vec<u8>);

impl BitState {
    pub fn zeros(n: usize) -> Self {
        BitState(vec![0; n])
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidParameter("bits must be 0 or 1".into()));
        }
        Ok(BitState(bits))
    }

    /// State with exactly the listed variables set.
    pub fn from_selected(n: usize, selected: &[usize]) -> Result<Self> {
        let mut bits = vec![0; n];
        for &i in selected {
            if i >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: i,
                    vertex_count: n,
                });
            }
            bits[i] = 1;
        }
        Ok(BitState(bits))
    }

    /// Bit `i` of `index` is variable `i`.
    pub fn from_index(n: usize, index: u64) -> Self {
        BitState((0..n).map(|i| ((index >> i) & 1) as u8).collect())
    }

    /// Parses a `0`/`1` string, first character is variable 0.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidParameter(format!("invalid bit `{c}`"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BitState)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i] == 1
    }

    pub fn selected(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == 1).collect()
    }
}

impl fmt::Display for BitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Upper-triangular coefficient map over `n` binary variables.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuboProblem {
    n: usize,
    coeffs: BTreeMap<(usize, usize), f64>,
    endpoints: Option<(VertexId, VertexId)>,
}

impl QuboProblem {
    /// A raw problem with no terminal metadata. Entries must satisfy `i ≤ j < n`.
    pub fn new(n: usize, coeffs: BTreeMap<(usize, usize), f64>) -> Result<Self> {
        for &(i, j) in coeffs.keys() {
            if i > j {
                return Err(Error::InvalidParameter(format!(
                    "coefficient ({i}, {j}) is below the diagonal"
                )));
            }
            if j >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: j,
                    vertex_count: n,
                });
            }
        }
        Ok(QuboProblem {
            n,
            coeffs,
            endpoints: None,
        })
    }

    pub fn with_endpoints(mut self, start: VertexId, end: VertexId) -> Result<Self> {
        check_endpoints(self.n, start, end)?;
        self.endpoints = Some((start, end));
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        self.endpoints
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), f64> {
        &self.coeffs
    }

    /// Coefficient for the unordered pair `{i, j}` (or the bias when `i == j`).
    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.coeffs
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or(0.0)
    }

    /// `Σ_{i≤j} q_ij·s_i·s_j`.
    pub fn energy(&self, s: &BitState) -> Result<f64> {
        if s.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: s.len(),
            });
        }
        Ok(self.energy_unchecked(s.bits()))
    }

    pub(crate) fn energy_unchecked(&self, bits: &[u8]) -> f64 {
        self.coeffs
            .iter()
            .filter(|(&(i, j), _)| bits[i] == 1 && bits[j] == 1)
            .fold(0.0, |acc, (_, &q)| acc + q)
    }

    /// Biases and a dense symmetric coupling matrix (`n × n`, row-major, zero
    /// diagonal) for solvers that need O(1) access.
    pub(crate) fn dense(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.n;
        let mut linear = vec![0.0; n];
        let mut couplings = vec![0.0; n * n];
        for (&(i, j), &q) in &self.coeffs {
            if i == j {
                linear[i] += q;
            } else {
                couplings[i * n + j] += q;
                couplings[j * n + i] += q;
            }
        }
        (linear, couplings)
    }

    /// CSV `i,j,value` with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for (&(i, j), &q) in &self.coeffs {
            out.push_str(&format!("{i},{j},{q}\n"));
        }
        out
    }
}

fn check_endpoints(n: usize, start: VertexId, end: VertexId) -> Result<()> {
    for v in [start, end] {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: n,
            });
        }
    }
    if start == end {
        return Err(Error::SameEndpoints(start));
    }
    Ok(())
}

/// Encodes the `start → end` shortest-path problem on `g`.
pub fn build_qubo(
    g: &Graph,
    c: &CoefficientSet,
    start: VertexId,
    end: VertexId,
) -> Result<QuboProblem> {
    let n = g.vertex_count();
    check_endpoints(n, start, end)?;
    c.validate()?;

    let mut coeffs = BTreeMap::new();
    for i in 0..n {
        coeffs.insert((i, i), c.beta);
        for j in (i + 1)..n {
            let q = match g.weight(i, j) {
                Some(w) => -c.alpha * w.get() as f64,
                None => c.gamma_q,
            };
            coeffs.insert((i, j), q);
        }
    }
    let pair = (start.min(end), start.max(end));
    for key in [(start, start), (end, end), pair] {
        *coeffs.get_mut(&key).expect("dense map has every pair") -= c.delta;
    }

    Ok(QuboProblem {
        n,
        coeffs,
        endpoints: Some((start, end)),
    })
}

/// The same energy computed from subset statistics instead of the matrix:
/// `−α·w(S) + β·|S| + γ·(C(|S|,2) − e(S)) − δ·([start∈S] + [end∈S] + [both])`.
pub fn energy_closed_form(
    g: &Graph,
    c: &CoefficientSet,
    subset: &[VertexId],
    start: VertexId,
    end: VertexId,
) -> f64 {
    let mut members = subset.to_vec();
    members.sort_unstable();
    members.dedup();

    let size = members.len();
    let mut inner_weight = 0u64;
    let mut inner_edges = 0usize;
    for (x, &u) in members.iter().enumerate() {
        for &v in &members[x + 1..] {
            if let Some(w) = g.weight(u, v) {
                inner_weight += w.get();
                inner_edges += 1;
            }
        }
    }
    let has_start = members.binary_search(&start).is_ok();
    let has_end = members.binary_search(&end).is_ok();
    let terminal_hits = has_start as u32 + has_end as u32 + (has_start && has_end) as u32;
    let pairs = size * size.saturating_sub(1) / 2;

    -c.alpha * inner_weight as f64 + c.beta * size as f64 + c.gamma_q * (pairs - inner_edges) as f64
        - c.delta * terminal_hits as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1, 1), (1, 2, 1)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

    #[test]
    fn path_three_coefficients() {
        let q = build_qubo(&p3(), &CoefficientSet::default(), 0, 2).unwrap();
        assert_eq!(q.coeff(0, 0), -2.0);
        assert_eq!(q.coeff(1, 1), 1.0);
        assert_eq!(q.coeff(2, 2), -2.0);
        assert_eq!(q.coeff(0, 1), -1.0);
        assert_eq!(q.coeff(1, 2), -1.0);
        assert_eq!(q.coeff(0, 2), 2.0 - 3.0);
        let all = BitState::from_selected(3, &[0, 1, 2]).unwrap();
        assert_eq!(q.energy(&all).unwrap(), -6.0);
    }

    #[test]
    fn triangle_coefficients() {
        let q = build_qubo(&k3(), &CoefficientSet::default(), 0, 2).unwrap();
        assert_eq!(
            (q.coeff(0, 0), q.coeff(1, 1), q.coeff(2, 2)),
            (-2.0, 1.0, -2.0)
        );
        assert_eq!((q.coeff(0, 1), q.coeff(1, 2)), (-1.0, -1.0));
        assert_eq!(q.coeff(0, 2), -1.0 - 3.0);
    }

    #[test]
    fn edgeless_pair() {
        let g = Graph::new(2);
        let q = build_qubo(&g, &CoefficientSet::default(), 0, 1).unwrap();
        assert_eq!((q.coeff(0, 0), q.coeff(1, 1)), (-2.0, -2.0));
        assert_eq!(q.coeff(0, 1), 2.0 - 3.0);
    }

    #[test]
    fn weights_enter_through_adjacency() {
        let g = Graph::from_edges(3, [(0, 1, 3), (1, 2, 2)]).unwrap();
        let q = build_qubo(&g, &CoefficientSet::default(), 0, 2).unwrap();
        assert_eq!(q.coeff(0, 1), -3.0);
        assert_eq!(q.coeff(1, 2), -2.0);
    }

    #[test]
    fn bad_terminals() {
        let c = CoefficientSet::default();
        assert_eq!(build_qubo(&p3(), &c, 1, 1), Err(Error::SameEndpoints(1)));
        assert!(matches!(
            build_qubo(&p3(), &c, 0, 3),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn coefficients_must_be_positive() {
        assert!(CoefficientSet::new(1.0, 0.0, 2.0, 3.0).is_err());
        assert!(CoefficientSet::new(1.0, 1.0, -2.0, 3.0).is_err());
        assert!(CoefficientSet::new(1.0, 1.0, 2.0, 3.0).is_ok());
    }

    #[test]
    fn energy_edge_cases() {
        let q = build_qubo(&p3(), &CoefficientSet::default(), 0, 2).unwrap();
        assert_eq!(q.energy(&BitState::zeros(3)).unwrap(), 0.0);
        assert_eq!(
            q.energy(&BitState::zeros(4)),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn closed_form_examples() {
        let c = CoefficientSet::default();
        assert_eq!(energy_closed_form(&k3(), &c, &[0, 1, 2], 0, 2), -9.0);
        assert_eq!(energy_closed_form(&k3(), &c, &[], 0, 2), 0.0);
        assert_eq!(energy_closed_form(&p3(), &c, &[0, 1, 2], 0, 2), -6.0);
    }

    #[test]
    fn raw_problem_validation() {
        let mut m = BTreeMap::new();
        m.insert((1, 0), 1.0);
        assert!(QuboProblem::new(2, m).is_err());
        let mut m = BTreeMap::new();
        m.insert((0, 2), 1.0);
        assert!(QuboProblem::new(2, m).is_err());
    }

    #[test]
    fn bitstate_text() {
        let s = BitState::from_index(4, 0b0101);
        assert_eq!(s.to_string(), "1010");
        assert_eq!(BitState::parse("1010").unwrap(), s);
        assert_eq!(s.selected(), vec![0, 2]);
        assert!(BitState::parse("10x").is_err());
    }
}
