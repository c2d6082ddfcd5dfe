//! Checks whether a coefficient set makes the QUBO minimum coincide with a
//! true shortest path.

use rayon::prelude::*;
use serde::Serialize;

use super::{decode_path, ground_states};
use crate::baselines::dijkstra;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::qubo::{build_qubo, BitState, CoefficientSet};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidityReport {
    pub argmin_states: Vec<BitState>,
    pub min_energy: f64,
    /// True iff every minimiser decodes to a path of the true shortest weight.
    pub decodes_to_shortest_path: bool,
    /// Dijkstra distance; `None` when the terminals are disconnected.
    pub true_shortest_weight: Option<u64>,
    /// Lightest weight among minimisers that decode to a valid path.
    pub decoded_weight: Option<u64>,
}

impl ValidityReport {
    pub fn to_json(&self) -> String {
        let states: Vec<String> = self.argmin_states.iter().map(|s| s.to_string()).collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "argmin_states": states,
            "min_energy": self.min_energy,
            "decodes_to_shortest_path": self.decodes_to_shortest_path,
            "true_shortest_weight": self.true_shortest_weight,
            "decoded_weight": self.decoded_weight,
        }))
        .expect("plain JSON values")
    }
}

pub fn analyze_formulation(
    g: &Graph,
    c: &CoefficientSet,
    start: VertexId,
    end: VertexId,
) -> Result<ValidityReport> {
    let p = build_qubo(g, c, start, end)?;
    let (min_energy, argmin_states) = ground_states(&p)?;
    let true_shortest_weight = dijkstra(g, start)?.distances[end].finite();

    let decoded: Vec<Option<u64>> = argmin_states
        .iter()
        .map(|s| decode_path(g, s, start, end).total_weight())
        .collect();
    let decoded_weight = decoded.iter().flatten().min().copied();
    let decodes_to_shortest_path =
        true_shortest_weight.is_some() && decoded.iter().all(|w| *w == true_shortest_weight);

    Ok(ValidityReport {
        argmin_states,
        min_energy,
        decodes_to_shortest_path,
        true_shortest_weight,
        decoded_weight,
    })
}

/// Cartesian grid of coefficient values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientGrid {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma_q: Vec<f64>,
    pub delta: Vec<f64>,
}

impl CoefficientGrid {
    pub fn single(c: CoefficientSet) -> Self {
        CoefficientGrid {
            alpha: vec![c.alpha],
            beta: vec![c.beta],
            gamma_q: vec![c.gamma_q],
            delta: vec![c.delta],
        }
    }

    /// Points in nested order: alpha outermost, delta innermost.
    pub fn points(&self) -> Vec<CoefficientSet> {
        let mut out = Vec::new();
        for &alpha in &self.alpha {
            for &beta in &self.beta {
                for &gamma_q in &self.gamma_q {
                    for &delta in &self.delta {
                        out.push(CoefficientSet {
                            alpha,
                            beta,
                            gamma_q,
                            delta,
                        });
                    }
                }
            }
        }
        out
    }
}

/// One report per grid point, in [`CoefficientGrid::points`] order.
pub fn coefficient_sweep(
    g: &Graph,
    grid: &CoefficientGrid,
    start: VertexId,
    end: VertexId,
) -> Result<Vec<(CoefficientSet, ValidityReport)>> {
    let points = grid.points();
    if points.is_empty() {
        return Err(Error::Empty("coefficient grid"));
    }
    points
        .into_par_iter()
        .map(|c| analyze_formulation(g, &c, start, end).map(|r| (c, r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete_graph, graph_one, graph_two, path_graph};

    #[test]
    fn fixtures_are_valid() {
        let c = CoefficientSet::default();
        for g in [graph_one(), graph_two()] {
            let r = analyze_formulation(&g, &c, 0, 7).unwrap();
            assert!(r.decodes_to_shortest_path);
            assert_eq!(r.decoded_weight, Some(2));
            assert_eq!(r.true_shortest_weight, Some(2));
        }
    }

    #[test]
    fn long_path_fails_with_defaults() {
        let r = analyze_formulation(&path_graph(5), &CoefficientSet::default(), 0, 4).unwrap();
        assert!(!r.decodes_to_shortest_path);
        assert_eq!(r.min_energy, -5.0);
        assert_eq!(
            r.argmin_states,
            vec![BitState::from_selected(5, &[0, 4]).unwrap()]
        );
        assert_eq!(r.true_shortest_weight, Some(4));
        assert_eq!(r.decoded_weight, None);
    }

    #[test]
    fn triangle_fails_with_defaults() {
        let r = analyze_formulation(&complete_graph(3), &CoefficientSet::default(), 0, 2).unwrap();
        assert!(!r.decodes_to_shortest_path);
        assert_eq!(r.min_energy, -9.0);
        assert_eq!(
            r.argmin_states,
            vec![BitState::from_selected(3, &[0, 1, 2]).unwrap()]
        );
    }

    #[test]
    fn disconnected_terminals_are_reported() {
        let g = Graph::from_edges(4, [(0, 1, 1), (2, 3, 1)]).unwrap();
        let r = analyze_formulation(&g, &CoefficientSet::default(), 0, 3).unwrap();
        assert_eq!(r.true_shortest_weight, None);
        assert!(!r.decodes_to_shortest_path);
    }

    #[test]
    fn singleton_grid_matches_direct_call() {
        let g = graph_one();
        let c = CoefficientSet::default();
        let sweep = coefficient_sweep(&g, &CoefficientGrid::single(c), 0, 7).unwrap();
        assert_eq!(sweep.len(), 1);
        assert_eq!(sweep[0].1, analyze_formulation(&g, &c, 0, 7).unwrap());
    }

    #[test]
    fn empty_grid_is_an_error() {
        let grid = CoefficientGrid {
            alpha: vec![],
            ..CoefficientGrid::single(CoefficientSet::default())
        };
        assert!(matches!(
            coefficient_sweep(&graph_one(), &grid, 0, 7),
            Err(Error::Empty(_))
        ));
    }

    #[test]
    fn report_json_has_bitstrings() {
        let r = analyze_formulation(&graph_one(), &CoefficientSet::default(), 0, 7).unwrap();
        let js = r.to_json();
        assert!(js.contains("\"10000011\""), "{js}");
        assert!(js.contains("\"decodes_to_shortest_path\": true"));
    }
}
