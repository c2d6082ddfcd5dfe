//! QUBO solvers, path decoding and the formulation analyzer.

mod analyze;
mod anneal;
mod decode;
mod exact;

pub use analyze::{analyze_formulation, coefficient_sweep, CoefficientGrid, ValidityReport};
pub use anneal::{sample_sa, sample_sa_serial, SaParams};
pub use decode::{decode_path, PathFailure, PathResult};
pub use exact::{ground_states, solve_exact, solve_exact_lowest, EXACT_CAP};

use std::collections::HashMap;

use serde::Serialize;

use crate::qubo::{BitState, QuboProblem};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleRow {
    pub energy: f64,
    pub state: BitState,
    pub occurrences: usize,
}

/// Distinct states with their energy and how often they were returned,
/// sorted by ascending energy, then state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleTable {
    rows: Vec<SampleRow>,
    total_reads: usize,
}

impl SampleTable {
    /// Aggregates raw samples. Energies are recomputed from `p`.
    pub fn from_samples<I: IntoIterator<Item = BitState>>(p: &QuboProblem, samples: I) -> Self {
        let mut counts: HashMap<BitState, usize> = HashMap::new();
        for s in samples {
            *counts.entry(s).or_insert(0) += 1;
        }
        let rows = counts
            .into_iter()
            .map(|(state, occurrences)| SampleRow {
                energy: p.energy_unchecked(state.bits()),
                state,
                occurrences,
            })
            .collect();
        Self::from_rows(rows)
    }

    pub(crate) fn from_rows(mut rows: Vec<SampleRow>) -> Self {
        rows.sort_by(|a, b| {
            a.energy
                .total_cmp(&b.energy)
                .then_with(|| a.state.cmp(&b.state))
        });
        let total_reads = rows.iter().map(|r| r.occurrences).sum();
        SampleTable { rows, total_reads }
    }

    pub fn rows(&self) -> &[SampleRow] {
        &self.rows
    }

    pub fn total_reads(&self) -> usize {
        self.total_reads
    }

    pub fn lowest(&self) -> Option<&SampleRow> {
        self.rows.first()
    }

    pub fn occurrences(&self, state: &BitState) -> usize {
        self.rows
            .iter()
            .find(|r| &r.state == state)
            .map_or(0, |r| r.occurrences)
    }

    pub fn frequency(&self, state: &BitState) -> f64 {
        self.occurrences(state) as f64 / self.total_reads.max(1) as f64
    }

    /// `energy,bitstring,occurrences`, bitstring written with vertex 0 first.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("energy,bitstring,occurrences\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.energy, r.state, r.occurrences));
        }
        out
    }
}
