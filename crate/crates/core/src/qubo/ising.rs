//! Spin form of a QUBO under `s_i = (1 + σ_i)/2`.
//!
//! Energies use `E(σ) = offset + Σ_i h_i·σ_i + Σ_{i<j} J_ij·σ_i·σ_j`; flip the
//! signs of `h` and `J` for the `−Σ J σσ − Σ h σ` convention.

use std::collections::BTreeMap;

use serde::Serialize;

use super::QuboProblem;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsingProblem {
    pub h: Vec<f64>,
    pub j: BTreeMap<(usize, usize), f64>,
    pub offset: f64,
}

impl IsingProblem {
    /// Energy for spins in `{−1, +1}`.
    pub fn energy(&self, spins: &[i8]) -> Result<f64> {
        if spins.len() != self.h.len() {
            return Err(Error::LengthMismatch {
                expected: self.h.len(),
                found: spins.len(),
            });
        }
        let field: f64 = self.h.iter().zip(spins).map(|(h, &s)| h * s as f64).sum();
        let coupling: f64 = self
            .j
            .iter()
            .map(|(&(a, b), &jab)| jab * (spins[a] * spins[b]) as f64)
            .sum();
        Ok(self.offset + field + coupling)
    }

    /// Back-substitution `σ = 2s − 1`: upper-triangular QUBO coefficients and
    /// the constant term left over.
    pub fn to_qubo_coeffs(&self) -> (BTreeMap<(usize, usize), f64>, f64) {
        let mut coeffs = BTreeMap::new();
        let mut constant = self.offset - self.h.iter().sum::<f64>();
        for (i, &hi) in self.h.iter().enumerate() {
            coeffs.insert((i, i), 2.0 * hi);
        }
        for (&(a, b), &jab) in &self.j {
            *coeffs.entry((a, a)).or_insert(0.0) -= 2.0 * jab;
            *coeffs.entry((b, b)).or_insert(0.0) -= 2.0 * jab;
            coeffs.insert((a, b), 4.0 * jab);
            constant += jab;
        }
        (coeffs, constant)
    }
}

pub fn to_ising(p: &QuboProblem) -> IsingProblem {
    let mut h = vec![0.0; p.n()];
    let mut j = BTreeMap::new();
    let mut offset = 0.0;
    for (&(a, b), &q) in p.coeffs() {
        if a == b {
            h[a] += q / 2.0;
            offset += q / 2.0;
        } else {
            let quarter = q / 4.0;
            h[a] += quarter;
            h[b] += quarter;
            offset += quarter;
            *j.entry((a, b)).or_insert(0.0) += quarter;
        }
    }
    IsingProblem { h, j, offset }
}
