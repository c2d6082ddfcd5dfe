//! Dense spectra of the interpolated anneal Hamiltonian
//! `H(s) = (1 − s)·H_S + s·H_P` for small problems.
//!
//! `H_P` is diagonal with the QUBO energy of each basis state; bit `i` of
//! the basis index is variable `i`. `H_S = −Σ_i X_i` is the transverse-field
//! mixer. The anneal-time estimate is
//! `τ = ‖H_P − H_S‖₂ · ∫₀¹ ds / gap(s)²` with trapezoidal quadrature.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qubo::QuboProblem;

/// Largest variable count for dense spectra (4096 × 4096 matrices).
pub const SPECTRUM_CAP: usize = 12;

/// Gaps at or below this are treated as a degenerate ground state.
pub const DEGENERATE_GAP: f64 = 1e-10;

fn check_cap(p: &QuboProblem) -> Result<()> {
    if p.n() > SPECTRUM_CAP {
        Err(Error::CapExceeded {
            n: p.n(),
            cap: SPECTRUM_CAP,
        })
    } else {
        Ok(())
    }
}

/// Diagonal of `H_P`: entry `b` is the energy of the state whose bit `i` is
/// bit `i` of `b`.
pub fn build_problem_hamiltonian(p: &QuboProblem) -> Result<Vec<f64>> {
    check_cap(p)?;
    let n = p.n();
    let mut bits = vec![0u8; n];
    Ok((0..1usize << n)
        .map(|b| {
            for (i, bit) in bits.iter_mut().enumerate() {
                *bit = (b >> i & 1) as u8;
            }
            p.energy_unchecked(&bits)
        })
        .collect())
}

fn mixer(n: usize) -> DMatrix<f64> {
    let dim = 1usize << n;
    let mut m = DMatrix::zeros(dim, dim);
    for b in 0..dim {
        for i in 0..n {
            m[(b, b ^ (1 << i))] = -1.0;
        }
    }
    m
}

fn interpolate(mixer: &DMatrix<f64>, diagonal: &[f64], s: f64) -> DMatrix<f64> {
    let mut h = mixer * (1.0 - s);
    for (b, &e) in diagonal.iter().enumerate() {
        h[(b, b)] += s * e;
    }
    h
}

/// Dense `H(s)`.
pub fn hamiltonian_at(p: &QuboProblem, s: f64) -> Result<DMatrix<f64>> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::InvalidParameter(format!("s = {s} outside [0, 1]")));
    }
    let diagonal = build_problem_hamiltonian(p)?;
    Ok(interpolate(&mixer(p.n()), &diagonal, s))
}

/// Eigenvalues of a symmetric matrix in ascending order.
pub fn sorted_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapProfile {
    pub s_grid: Vec<f64>,
    /// First excited minus ground energy at each grid point.
    pub gaps: Vec<f64>,
    pub min_gap: f64,
    pub min_gap_s: f64,
    /// `None` when the gap closes somewhere on the grid.
    pub tau_estimate: Option<f64>,
    /// First grid point where the gap is at most [`DEGENERATE_GAP`].
    pub degenerate_at: Option<f64>,
}

impl GapProfile {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,gap\n");
        for (s, g) in self.s_grid.iter().zip(&self.gaps) {
            out.push_str(&format!("{s},{g}\n"));
        }
        out.push_str(&format!("min_gap,{}\n", self.min_gap));
        match self.tau_estimate {
            Some(t) => out.push_str(&format!("tau,{t}\n")),
            None => out.push_str("tau,degenerate\n"),
        }
        out
    }
}

/// Gap on a uniform grid of `grid_points` values of `s` including 0 and 1.
pub fn gap_profile(p: &QuboProblem, grid_points: usize) -> Result<GapProfile> {
    if grid_points < 2 {
        return Err(Error::InvalidParameter(
            "gap profile needs at least 2 grid points".into(),
        ));
    }
    let diagonal = build_problem_hamiltonian(p)?;
    let mix = mixer(p.n());
    let last = (grid_points - 1) as f64;
    let s_grid: Vec<f64> = (0..grid_points).map(|k| k as f64 / last).collect();

    let gaps: Vec<f64> = s_grid
        .par_iter()
        .map(|&s| {
            let ev = sorted_eigenvalues(interpolate(&mix, &diagonal, s));
            if ev.len() < 2 {
                0.0
            } else {
                ev[1] - ev[0]
            }
        })
        .collect();

    let (min_idx, &min_gap) = gaps
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("at least two grid points");
    let degenerate_at = gaps
        .iter()
        .position(|&g| g <= DEGENERATE_GAP)
        .map(|k| s_grid[k]);

    let tau_estimate = if degenerate_at.is_some() {
        None
    } else {
        // dH/ds = H_P − H_S is constant along the path.
        let slope = interpolate(&(-&mix), &diagonal, 1.0);
        let norm = sorted_eigenvalues(slope)
            .into_iter()
            .map(f64::abs)
            .fold(0.0, f64::max);
        let h = 1.0 / last;
        let integral: f64 = gaps
            .windows(2)
            .map(|w| 0.5 * h * (w[0].powi(-2) + w[1].powi(-2)))
            .sum();
        Some(norm * integral)
    };

    Ok(GapProfile {
        min_gap_s: s_grid[min_idx],
        s_grid,
        gaps,
        min_gap,
        tau_estimate,
        degenerate_at,
    })
}
