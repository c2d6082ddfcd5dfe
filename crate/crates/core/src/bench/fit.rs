//! Two-parameter runtime models fitted by closed-form linear least squares
//! on a transformed regressor.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::BenchRecord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitModel {
    /// `t = a + b·ln x`
    AffineLog,
    /// `t = a + b/√x`
    AffineInvSqrt,
    /// `t = a + b·x`
    Affine,
}

impl FitModel {
    pub const ALL: [FitModel; 3] = [
        FitModel::AffineLog,
        FitModel::AffineInvSqrt,
        FitModel::Affine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FitModel::AffineLog => "affine_log",
            FitModel::AffineInvSqrt => "affine_invsqrt",
            FitModel::Affine => "affine",
        }
    }

    pub fn regressor(self, x: f64) -> f64 {
        match self {
            FitModel::AffineLog => x.ln(),
            FitModel::AffineInvSqrt => 1.0 / x.sqrt(),
            FitModel::Affine => x,
        }
    }
}

impl fmt::Display for FitModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FitModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FitModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown fit model `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FitResult {
    pub model: FitModel,
    pub a: f64,
    pub b: f64,
    pub sse: f64,
}

impl FitResult {
    pub fn predict(&self, x: f64) -> f64 {
        self.a + self.b * self.model.regressor(x)
    }
}

pub fn fit_xy(points: &[(f64, f64)], model: FitModel) -> Result<FitResult> {
    if points.len() < 3 {
        return Err(Error::DegenerateFit(format!(
            "need at least 3 observations, got {}",
            points.len()
        )));
    }
    if let Some(&(x, _)) = points.iter().find(|(x, _)| x.is_nan() || *x <= 0.0) {
        return Err(Error::DegenerateFit(format!(
            "regressor value {x} is not positive"
        )));
    }
    let z: Vec<f64> = points.iter().map(|&(x, _)| model.regressor(x)).collect();
    let n = points.len() as f64;
    let mz = z.iter().sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let szz: f64 = z.iter().map(|zi| (zi - mz).powi(2)).sum();
    if szz == 0.0 {
        return Err(Error::DegenerateFit(
            "all regressor values are equal".into(),
        ));
    }
    let szy: f64 = z
        .iter()
        .zip(points)
        .map(|(zi, p)| (zi - mz) * (p.1 - my))
        .sum();
    let b = szy / szz;
    let a = my - b * mz;
    let sse = z
        .iter()
        .zip(points)
        .map(|(zi, p)| (p.1 - a - b * zi).powi(2))
        .sum();
    Ok(FitResult { model, a, b, sse })
}

/// Fits wall time against the record's probability when present, otherwise
/// against its input size.
pub fn fit_runtime(records: &[BenchRecord], model: FitModel) -> Result<FitResult> {
    let points: Vec<(f64, f64)> = records
        .iter()
        .map(|r| {
            let x = r.probability.unwrap_or(r.input_size as f64);
            (x, r.wall_seconds)
        })
        .collect();
    fit_xy(&points, model)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synth(f: impl Fn(f64) -> f64) -> Vec<(f64, f64)> {
        (1..=20).map(|x| (x as f64, f(x as f64))).collect()
    }

    #[test]
    fn recovers_log_model() {
        let fit = fit_xy(&synth(|x| 2.0 + 0.5 * x.ln()), FitModel::AffineLog).unwrap();
        assert!((fit.a - 2.0).abs() < 1e-9 && (fit.b - 0.5).abs() < 1e-9);
        assert!(fit.sse < 1e-9);
    }

    #[test]
    fn selects_inverse_sqrt_generator() {
        let pts = synth(|x| 1.0 + 3.0 / x.sqrt());
        let inv = fit_xy(&pts, FitModel::AffineInvSqrt).unwrap();
        let log = fit_xy(&pts, FitModel::AffineLog).unwrap();
        assert!(inv.sse < log.sse);
        assert!(inv.sse < 1e-20);
    }

    #[test]
    fn flat_data() {
        let fit = fit_xy(&synth(|_| 0.25), FitModel::Affine).unwrap();
        assert!(fit.b.abs() < 1e-15);
        assert!((fit.a - 0.25).abs() < 1e-15);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(fit_xy(&[(1.0, 1.0), (2.0, 2.0)], FitModel::Affine).is_err());
        assert!(fit_xy(&[(2.0, 1.0), (2.0, 2.0), (2.0, 3.0)], FitModel::Affine).is_err());
        assert!(fit_xy(&[(0.0, 1.0), (2.0, 2.0), (3.0, 3.0)], FitModel::AffineLog).is_err());
    }
}
