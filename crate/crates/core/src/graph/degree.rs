//! Degree distributions and inverse-power curve fits `p(k) ≈ (a·k + b)^(-m)`.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeHistogram {
    counts: BTreeMap<usize, usize>,
    sample_count: usize,
}

impl DegreeHistogram {
    /// Histogram of one graph; probabilities are counts over vertex count.
    pub fn of_graph(g: &Graph) -> Self {
        Self::from_degrees(g.degrees())
    }

    /// Histogram over an arbitrary degree sample, e.g. several graphs pooled.
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut counts = BTreeMap::new();
        let mut sample_count = 0;
        for k in degrees {
            *counts.entry(k).or_insert(0) += 1;
            sample_count += 1;
        }
        DegreeHistogram {
            counts,
            sample_count,
        }
    }

    pub fn sample_count(&self) -> usize {
        self.sample_count
    }

    pub fn count(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// `(k, p(k))` in ascending `k`, only for observed degrees.
    pub fn probabilities(&self) -> Vec<(usize, f64)> {
        let n = self.sample_count as f64;
        self.counts
            .iter()
            .map(|(&k, &c)| (k, c as f64 / n))
            .collect()
    }

    /// `Σ k·count(k)`, twice the edge count for a single graph.
    pub fn degree_sum(&self) -> usize {
        self.counts.iter().map(|(k, c)| k * c).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,p\n");
        for (k, p) in self.probabilities() {
            out.push_str(&format!("{k},{p}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerLawFit {
    pub a: f64,
    pub b: f64,
    pub exponent: f64,
    /// Sum of squared errors over the fitted points.
    pub residual: f64,
}

impl PowerLawFit {
    pub fn eval(&self, k: f64) -> f64 {
        (self.a * k + self.b).powf(-self.exponent)
    }

    pub fn to_csv(&self) -> String {
        format!(
            "param,value\na,{}\nb,{}\nexponent,{}\nresidual,{}\n",
            self.a, self.b, self.exponent, self.residual
        )
    }
}

fn nonzero_points(hist: &DegreeHistogram) -> Result<Vec<(f64, f64)>> {
    let pts: Vec<(f64, f64)> = hist
        .probabilities()
        .into_iter()
        .filter(|&(_, p)| p > 0.0)
        .map(|(k, p)| (k as f64, p))
        .collect();
    if pts.len() < 3 {
        return Err(Error::TooFewDegrees {
            needed: 3,
            found: pts.len(),
        });
    }
    Ok(pts)
}

/// Cubic form `p(k) ≈ 1/(a·k + b)³`, unweighted least squares in linear space.
pub fn fit_power_law(hist: &DegreeHistogram) -> Result<PowerLawFit> {
    fit_inverse_power(&nonzero_points(hist)?, 3.0)
}

/// Three-parameter fit with the exponent free, seeded from fixed-exponent fits.
pub fn fit_power_law_free(hist: &DegreeHistogram) -> Result<PowerLawFit> {
    let pts = nonzero_points(hist)?;
    let mut best: Option<PowerLawFit> = None;
    for m0 in [1.0, 2.0, 3.0, 4.0, 5.0] {
        let seed = fit_inverse_power(&pts, m0)?;
        let fit = levenberg_marquardt(&pts, [seed.a, seed.b, m0], true);
        if best.is_none_or(|b| fit.residual < b.residual) {
            best = Some(fit);
        }
    }
    Ok(best.expect("at least one starting exponent"))
}

/// Fixed-exponent fit `y ≈ (a·x + b)^(-exponent)` over raw `(x, y)` points
/// with `y > 0`.
pub fn fit_inverse_power(points: &[(f64, f64)], exponent: f64) -> Result<PowerLawFit> {
    if points.len() < 3 {
        return Err(Error::TooFewDegrees {
            needed: 3,
            found: points.len(),
        });
    }
    if exponent <= 0.0 || points.iter().any(|&(_, y)| y <= 0.0) {
        return Err(Error::InvalidParameter(
            "inverse-power fit needs positive exponent and positive y".into(),
        ));
    }
    // y^(-1/m) = a·x + b is linear; its solution seeds the nonlinear refinement.
    let lin: Vec<(f64, f64)> = points
        .iter()
        .map(|&(x, y)| (x, y.powf(-1.0 / exponent)))
        .collect();
    let (b0, a0) = linear_regression(&lin)
        .ok_or_else(|| Error::DegenerateFit("all degrees identical".into()))?;
    Ok(levenberg_marquardt(points, [a0, b0, exponent], false))
}

/// Ordinary least squares `y = c0 + c1·x`; `None` when x has zero spread.
fn linear_regression(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    let c1 = sxy / sxx;
    Some((my - c1 * mx, c1))
}

fn sse(points: &[(f64, f64)], params: &[f64; 3]) -> f64 {
    let mut total = 0.0;
    for &(x, y) in points {
        let base = params[0] * x + params[1];
        if base <= 0.0 {
            return f64::INFINITY;
        }
        total += (base.powf(-params[2]) - y).powi(2);
    }
    total
}

fn levenberg_marquardt(points: &[(f64, f64)], init: [f64; 3], free_exponent: bool) -> PowerLawFit {
    let dim = if free_exponent { 3 } else { 2 };
    let mut params = init;
    let mut cost = sse(points, &params);
    if !cost.is_finite() {
        // Linearised seed can leave a·x + b ≤ 0 at some point; move b up.
        let min_ax = points
            .iter()
            .map(|&(x, _)| params[0] * x)
            .fold(f64::INFINITY, f64::min);
        params[1] = 1e-3 - min_ax;
        cost = sse(points, &params);
    }
    let mut lambda = 1e-3;

    for _ in 0..1000 {
        let mut jac = DMatrix::<f64>::zeros(points.len(), dim);
        let mut res = DVector::<f64>::zeros(points.len());
        for (row, &(x, y)) in points.iter().enumerate() {
            let base = params[0] * x + params[1];
            let val = base.powf(-params[2]);
            res[row] = val - y;
            let d_base = -params[2] * val / base;
            jac[(row, 0)] = d_base * x;
            jac[(row, 1)] = d_base;
            if free_exponent {
                jac[(row, 2)] = -base.ln() * val;
            }
        }
        let jtj = jac.transpose() * &jac;
        let grad = jac.transpose() * &res;

        let mut improved = false;
        while lambda < 1e12 {
            let mut damped = jtj.clone();
            for i in 0..dim {
                damped[(i, i)] += lambda * jtj[(i, i)].max(1e-300);
            }
            let Some(step) = damped.lu().solve(&(-&grad)) else {
                lambda *= 10.0;
                continue;
            };
            let mut trial = params;
            for i in 0..dim {
                trial[i] += step[i];
            }
            let trial_cost = sse(points, &trial);
            if trial_cost < cost {
                let rel = (cost - trial_cost) / cost.max(f64::MIN_POSITIVE);
                params = trial;
                cost = trial_cost;
                lambda = (lambda / 10.0).max(1e-15);
                improved = rel > 1e-15;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    PowerLawFit {
        a: params[0],
        b: params[1],
        exponent: params[2],
        residual: cost,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_complete_histograms() {
        let p3 = Graph::from_edges(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let h = DegreeHistogram::of_graph(&p3);
        assert_eq!(h.probabilities(), vec![(1, 2.0 / 3.0), (2, 1.0 / 3.0)]);

        let mut k4 = Graph::new(4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                k4.add_edge(u, v, 1).unwrap();
            }
        }
        let h = DegreeHistogram::of_graph(&k4);
        assert_eq!(h.probabilities(), vec![(3, 1.0)]);
        assert_eq!(h.degree_sum(), 12);
    }

    #[test]
    fn synthetic_cubic_roundtrip() {
        let pts: Vec<(f64, f64)> = (1..=20)
            .map(|k| (k as f64, (0.5 * k as f64 + 1.0).powi(-3)))
            .collect();
        let fit = fit_inverse_power(&pts, 3.0).unwrap();
        assert!((fit.a - 0.5).abs() / 0.5 < 1e-6, "{fit:?}");
        assert!((fit.b - 1.0).abs() < 1e-6, "{fit:?}");
        assert!(fit.residual < 1e-20);
    }

    #[test]
    fn synthetic_free_exponent_recovers_generator() {
        let pts: Vec<(f64, f64)> = (1..=30)
            .map(|k| (k as f64, (0.3 * k as f64 + 0.7).powf(-2.5)))
            .collect();
        let counts_free = {
            let seed = fit_inverse_power(&pts, 2.0).unwrap();
            levenberg_marquardt(&pts, [seed.a, seed.b, 2.0], true)
        };
        assert!((counts_free.exponent - 2.5).abs() < 1e-5, "{counts_free:?}");
    }

    #[test]
    fn two_degrees_is_an_error() {
        let h = DegreeHistogram::from_degrees([1, 2]);
        assert_eq!(
            fit_power_law(&h),
            Err(Error::TooFewDegrees {
                needed: 3,
                found: 2
            })
        );
    }

    #[test]
    fn csv_layout() {
        let h = DegreeHistogram::from_degrees([1, 1, 2, 2]);
        assert_eq!(h.to_csv(), "k,p\n1,0.5\n2,0.5\n");
    }
}
