//! Simulated annealing with single-bit Metropolis updates.
//!
//! Each read is an independent chain started from a uniformly random state
//! and cooled along a geometric inverse-temperature schedule. One sweep
//! proposes a flip of every variable in index order. Read `r` draws from
//! ChaCha stream `r` of the seed, so results do not depend on how reads are
//! scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::SampleTable;
use crate::error::{Error, Result};
use crate::qubo::{BitState, QuboProblem};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SaParams {
    pub reads: usize,
    pub sweeps: usize,
    pub beta_start: f64,
    pub beta_end: f64,
    pub seed: u64,
}

impl SaParams {
    /// 1000 reads of 1000 sweeps from β = 0.1 to β = 10.
    pub fn with_seed(seed: u64) -> Self {
        SaParams {
            reads: 1000,
            sweeps: 1000,
            beta_start: 0.1,
            beta_end: 10.0,
            seed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.reads == 0 || self.sweeps == 0 {
            return Err(Error::InvalidParameter(
                "reads and sweeps must be at least 1".into(),
            ));
        }
        if !(self.beta_start > 0.0 && self.beta_start < self.beta_end && self.beta_end.is_finite())
        {
            return Err(Error::InvalidParameter(format!(
                "schedule needs 0 < beta_start < beta_end, got {} and {}",
                self.beta_start, self.beta_end
            )));
        }
        Ok(())
    }

    fn beta(&self, sweep: usize) -> f64 {
        if self.sweeps == 1 {
            return self.beta_end;
        }
        let t = sweep as f64 / (self.sweeps - 1) as f64;
        self.beta_start * (self.beta_end / self.beta_start).powf(t)
    }
}

struct Compiled {
    n: usize,
    linear: Vec<f64>,
    couplings: Vec<f64>,
}

impl Compiled {
    fn anneal(&self, params: &SaParams, read: usize) -> BitState {
        let n = self.n;
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(read as u64);

        let mut bits: Vec<u8> = (0..n).map(|_| rng.random_range(0..=1u8)).collect();
        // field[i] = energy change for turning bit i on, given the others.
        let mut field = self.linear.clone();
        for (i, f) in field.iter_mut().enumerate() {
            let row = &self.couplings[i * n..(i + 1) * n];
            *f += row
                .iter()
                .zip(&bits)
                .filter(|(_, &b)| b == 1)
                .map(|(c, _)| c)
                .sum::<f64>();
        }

        for sweep in 0..params.sweeps {
            let beta = params.beta(sweep);
            for i in 0..n {
                let delta = if bits[i] == 0 { field[i] } else { -field[i] };
                if delta <= 0.0 || rng.random::<f64>() < (-beta * delta).exp() {
                    let sign = if bits[i] == 0 { 1.0 } else { -1.0 };
                    bits[i] ^= 1;
                    let row = &self.couplings[i * n..(i + 1) * n];
                    for (f, &c) in field.iter_mut().zip(row) {
                        *f += sign * c;
                    }
                }
            }
        }
        BitState::from_bits(bits).expect("bits are 0/1")
    }
}

fn compile(p: &QuboProblem) -> Compiled {
    let (linear, couplings) = p.dense();
    Compiled {
        n: p.n(),
        linear,
        couplings,
    }
}

/// Runs `params.reads` chains on the rayon pool and aggregates them.
pub fn sample_sa(p: &QuboProblem, params: &SaParams) -> Result<SampleTable> {
    params.validate()?;
    let compiled = compile(p);
    let states: Vec<BitState> = (0..params.reads)
        .into_par_iter()
        .map(|r| compiled.anneal(params, r))
        .collect();
    Ok(SampleTable::from_samples(p, states))
}

/// Same output as [`sample_sa`], computed on the calling thread only.
pub fn sample_sa_serial(p: &QuboProblem, params: &SaParams) -> Result<SampleTable> {
    params.validate()?;
    let compiled = compile(p);
    let states = (0..params.reads).map(|r| compiled.anneal(params, r));
    Ok(SampleTable::from_samples(p, states))
}
