//! Exhaustive enumeration in Gray-code order, one bit flip per step.

use std::collections::BinaryHeap;

use super::{SampleRow, SampleTable};
use crate::error::{Error, Result};
use crate::qubo::{BitState, QuboProblem};

/// Largest problem the exhaustive solver accepts (2^24 states).
pub const EXACT_CAP: usize = 24;

/// Visits every state once, passing `(index, energy)` where bit `i` of
/// `index` is variable `i`. Energies are updated incrementally.
fn enumerate<F: FnMut(u64, f64)>(p: &QuboProblem, mut visit: F) -> Result<()> {
    let n = p.n();
    if n > EXACT_CAP {
        return Err(Error::CapExceeded { n, cap: EXACT_CAP });
    }
    let (linear, couplings) = p.dense();
    let mut field = linear.clone();
    let mut index = 0u64;
    let mut energy = 0.0;
    visit(0, 0.0);
    for step in 1u64..(1u64 << n) {
        let bit = step.trailing_zeros() as usize;
        let on = index >> bit & 1 == 0;
        if on {
            energy += field[bit];
        } else {
            energy -= field[bit];
        }
        index ^= 1 << bit;
        let sign = if on { 1.0 } else { -1.0 };
        let row = &couplings[bit * n..(bit + 1) * n];
        for (f, &c) in field.iter_mut().zip(row) {
            *f += sign * c;
        }
        visit(index, energy);
    }
    Ok(())
}

/// Every state exactly once.
pub fn solve_exact(p: &QuboProblem) -> Result<SampleTable> {
    let mut rows = Vec::with_capacity(1usize << p.n().min(EXACT_CAP));
    enumerate(p, |index, energy| {
        rows.push(SampleRow {
            energy,
            state: BitState::from_index(p.n(), index),
            occurrences: 1,
        })
    })?;
    Ok(SampleTable::from_rows(rows))
}

#[derive(PartialEq)]
struct Ranked(f64, BitState);

impl Eq for Ranked {}

impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .total_cmp(&other.0)
            .then_with(|| self.1.cmp(&other.1))
    }
}

/// Only the `k` lowest states under the table ordering.
pub fn solve_exact_lowest(p: &QuboProblem, k: usize) -> Result<SampleTable> {
    let mut heap: BinaryHeap<Ranked> = BinaryHeap::with_capacity(k + 1);
    enumerate(p, |index, energy| {
        if k == 0 {
            return;
        }
        if heap.len() == k && heap.peek().is_some_and(|w| energy > w.0) {
            return;
        }
        heap.push(Ranked(energy, BitState::from_index(p.n(), index)));
        if heap.len() > k {
            heap.pop();
        }
    })?;
    let rows = heap
        .into_iter()
        .map(|Ranked(_, state)| SampleRow {
            energy: p.energy_unchecked(state.bits()),
            state,
            occurrences: 1,
        })
        .collect();
    Ok(SampleTable::from_rows(rows))
}

/// Exact minimum and all states attaining it (within 1e-9), in
/// lexicographic order.
pub fn ground_states(p: &QuboProblem) -> Result<(f64, Vec<BitState>)> {
    const TIE: f64 = 1e-9;
    // Incremental energies may drift slightly, so collect with a wide margin
    // and settle ties on recomputed values.
    let mut best = f64::INFINITY;
    let mut candidates: Vec<(u64, f64)> = Vec::new();
    enumerate(p, |index, energy| {
        if energy < best - 1e-6 {
            best = energy;
            candidates.retain(|&(_, e)| e <= best + 1e-6);
        }
        if energy <= best + 1e-6 {
            candidates.push((index, energy));
        }
    })?;
    let exact: Vec<(BitState, f64)> = candidates
        .into_iter()
        .map(|(index, _)| {
            let s = BitState::from_index(p.n(), index);
            let e = p.energy_unchecked(s.bits());
            (s, e)
        })
        .collect();
    let min = exact.iter().map(|x| x.1).fold(f64::INFINITY, f64::min);
    let mut states: Vec<BitState> = exact
        .into_iter()
        .filter(|&(_, e)| e <= min + TIE)
        .map(|(s, _)| s)
        .collect();
    states.sort();
    Ok((min, states))
}
