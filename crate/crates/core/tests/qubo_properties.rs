mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use common::{coefficients, graph_with_terminals, oracle_energy};
use pathqubo::fixtures::{graph_one, graph_two, FIXTURE_END, FIXTURE_START};
use pathqubo::graph::Graph;
use pathqubo::qubo::{
    build_qubo, energy_closed_form, load_qubo, store_qubo, to_ising, BitState, CoefficientSet,
    QuboProblem,
};
use pathqubo::Error;

fn spins(s: &BitState) -> Vec<i8> {
    s.bits().iter().map(|&b| 2 * b as i8 - 1).collect()
}

fn random_problem() -> impl Strategy<Value = QuboProblem> {
    (1usize..7).prop_flat_map(|n| {
        proptest::collection::btree_map((0..n, 0..n), -4.0f64..4.0, 0..2 * n * n).prop_map(
            move |m| {
                let coeffs: BTreeMap<_, _> = m
                    .into_iter()
                    .map(|((a, b), q)| ((a.min(b), a.max(b)), q))
                    .collect();
                QuboProblem::new(n, coeffs).unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn matrix_energy_matches_definition((g, s, t) in graph_with_terminals(9), c in coefficients()) {
        let p = build_qubo(&g, &c, s, t).unwrap();
        let n = g.vertex_count();
        for mask in 0..1u64 << n {
            let state = BitState::from_index(n, mask);
            let matrix = p.energy(&state).unwrap();
            let oracle = oracle_energy(&g, &c, mask, s, t);
            let closed = energy_closed_form(&g, &c, &state.selected(), s, t);
            prop_assert!((matrix - oracle).abs() < 1e-9, "mask {mask}: {matrix} vs {oracle}");
            prop_assert!((closed - oracle).abs() < 1e-9);
        }
    }

    /// Off-diagonal entries are the bilinear coefficients themselves:
    /// the energy equals `(sᵀ M s + Σ M_ii s_i) / 2` with `M` the symmetric
    /// matrix holding each upper entry on both sides.
    #[test]
    fn non_doubled_bilinear_identity((g, s, t) in graph_with_terminals(8), c in coefficients(), mask in any::<u64>()) {
        let p = build_qubo(&g, &c, s, t).unwrap();
        let n = g.vertex_count();
        let bits: Vec<f64> = (0..n).map(|i| (mask >> i & 1) as f64).collect();
        let mut quad = 0.0;
        for i in 0..n {
            for j in 0..n {
                quad += p.coeff(i.min(j), i.max(j)) * bits[i] * bits[j];
            }
        }
        let diag: f64 = (0..n).map(|i| p.coeff(i, i) * bits[i]).sum();
        let e = p.energy(&BitState::from_index(n, mask & ((1u64 << n) - 1))).unwrap();
        prop_assert!(((quad + diag) / 2.0 - e).abs() < 1e-9);
    }

    #[test]
    fn ising_agrees_on_every_state(p in random_problem()) {
        let ising = to_ising(&p);
        for mask in 0..1u64 << p.n() {
            let s = BitState::from_index(p.n(), mask);
            let q = p.energy(&s).unwrap();
            let e = ising.energy(&spins(&s)).unwrap();
            prop_assert!((q - e).abs() < 1e-9);
        }
    }

    #[test]
    fn ising_roundtrip_returns_coefficients(p in random_problem()) {
        let (back, constant) = to_ising(&p).to_qubo_coeffs();
        prop_assert!(constant.abs() < 1e-12);
        for i in 0..p.n() {
            for j in i..p.n() {
                let b = back.get(&(i, j)).copied().unwrap_or(0.0);
                prop_assert!((b - p.coeff(i, j)).abs() < 1e-12, "({i},{j}) {b} vs {}", p.coeff(i, j));
            }
        }
    }

    #[test]
    fn store_load_roundtrip(p in random_problem()) {
        let back = load_qubo(&store_qubo(&p)).unwrap();
        prop_assert_eq!(back.n(), p.n());
        prop_assert_eq!(back.coeffs(), p.coeffs());
        prop_assert_eq!(back.endpoints(), None);
    }

    #[test]
    fn bitstate_text_roundtrip(bits in proptest::collection::vec(0u8..2, 1..40)) {
        let s = BitState::from_bits(bits.clone()).unwrap();
        prop_assert_eq!(BitState::parse(&s.to_string()).unwrap(), s.clone());
        let selected: Vec<usize> = bits.iter().enumerate().filter(|(_, &b)| b == 1).map(|(i, _)| i).collect();
        prop_assert_eq!(s.selected(), selected);
    }
}

#[test]
fn twelve_vertex_exhaustive_agreement() {
    let g = pathqubo::graph::reweight(&pathqubo::graph::generate_er(12, 0.35, 9).unwrap(), 10);
    let c = CoefficientSet::new(1.5, 0.5, 2.5, 4.0).unwrap();
    let p = build_qubo(&g, &c, 0, 11).unwrap();
    for mask in 0..1u64 << 12 {
        let e = p.energy(&BitState::from_index(12, mask)).unwrap();
        assert!((e - oracle_energy(&g, &c, mask, 0, 11)).abs() < 1e-9);
    }
}

#[test]
fn full_selection_is_the_maximum_on_fixtures() {
    let c = CoefficientSet::default();
    for g in [graph_one(), graph_two()] {
        let p = build_qubo(&g, &c, FIXTURE_START, FIXTURE_END).unwrap();
        let all = p.energy(&BitState::from_index(8, 0xff)).unwrap();
        let max = (0..256u64)
            .map(|m| oracle_energy(&g, &c, m, FIXTURE_START, FIXTURE_END))
            .fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(all, max);
    }
}

#[test]
fn small_instances_by_hand() {
    let c = CoefficientSet::default();
    // single edge, both terminals: -1 + 2 - 3*3
    let edge = Graph::from_edges(2, [(0, 1, 1)]).unwrap();
    let p = build_qubo(&edge, &c, 0, 1).unwrap();
    assert_eq!(p.energy(&BitState::from_index(2, 0b11)).unwrap(), -8.0);
    // non-adjacent terminals pay gamma once
    let pair = Graph::new(2);
    let p = build_qubo(&pair, &c, 0, 1).unwrap();
    assert_eq!(p.coeff(0, 1), -1.0);
    assert_eq!(p.energy(&BitState::from_index(2, 0b11)).unwrap(), -5.0);
}

#[test]
fn build_rejects_bad_input() {
    let g = graph_one();
    let c = CoefficientSet::default();
    assert!(matches!(
        build_qubo(&g, &c, 3, 3),
        Err(Error::SameEndpoints(3))
    ));
    assert!(matches!(
        build_qubo(&g, &c, 0, 8),
        Err(Error::VertexOutOfRange { .. })
    ));
    assert!(CoefficientSet::new(1.0, -1.0, 2.0, 3.0).is_err());
    let energy = build_qubo(&g, &c, 0, 7)
        .unwrap()
        .energy(&BitState::zeros(3));
    assert!(matches!(
        energy,
        Err(Error::LengthMismatch {
            expected: 8,
            found: 3
        })
    ));
}
