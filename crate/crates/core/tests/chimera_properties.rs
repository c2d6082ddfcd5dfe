use std::collections::BTreeSet;

use proptest::prelude::*;

use pathqubo::chimera::{check_feasibility, chimera, DEGREE_WARNING, QUBITS_PER_VARIABLE};
use pathqubo::fixtures::{complete_graph, path_graph};

proptest! {
    #[test]
    fn counts_follow_the_lattice(rows in 1usize..7, cols in 1usize..7, shore in 1usize..6) {
        let t = chimera(rows, cols, shore).unwrap();
        prop_assert_eq!(t.qubit_count(), rows * cols * 2 * shore);
        let expected = rows * cols * shore * shore + shore * (rows * (cols - 1) + cols * (rows - 1));
        prop_assert_eq!(t.couplers().len(), expected);
        let distinct: BTreeSet<_> = t.couplers().iter().collect();
        prop_assert_eq!(distinct.len(), expected);
        prop_assert!(t.couplers().iter().all(|&(a, b)| a < b && b < t.qubit_count()));
        let g = t.to_graph();
        prop_assert_eq!(g.edge_count(), expected);
        prop_assert!(g.max_degree() <= shore + 2);
    }

    #[test]
    fn feasibility_is_monotone(v in 1usize..1500) {
        let t = chimera(16, 16, 4).unwrap();
        let here = check_feasibility(&path_graph(v), &t);
        prop_assert_eq!(here.required_qubits, QUBITS_PER_VARIABLE * v);
        prop_assert_eq!(here.fits, 3 * v <= 2048);
        if !here.fits {
            prop_assert!(!check_feasibility(&path_graph(v + 1), &t).fits);
        }
    }
}

#[test]
fn degree_warning_boundary() {
    let t = chimera(16, 16, 4).unwrap();
    assert!(!check_feasibility(&complete_graph(DEGREE_WARNING + 1), &t).degree_warning);
    assert!(check_feasibility(&complete_graph(DEGREE_WARNING + 2), &t).degree_warning);
}

#[test]
fn chip_boundary() {
    let t = chimera(16, 16, 4).unwrap();
    assert!(check_feasibility(&path_graph(682), &t).fits);
    assert!(!check_feasibility(&path_graph(683), &t).fits);
    assert!(chimera(0, 4, 4).is_err());
}
