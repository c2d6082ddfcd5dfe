//! Strategies and brute-force oracles shared by the property tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use proptest::prelude::*;

use pathqubo::graph::Graph;
use pathqubo::qubo::CoefficientSet;

/// Random simple graph on `1..max_v` vertices with weights in 1..=3.
pub fn weighted_graph(max_v: usize) -> impl Strategy<Value = Graph> {
    (1..max_v).prop_flat_map(|v| {
        proptest::collection::vec((0..v, 0..v, 1i64..=3), 0..3 * v).prop_map(move |edges| {
            let mut g = Graph::new(v);
            for (a, b, w) in edges {
                if a != b && !g.has_edge(a, b) {
                    g.add_edge(a, b, w).unwrap();
                }
            }
            g
        })
    })
}

/// Graph with at least two vertices plus a distinct terminal pair.
pub fn graph_with_terminals(max_v: usize) -> impl Strategy<Value = (Graph, usize, usize)> {
    weighted_graph(max_v)
        .prop_filter("needs two vertices", |g| g.vertex_count() >= 2)
        .prop_flat_map(|g| {
            let v = g.vertex_count();
            (Just(g), 0..v, 0..v).prop_filter("distinct terminals", |(_, s, t)| s != t)
        })
}

pub fn coefficients() -> impl Strategy<Value = CoefficientSet> {
    (0.1f64..5.0, 0.1f64..5.0, 0.1f64..5.0, 0.1f64..8.0).prop_map(
        |(alpha, beta, gamma_q, delta)| CoefficientSet {
            alpha,
            beta,
            gamma_q,
            delta,
        },
    )
}

/// Energy from the objective's definition, with no matrix involved.
pub fn oracle_energy(g: &Graph, c: &CoefficientSet, mask: u64, start: usize, end: usize) -> f64 {
    let inside = |v: usize| mask >> v & 1 == 1;
    let members: Vec<usize> = (0..g.vertex_count()).filter(|&v| inside(v)).collect();
    let mut edge_weight = 0.0;
    let mut non_adjacent = 0.0;
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            match g.weight(u, v) {
                Some(w) => edge_weight += w.get() as f64,
                None => non_adjacent += 1.0,
            }
        }
    }
    let (xs, xt) = (inside(start) as u8 as f64, inside(end) as u8 as f64);
    -c.alpha * edge_weight + c.beta * members.len() as f64 + c.gamma_q * non_adjacent
        - c.delta * (xs + xt + xs * xt)
}

pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

/// Every simple `start → end` path, by depth-first search.
pub fn simple_paths(g: &Graph, start: usize, end: usize) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, at: usize, end: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == end {
            out.push(path.clone());
            return;
        }
        for &(next, _) in g.neighbors(at) {
            if !path.contains(&next) {
                path.push(next);
                walk(g, next, end, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, start, end, &mut vec![start], &mut out);
    out
}

pub fn path_weight(g: &Graph, path: &[usize]) -> u64 {
    path.windows(2)
        .map(|w| g.weight(w[0], w[1]).unwrap().get())
        .sum()
}

/// Hop counts by breadth-first search.
pub fn bfs_hops(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut hops = vec![None; g.vertex_count()];
    hops[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &(v, _) in g.neighbors(u) {
            if hops[v].is_none() {
                hops[v] = Some(hops[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    hops
}

/// Smallest path weight between the terminals over all simple paths.
pub fn brute_shortest(g: &Graph, start: usize, end: usize) -> Option<u64> {
    simple_paths(g, start, end)
        .iter()
        .map(|p| path_weight(g, p))
        .min()
}
