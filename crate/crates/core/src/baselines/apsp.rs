use super::{Distance, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn floyd_warshall(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut m = DistanceMatrix::weights(g);
    for k in 0..n {
        for i in 0..n {
            let dik = m.get(i, k);
            if !dik.is_finite() {
                continue;
            }
            for j in 0..n {
                let cand = dik + m.get(k, j);
                if cand < m.get(i, j) {
                    m.set(i, j, cand);
                }
            }
        }
    }
    m
}

/// `(X ⊗ Y)[i][j] = min_k X[i][k] + Y[k][j]`.
pub fn minplus_product(x: &DistanceMatrix, y: &DistanceMatrix) -> Result<DistanceMatrix> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch(x.n(), y.n()));
    }
    let n = x.n();
    let mut out = DistanceMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, Distance::Infinite);
        }
        for k in 0..n {
            let xik = x.get(i, k);
            if !xik.is_finite() {
                continue;
            }
            for j in 0..n {
                let cand = xik + y.get(k, j);
                if cand < out.get(i, j) {
                    out.set(i, j, cand);
                }
            }
        }
    }
    Ok(out)
}

/// All-pairs distances by squaring the one-hop matrix ⌈log2(V − 1)⌉ times.
pub fn apsp_minplus(g: &Graph) -> DistanceMatrix {
    let mut m = DistanceMatrix::weights(g);
    let mut hops = 1;
    while hops + 1 < g.vertex_count() {
        m = minplus_product(&m, &m).expect("square matrix");
        hops *= 2;
    }
    m
}
