//! Exact integer invariants: first Zagreb index, closed 2-walk count and
//! Laplacian energy.
//!
//! The Laplacian energy is the sum of squared Laplacian eigenvalues, which is
//! `trace(L²)`. It is computed here as `M₁ + c₂`; [`trace_l_squared`] squares
//! the integer Laplacian directly so the two routes can be checked against
//! each other.

use serde::Serialize;

use crate::digraph::{DegreeSequence, Digraph, LaplacianMatrix};
use crate::error::{Error, Result};

/// Number of directed closed walks of length 2, i.e. `trace(A²)`.
pub fn c2(g: &Digraph) -> i64 {
    2 * g.digon_count() as i64
}

/// Sum of squared outdegrees.
pub fn first_zagreb(g: &Digraph) -> i64 {
    g.out_degrees().iter().map(|&d| (d * d) as i64).sum()
}

pub fn laplacian_energy(g: &Digraph) -> i64 {
    first_zagreb(g) + c2(g)
}

/// `trace(L²)` by literal multiplication of the integer Laplacian.
pub fn trace_l_squared(g: &Digraph) -> i64 {
    LaplacianMatrix::of(g).trace_of_square()
}

/// Sum of the `t` largest values, `1 <= t <= len`.
pub fn sd_t(seq: &DegreeSequence, t: usize) -> Result<usize> {
    if t == 0 || t > seq.len() {
        return Err(Error::PrefixIndex { t, n: seq.len() });
    }
    Ok(seq.prefix()[t])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub le: i64,
    pub m1: i64,
    pub c2: i64,
    pub e: usize,
    pub degseq: Vec<usize>,
}

impl InvariantBundle {
    pub fn of(g: &Digraph) -> Self {
        let m1 = first_zagreb(g);
        let c2 = c2(g);
        Self {
            le: m1 + c2,
            m1,
            c2,
            e: g.arc_count(),
            degseq: g.out_degree_sequence().values().to_vec(),
        }
    }
}
