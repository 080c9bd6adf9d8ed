//! Exhaustive enumeration of labeled loop-free digraphs as bit masks.
//!
//! Mask bit `i` stands for the `i`-th ordered pair in row-major order with the
//! diagonal skipped: `(0,1), (0,2), …, (0,n-1), (1,0), (1,2), …`. Row `u`
//! therefore occupies bits `u(n-1) .. (u+1)(n-1)`.

use std::ops::Range;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order the enumerator accepts (2^(n(n-1)) masks).
pub const fn enumeration_cap() -> usize {
    if cfg!(feature = "long-search") {
        6
    } else {
        5
    }
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1)
}

pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < n && v < n);
    u * (n - 1) + if v < u { v } else { v - 1 }
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n == 0 || n > enumeration_cap() {
        return Err(Error::SearchCap {
            n,
            cap: enumeration_cap(),
            what: "enumeration",
        });
    }
    Ok(())
}

/// Out-neighbour rows for `mask`; `n` must be at most 8.
#[inline]
pub fn mask_rows(n: usize, mask: u64) -> Vec<u64> {
    let width = n - 1;
    let chunk_mask = (1u64 << width) - 1;
    (0..n)
        .map(|u| {
            let chunk = mask >> (u * width) & chunk_mask;
            let below = chunk & ((1u64 << u) - 1);
            below | (chunk >> u) << (u + 1)
        })
        .collect()
}

pub fn mask_to_digraph(n: usize, mask: u64) -> Digraph {
    Digraph::from_rows_unchecked(mask_rows(n, mask))
}

pub fn digraph_to_mask(g: &Digraph) -> u64 {
    let n = g.order();
    g.arcs()
        .fold(0, |acc, (u, v)| acc | 1 << pair_index(n, u, v))
}

/// Calls `visit(mask, digraph)` for every loop-free digraph on `n` labeled
/// vertices, in increasing mask order. Returns the number visited.
pub fn enumerate_digraphs<F>(n: usize, mut visit: F) -> Result<u64>
where
    F: FnMut(u64, &Digraph),
{
    check_cap(n)?;
    let total = 1u64 << pair_count(n);
    for_each_in_range(n, 0..total, |mask, g| visit(mask, g));
    Ok(total)
}

pub(crate) fn for_each_in_range<F>(n: usize, masks: Range<u64>, mut visit: F)
where
    F: FnMut(u64, &Digraph),
{
    for mask in masks {
        visit(mask, &mask_to_digraph(n, mask));
    }
}
