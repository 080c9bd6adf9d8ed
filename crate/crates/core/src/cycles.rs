//! Directed cycles of an exact length.

use crate::digraph::{bits, Digraph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Distinct vertices `v0, …, v(len-1)` with arcs `v(i) → v(i+1)` and the
/// closing arc `v(len-1) → v0`. Reported starting from its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Arcs of the cycle in traversal order, closing arc last.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| (self.vertices[i], self.vertices[(i + 1) % len]))
    }

    pub fn is_valid_in(&self, g: &Digraph) -> bool {
        let distinct = self
            .vertices
            .iter()
            .fold(0u64, |acc, &v| acc | 1 << v)
            .count_ones() as usize
            == self.vertices.len();
        self.vertices.len() >= 2 && distinct && self.arcs().all(|(u, v)| g.has_arc(u, v))
    }
}

/// Finds a directed cycle of length exactly `len`, if there is one.
///
/// Each cycle is searched only from its minimum vertex `s`, inside the strong
/// component of `s` among the vertices `≥ s`. A partial path is abandoned once
/// its last vertex is too far from `s` to close in time.
pub fn find_cycle_of_length(g: &Digraph, len: usize) -> Result<Option<CycleWitness>> {
    let n = g.order();
    if len < 2 || len > n {
        return Err(Error::CycleLength { len, n });
    }
    let rows = g.rows();
    let mut in_rows = [0u64; MAX_VERTICES];
    for (u, &row) in rows.iter().enumerate() {
        for v in bits(row) {
            in_rows[v] |= 1 << u;
        }
    }
    let mut path = Vec::with_capacity(len);
    let mut dist = [usize::MAX; MAX_VERTICES];
    for start in 0..=n - len {
        let allowed = !((1u64 << start) - 1) & full_mask(n);
        let comp = reach(rows, start, allowed) & reach(&in_rows, start, allowed);
        if (comp.count_ones() as usize) < len {
            continue;
        }
        distances_to(&in_rows, start, comp, &mut dist);
        let search = Search {
            rows,
            start,
            comp: comp & !(1u64 << start),
            len,
            dist: &dist,
        };
        path.clear();
        path.push(start);
        if search.extend(&mut path, 1u64 << start) {
            return Ok(Some(CycleWitness { vertices: path }));
        }
    }
    Ok(None)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices reachable from `start` inside `allowed`, following `rows`.
fn reach(rows: &[u64], start: usize, allowed: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= rows[v];
        }
        frontier = next & allowed & !seen;
        seen |= frontier;
    }
    seen
}

/// BFS distance from each vertex of `comp` to `start`.
fn distances_to(in_rows: &[u64], start: usize, comp: u64, dist: &mut [usize]) {
    dist.fill(usize::MAX);
    dist[start] = 0;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0;
        for v in bits(frontier) {
            next |= in_rows[v];
        }
        frontier = next & comp & !seen;
        seen |= frontier;
        for v in bits(frontier) {
            dist[v] = d;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    start: usize,
    comp: u64,
    len: usize,
    dist: &'a [usize],
}

impl Search<'_> {
    fn extend(&self, path: &mut Vec<usize>, used: u64) -> bool {
        let last = *path.last().expect("path is never empty");
        if path.len() == self.len {
            return self.rows[last] >> self.start & 1 == 1;
        }
        let slack = self.len - path.len();
        for next in bits(self.rows[last] & self.comp & !used) {
            if self.dist[next] > slack {
                continue;
            }
            path.push(next);
            if self.extend(path, used | 1 << next) {
                return true;
            }
            path.pop();
        }
        false
    }
}

pub fn is_ck_free(g: &Digraph, cycle_len: usize) -> Result<bool> {
    Ok(find_cycle_of_length(g, cycle_len)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_bk, gen_complete_digraph, gen_fnk, gen_transitive_tournament};

    #[test]
    fn complete_digraph_has_triangle() {
        let w = find_cycle_of_length(&gen_complete_digraph(3).unwrap(), 3)
            .unwrap()
            .unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2]);
        assert_eq!(w.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn acyclic_and_block_chains() {
        assert_eq!(
            find_cycle_of_length(&gen_transitive_tournament(5).unwrap(), 3),
            Ok(None)
        );
        assert_eq!(
            find_cycle_of_length(&gen_fnk(4, 3, Some(2)).unwrap(), 4),
            Ok(None)
        );
        assert_eq!(is_ck_free(&gen_fnk(5, 3, Some(1)).unwrap(), 4), Ok(true));
        assert_eq!(is_ck_free(&gen_bk(&[4]).unwrap(), 3), Ok(true));
    }

    #[test]
    fn digon_is_a_two_cycle() {
        assert_eq!(is_ck_free(&gen_complete_digraph(2).unwrap(), 2), Ok(false));
    }

    #[test]
    fn finds_cycle_not_through_vertex_zero() {
        let g = Digraph::from_arcs(5, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        let w = find_cycle_of_length(&g, 3).unwrap().unwrap();
        assert_eq!(w.vertices(), &[2, 3, 4]);
        assert!(w.is_valid_in(&g));
        assert_eq!(find_cycle_of_length(&g, 2), Ok(None));
    }

    #[test]
    fn exact_length_only() {
        // A 4-cycle with a chord 0→2 holds a 3-cycle 0→2→3→0 but no 2-cycle.
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(find_cycle_of_length(&g, 4).unwrap().is_some());
        assert!(find_cycle_of_length(&g, 3).unwrap().is_some());
        assert_eq!(find_cycle_of_length(&g, 2), Ok(None));
    }

    #[test]
    fn length_out_of_range() {
        let g = gen_complete_digraph(3).unwrap();
        assert_eq!(
            find_cycle_of_length(&g, 1),
            Err(Error::CycleLength { len: 1, n: 3 })
        );
        assert_eq!(
            find_cycle_of_length(&g, 4),
            Err(Error::CycleLength { len: 4, n: 3 })
        );
    }
}
