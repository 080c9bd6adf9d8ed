//! Loop-free digraphs on at most 64 labeled vertices.
//!
//! A [`Digraph`] stores one `u64` out-neighbour row per vertex: bit `v` of
//! row `u` is set iff the arc `(u, v)` is present. Values are immutable once
//! built; every operation that "changes" a digraph returns a new one.

use crate::error::{Error, Result};

/// Largest supported order; a neighbour row must fit one machine word.
pub const MAX_VERTICES: usize = 64;

/// Digraphs order by `(n, rows)`, which gives reports a deterministic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    rows: Vec<u64>,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Capacity {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

#[inline]
fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a digraph from ordered pairs. Duplicate pairs are idempotent.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = DigraphBuilder::new(n)?;
        for (u, v) in arcs {
            builder.add_arc(u, v)?;
        }
        Ok(builder.build())
    }

    /// Builds a digraph from raw out-neighbour rows, validating every row.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let valid = low_bits(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                let vertex = (row & !valid).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::Loop { vertex: u });
            }
        }
        Ok(Self { n, rows })
    }

    /// Skips validation. Callers guarantee `rows.len() == n`, no loops and no
    /// bits at or above `n`.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Self {
            n: rows.len(),
            rows,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn out_row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    /// In-neighbour rows: bit `u` of entry `v` is set iff `(u, v)` is an arc.
    pub fn in_rows(&self) -> Vec<u64> {
        let mut cols = vec![0u64; self.n];
        for (u, &row) in self.rows.iter().enumerate() {
            for v in bits(row) {
                cols[v] |= 1 << u;
            }
        }
        cols
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn arc_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        self.in_rows()
            .iter()
            .map(|c| c.count_ones() as usize)
            .collect()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| bits(row).map(move |v| (u, v)))
    }

    /// Outdegrees sorted non-increasing, with prefix sums.
    pub fn out_degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.out_degrees())
    }

    /// Number of unordered pairs `{u, v}` joined in both directions.
    pub fn digon_count(&self) -> usize {
        let mut count = 0;
        for (u, &row) in self.rows.iter().enumerate() {
            // Only look at v > u so each digon is seen once.
            for v in bits(row & !low_bits(u + 1)) {
                if self.rows[v] >> u & 1 == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Relabels vertex `u` as `perm[u]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n;
        if perm.len() != n {
            return Err(Error::NotAPermutation { n });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::NotAPermutation { n });
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; n];
        for (u, &row) in self.rows.iter().enumerate() {
            rows[perm[u]] = bits(row).fold(0, |acc, v| acc | 1 << perm[v]);
        }
        Ok(Self { n, rows })
    }

    /// True iff the underlying undirected graph is connected.
    pub fn is_weakly_connected(&self) -> bool {
        let ins = self.in_rows();
        let all = low_bits(self.n);
        let mut reached = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.rows[u] | ins[u];
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached & all == all
    }

    /// A copy of this digraph with one more arc.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self> {
        let mut builder = DigraphBuilder::from(self.clone());
        builder.add_arc(u, v)?;
        Ok(builder.build())
    }

    /// A copy of this digraph without the arc `(u, v)` (no-op if absent).
    pub fn without_arc(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        Ok(Self { n: self.n, rows })
    }
}

/// Single-owner accumulator for arcs; [`DigraphBuilder::build`] freezes it.
#[derive(Debug, Clone)]
pub struct DigraphBuilder {
    n: usize,
    rows: Vec<u64>,
}

impl DigraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self {
            n,
            rows: vec![0; n],
        })
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::VertexOutOfRange { vertex, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop { vertex: u });
        }
        self.rows[u] |= 1 << v;
        Ok(self)
    }

    /// Adds every arc from the vertex range `from` to the vertex range `to`,
    /// skipping the diagonal.
    pub fn add_all(
        &mut self,
        from: std::ops::Range<usize>,
        to: std::ops::Range<usize>,
    ) -> Result<&mut Self> {
        for u in from {
            for v in to.clone() {
                if u != v {
                    self.add_arc(u, v)?;
                }
            }
        }
        Ok(self)
    }

    pub fn build(self) -> Digraph {
        Digraph {
            n: self.n,
            rows: self.rows,
        }
    }
}

impl From<Digraph> for DigraphBuilder {
    fn from(g: Digraph) -> Self {
        Self {
            n: g.n,
            rows: g.rows,
        }
    }
}

/// Outdegrees in non-increasing order with their prefix sums
/// (`prefix[t]` is the sum of the `t` largest values).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    values: Vec<usize>,
    prefix: Vec<usize>,
}

impl DegreeSequence {
    pub fn from_unsorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        let prefix = std::iter::once(0)
            .chain(values.iter().scan(0, |acc, &d| {
                *acc += d;
                Some(*acc)
            }))
            .collect();
        Self { values, prefix }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `prefix()[t]` for `t` in `0..=len`.
    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> usize {
        *self.prefix.last().unwrap_or(&0)
    }
}

/// `L = D⁺ − A` as a dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn of(g: &Digraph) -> Self {
        let n = g.order();
        let mut entries = vec![0i64; n * n];
        for u in 0..n {
            entries[u * n + u] = g.out_degree(u) as i64;
            for v in bits(g.out_row(u)) {
                entries[u * n + v] = -1;
            }
        }
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// Full product `L · L`, row-major.
    pub fn squared(&self) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * self.entries[k * n + j];
                }
            }
        }
        out
    }

    pub fn trace_of_square(&self) -> i64 {
        let sq = self.squared();
        (0..self.n).map(|i| sq[i * self.n + i]).sum()
    }
}

/// Indices of the set bits of `word`, ascending.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digon() -> Digraph {
        Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn builds_digon_and_empty() {
        let g = digon();
        assert_eq!(g.arc_count(), 2);
        assert_eq!(Digraph::from_arcs(3, []).unwrap().arc_count(), 0);
    }

    #[test]
    fn duplicate_arcs_are_idempotent() {
        let g = Digraph::from_arcs(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn rejects_loops_ranges_and_capacity() {
        assert_eq!(
            Digraph::from_arcs(2, [(0, 0)]),
            Err(Error::Loop { vertex: 0 })
        );
        assert_eq!(
            Digraph::from_arcs(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(matches!(Digraph::empty(0), Err(Error::Capacity { .. })));
        assert!(matches!(Digraph::empty(65), Err(Error::Capacity { .. })));
        assert!(Digraph::empty(64).is_ok());
        assert_eq!(
            Digraph::from_rows(vec![0b01, 0]),
            Err(Error::Loop { vertex: 0 })
        );
        assert!(matches!(
            Digraph::from_rows(vec![0b100, 0]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn order_64_uses_the_top_bit() {
        let g = Digraph::from_arcs(64, [(0, 63), (63, 0)]).unwrap();
        assert_eq!(g.digon_count(), 1);
        assert!(!g.is_weakly_connected());
        assert_eq!(g.in_degrees()[63], 1);
    }

    #[test]
    fn transitive_tournament_degrees() {
        let g =
            Digraph::from_arcs(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(g.out_degree_sequence().values(), &[3, 2, 1, 0]);
        assert_eq!(g.out_degree_sequence().prefix(), &[0, 3, 5, 6, 6]);
        assert_eq!(g.digon_count(), 0);
    }

    #[test]
    fn digon_counts() {
        assert_eq!(digon().digon_count(), 1);
        let k3 = Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(k3.digon_count(), 3);
    }

    #[test]
    fn permute_examples() {
        let g = digon();
        assert_eq!(g.permute(&[0, 1]).unwrap(), g);
        assert_eq!(g.permute(&[1, 0]).unwrap(), g);
        let arc = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let moved = arc.permute(&[1, 2, 0]).unwrap();
        assert_eq!(moved.arcs().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(
            arc.permute(&[0, 0, 1]),
            Err(Error::NotAPermutation { n: 3 })
        );
        assert_eq!(arc.permute(&[0, 1]), Err(Error::NotAPermutation { n: 3 }));
    }

    #[test]
    fn weak_connectivity() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 0)]).unwrap();
        assert!(!g.is_weakly_connected());
        let tt = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(tt.is_weakly_connected());
        assert!(Digraph::empty(1).unwrap().is_weakly_connected());
        // Connected only through an in-arc.
        assert!(Digraph::from_arcs(3, [(1, 0), (2, 1)])
            .unwrap()
            .is_weakly_connected());
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = Digraph::from_arcs(3, [(0, 1), (0, 2), (2, 1)]).unwrap();
        let l = LaplacianMatrix::of(&g);
        for i in 0..3 {
            assert_eq!((0..3).map(|j| l.get(i, j)).sum::<i64>(), 0);
            assert!(l.get(i, i) >= 0);
        }
    }

    #[test]
    fn with_and_without_arc() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let h = g.with_arc(1, 0).unwrap();
        assert_eq!(h.digon_count(), 1);
        assert_eq!(g.arc_count(), 1);
        assert_eq!(h.without_arc(1, 0).unwrap(), g);
    }
}
