//! Canonical labeling for small digraphs.
//!
//! Vertices are first split into cells by iterated colour refinement, seeded
//! with `(outdegree, indegree)`. Cell order only depends on isomorphism
//! invariants, so it suffices to search the permutations that keep every
//! vertex inside its cell. The search fills canonical positions one at a time
//! and emits, for each new position `p`, the adjacency bits between `p` and
//! all earlier positions; the lexicographically smallest code wins and any
//! branch whose prefix already exceeds the best code is cut. Two candidates
//! whose transposition is an automorphism (twins) yield the same codes, so
//! only the first of them is expanded at each node.

use crate::digraph::{bits, Digraph};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_label`] and the isomorphism test.
pub const CANON_CAP: usize = 10;

/// Byte serialization of the canonical relabeling: the order, then each row
/// as `ceil(n/8)` little-endian bytes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.bytes)
    }

    fn of_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let width = n.div_ceil(8);
        let mut bytes = Vec::with_capacity(1 + n * width);
        bytes.push(n as u8);
        for row in rows {
            bytes.extend_from_slice(&row.to_le_bytes()[..width]);
        }
        Self { bytes }
    }
}

pub(crate) fn check_canon_cap(n: usize) -> Result<()> {
    if n > CANON_CAP {
        return Err(Error::SearchCap {
            n,
            cap: CANON_CAP,
            what: "isomorphism",
        });
    }
    Ok(())
}

/// Canonical bytes: equal iff the digraphs are isomorphic.
pub fn canonical_label(g: &Digraph) -> Result<CanonicalForm> {
    Ok(canonical_form(g)?.1)
}

/// The canonical relabeling of `g` together with its bytes.
pub fn canonical_form(g: &Digraph) -> Result<(Digraph, CanonicalForm)> {
    check_canon_cap(g.order())?;
    let colours = refine(g);
    let mut search = Search::new(g, &colours);
    search.descend(0, 0, 0);
    // perm[v] = canonical position of v
    let mut perm = vec![0; g.order()];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    let canonical = g.permute(&perm)?;
    let form = CanonicalForm::of_rows(canonical.rows());
    Ok((canonical, form))
}

/// Stable colouring by iterated refinement. Colour ids are ranks of sorted
/// invariant signatures, so they do not depend on the input labeling.
pub(crate) fn refine(g: &Digraph) -> Vec<usize> {
    let n = g.order();
    let outs = g.out_degrees();
    let ins = g.in_degrees();
    let in_rows = g.in_rows();
    let mut colours = rank(&(0..n).map(|v| (outs[v], ins[v])).collect::<Vec<_>>());
    let mut classes = distinct(&colours);
    loop {
        let signatures: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut out_counts = vec![0; classes];
                let mut in_counts = vec![0; classes];
                for w in bits(g.out_row(v)) {
                    out_counts[colours[w]] += 1;
                }
                for w in bits(in_rows[v]) {
                    in_counts[colours[w]] += 1;
                }
                (colours[v], out_counts, in_counts)
            })
            .collect();
        let next = rank(&signatures);
        let next_classes = distinct(&next);
        if next_classes == classes {
            return colours;
        }
        colours = next;
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

fn distinct(colours: &[usize]) -> usize {
    colours.iter().max().map_or(0, |m| m + 1)
}

struct Search<'a> {
    g: &'a Digraph,
    /// Colour required at each canonical position.
    position_colour: Vec<usize>,
    colours: &'a [usize],
    in_rows: Vec<u64>,
    order: Vec<usize>,
    best_code: Option<u128>,
    best_order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Digraph, colours: &'a [usize]) -> Self {
        let mut position_colour = colours.to_vec();
        position_colour.sort_unstable();
        Self {
            g,
            position_colour,
            colours,
            in_rows: g.in_rows(),
            order: Vec::with_capacity(g.order()),
            best_code: None,
            best_order: Vec::new(),
        }
    }

    /// `code` holds `len` bits packed from the top of the word.
    fn descend(&mut self, code: u128, len: u32, used: u64) {
        let n = self.g.order();
        let pos = self.order.len();
        if pos == n {
            if self.best_code.is_none_or(|best| code < best) {
                self.best_code = Some(code);
                self.best_order = self.order.clone();
            }
            return;
        }
        let wanted = self.position_colour[pos];
        let mut expanded = Vec::new();
        for v in 0..n {
            if used >> v & 1 == 1 || self.colours[v] != wanted {
                continue;
            }
            if expanded.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            expanded.push(v);
            let mut next = code;
            let mut next_len = len;
            for &w in &self.order {
                for bit in [self.g.has_arc(w, v), self.g.has_arc(v, w)] {
                    if bit {
                        next |= 1u128 << (127 - next_len);
                    }
                    next_len += 1;
                }
            }
            if let Some(best) = self.best_code {
                let prefix = if next_len == 0 {
                    0
                } else {
                    !0u128 << (128 - next_len)
                };
                if next & prefix > best & prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.descend(next, next_len, used | 1 << v);
            self.order.pop();
        }
    }

    /// True iff swapping `u` and `v` is an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        let others = !(1u64 << u | 1u64 << v);
        let g = self.g;
        g.out_row(u) & others == g.out_row(v) & others
            && self.in_rows[u] & others == self.in_rows[v] & others
            && g.has_arc(u, v) == g.has_arc(v, u)
    }
}
