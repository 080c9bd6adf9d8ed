//! Naive reference implementations. They share nothing with the library
//! beyond `Digraph::has_arc` and `Digraph::order`.

#![allow(dead_code)]

use stl_core::Digraph;

pub fn adjacency(g: &Digraph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| i64::from(g.has_arc(u, v))).collect())
        .collect()
}

/// `trace((D - A)²)` with plain nested loops.
pub fn naive_trace_l2(g: &Digraph) -> i64 {
    let a = adjacency(g);
    let n = a.len();
    let l: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { a[i].iter().sum() } else { -a[i][j] })
                .collect()
        })
        .collect();
    (0..n)
        .map(|i| (0..n).map(|j| l[i][j] * l[j][i]).sum::<i64>())
        .sum()
}

pub fn naive_m1(g: &Digraph) -> i64 {
    adjacency(g)
        .iter()
        .map(|row| row.iter().sum::<i64>().pow(2))
        .sum()
}

pub fn naive_arcs(g: &Digraph) -> i64 {
    adjacency(g).iter().flatten().sum()
}

/// Every permutation of `0..n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Some injective sequence of `len` vertices closes into a directed cycle.
pub fn naive_has_cycle(g: &Digraph, len: usize) -> bool {
    fn go(g: &Digraph, seq: &mut Vec<usize>, len: usize) -> bool {
        if seq.len() == len {
            return g.has_arc(seq[len - 1], seq[0]);
        }
        let last = *seq.last().unwrap();
        for v in 0..g.order() {
            if !seq.contains(&v) && g.has_arc(last, v) {
                seq.push(v);
                if go(g, seq, len) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    if len < 2 || len > g.order() {
        return false;
    }
    (0..g.order()).any(|s| go(g, &mut vec![s], len))
}

/// Tries all n! bijections.
pub fn naive_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    let n = g.order();
    if n != h.order() || naive_arcs(g) != naive_arcs(h) {
        return false;
    }
    let (a, b) = (adjacency(g), adjacency(h));
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

/// Digraph on `n` vertices whose arcs are the set bits of `mask`, pairs
/// numbered column-major (the library numbers them row-major).
pub fn digraph_from_bits(n: usize, mask: u64) -> Digraph {
    let mut arcs = Vec::new();
    let mut bit = 0;
    for v in 0..n {
        for u in 0..n {
            if u != v {
                if mask >> bit & 1 == 1 {
                    arcs.push((u, v));
                }
                bit += 1;
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

#[derive(Clone, Copy, Debug)]
pub enum Measure {
    Le,
    M1,
    Arcs,
}

impl Measure {
    pub fn of(self, g: &Digraph) -> i64 {
        match self {
            Measure::Le => naive_trace_l2(g),
            Measure::M1 => naive_m1(g),
            Measure::Arcs => naive_arcs(g),
        }
    }
}

/// Brute-force maximum over all `C_len`-free digraphs of order `n`, with
/// one representative per isomorphism class of maximisers.
pub fn naive_extremal(n: usize, len: usize, measure: Measure) -> (i64, Vec<Digraph>) {
    let pairs = n * (n - 1);
    let mut best = i64::MIN;
    let mut maximisers: Vec<Digraph> = Vec::new();
    for mask in 0..1u64 << pairs {
        let g = digraph_from_bits(n, mask);
        let value = measure.of(&g);
        if value < best || naive_has_cycle(&g, len) {
            continue;
        }
        if value > best {
            best = value;
            maximisers.clear();
        }
        maximisers.push(g);
    }
    let mut classes: Vec<Digraph> = Vec::new();
    for g in maximisers {
        if !classes.iter().any(|c| naive_isomorphic(c, &g)) {
            classes.push(g);
        }
    }
    (best, classes)
}

/// `found` and `expected` describe the same isomorphism classes.
pub fn same_classes(found: &[Digraph], expected: &[Digraph]) -> bool {
    let covered = |xs: &[Digraph], ys: &[Digraph]| {
        xs.iter().all(|x| ys.iter().any(|y| naive_isomorphic(x, y)))
    };
    covered(found, expected) && covered(expected, found)
}
