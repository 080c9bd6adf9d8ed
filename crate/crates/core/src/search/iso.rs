//! Direct isomorphism test by backtracking over degree-compatible maps.
//!
//! Kept independent of [`super::canon`]: it never consults the canonical
//! form, so the two can check each other.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::search::canon::check_canon_cap;

pub fn are_isomorphic(g: &Digraph, h: &Digraph) -> Result<bool> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            left: g.order(),
            right: h.order(),
        });
    }
    check_canon_cap(g.order())?;
    if g.arc_count() != h.arc_count() {
        return Ok(false);
    }
    let key = |d: &Digraph| -> Vec<(usize, usize)> {
        d.out_degrees().into_iter().zip(d.in_degrees()).collect()
    };
    let (gk, hk) = (key(g), key(h));
    let mut sorted_g = gk.clone();
    let mut sorted_h = hk.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return Ok(false);
    }
    let mut image = Vec::with_capacity(g.order());
    Ok(extend(g, h, &gk, &hk, &mut image, 0))
}

/// `image[i]` is the vertex of `h` that vertex `i` of `g` maps to.
fn extend(
    g: &Digraph,
    h: &Digraph,
    gk: &[(usize, usize)],
    hk: &[(usize, usize)],
    image: &mut Vec<usize>,
    used: u64,
) -> bool {
    let v = image.len();
    if v == g.order() {
        return true;
    }
    for w in 0..h.order() {
        if used >> w & 1 == 1 || hk[w] != gk[v] {
            continue;
        }
        let consistent = image.iter().enumerate().all(|(a, &b)| {
            g.has_arc(v, a) == h.has_arc(w, b) && g.has_arc(a, v) == h.has_arc(b, w)
        });
        if consistent {
            image.push(w);
            if extend(g, h, gk, hk, image, used | 1 << w) {
                return true;
            }
            image.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_bk, gen_complete_digraph};

    #[test]
    fn examples() {
        let digon = gen_complete_digraph(2).unwrap();
        assert_eq!(
            are_isomorphic(&digon, &digon.permute(&[1, 0]).unwrap()),
            Ok(true)
        );
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let digon3 = Digraph::from_arcs(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(are_isomorphic(&digon3, &path), Ok(false));
        assert_eq!(
            are_isomorphic(&gen_bk(&[2, 3]).unwrap(), &gen_bk(&[4, 1]).unwrap()),
            Ok(false)
        );
    }

    #[test]
    fn same_degrees_different_structure() {
        // Directed 4-cycle vs two digons: every vertex has out = in = 1.
        let c4 = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let two_digons = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert_eq!(are_isomorphic(&c4, &two_digons), Ok(false));
        assert_eq!(
            are_isomorphic(&c4, &c4.permute(&[2, 0, 3, 1]).unwrap()),
            Ok(true)
        );
    }

    #[test]
    fn errors() {
        let a = Digraph::empty(2).unwrap();
        let b = Digraph::empty(3).unwrap();
        assert_eq!(
            are_isomorphic(&a, &b),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
        let big = Digraph::empty(11).unwrap();
        assert!(are_isomorphic(&big, &big).is_err());
    }
}
