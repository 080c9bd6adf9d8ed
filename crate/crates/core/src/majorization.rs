//! Majorization of integer sequences and Karamata's inequality for `t ↦ t²`.
//!
//! `x` majorizes `y` when both are non-increasing, every prefix sum of `x` is
//! at least the matching prefix sum of `y`, and the totals are equal. For a
//! strictly convex `f`, Karamata then gives `Σ f(xᵢ) >= Σ f(yᵢ)`, with
//! equality only when `x = y`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::gen_fnk;
use crate::invariants::laplacian_energy;

/// A non-increasing integer sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SortedSequence(Vec<i64>);

impl SortedSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSorted);
        }
        Ok(Self(values))
    }

    pub fn sorting(mut values: Vec<i64>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum_of_squares(&self) -> i128 {
        self.0.iter().map(|&x| i128::from(x) * i128::from(x)).sum()
    }
}

impl From<&crate::digraph::DegreeSequence> for SortedSequence {
    fn from(seq: &crate::digraph::DegreeSequence) -> Self {
        Self(seq.values().iter().map(|&d| d as i64).collect())
    }
}

fn same_length(x: &SortedSequence, y: &SortedSequence) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

pub fn majorizes(x: &SortedSequence, y: &SortedSequence) -> Result<bool> {
    same_length(x, y)?;
    let (mut px, mut py) = (0i128, 0i128);
    for (&a, &b) in x.values().iter().zip(y.values()) {
        px += i128::from(a);
        py += i128::from(b);
        if px < py {
            return Ok(false);
        }
    }
    Ok(px == py)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KaramataVerdict {
    /// `x` majorizes `y`, `x ≠ y`, and `Σx² > Σy²`.
    HoldsStrict { lhs: i128, rhs: i128 },
    /// `x = y`.
    HoldsEqual,
    /// `x` does not majorize `y`.
    NotApplicable,
}

pub fn karamata_square_check(x: &SortedSequence, y: &SortedSequence) -> Result<KaramataVerdict> {
    if !majorizes(x, y)? {
        return Ok(KaramataVerdict::NotApplicable);
    }
    if x == y {
        return Ok(KaramataVerdict::HoldsEqual);
    }
    let (lhs, rhs) = (x.sum_of_squares(), y.sum_of_squares());
    if lhs <= rhs {
        return Err(Error::OrderingViolation(format!(
            "majorization without strict square-sum increase: {lhs} <= {rhs}"
        )));
    }
    Ok(KaramataVerdict::HoldsStrict { lhs, rhs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingEntry {
    /// Number of full blocks before the residual one (member `F^{s+1}`).
    pub s: usize,
    pub le: i64,
}

/// Energies of `F(n, k)^{s+1}` for `s = 0..=q`, checking that they strictly
/// increase and that the degree sequence of a later placement majorizes every
/// earlier one.
pub fn verify_fnk_ordering(n: usize, k: usize) -> Result<Vec<OrderingEntry>> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1 and k >= 1, got n={n}, k={k}"
        )));
    }
    if n.is_multiple_of(k) {
        return Err(Error::SingleMember { n, k });
    }
    let q = n / k;
    let mut members = Vec::with_capacity(q + 1);
    for s in 0..=q {
        let g = gen_fnk(n, k, Some(s + 1))?;
        members.push((
            s,
            laplacian_energy(&g),
            SortedSequence::from(&g.out_degree_sequence()),
        ));
    }
    for (later, (s1, le1, seq1)) in members.iter().enumerate() {
        for (s2, le2, seq2) in &members[..later] {
            if !majorizes(seq1, seq2)? {
                return Err(Error::OrderingViolation(format!(
                    "n={n}, k={k}: degree sequence of s={s1} does not majorize s={s2}"
                )));
            }
            if le2 >= le1 {
                return Err(Error::OrderingViolation(format!(
                    "n={n}, k={k}: energy {le2} at s={s2} is not below {le1} at s={s1}"
                )));
            }
        }
    }
    Ok(members
        .into_iter()
        .map(|(s, le, _)| OrderingEntry { s, le })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> SortedSequence {
        SortedSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn majorization_examples() {
        assert_eq!(
            majorizes(&seq(&[3, 2, 1, 0]), &seq(&[2, 2, 1, 1])),
            Ok(true)
        );
        assert_eq!(majorizes(&seq(&[2, 2, 2]), &seq(&[3, 2, 1])), Ok(false));
        let x = seq(&[5, 1, 1]);
        assert_eq!(majorizes(&x, &x), Ok(true));
        // Dominating prefixes but unequal totals.
        assert_eq!(majorizes(&seq(&[3, 3]), &seq(&[2, 2])), Ok(false));
        assert_eq!(
            majorizes(&seq(&[1]), &seq(&[1, 0])),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn sorted_sequence_validation() {
        assert_eq!(SortedSequence::new(vec![1, 2]), Err(Error::NotSorted));
        assert_eq!(SortedSequence::sorting(vec![1, 3, 2]).values(), &[3, 2, 1]);
    }

    #[test]
    fn karamata_examples() {
        assert_eq!(
            karamata_square_check(&seq(&[3, 2, 1, 0]), &seq(&[2, 2, 1, 1])),
            Ok(KaramataVerdict::HoldsStrict { lhs: 14, rhs: 10 })
        );
        let x = seq(&[4, 4, 0]);
        assert_eq!(
            karamata_square_check(&x, &x),
            Ok(KaramataVerdict::HoldsEqual)
        );
        assert_eq!(
            karamata_square_check(&seq(&[2, 2, 2]), &seq(&[3, 2, 1])),
            Ok(KaramataVerdict::NotApplicable)
        );
    }

    #[test]
    fn fnk_ordering_examples() {
        assert_eq!(
            verify_fnk_ordering(5, 3).unwrap(),
            vec![
                OrderingEntry { s: 0, le: 52 },
                OrderingEntry { s: 1, le: 58 }
            ]
        );
        let triple = verify_fnk_ordering(7, 3).unwrap();
        assert_eq!(triple.len(), 3);
        assert!(triple.windows(2).all(|w| w[0].le < w[1].le));
        assert_eq!(
            verify_fnk_ordering(4, 2),
            Err(Error::SingleMember { n: 4, k: 2 })
        );
    }
}
