//! Closed-form extremal values, evaluated as an integer numerator over a
//! small fixed denominator. Every division is asserted exact.
//!
//! Throughout, `n = q·k + r` with `0 <= r < k`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which closed form produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaSource {
    /// Maximum edges of a `K(k+1)`-free graph.
    TuranClique,
    /// Maximum arcs avoiding the complete digraph on `k+1` vertices.
    TuranCompleteDigraph,
    /// Maximum arcs avoiding a tournament on `k+1` vertices.
    TuranTournament,
    /// Maximum arcs avoiding a directed `(k+1)`-cycle, `k >= 3`.
    TuranDirectedCycle,
    /// Maximum Laplacian energy avoiding a directed `(k+1)`-cycle, `k >= 3`.
    EnergyCycle,
    /// Maximum Laplacian energy without digons.
    EnergyDigonFree,
    /// Maximum Laplacian energy without directed triangles.
    EnergyTriangleFree,
    /// Maximum first Zagreb index without directed triangles.
    ZagrebTriangleFree,
    /// `k > n`: no `(k+1)`-cycle fits, the complete digraph is optimal.
    CompleteDigraph,
}

impl FormulaSource {
    pub fn tag(self) -> &'static str {
        match self {
            FormulaSource::TuranClique => "turan-clique",
            FormulaSource::TuranCompleteDigraph => "turan-complete-digraph",
            FormulaSource::TuranTournament => "turan-tournament",
            FormulaSource::TuranDirectedCycle => "turan-directed-cycle",
            FormulaSource::EnergyCycle => "energy-cycle",
            FormulaSource::EnergyDigonFree => "energy-digon-free",
            FormulaSource::EnergyTriangleFree => "energy-triangle-free",
            FormulaSource::ZagrebTriangleFree => "zagreb-triangle-free",
            FormulaSource::CompleteDigraph => "complete-digraph",
        }
    }
}

impl fmt::Display for FormulaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub value: i64,
    pub numerator: i128,
    pub denominator: i128,
    pub source: FormulaSource,
}

impl ExactValue {
    /// # Panics
    /// If `denominator` does not divide `numerator`: the closed forms are
    /// integral for every valid input, so this is a defect, not bad input.
    fn exact(numerator: i128, denominator: i128, source: FormulaSource) -> Self {
        assert!(denominator > 0);
        assert_eq!(
            numerator % denominator,
            0,
            "{source}: {numerator}/{denominator} is not an integer"
        );
        let value = i64::try_from(numerator / denominator).expect("closed-form value exceeds i64");
        Self {
            value,
            numerator,
            denominator,
            source,
        }
    }
}

fn split(n: usize, k: usize) -> Result<(i128, i128, i128, i128)> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1 and k >= 1, got n={n}, k={k}"
        )));
    }
    let (n, k) = (n as i128, k as i128);
    Ok((n, k, n / k, n % k))
}

/// `(k-1)/(2k)·n² − r(k−r)/(2k)`: edges of the balanced complete `k`-partite graph.
pub fn ex_arcs_clique(n: usize, k: usize) -> Result<ExactValue> {
    let (n, k, _, r) = split(n, k)?;
    Ok(ExactValue::exact(
        (k - 1) * n * n - r * (k - r),
        2 * k,
        FormulaSource::TuranClique,
    ))
}

/// `C(n, 2) + ex(n, K(k+1))`.
pub fn ex_arcs_complete_digraph(n: usize, k: usize) -> Result<ExactValue> {
    let clique = ex_arcs_clique(n, k)?;
    let (n, k, _, _) = split(n, k)?;
    Ok(ExactValue::exact(
        k * n * (n - 1) + clique.numerator,
        2 * k,
        FormulaSource::TuranCompleteDigraph,
    ))
}

/// `2 · ex(n, K(k+1))`.
pub fn ex_arcs_tournament(n: usize, k: usize) -> Result<ExactValue> {
    let clique = ex_arcs_clique(n, k)?;
    Ok(ExactValue::exact(
        2 * clique.numerator,
        clique.denominator,
        FormulaSource::TuranTournament,
    ))
}

fn complete_digraph_arcs(n: i128) -> ExactValue {
    ExactValue::exact(n * (n - 1), 1, FormulaSource::CompleteDigraph)
}

fn complete_digraph_energy(n: i128) -> ExactValue {
    ExactValue::exact(n * n * (n - 1), 1, FormulaSource::CompleteDigraph)
}

/// Maximum arcs of a digraph on `n` vertices with no directed `(k+1)`-cycle.
///
/// `k >= 3` uses `n²/2 + (k−2)n/2 − r(k−r)/2`; `k = 1` (no digons) and `k = 2`
/// (no directed triangles, a tournament) use the complete-digraph and
/// tournament forms; `k > n` gives the complete digraph.
pub fn ex_arcs_ck(n: usize, k: usize) -> Result<ExactValue> {
    let (nn, kk, q, r) = split(n, k)?;
    if q == 0 {
        return Ok(complete_digraph_arcs(nn));
    }
    match k {
        1 => ex_arcs_complete_digraph(n, 1),
        2 => ex_arcs_tournament(n, 2),
        _ => Ok(ExactValue::exact(
            nn * nn + (kk - 2) * nn - r * (kk - r),
            2,
            FormulaSource::TuranDirectedCycle,
        )),
    }
}

/// The cubic `n³/3 + (k/2 − 1)n² + k²n/6 + 2r³/3 − kr²/2 − k²r/6`, for any
/// `k >= 1` and without the `k > n` guard.
pub fn le_cubic(n: usize, k: usize) -> Result<ExactValue> {
    let (n, k, _, r) = split(n, k)?;
    let numerator =
        2 * n * n * n + (3 * k - 6) * n * n + k * k * n + 4 * r * r * r - 3 * k * r * r - k * k * r;
    Ok(ExactValue::exact(numerator, 6, FormulaSource::EnergyCycle))
}

/// `n(n−1)(2n−1)/6`, the energy of the transitive tournament.
pub fn le_digon_free(n: usize) -> Result<ExactValue> {
    let (n, _, _, _) = split(n, 1)?;
    Ok(ExactValue::exact(
        n * (n - 1) * (2 * n - 1),
        6,
        FormulaSource::EnergyDigonFree,
    ))
}

/// `(2q/3)(3n² − 6qn + 4q² + 2)` with `n = 2q + r`.
pub fn le_triangle_free(n: usize) -> Result<ExactValue> {
    let (n, _, q, _) = split(n, 2)?;
    Ok(ExactValue::exact(
        2 * q * (3 * n * n - 6 * q * n + 4 * q * q + 2),
        3,
        FormulaSource::EnergyTriangleFree,
    ))
}

/// `(2q/3)(3n² − 6qn + 4q² − 1)` with `n = 2q + r`.
pub fn ex_m1_c3(n: usize) -> Result<ExactValue> {
    let (n, _, q, _) = split(n, 2)?;
    Ok(ExactValue::exact(
        2 * q * (3 * n * n - 6 * q * n + 4 * q * q - 1),
        3,
        FormulaSource::ZagrebTriangleFree,
    ))
}

/// Maximum Laplacian energy of a digraph on `n` vertices with no directed
/// `(k+1)`-cycle: `k = 1` and `k = 2` have their own forms, `k >= 3` the cubic,
/// `k > n` the complete digraph.
pub fn ex_le_ck(n: usize, k: usize) -> Result<ExactValue> {
    let (nn, _, q, _) = split(n, k)?;
    if q == 0 {
        return Ok(complete_digraph_energy(nn));
    }
    match k {
        1 => le_digon_free(n),
        2 => le_triangle_free(n),
        _ => le_cubic(n, k),
    }
}

/// Quantities exposed by the `formula` subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    ExLe,
    ExArcs,
    ExM1,
    ExClique,
    ExCompleteDigraph,
    ExTournament,
}

impl Quantity {
    pub fn evaluate(self, n: usize, k: usize) -> Result<ExactValue> {
        match self {
            Quantity::ExLe => ex_le_ck(n, k),
            Quantity::ExArcs => ex_arcs_ck(n, k),
            Quantity::ExM1 => ex_m1_c3(n),
            Quantity::ExClique => ex_arcs_clique(n, k),
            Quantity::ExCompleteDigraph => ex_arcs_complete_digraph(n, k),
            Quantity::ExTournament => ex_arcs_tournament(n, k),
        }
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ex_le" => Quantity::ExLe,
            "ex_arcs" => Quantity::ExArcs,
            "ex_m1" => Quantity::ExM1,
            "ex_clique" => Quantity::ExClique,
            "ex_kd" => Quantity::ExCompleteDigraph,
            "ex_tournament" => Quantity::ExTournament,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown quantity `{other}`"
                )))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(r: Result<ExactValue>) -> i64 {
        r.unwrap().value
    }

    #[test]
    fn clique_examples() {
        assert_eq!(v(ex_arcs_clique(5, 2)), 6);
        assert_eq!(v(ex_arcs_clique(4, 3)), 5);
        for k in 1..12 {
            assert_eq!(v(ex_arcs_clique(k, k)), (k * (k - 1) / 2) as i64);
        }
    }

    #[test]
    fn digraph_turan_examples() {
        assert_eq!(v(ex_arcs_complete_digraph(4, 2)), 10);
        assert_eq!(v(ex_arcs_tournament(4, 2)), 8);
        for n in 1..20 {
            assert_eq!(v(ex_arcs_tournament(n, 1)), 0);
        }
    }

    #[test]
    fn directed_cycle_arcs() {
        assert_eq!(v(ex_arcs_ck(4, 3)), 9);
        assert_eq!(v(ex_arcs_ck(5, 3)), 14);
        assert_eq!(v(ex_arcs_ck(6, 3)), 21);
        assert_eq!(
            ex_arcs_ck(6, 3).unwrap().source,
            FormulaSource::TuranDirectedCycle
        );
        assert_eq!(
            ex_arcs_ck(6, 2).unwrap().source,
            FormulaSource::TuranTournament
        );
        assert_eq!(
            ex_arcs_ck(6, 1).unwrap().source,
            FormulaSource::TuranCompleteDigraph
        );
        assert_eq!(v(ex_arcs_ck(5, 1)), 10);
        assert_eq!(v(ex_arcs_ck(5, 2)), 12);
    }

    #[test]
    fn energy_examples() {
        let e = ex_le_ck(4, 3).unwrap();
        assert_eq!((e.value, e.numerator, e.denominator), (33, 198, 6));
        assert_eq!(v(ex_le_ck(5, 2)), 44);
        assert_eq!(v(ex_le_ck(4, 1)), 14);
        assert_eq!(v(ex_le_ck(5, 3)), 58);
    }

    #[test]
    fn zagreb_examples() {
        assert_eq!(v(ex_m1_c3(5)), 40);
        assert_eq!(v(ex_m1_c3(4)), 20);
        assert_eq!(v(ex_m1_c3(7)), 112);
    }

    #[test]
    fn oversized_k_degenerates_to_complete_digraph() {
        for n in 1..15 {
            let arcs = ex_arcs_ck(n, n + 1).unwrap();
            assert_eq!(arcs.source, FormulaSource::CompleteDigraph);
            assert_eq!(arcs.value, (n * (n - 1)) as i64);
            assert_eq!(v(ex_le_ck(n, n + 3)), (n * n * (n - 1)) as i64);
            // The unguarded forms agree anyway.
            assert_eq!(v(le_cubic(n, n + 3)), (n * n * (n - 1)) as i64);
        }
    }

    #[test]
    fn zero_arguments_are_rejected() {
        assert!(ex_le_ck(0, 3).is_err());
        assert!(ex_arcs_ck(3, 0).is_err());
        assert!(ex_m1_c3(0).is_err());
    }

    #[test]
    fn quantity_names() {
        assert_eq!("ex_le".parse(), Ok(Quantity::ExLe));
        assert_eq!(
            "ex_m1"
                .parse::<Quantity>()
                .unwrap()
                .evaluate(5, 99)
                .unwrap()
                .value,
            40
        );
        assert!("le".parse::<Quantity>().is_err());
    }
}
