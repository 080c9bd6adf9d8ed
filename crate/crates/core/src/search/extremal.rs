//! Exhaustive extremal search under a forbidden cycle length.
//!
//! The mask space is cut into contiguous ranges by its high bits. Each range
//! is scanned independently for its local maximum and the masks attaining it;
//! the merge keeps the global maximum, unions the witness masks, and reduces
//! them to one canonical representative per isomorphism class sorted by
//! canonical bytes. Nothing in the result depends on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cycles::find_cycle_of_length;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::invariants::{first_zagreb, laplacian_energy};
use crate::search::canon::{canonical_form, CanonicalForm};
use crate::search::enumerate::{check_cap, for_each_in_range, mask_to_digraph, pair_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Le,
    M1,
    Arcs,
}

impl Objective {
    pub fn evaluate(self, g: &Digraph) -> i64 {
        match self {
            Objective::Le => laplacian_energy(g),
            Objective::M1 => first_zagreb(g),
            Objective::Arcs => g.arc_count() as i64,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Objective::Le => "le",
            Objective::M1 => "m1",
            Objective::Arcs => "arcs",
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "le" => Ok(Objective::Le),
            "m1" => Ok(Objective::M1),
            "arcs" => Ok(Objective::Arcs),
            _ => Err(Error::InvalidArgument(format!(
                "unknown objective `{s}` (le, m1, arcs)"
            ))),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    #[default]
    All,
    ConnectedOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub forbidden_len: usize,
    pub objective: Objective,
    pub scope: Scope,
    /// Worker threads; at least 1.
    pub jobs: usize,
}

impl SearchConfig {
    pub fn new(n: usize, forbidden_len: usize, objective: Objective) -> Self {
        Self {
            n,
            forbidden_len,
            objective,
            scope: Scope::All,
            jobs: 1,
        }
    }

    pub fn scope(mut self, scope: Scope) -> Self {
        self.scope = scope;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

/// A witness in its canonical labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub digraph: Digraph,
    pub canonical: CanonicalForm,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Witness", 2)?;
        s.serialize_field("arclist", &crate::io::render_arclist(&self.digraph))?;
        s.serialize_field("canonical", &self.canonical.to_hex())?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalSearchReport {
    pub n: usize,
    pub forbidden_len: usize,
    pub objective: Objective,
    pub scope: Scope,
    pub max_value: i64,
    /// One per isomorphism class, sorted by canonical bytes.
    pub witnesses: Vec<Witness>,
    /// Masks visited; always `2^(n(n-1))`.
    pub searched_count: u64,
    pub elapsed_ms: u64,
}

impl ExtremalSearchReport {
    pub fn witness_forms(&self) -> Vec<&CanonicalForm> {
        self.witnesses.iter().map(|w| &w.canonical).collect()
    }
}

#[derive(Default)]
struct Partial {
    best: Option<i64>,
    masks: Vec<u64>,
}

impl Partial {
    fn offer(&mut self, value: i64, mask: u64) {
        match self.best {
            Some(best) if value < best => {}
            Some(best) if value == best => self.masks.push(mask),
            _ => {
                self.best = Some(value);
                self.masks.clear();
                self.masks.push(mask);
            }
        }
    }
}

/// Bits of the mask used to split work into ranges.
const SPLIT_BITS: usize = 8;

pub fn search_extremal(config: &SearchConfig) -> Result<ExtremalSearchReport> {
    let started = Instant::now();
    let SearchConfig {
        n,
        forbidden_len,
        objective,
        scope,
        jobs,
    } = config.clone();
    check_cap(n)?;
    if forbidden_len < 2 {
        return Err(Error::InvalidArgument(format!(
            "forbidden cycle length {forbidden_len} < 2"
        )));
    }
    if jobs == 0 {
        return Err(Error::InvalidArgument("jobs must be at least 1".into()));
    }
    let bits = pair_count(n);
    let split = SPLIT_BITS.min(bits);
    let chunk = 1u64 << (bits - split);
    let ranges: Vec<_> = (0..1u64 << split)
        .map(|i| i * chunk..(i + 1) * chunk)
        .collect();

    let scan = |range: std::ops::Range<u64>| -> Partial {
        let mut partial = Partial::default();
        for_each_in_range(n, range, |mask, g| {
            if objective == Objective::Arcs {
                // Arc count is known before any cycle check.
                if partial.best.is_some_and(|b| (mask.count_ones() as i64) < b) {
                    return;
                }
            }
            if scope == Scope::ConnectedOnly && !g.is_weakly_connected() {
                return;
            }
            if forbidden_len <= n
                && find_cycle_of_length(g, forbidden_len)
                    .expect("length checked")
                    .is_some()
            {
                return;
            }
            partial.offer(objective.evaluate(g), mask);
        });
        partial
    };

    let partials: Vec<Partial> = if jobs == 1 {
        ranges.into_iter().map(scan).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| ranges.into_par_iter().map(scan).collect())
    };

    let max_value = partials
        .iter()
        .filter_map(|p| p.best)
        .max()
        .expect("the empty digraph or a path is always admissible");
    let mut classes = BTreeMap::new();
    for partial in partials.iter().filter(|p| p.best == Some(max_value)) {
        for &mask in &partial.masks {
            let (digraph, canonical) = canonical_form(&mask_to_digraph(n, mask))?;
            classes.entry(canonical).or_insert(digraph);
        }
    }
    let witnesses = classes
        .into_iter()
        .map(|(canonical, digraph)| Witness { digraph, canonical })
        .collect();

    Ok(ExtremalSearchReport {
        n,
        forbidden_len,
        objective,
        scope,
        max_value,
        witnesses,
        searched_count: 1u64 << bits,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_bk, gen_fnk, gen_transitive_tournament};
    use crate::search::canon::canonical_label;

    fn run(n: usize, len: usize, objective: Objective) -> ExtremalSearchReport {
        search_extremal(&SearchConfig::new(n, len, objective)).unwrap()
    }

    #[test]
    fn digon_free_order_three() {
        let r = run(3, 2, Objective::Le);
        assert_eq!(r.max_value, 5);
        assert_eq!(r.searched_count, 64);
        assert_eq!(
            r.witness_forms(),
            vec![&canonical_label(&gen_transitive_tournament(3).unwrap()).unwrap()]
        );
    }

    #[test]
    fn four_cycle_free_order_four() {
        let r = run(4, 4, Objective::Le);
        assert_eq!(r.max_value, 33);
        assert_eq!(
            r.witness_forms(),
            vec![&canonical_label(&gen_fnk(4, 3, Some(2)).unwrap()).unwrap()]
        );
    }

    #[test]
    fn triangle_free_order_four() {
        let r = run(4, 3, Objective::Le);
        assert_eq!(r.max_value, 24);
        let mut expected = vec![
            canonical_label(&gen_bk(&[4]).unwrap()).unwrap(),
            canonical_label(&gen_bk(&[2, 2]).unwrap()).unwrap(),
        ];
        expected.sort();
        assert_eq!(
            r.witnesses
                .iter()
                .map(|w| w.canonical.clone())
                .collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn forbidden_length_above_order_allows_everything() {
        let r = run(3, 4, Objective::Arcs);
        assert_eq!(r.max_value, 6);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn connected_scope_and_workers() {
        let all = run(4, 3, Objective::M1);
        let conn = search_extremal(
            &SearchConfig::new(4, 3, Objective::M1)
                .scope(Scope::ConnectedOnly)
                .jobs(3),
        )
        .unwrap();
        assert_eq!(all.max_value, conn.max_value);
        assert_eq!(all.witnesses, conn.witnesses);
    }

    #[test]
    fn bad_configs() {
        assert!(search_extremal(&SearchConfig::new(4, 1, Objective::Le)).is_err());
        assert!(search_extremal(&SearchConfig::new(4, 3, Objective::Le).jobs(0)).is_err());
        assert!(matches!(
            search_extremal(&SearchConfig::new(7, 3, Objective::Le)),
            Err(Error::SearchCap { .. })
        ));
    }
}
