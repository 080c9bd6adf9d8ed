//! Generators for the extremal digraph families.
//!
//! Every family here is a chain of blocks laid out on consecutive vertex
//! labels. Block `i` sends an arc to every vertex of each later block `j > i`
//! and receives none back ("one-way domination"). The families differ only in
//! what sits inside a block:
//!
//! * `F(n, k)`: complete digraphs of size `k`, plus one block of size
//!   `r = n mod k` when `r > 0`. The member `F(n, k)^s` puts the residual
//!   block at 1-based position `s`; `F(n, k)^0` is the unique member when
//!   `r = 0`.
//! * `BK(parts)`: balanced complete bipartite digraphs (both directions
//!   across the two sides), at most one block of odd size.
//! * transitive tournaments are `F(n, 1)`; complete digraphs are one block.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::digraph::{Digraph, DigraphBuilder};
use crate::error::{Error, Result};

/// Declarative description of one family member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `r_position` is the 1-based index of the residual block; `None` iff
    /// `k` divides `n`.
    Fnk {
        n: usize,
        k: usize,
        r_position: Option<usize>,
    },
    Bk {
        parts: Vec<usize>,
    },
    TransitiveTournament {
        n: usize,
    },
    CompleteDigraph {
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BlockKind {
    Complete,
    Bipartite,
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Fnk { n, .. }
            | FamilySpec::TransitiveTournament { n }
            | FamilySpec::CompleteDigraph { n } => *n,
            FamilySpec::Bk { parts } => parts.iter().sum(),
        }
    }

    /// Block sizes in chain order, after validating the parameters.
    pub fn block_sizes(&self) -> Result<Vec<usize>> {
        match self {
            FamilySpec::Fnk { n, k, r_position } => fnk_block_sizes(*n, *k, *r_position),
            FamilySpec::Bk { parts } => {
                validate_bk(parts)?;
                Ok(parts.clone())
            }
            FamilySpec::TransitiveTournament { n } => {
                positive_order(*n)?;
                Ok(vec![1; *n])
            }
            FamilySpec::CompleteDigraph { n } => {
                positive_order(*n)?;
                Ok(vec![*n])
            }
        }
    }

    /// Vertex label ranges of the blocks.
    pub fn blocks(&self) -> Result<Vec<Range<usize>>> {
        Ok(ranges(&self.block_sizes()?))
    }

    pub fn build(&self) -> Result<Digraph> {
        let sizes = self.block_sizes()?;
        let kind = match self {
            FamilySpec::Bk { .. } => BlockKind::Bipartite,
            _ => BlockKind::Complete,
        };
        chain(&sizes, kind)
    }
}

fn positive_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Family("order must be at least 1".into()));
    }
    Ok(())
}

fn fnk_block_sizes(n: usize, k: usize, r_position: Option<usize>) -> Result<Vec<usize>> {
    positive_order(n)?;
    if k == 0 {
        return Err(Error::Family("block size k must be at least 1".into()));
    }
    let (q, r) = (n / k, n % k);
    match (r, r_position) {
        (0, None) => Ok(vec![k; q]),
        (0, Some(_)) => Err(Error::Family(format!(
            "n={n} is a multiple of k={k}; no residual block to position"
        ))),
        (_, None) => Err(Error::Family(format!(
            "n={n}, k={k} leaves a residual block of size {r}; its position is required"
        ))),
        (_, Some(pos)) if pos == 0 || pos > q + 1 => Err(Error::Family(format!(
            "residual block position {pos} outside 1..={}",
            q + 1
        ))),
        (_, Some(pos)) => {
            let mut sizes = vec![k; q + 1];
            sizes[pos - 1] = r;
            Ok(sizes)
        }
    }
}

fn validate_bk(parts: &[usize]) -> Result<()> {
    if parts.is_empty() {
        return Err(Error::Family("at least one part is required".into()));
    }
    if parts.contains(&0) {
        return Err(Error::Family("parts must be positive".into()));
    }
    if parts.iter().filter(|&&p| p % 2 == 1).count() > 1 {
        return Err(Error::Family("at most one part may be odd".into()));
    }
    if parts.iter().sum::<usize>() > crate::MAX_VERTICES {
        return Err(Error::Capacity {
            n: parts.iter().sum(),
            max: crate::MAX_VERTICES,
        });
    }
    Ok(())
}

fn ranges(sizes: &[usize]) -> Vec<Range<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = start..start + s;
            start += s;
            r
        })
        .collect()
}

fn chain(sizes: &[usize], kind: BlockKind) -> Result<Digraph> {
    let blocks = ranges(sizes);
    let n = blocks.last().map_or(0, |b| b.end);
    let mut builder = DigraphBuilder::new(n)?;
    for (i, block) in blocks.iter().enumerate() {
        match kind {
            BlockKind::Complete => {
                builder.add_all(block.clone(), block.clone())?;
            }
            BlockKind::Bipartite => {
                // Larger side first, so it takes the lower labels.
                let mid = block.start + block.len().div_ceil(2);
                builder.add_all(block.start..mid, mid..block.end)?;
                builder.add_all(mid..block.end, block.start..mid)?;
            }
        }
        for later in &blocks[i + 1..] {
            builder.add_all(block.clone(), later.clone())?;
        }
    }
    Ok(builder.build())
}

/// `F(n, k)^s` with the residual block at `r_position` (required iff `k ∤ n`).
pub fn gen_fnk(n: usize, k: usize, r_position: Option<usize>) -> Result<Digraph> {
    FamilySpec::Fnk { n, k, r_position }.build()
}

/// The member with the residual block last (or `F^0` when `k | n`).
pub fn gen_fnk_last(n: usize, k: usize) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::Family("block size k must be at least 1".into()));
    }
    gen_fnk(n, k, residual_last(n, k))
}

fn residual_last(n: usize, k: usize) -> Option<usize> {
    (!n.is_multiple_of(k)).then_some(n / k + 1)
}

/// All members `F^1 ..= F^{q+1}` when `r > 0`, otherwise just `F^0`.
pub fn enumerate_fnk_members(n: usize, k: usize) -> Result<Vec<Digraph>> {
    fnk_member_specs(n, k)?
        .iter()
        .map(FamilySpec::build)
        .collect()
}

pub fn fnk_member_specs(n: usize, k: usize) -> Result<Vec<FamilySpec>> {
    positive_order(n)?;
    if k == 0 {
        return Err(Error::Family("block size k must be at least 1".into()));
    }
    if n.is_multiple_of(k) {
        return Ok(vec![FamilySpec::Fnk {
            n,
            k,
            r_position: None,
        }]);
    }
    Ok((1..=n / k + 1)
        .map(|pos| FamilySpec::Fnk {
            n,
            k,
            r_position: Some(pos),
        })
        .collect())
}

pub fn gen_bk(parts: &[usize]) -> Result<Digraph> {
    FamilySpec::Bk {
        parts: parts.to_vec(),
    }
    .build()
}

/// Compositions of `n` into parts from {4, 2}, followed, when `n` is odd, by
/// one final part from {3, 1}.
pub fn bk01_compositions(n: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining % 2 == 1 {
            for last in [3, 1] {
                if remaining == last {
                    prefix.push(last);
                    out.push(prefix.clone());
                    prefix.pop();
                }
            }
        } else if remaining == 0 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for part in [4, 2] {
            if remaining > part || (remaining == part && remaining.is_multiple_of(2)) {
                prefix.push(part);
                extend(remaining - part, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn enumerate_bk01_members(n: usize) -> Result<Vec<Digraph>> {
    bk01_compositions(n)
        .iter()
        .map(|parts| gen_bk(parts))
        .collect()
}

pub fn gen_transitive_tournament(n: usize) -> Result<Digraph> {
    FamilySpec::TransitiveTournament { n }.build()
}

pub fn gen_complete_digraph(n: usize) -> Result<Digraph> {
    FamilySpec::CompleteDigraph { n }.build()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Fnk {
                n,
                k,
                r_position: Some(s),
            } => write!(f, "fnk:n={n},k={k},s={s}"),
            FamilySpec::Fnk {
                n,
                k,
                r_position: None,
            } => write!(f, "fnk:n={n},k={k}"),
            FamilySpec::Bk { parts } => {
                let joined: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "bk:parts={}", joined.join("+"))
            }
            FamilySpec::TransitiveTournament { n } => write!(f, "tt:n={n}"),
            FamilySpec::CompleteDigraph { n } => write!(f, "kd:n={n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `fnk:n=9,k=3,s=3`, `bk:parts=4+2+3`, `tt:n=7` or `kd:n=5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Family(format!("`{s}`: {msg}"));
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `<kind>:<params>`"))?;
        let mut fields = Vec::new();
        for item in params.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            if fields.iter().any(|(k, _)| *k == key) {
                return Err(bad(&format!("duplicate key `{key}`")));
            }
            fields.push((key, value));
        }
        let take = |key: &str| fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        let number = |key: &str| -> Result<usize> {
            let raw = take(key).ok_or_else(|| bad(&format!("missing `{key}`")))?;
            raw.parse()
                .map_err(|_| bad(&format!("`{key}` is not a non-negative integer")))
        };
        let allowed: &[&str] = match kind {
            "fnk" => &["n", "k", "s"],
            "bk" => &["parts"],
            "tt" | "kd" => &["n"],
            _ => return Err(bad("unknown family kind (fnk, bk, tt, kd)")),
        };
        if let Some((key, _)) = fields.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(bad(&format!("unexpected key `{key}`")));
        }
        let spec = match kind {
            "fnk" => FamilySpec::Fnk {
                n: number("n")?,
                k: number("k")?,
                r_position: take("s").map(|_| number("s")).transpose()?,
            },
            "bk" => {
                let raw = take("parts").ok_or_else(|| bad("missing `parts`"))?;
                let parts = raw
                    .split('+')
                    .map(|p| {
                        p.parse()
                            .map_err(|_| bad("parts must be `a+b+...` integers"))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                FamilySpec::Bk { parts }
            }
            "tt" => FamilySpec::TransitiveTournament { n: number("n")? },
            _ => FamilySpec::CompleteDigraph { n: number("n")? },
        };
        spec.block_sizes()?;
        Ok(spec)
    }
}
