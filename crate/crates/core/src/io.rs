//! Text formats.
//!
//! Arclist, the interchange format:
//!
//! ```text
//! DIGRAPH <n> <e>
//! <u> <v>        (e lines, 0-based, sorted lexicographically on output)
//! ```
//!
//! Every line ends in LF. DOT and JSON are export-only.

use std::fmt::Write as _;
use std::ops::Range;

use serde::Serialize;

use crate::digraph::{Digraph, DigraphBuilder};
use crate::error::{Error, Result};

pub const JSON_SCHEMA_VERSION: u32 = 1;

pub fn render_arclist(g: &Digraph) -> String {
    let mut out = format!("DIGRAPH {} {}\n", g.order(), g.arc_count());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_arclist(text: &str) -> Result<Digraph> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, e) = match fields.as_slice() {
        ["DIGRAPH", n, e] => (
            n.parse::<usize>()
                .map_err(|_| err(1, format!("bad vertex count `{n}`")))?,
            e.parse::<usize>()
                .map_err(|_| err(1, format!("bad arc count `{e}`")))?,
        ),
        _ => return Err(err(1, "expected `DIGRAPH <n> <e>`".into())),
    };
    let mut builder = DigraphBuilder::new(n).map_err(|e| err(1, e.to_string()))?;
    let mut arcs = 0;
    let mut seen = std::collections::HashSet::new();
    for (line, content) in lines {
        if content.is_empty() {
            continue;
        }
        let pair: Vec<&str> = content.split_whitespace().collect();
        let (u, v) = match pair.as_slice() {
            [u, v] => (
                u.parse::<usize>()
                    .map_err(|_| err(line, format!("bad vertex `{u}`")))?,
                v.parse::<usize>()
                    .map_err(|_| err(line, format!("bad vertex `{v}`")))?,
            ),
            _ => return Err(err(line, "expected `<u> <v>`".into())),
        };
        if !seen.insert((u, v)) {
            return Err(err(line, format!("duplicate arc {u} {v}")));
        }
        builder
            .add_arc(u, v)
            .map_err(|e| err(line, e.to_string()))?;
        arcs += 1;
    }
    if arcs != e {
        return Err(err(1, format!("header declares {e} arcs, found {arcs}")));
    }
    Ok(builder.build())
}

/// DOT digraph. With `blocks`, each vertex is labelled with its 1-based block.
pub fn render_dot(g: &Digraph, blocks: Option<&[Range<usize>]>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.order() {
        match blocks.and_then(|b| b.iter().position(|r| r.contains(&v))) {
            Some(i) => {
                let _ = writeln!(out, "  {v} [label=\"{v} (V{})\"];", i + 1);
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

/// Wraps a payload with the top-level `schema` field.
#[derive(Serialize)]
pub struct Versioned<'a, T: Serialize> {
    pub schema: u32,
    #[serde(flatten)]
    pub payload: &'a T,
}

pub fn to_json<T: Serialize>(payload: &T) -> String {
    let doc = Versioned {
        schema: JSON_SCHEMA_VERSION,
        payload,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

#[derive(Serialize)]
pub struct DigraphJson {
    pub n: usize,
    pub e: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<[usize; 2]>>,
}

impl DigraphJson {
    pub fn new(g: &Digraph, blocks: Option<&[Range<usize>]>) -> Self {
        Self {
            n: g.order(),
            e: g.arc_count(),
            arcs: g.arcs().map(|(u, v)| [u, v]).collect(),
            blocks: blocks.map(|b| b.iter().map(|r| [r.start, r.end]).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn arclist_layout() {
        let g = Digraph::from_arcs(3, [(2, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(render_arclist(&g), "DIGRAPH 3 3\n0 1\n0 2\n2 0\n");
        assert_eq!(render_arclist(&Digraph::empty(2).unwrap()), "DIGRAPH 2 0\n");
    }

    #[test]
    fn parse_accepts_unsorted_and_blank_lines() {
        let g = parse_arclist("DIGRAPH 3 2\n1 2\n\n0 1\n").unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("GRAPH 2 0\n", 1),
            ("DIGRAPH x 0\n", 1),
            ("DIGRAPH 0 0\n", 1),
            ("DIGRAPH 2 1\n0 0\n", 2),
            ("DIGRAPH 2 2\n0 1\n0 1\n", 3),
            ("DIGRAPH 2 1\n0 5\n", 2),
            ("DIGRAPH 2 1\n0\n", 2),
            ("DIGRAPH 2 2\n0 1\n", 1),
        ];
        for (text, line) in cases {
            match parse_arclist(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn dot_with_blocks() {
        let spec: FamilySpec = "tt:n=3".parse().unwrap();
        let g = spec.build().unwrap();
        let dot = render_dot(&g, Some(&spec.blocks().unwrap()));
        assert_eq!(dot.matches("->").count(), 3);
        assert!(dot.contains("2 [label=\"2 (V3)\"];"));
        assert!(dot.starts_with("digraph G {\n") && dot.ends_with("}\n"));
    }

    #[test]
    fn json_has_schema() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&to_json(&DigraphJson::new(&g, None))).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["e"], 1);
        assert_eq!(v["arcs"], serde_json::json!([[0, 1]]));
        assert!(v.get("blocks").is_none());
    }
}
