//! The plain-text graph format:
//!
//! ```text
//! # comment
//! nodes 3
//! A 1 2
//! B 0 1
//! ```
//!
//! One `nodes <n>` header, then one `<color> <u> <v>` line per edge.

use thiserror::Error;
use wfu_core::{Color, TriGraph, MAX_NODES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; the line after the last one for a missing header.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<TriGraph, ParseError> {
    let mut graph: Option<TriGraph> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (&mut graph, tokens.as_slice()) {
            (None, ["nodes", n]) => {
                let n: usize = n
                    .parse()
                    .map_err(|_| err(line, format!("bad node count {n:?}")))?;
                if n > MAX_NODES {
                    return Err(err(
                        line,
                        format!("{n} nodes exceed the cap of {MAX_NODES}"),
                    ));
                }
                graph = Some(TriGraph::empty(n).map_err(|e| err(line, e.to_string()))?);
            }
            (None, ["nodes", ..]) => return Err(err(line, "expected `nodes <n>`")),
            (None, _) => return Err(err(line, "expected the `nodes <n>` header first")),
            (Some(_), ["nodes", ..]) => return Err(err(line, "duplicate `nodes` header")),
            (Some(g), [color, u, v]) => {
                let color: Color = color.parse().map_err(|_| {
                    err(line, format!("unknown color {color:?}; expected A, B or C"))
                })?;
                let n = g.n();
                let node = |s: &str| -> Result<usize, ParseError> {
                    let x: usize = s
                        .parse()
                        .map_err(|_| err(line, format!("bad node {s:?}")))?;
                    if x >= n {
                        return Err(err(line, format!("node {x} out of range for {n} nodes")));
                    }
                    Ok(x)
                };
                let (u, v) = (node(u)?, node(v)?);
                g.insert(color, u, v)
                    .map_err(|e| err(line, e.to_string()))?;
            }
            (Some(_), _) => return Err(err(line, "expected `<color> <u> <v>`")),
        }
    }
    graph.ok_or_else(|| err(last + 1, "missing `nodes <n>` header"))
}

/// Canonical text: header, then edges by color and row-major order.
pub fn serialize_graph(g: &TriGraph) -> String {
    let mut out = format!("nodes {}\n", g.n());
    for (color, u, v) in g.edges() {
        out.push_str(&format!("{color} {u} {v}\n"));
    }
    out
}

/// The three counterexample graphs as `(file stem, text)`, edges listed in
/// the order they are usually drawn in.
pub const FIXTURES: [(&str, &str); 3] = [
    (
        "G1",
        "# G1: only multicolored loops, yet satisfies F1\n\
         nodes 4\n\
         A 1 3\n\
         B 0 1\nB 3 0\nB 2 3\n\
         C 0 3\nC 1 2\n",
    ),
    (
        "G2",
        "# G2: the double loop, no monochrome subchain, satisfies F2\n\
         nodes 3\n\
         A 1 2\n\
         B 0 1\nB 2 0\n\
         C 0 2\n",
    ),
    (
        "G3",
        "# G3: satisfies F3 with a cyclic union\n\
         nodes 3\n\
         A 1 2\nA 2 0\n\
         B 0 1\n\
         C 0 2\n",
    ),
];
