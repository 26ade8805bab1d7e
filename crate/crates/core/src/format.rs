//! The `.sg` text format.
//!
//! ```text
//! c optional comment lines
//! p sg <n> <m>
//! e <u> <v> <+|->
//! ```
//!
//! Edges are 0-indexed with `u < v`. [`to_sg`] writes edges in sorted order,
//! so parsing and re-serializing a canonically ordered file is bit-exact.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_sg(text: &str) -> Result<SignedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                if fields.next() != Some("sg") {
                    return Err(parse_err(line, "expected `p sg <n> <m>`"));
                }
                let n = parse_count(fields.next(), line, "vertex count")?;
                let m = parse_count(fields.next(), line, "edge count")?;
                if fields.next().is_some() {
                    return Err(parse_err(line, "trailing fields on problem line"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = parse_count(fields.next(), line, "endpoint")?;
                let v = parse_count(fields.next(), line, "endpoint")?;
                let sign = match fields.next() {
                    Some("+") => Sign::Positive,
                    Some("-") => Sign::Negative,
                    other => return Err(parse_err(line, format!("bad sign {other:?}"))),
                };
                if fields.next().is_some() {
                    return Err(parse_err(line, "trailing fields on edge line"));
                }
                if u == v {
                    return Err(parse_err(line, format!("loop at vertex {u}")));
                }
                if u > v {
                    return Err(parse_err(line, format!("endpoints must satisfy u < v, got {u} {v}")));
                }
                if v >= n {
                    return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
                }
                if !seen.insert((u, v)) {
                    return Err(parse_err(line, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v, sign));
            }
            Some(tag) => return Err(parse_err(line, format!("unknown line type `{tag}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }

    let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    SignedGraph::new(n, edges)
}

fn parse_count(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let field = field.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    field.parse().map_err(|_| parse_err(line, format!("bad {what} `{field}`")))
}

pub fn to_sg(g: &SignedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p sg {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (e, s) in g.edges() {
        writeln!(out, "e {} {} {}", e.u(), e.v(), s).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_sg("c triangle\np sg 3 3\ne 0 1 -\ne 0 2 +\nc mid\ne 1 2 +\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.sign(0, 1), Some(Sign::Negative));
        assert_eq!(to_sg(&g), "p sg 3 3\ne 0 1 -\ne 0 2 +\ne 1 2 +\n");
    }

    #[test]
    fn duplicate_and_loop_report_line() {
        let err = parse_sg("p sg 3 2\ne 0 1 +\ne 0 1 -\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_sg("p sg 3 1\nc x\ne 2 2 +\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn rejects_malformed_lines() {
        for bad in [
            "e 0 1 +\n",
            "p sg 2 1\ne 0 1 *\n",
            "p sg 2 1\ne 1 0 +\n",
            "p sg 2 1\ne 0 2 +\n",
            "p sg 2 2\ne 0 1 +\n",
            "p sg 2\n",
            "q\n",
            "",
        ] {
            assert!(parse_sg(bad).is_err(), "{bad:?} should fail");
        }
    }
}
