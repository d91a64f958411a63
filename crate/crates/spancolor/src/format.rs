//! Plain-text graph format.
//!
//! Comment lines start with `#`. The first non-comment line is `n m`
//! (vertex count, edge count), followed by exactly `m` lines `u v` with
//! `0 <= u, v < n` and `u != v`. Parallel lines are allowed; the edge index
//! is the order of appearance. Serialization emits edges sorted by
//! (min endpoint, max endpoint), parallel copies consecutive.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn parse(text: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or(Error::Parse { line: 1, message: "missing header line".into() })?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), line_no, "vertex count")?;
    let m: usize = parse_field(parts.next(), line_no, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            message: "header must be exactly 'n m'".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: line_no,
            message: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), line_no, "endpoint")?;
        let v: usize = parse_field(parts.next(), line_no, "endpoint")?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: "edge line must be exactly 'u v'".into(),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                message: format!("loop edge {u} {v} not allowed"),
            });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: line_no,
                message: format!("endpoint out of range 0..{n}"),
            });
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            message: "trailing content after last edge".into(),
        });
    }
    Multigraph::new(n, edges).map_err(|e| Error::Parse { line: line_no, message: e.to_string() })
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    field
        .ok_or(Error::Parse { line, message: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, message: format!("invalid {what}") })
}

/// Canonical serialization: header then edges sorted by (min, max) endpoint.
pub fn serialize(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (a, b) in sorted_edges(g) {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Serialization preceded by `#`-prefixed comment lines.
pub fn serialize_with_comments(g: &Multigraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&serialize(g));
    out
}

/// One-line rendering for reports: "n m u1-v1 u2-v2 ...".
pub fn compact(g: &Multigraph) -> String {
    let mut out = format!("{} {}", g.vertex_count(), g.edge_count());
    for (a, b) in sorted_edges(g) {
        out.push_str(&format!(" {a}-{b}"));
    }
    out
}

/// The canonical form of a graph: same graph with edges reordered as the
/// serializer emits them.
pub fn canonical(g: &Multigraph) -> Multigraph {
    Multigraph::new(g.vertex_count(), sorted_edges(g)).expect("reordering preserves validity")
}

fn sorted_edges(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> =
        g.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;

    #[test]
    fn parses_p3() {
        let g = parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_loop_with_line_number() {
        let err = parse("2 1\n0 0\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_header_and_counts() {
        assert!(parse("").is_err());
        assert!(parse("3\n").is_err());
        assert!(parse("3 2\n0 1\n").is_err());
        assert!(parse("3 1\n0 1\n1 2\n").is_err());
        assert!(parse("2 1\n0 3\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse("# a path\n\n3 2\n# middle\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn serialization_is_canonical_and_round_trips() {
        let g = parse("4 3\n2 1\n3 2\n1 0\n").unwrap();
        let s = serialize(&g);
        assert_eq!(s, "4 3\n0 1\n1 2\n2 3\n");
        let back = parse(&s).unwrap();
        assert_eq!(serialize(&back), s);
        assert_eq!(back, canonical(&g));
    }

    #[test]
    fn compact_is_one_line() {
        assert_eq!(compact(&path(3)), "3 2 0-1 1-2");
    }
}
