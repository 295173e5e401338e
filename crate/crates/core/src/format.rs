//! The `rtg1` text format.
//!
//! ```text
//! rtg1 <n> <m>
//! <u> <v> <c>      (m lines, 0 <= u < v < n, c >= 1)
//! ```
//!
//! Lines starting with `#` are comments; blank lines are ignored. Writers
//! emit edges sorted by `(u, v)` and terminate the file with a newline.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Color, ColoredGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatErrorKind {
    #[error("missing `rtg1 <n> <m>` header")]
    MissingHeader,
    #[error("bad header: {0}")]
    BadHeader(String),
    #[error("expected `<u> <v> <c>`, found {0:?}")]
    BadEdgeLine(String),
    #[error("invalid integer {0:?}")]
    BadInteger(String),
    #[error("vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge endpoints must satisfy u < v, found {0} {1}")]
    UnorderedEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("color must be >= 1")]
    ZeroColor,
    #[error("duplicate edge {{{0}, {1}}} (first seen on line {2})")]
    DuplicateEdge(usize, usize, usize),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

fn err(line: usize, kind: FormatErrorKind) -> FormatError {
    FormatError { line, kind }
}

fn int<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, FormatError> {
    tok.parse()
        .map_err(|_| err(line, FormatErrorKind::BadInteger(tok.to_string())))
}

pub fn parse_rtg1(text: &str) -> Result<ColoredGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, FormatErrorKind::MissingHeader))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.first() != Some(&"rtg1") {
        return Err(err(hline, FormatErrorKind::MissingHeader));
    }
    if toks.len() != 3 {
        return Err(err(hline, FormatErrorKind::BadHeader(header.to_string())));
    }
    let n: usize = int(toks[1], hline)?;
    let m: usize = int(toks[2], hline)?;

    // (u, v) -> line of first occurrence
    let mut seen = std::collections::HashMap::new();
    let mut edges: Vec<(usize, usize, Color)> = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(err(lineno, FormatErrorKind::BadEdgeLine(line.to_string())));
        }
        let u: usize = int(toks[0], lineno)?;
        let v: usize = int(toks[1], lineno)?;
        let c: Color = int(toks[2], lineno)?;
        for x in [u, v] {
            if x >= n {
                return Err(err(
                    lineno,
                    FormatErrorKind::VertexOutOfRange { vertex: x, n },
                ));
            }
        }
        if u == v {
            return Err(err(lineno, FormatErrorKind::Loop(u)));
        }
        if u > v {
            return Err(err(lineno, FormatErrorKind::UnorderedEdge(u, v)));
        }
        if c == 0 {
            return Err(err(lineno, FormatErrorKind::ZeroColor));
        }
        if let Some(&first) = seen.get(&(u, v)) {
            return Err(err(lineno, FormatErrorKind::DuplicateEdge(u, v, first)));
        }
        seen.insert((u, v), lineno);
        edges.push((u, v, c));
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            FormatErrorKind::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            },
        ));
    }
    // Everything the constructor rejects was rejected above with a line number.
    Ok(ColoredGraph::new(n, edges).expect("validated edges"))
}

pub fn write_rtg1(g: &ColoredGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    let _ = writeln!(out, "rtg1 {} {}", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.color);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_rtg1("# k2\nrtg1 3 1\n\n# the edge\n0 2 7\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.color(0, 2), Some(7));
        assert_eq!(write_rtg1(&g), "rtg1 3 1\n0 2 7\n");
    }

    #[test]
    fn line_numbered_errors() {
        let e = parse_rtg1("rtg1 3 2\n0 1 1\n1 0 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, FormatErrorKind::UnorderedEdge(1, 0));

        let e = parse_rtg1("rtg1 3 2\n0 1 1\n0 1 2\n").unwrap_err();
        assert_eq!(e.kind, FormatErrorKind::DuplicateEdge(0, 1, 2));
        assert_eq!(e.line, 3);

        let e = parse_rtg1("rtg1 3 1\n1 1 1\n").unwrap_err();
        assert_eq!((e.line, e.kind), (2, FormatErrorKind::Loop(1)));

        let e = parse_rtg1("rtg1 3 1\n# x\n0 5 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(
            e.kind,
            FormatErrorKind::VertexOutOfRange { vertex: 5, n: 3 }
        );

        let e = parse_rtg1("rtg1 3 1\n0 1 0\n").unwrap_err();
        assert_eq!(e.kind, FormatErrorKind::ZeroColor);

        let e = parse_rtg1("rtg1 3 2\n0 1 1\n").unwrap_err();
        assert!(matches!(
            e.kind,
            FormatErrorKind::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        ));

        let e = parse_rtg1("graph 3 2\n").unwrap_err();
        assert_eq!((e.line, e.kind), (1, FormatErrorKind::MissingHeader));

        let e = parse_rtg1("rtg1 3 1\n0 x 1\n").unwrap_err();
        assert_eq!(e.kind, FormatErrorKind::BadInteger("x".into()));
    }

    #[test]
    fn empty_input() {
        assert_eq!(
            parse_rtg1("").unwrap_err().kind,
            FormatErrorKind::MissingHeader
        );
        assert_eq!(parse_rtg1("rtg1 0 0\n").unwrap(), ColoredGraph::empty(0));
    }
}
