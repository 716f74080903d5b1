//! Text formats for posets and graphs.
//!
//! Poset files: a header line `poset <d>` followed by one cover per line,
//! `i j` meaning element i is covered by element j, 1-indexed. Graph files
//! are the same with a `graph <n>` header and edge lines. Blank lines are
//! skipped and `#` starts a comment (whole-line or trailing).

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poset::Poset;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct BodyLine {
    line_no: usize,
    a: usize,
    b: usize,
}

fn parse_lines(text: &str, kind: &str) -> Result<(usize, Vec<BodyLine>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut body = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        if header.is_none() {
            let tag = tokens.next().unwrap_or("");
            if tag != kind {
                return Err(parse_err(
                    line_no,
                    format!("expected header `{kind} <size>`, found `{content}`"),
                ));
            }
            let size: usize = tokens
                .next()
                .ok_or_else(|| parse_err(line_no, "missing size in header"))?
                .parse()
                .map_err(|_| parse_err(line_no, "size must be a nonnegative integer"))?;
            if tokens.next().is_some() {
                return Err(parse_err(line_no, "trailing tokens after header"));
            }
            header = Some((line_no, size));
            continue;
        }
        let mut next_index = || -> Result<usize> {
            let tok = tokens
                .next()
                .ok_or_else(|| parse_err(line_no, "expected two indices"))?;
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("`{tok}` is not an index")))?;
            if v == 0 {
                return Err(parse_err(line_no, "indices are 1-based"));
            }
            Ok(v)
        };
        let a = next_index()?;
        let b = next_index()?;
        if tokens.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens after pair"));
        }
        body.push(BodyLine { line_no, a, b });
    }
    let (_, size) =
        header.ok_or_else(|| parse_err(1, format!("missing `{kind} <size>` header")))?;
    Ok((size, body))
}

fn check_indices(size: usize, l: &BodyLine) -> Result<()> {
    for v in [l.a, l.b] {
        if v > size {
            return Err(parse_err(
                l.line_no,
                format!("index {v} out of range 1..={size}"),
            ));
        }
    }
    Ok(())
}

/// Parses the poset text format. Duplicate covers, loops, and cycles are
/// rejected with the offending line number.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let (size, body) = parse_lines(text, "poset")?;
    if size == 0 {
        return Err(parse_err(1, "poset size must be positive"));
    }
    let mut covers: Vec<(usize, usize)> = Vec::with_capacity(body.len());
    for l in &body {
        check_indices(size, l)?;
        if l.a == l.b {
            return Err(parse_err(l.line_no, format!("loop cover {} {}", l.a, l.b)));
        }
        let pair = (l.a - 1, l.b - 1);
        if covers.contains(&pair) {
            return Err(parse_err(
                l.line_no,
                format!("duplicate cover {} {}", l.a, l.b),
            ));
        }
        covers.push(pair);
        // Incremental cycle detection so the error can name the line that
        // closed the cycle.
        if let Err(Error::CyclicCovers { .. }) = Poset::from_covers(size, &covers) {
            return Err(parse_err(
                l.line_no,
                format!("cover {} {} closes a cycle", l.a, l.b),
            ));
        }
    }
    Poset::from_covers(size, &covers)
}

/// Parses the graph text format. Loops and duplicate edges are rejected
/// with the offending line number.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let (size, body) = parse_lines(text, "graph")?;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(body.len());
    for l in &body {
        check_indices(size, l)?;
        if l.a == l.b {
            return Err(parse_err(l.line_no, format!("loop edge {} {}", l.a, l.b)));
        }
        let pair = (l.a.min(l.b) - 1, l.a.max(l.b) - 1);
        if edges.contains(&pair) {
            return Err(parse_err(
                l.line_no,
                format!("duplicate edge {} {}", l.a, l.b),
            ));
        }
        edges.push(pair);
    }
    SimpleGraph::from_edges(size, &edges)
}

/// Canonical poset text: sorted cover list, 1-indexed.
pub fn format_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.size());
    for &(lo, hi) in p.hasse_edges() {
        out.push_str(&format!("{} {}\n", lo + 1, hi + 1));
    }
    out
}

/// Canonical graph text: sorted edge list, 1-indexed.
pub fn format_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {}\n", g.size());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_round_trip() {
        let text = "# V poset\nposet 3\n1 3\n2 3  # b < c\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.hasse_edges(), &[(0, 2), (1, 2)]);
        assert_eq!(format_poset(&p), "poset 3\n1 3\n2 3\n");
        assert_eq!(parse_poset(&format_poset(&p)).unwrap(), p);
    }

    #[test]
    fn graph_round_trip() {
        let text = "graph 4\n1 2\n3 4\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(format_graph(&g), text);
    }

    #[test]
    fn cycle_error_names_the_line() {
        let text = "poset 3\n1 2\n2 3\n3 1\n";
        match parse_poset(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("cycle"));
            }
            other => panic!("expected cycle parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_and_loop_errors() {
        assert!(matches!(
            parse_poset("poset 2\n1 2\n1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("graph 2\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("graph 2\n2 1\n1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn header_and_index_errors() {
        assert!(matches!(
            parse_poset("graph 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_poset("poset 2\n1 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("poset 2\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_poset(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_poset("poset 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        // graph 0 is fine (the empty graph)
        assert_eq!(parse_graph("graph 0\n").unwrap().size(), 0);
    }
}
