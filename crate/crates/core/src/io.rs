//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0-based)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        let tok = tok.ok_or_else(|| Error::Parse {
            line: lineno,
            msg: format!("expected two integers ({what})"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("unexpected token `{extra}`"),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header, header_line, "header `n m`")?;

    let mut pairs = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (lineno, line) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, lineno, "edge `u v`")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        pairs.push((u, v));
        last_line = lineno;
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("declared {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, pairs)
}

/// Writes the canonical edge order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n# mid\n2 1\n0 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn writes_canonical() {
        let g = Graph::from_edge_list(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("2 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = parse_edge_list("# c\n3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_edge_list("2 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n1 1\n").is_err());
    }

    #[test]
    fn duplicate_lines_collapse() {
        // Declared count refers to lines; duplicates collapse afterwards.
        let g = parse_edge_list("2 2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.size(), 1);
    }
}
