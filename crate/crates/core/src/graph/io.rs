//! Edge-list text format.
//!
//! ```text
//! 3
//! 0 1 1
//! 1 2 1
//! ```
//!
//! The first line is the vertex count, each further line is `u v w` with
//! 0-indexed vertices. Blank lines are ignored.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn load_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let vertex_count: usize = header.parse().map_err(|_| Error::Parse {
        line: header_line,
        message: format!("invalid vertex count `{header}`"),
    })?;

    let mut g = Graph::new(vertex_count);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected `u v w`, found `{content}`"),
            });
        }
        let parse = |s: &str| -> Result<i64> {
            s.parse().map_err(|_| Error::Parse {
                line,
                message: format!("invalid integer `{s}`"),
            })
        };
        let (u, v, w) = (parse(fields[0])?, parse(fields[1])?, parse(fields[2])?);
        if u < 0 || v < 0 {
            return Err(Error::Parse {
                line,
                message: "negative vertex id".into(),
            });
        }
        g.add_edge(u as usize, v as usize, w)
            .map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
    }
    Ok(g)
}

/// Canonical text: edges sorted by `(u, v)`, LF line endings.
pub fn store_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + g.edge_count() * 10);
    let _ = writeln!(out, "{}", g.vertex_count());
    for (u, v, w) in g.edges() {
        let _ = writeln!(out, "{u} {v} {}", w.get());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_path_graph() {
        let g = load_graph("3\n0 1 1\n1 2 1\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn self_loop_reports_line() {
        match load_graph("2\n0 0 1\n") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(load_graph(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            load_graph("x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            load_graph("3\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_graph("3\n0 1 1\n1 2 9\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn store_sorts_edges() {
        let g = Graph::from_edges(3, [(2, 1, 1), (0, 1, 3)]).unwrap();
        assert_eq!(store_graph(&g), "3\n0 1 3\n1 2 1\n");
    }
}
