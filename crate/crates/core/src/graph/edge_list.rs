//! Plain edge-list text: a header line `n m`, then `m` lines `u v` (0-based).
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::GraphError;

pub(super) fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut offset = 0;
    let mut records = Vec::new();
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            records.push((offset, trimmed));
        }
        offset += line.len();
    }
    let mut iter = records.into_iter();
    let (at, header) = iter.next().ok_or(GraphError::Parse {
        offset: 0,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = pair(header, at)?;
    let mut edges = Vec::with_capacity(m);
    for (at, line) in iter {
        edges.push(pair(line, at)?);
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            offset: text.len(),
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn pair(line: &str, offset: usize) -> Result<(usize, usize), GraphError> {
    let bad = || GraphError::Parse {
        offset,
        message: format!("expected two non-negative integers, got `{line}`"),
    };
    let mut fields = line.split_whitespace();
    let a = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if fields.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

pub(super) fn encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let g = Graph::parse_edge_list("# triangle\n3 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn reports_offsets() {
        let err = Graph::parse_edge_list("2 1\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                offset: 4,
                message: "expected two non-negative integers, got `0 x`".into()
            }
        );
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(matches!(
            Graph::parse_edge_list("2 2\n0 1\n1 0\n"),
            Err(GraphError::Parallel(0, 1))
        ));
    }
}
