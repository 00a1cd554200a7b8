//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits
//! per printable byte, zero padded.

use super::Graph;
use crate::error::GraphError;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        offset,
        message: message.into(),
    }
}

fn six_bits(bytes: &[u8], offset: usize) -> Result<u8, GraphError> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(err(offset, format!("byte {b:#04x} outside the graph6 range")));
    }
    Ok(b - 63)
}

pub(super) fn parse(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = line.as_bytes();
    if bytes.len() <= start {
        return Err(err(start, "empty graph6 string"));
    }

    let (n, mut pos) = if bytes[start] != 126 {
        (six_bits(bytes, start)? as usize, start + 1)
    } else if bytes.get(start + 1) != Some(&126) {
        let mut n = 0usize;
        for i in 0..3 {
            let at = start + 1 + i;
            if at >= bytes.len() {
                return Err(err(at, "truncated size header"));
            }
            n = n << 6 | six_bits(bytes, at)? as usize;
        }
        (n, start + 4)
    } else {
        let mut n = 0usize;
        for i in 0..6 {
            let at = start + 2 + i;
            if at >= bytes.len() {
                return Err(err(at, "truncated size header"));
            }
            n = n << 6 | six_bits(bytes, at)? as usize;
        }
        (n, start + 8)
    };
    if n > super::MAX_VERTICES {
        return Err(GraphError::TooLarge(format!(
            "graph6 declares n = {n}, limit is {}",
            super::MAX_VERTICES
        )));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != expected {
        return Err(err(
            pos + body.len().min(expected),
            format!("expected {expected} data bytes for n = {n}, found {}", body.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    let mut current = 0u8;
    'outer: for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = six_bits(bytes, pos)?;
                pos += 1;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if current & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, "non-zero padding bits"));
        }
    }
    Graph::new(n, edges)
}

pub(super) fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut current = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            current = current << 1 | adjacent[i * n + j] as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(current + 63);
                current = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((current << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;

    // Reference strings produced by networkx.to_graph6_bytes(header=False).
    #[test]
    fn matches_reference_encoder() {
        let k4 = Graph::parse_graph6("C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.m(), 6);
        assert_eq!(k4.to_graph6(), "C~");
        assert!(k4.same_edge_set(&builtin("k4").unwrap()));

        let petersen = Graph::parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.m(), 15);
        assert!(petersen.is_cubic());
        assert_eq!(Graph::new(1, []).unwrap().to_graph6(), "@");
    }

    #[test]
    fn single_edge_and_column_major_order() {
        let g = Graph::parse_graph6("A_").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        let k4 = Graph::parse_graph6("C~").unwrap();
        assert_eq!(
            k4.edges(),
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn accepts_header_and_newline() {
        let g = Graph::parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            Graph::parse_graph6("C"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            Graph::parse_graph6("C~~"),
            Err(GraphError::Parse { .. })
        ));
        // n = 4 has six bits, so no padding; n = 3 has three: "B" + 'w' (0b111000) ok, 'x' not.
        assert!(Graph::parse_graph6("Bw").is_ok());
        assert!(matches!(
            Graph::parse_graph6("Bx"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            Graph::parse_graph6("C\x01"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
        assert!(matches!(Graph::parse_graph6(""), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn long_header_round_trip() {
        let n = 63;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::new(n, edges).unwrap();
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert!(Graph::parse_graph6(&s).unwrap().same_edge_set(&g));
    }
}
