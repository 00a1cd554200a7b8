use std::str::FromStr;

use super::Graph;
use crate::error::GraphError;

/// Named graphs with fixed labelings.
///
/// * `k4`: vertices 0..4, all pairs.
/// * `k33`: parts {0, 1, 2} and {3, 4, 5}.
/// * `prism`: triangles 0-1-2 and 3-4-5, matching i — i+3.
/// * `petersen`: outer cycle 0..5, spokes i — i+5, inner pentagram
///   5+i — 5+(i+2 mod 5).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    K4,
    K33,
    Prism,
    Petersen,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::K4, Builtin::K33, Builtin::Prism, Builtin::Petersen];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::K4 => "k4",
            Builtin::K33 => "k33",
            Builtin::Prism => "prism",
            Builtin::Petersen => "petersen",
        }
    }

    pub fn graph(self) -> Graph {
        let edges: Vec<(usize, usize)> = match self {
            Builtin::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            Builtin::K33 => (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect(),
            Builtin::Prism => vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
            Builtin::Petersen => (0..5)
                .map(|i| (i, (i + 1) % 5))
                .chain((0..5).map(|i| (i, i + 5)))
                .chain((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)))
                .collect(),
        };
        let n = match self {
            Builtin::K4 => 4,
            Builtin::K33 | Builtin::Prism => 6,
            Builtin::Petersen => 10,
        };
        Graph::new(n, edges).expect("builtin graphs are simple")
    }
}

impl FromStr for Builtin {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s.to_ascii_lowercase())
            .ok_or_else(|| GraphError::UnknownBuiltin(s.to_string()))
    }
}

pub fn builtin(name: &str) -> Result<Graph, GraphError> {
    Ok(name.parse::<Builtin>()?.graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> usize {
        // BFS from every vertex; shortest cycle through the root.
        let mut best = usize::MAX;
        for s in 0..g.n() {
            let mut dist = vec![usize::MAX; g.n()];
            let mut parent = vec![usize::MAX; g.n()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in g.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn named_graphs() {
        let k4 = builtin("k4").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let p = builtin("petersen").unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.is_cubic());
        assert_eq!(girth(&p), 5);
        assert_eq!(girth(&builtin("k33").unwrap()), 4);
        let prism = builtin("prism").unwrap();
        assert_eq!(girth(&prism), 3);
        assert_eq!(prism.edges_within(0b111).len(), 3);
        assert_eq!(prism.edges_within(0b111000).len(), 3);
        assert!(matches!(builtin("k5"), Err(GraphError::UnknownBuiltin(_))));
    }
}
