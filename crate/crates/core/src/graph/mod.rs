//! Simple undirected graphs with positional edge identities.
//!
//! Edges are stored as normalized pairs `(u, v)` with `u < v`; an edge's id
//! is its index in the edge list. Transforms in [`transform`] build new
//! graphs and report how child edges map back onto parent edges.

mod builtin;
pub mod canon;
mod edge_list;
mod edge_set;
mod graph6;
pub mod transform;

pub use builtin::{builtin, Builtin};
pub use edge_set::EdgeSet;

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Vertex limit for anything that uses vertex bitmasks.
pub const MAX_VERTICES: usize = 64;
/// Edge limit imposed by [`EdgeSet`].
pub const MAX_EDGES: usize = EdgeSet::CAPACITY;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Builds a simple graph; rejects loops, parallel edges and bad endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(format!(
                "n = {n} exceeds the limit of {MAX_VERTICES} vertices"
            )));
        }
        let mut adjacency: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adjacency[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::Parallel(u, v));
            }
            let id = list.len();
            if id >= MAX_EDGES {
                return Err(GraphError::TooLarge(format!(
                    "more than {MAX_EDGES} edges"
                )));
            }
            list.push((u, v));
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph {
            n,
            edges: list,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// `(neighbour, edge)` pairs at `v`, in insertion order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// The other endpoint of `e` seen from `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Whether two distinct edges share an endpoint.
    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        e != f && (a == c || a == d || b == c || b == d)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    /// Edges with both endpoints in the vertex mask.
    pub fn edges_within(&self, mask: u64) -> EdgeSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .map(|(e, _)| e)
            .collect()
    }

    /// Edges with exactly one endpoint in the vertex mask.
    pub fn boundary(&self, mask: u64) -> EdgeSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| (mask >> u & 1) != (mask >> v & 1))
            .map(|(e, _)| e)
            .collect()
    }

    /// Mask with all `n` vertices set.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Same edge set, ignoring edge order.
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        if self.n != other.n || self.m() != other.m() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn parse_graph6(text: &str) -> Result<Self, GraphError> {
        graph6::parse(text)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        edge_list::parse(text)
    }

    pub fn to_edge_list(&self) -> String {
        edge_list::encode(self)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallels() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::Parallel(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn handshake_holds() {
        for name in ["k4", "k33", "prism", "petersen"] {
            let g = builtin(name).unwrap();
            let degrees: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(degrees, 2 * g.m());
            assert!(g.is_cubic());
            assert_eq!(2 * g.m(), 3 * g.n());
        }
    }

    #[test]
    fn boundary_and_within() {
        let g = builtin("prism").unwrap();
        let tri = 0b000111;
        assert_eq!(g.boundary(tri).len(), 3);
        assert_eq!(g.edges_within(tri).len(), 3);
    }
}
