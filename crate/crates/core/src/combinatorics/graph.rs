use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use thiserror::Error;

/// Problems found while building a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge ({0}, {1}) has an endpoint outside [1, {2}]")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0}, {1}) must be stored with its smaller endpoint first")]
    Unordered(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

/// A simple undirected graph on the vertex set `{1, ..., n}`.
///
/// Edges are kept as sorted pairs `(i, j)` with `i < j`, in lexicographic
/// order. That order is the edge order used everywhere else (orientation
/// bits, enumeration of graphs by edge mask).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates, pairs with `i > j` and
    /// endpoints outside `[1, n]`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut seen = BTreeSet::new();
        for (i, j) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(GraphError::EndpointOutOfRange(i, j, n));
            }
            if i == j {
                return Err(GraphError::Loop(i));
            }
            if i > j {
                return Err(GraphError::Unordered(i, j));
            }
            if !seen.insert((i, j)) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
        }
        Ok(Graph { n, edges: seen.into_iter().collect() })
    }

    /// Like [`Graph::new`] but accepts either endpoint order and drops
    /// repeated edges. Loops and out-of-range endpoints are still errors.
    pub fn from_unordered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let normalized: BTreeSet<(usize, usize)> = edges.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
        Self::new(n, normalized)
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, []).expect("n >= 1")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, all_pairs(n)).expect("n >= 1")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i, i + 1))).expect("n >= 1")
    }

    /// The graph on `n` vertices whose edges are the pairs selected by
    /// `mask`, bit `e` selecting the `e`-th pair of [`all_pairs`].
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let edges = all_pairs(n).into_iter().enumerate().filter(|(e, _)| mask >> e & 1 == 1).map(|(_, p)| p);
        Self::new(n, edges).expect("pairs of all_pairs are valid")
    }

    /// Every graph on `n` vertices, ordered by edge mask.
    pub fn all(n: usize) -> impl Iterator<Item = Graph> {
        let pairs = n * n.saturating_sub(1) / 2;
        assert!(pairs < 64, "too many vertices to enumerate all graphs");
        (0..1u64 << pairs).map(move |mask| Graph::from_mask(n, mask))
    }

    /// A random graph where each pair is an edge with probability 1/2.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
        Self::new(n, edges).expect("pairs of all_pairs are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
    }

    /// Whether the subgraph induced on `vertices` is connected. The empty
    /// set counts as disconnected.
    pub fn is_connected_on(&self, vertices: &[usize]) -> bool {
        let Some(&start) = vertices.first() else {
            return false;
        };
        let inside: BTreeSet<usize> = vertices.iter().copied().collect();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if inside.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == inside.len()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.n)?;
        for (k, (i, j)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        write!(f, "]")
    }
}

/// All pairs `(i, j)` with `1 <= i < j <= n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 4)]), Err(GraphError::EndpointOutOfRange(1, 4, 3)));
        assert_eq!(Graph::new(3, [(2, 2)]), Err(GraphError::Loop(2)));
        assert_eq!(Graph::new(3, [(2, 1)]), Err(GraphError::Unordered(2, 1)));
        assert_eq!(Graph::new(3, [(1, 2), (1, 2)]), Err(GraphError::DuplicateEdge(1, 2)));
        assert_eq!(Graph::new(0, []), Err(GraphError::NoVertices));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::complete(3).edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(Graph::path(3).edges(), &[(1, 2), (2, 3)]);
        assert_eq!(Graph::empty(4).edge_count(), 0);
        assert_eq!(Graph::from_mask(3, 0b101), Graph::path(3));
    }

    #[test]
    fn enumerates_every_graph() {
        assert_eq!(Graph::all(3).count(), 8);
        assert_eq!(Graph::all(4).count(), 64);
        assert_eq!(Graph::all(1).count(), 1);
    }

    #[test]
    fn induced_connectivity() {
        let p3 = Graph::path(3);
        assert!(p3.is_connected_on(&[1, 2, 3]));
        assert!(!p3.is_connected_on(&[1, 3]));
        assert!(p3.is_connected_on(&[2]));
    }
}
