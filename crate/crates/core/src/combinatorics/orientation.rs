use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use thiserror::Error;

use super::graph::Graph;
use super::partition::OrderedSetPartition;
use super::permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("expected one head per edge ({expected}), got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {head} is not an endpoint of edge ({i}, {j})")]
    NotAnEndpoint { i: usize, j: usize, head: usize },
    #[error("orientation has a directed cycle")]
    Cyclic,
}

/// An acyclic orientation of a graph, stored as the head of each edge in
/// the graph's edge order.
///
/// An arc `t → h` means the region satisfies `x_t ≤ x_h`: the head sits at
/// the larger coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcyclicOrientation<'g> {
    graph: &'g Graph,
    heads: Vec<usize>,
}

impl<'g> AcyclicOrientation<'g> {
    pub fn new(graph: &'g Graph, heads: Vec<usize>) -> Result<Self, OrientationError> {
        if heads.len() != graph.edge_count() {
            return Err(OrientationError::WrongLength { expected: graph.edge_count(), got: heads.len() });
        }
        for (&(i, j), &head) in graph.edges().iter().zip(&heads) {
            if head != i && head != j {
                return Err(OrientationError::NotAnEndpoint { i, j, head });
            }
        }
        let gamma = AcyclicOrientation { graph, heads };
        if gamma.topological_order().is_none() {
            return Err(OrientationError::Cyclic);
        }
        Ok(gamma)
    }

    /// Orientation from arcs given as `(tail, head)` pairs, one per edge.
    pub fn from_arcs(graph: &'g Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientationError> {
        let wrong_length = OrientationError::WrongLength { expected: graph.edge_count(), got: arcs.len() };
        if arcs.len() != graph.edge_count() {
            return Err(wrong_length);
        }
        let heads = graph
            .edges()
            .iter()
            .map(|&(i, j)| arcs.iter().find(|&&(t, h)| (t.min(h), t.max(h)) == (i, j)).map(|&(_, h)| h))
            .collect::<Option<Vec<_>>>()
            .ok_or(wrong_length)?;
        Self::new(graph, heads)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    /// Arcs as `(tail, head)` in edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges().iter().zip(&self.heads).map(|(&(i, j), &h)| if h == i { (j, i) } else { (i, j) })
    }

    fn out_lists(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.graph.n() + 1];
        for (t, h) in self.arcs() {
            out[t].push(h);
        }
        out
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.graph.n();
        let out = self.out_lists();
        let mut indegree = vec![0usize; n + 1];
        for (_, h) in self.arcs() {
            indegree[h] += 1;
        }
        let mut ready: Vec<usize> = (1..=n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn reachable_set(&self, i: usize) -> BTreeSet<usize> {
        reachable_set(self, i)
    }

    pub fn source_components(&self) -> OrderedSetPartition {
        source_components(self)
    }

    pub fn linear_extensions(&self) -> Vec<Permutation> {
        linear_extensions(self)
    }

    pub fn lex_min_extension(&self) -> Permutation {
        lex_min_extension(self)
    }
}

impl fmt::Display for AcyclicOrientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.heads.is_empty() {
            return write!(f, "-");
        }
        for (k, (t, h)) in self.arcs().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}->{h}")?;
        }
        Ok(())
    }
}

/// Vertices reachable from `i` along arcs, including `i`.
pub fn reachable_set(gamma: &AcyclicOrientation<'_>, i: usize) -> BTreeSet<usize> {
    let out = gamma.out_lists();
    let mut reached = BTreeSet::from([i]);
    let mut frontier = vec![i];
    while let Some(u) = frontier.pop() {
        for &w in &out[u] {
            if reached.insert(w) {
                frontier.push(w);
            }
        }
    }
    reached
}

/// Source components: repeatedly take the reachability closure of the
/// smallest unassigned vertex and keep what is not yet assigned.
pub fn source_components(gamma: &AcyclicOrientation<'_>) -> OrderedSetPartition {
    let n = gamma.graph.n();
    let mut assigned = vec![false; n + 1];
    let mut blocks = Vec::new();
    while let Some(m) = (1..=n).find(|&v| !assigned[v]) {
        let block: Vec<usize> = reachable_set(gamma, m).into_iter().filter(|&v| !assigned[v]).collect();
        for &v in &block {
            assigned[v] = true;
        }
        blocks.push(block);
    }
    OrderedSetPartition::new(blocks).expect("source components partition [n]")
}

/// Every acyclic orientation of `g`.
///
/// Orientations are listed in lexicographic order of their head bits
/// `(b₁, …, b_m)`, one bit per edge in edge order, where `b = 0` puts the
/// head on the smaller endpoint. Cyclic bit patterns are skipped.
pub fn enumerate_acyclic_orientations(g: &Graph) -> Vec<AcyclicOrientation<'_>> {
    let m = g.edge_count();
    assert!(m < 64, "too many edges to enumerate orientations");
    (0..1u64 << m)
        .filter_map(|mask| {
            let heads = g
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(i, j))| if mask >> (m - 1 - e) & 1 == 0 { i } else { j })
                .collect();
            AcyclicOrientation::new(g, heads).ok()
        })
        .collect()
}

/// The orientation labeling the region that contains the braid region of
/// `σ`: each edge points at whichever endpoint comes first in `σ`.
pub fn orientation_of_permutation<'g>(g: &'g Graph, sigma: &Permutation) -> AcyclicOrientation<'g> {
    assert_eq!(sigma.len(), g.n(), "permutation size must match the graph");
    let pos = sigma.positions();
    let heads = g.edges().iter().map(|&(i, j)| if pos[i] < pos[j] { i } else { j }).collect();
    AcyclicOrientation::new(g, heads).expect("orientations induced by a total order are acyclic")
}

/// All `σ` in which every arc's head precedes its tail, in lexicographic
/// order.
pub fn linear_extensions(gamma: &AcyclicOrientation<'_>) -> Vec<Permutation> {
    fn extend(out: &[Vec<usize>], placed: &mut Vec<bool>, word: &mut Vec<usize>, acc: &mut Vec<Permutation>) {
        let n = out.len() - 1;
        if word.len() == n {
            acc.push(Permutation::new(word.clone()).expect("each vertex placed once"));
            return;
        }
        for v in 1..=n {
            if !placed[v] && out[v].iter().all(|&h| placed[h]) {
                placed[v] = true;
                word.push(v);
                extend(out, placed, word, acc);
                word.pop();
                placed[v] = false;
            }
        }
    }
    let out = gamma.out_lists();
    let mut acc = Vec::new();
    extend(&out, &mut vec![false; out.len()], &mut Vec::new(), &mut acc);
    acc
}

/// Lexicographically least linear extension, built greedily: always emit
/// the smallest vertex whose out-neighbours have all been emitted.
pub fn lex_min_extension(gamma: &AcyclicOrientation<'_>) -> Permutation {
    let n = gamma.graph.n();
    let mut pending = vec![0usize; n + 1];
    let mut waiting_on = vec![Vec::new(); n + 1];
    for (t, h) in gamma.arcs() {
        pending[t] += 1;
        waiting_on[h].push(t);
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (1..=n).filter(|&v| pending[v] == 0).map(Reverse).collect();
    let mut word = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        word.push(v);
        for &t in &waiting_on[v] {
            pending[t] -= 1;
            if pending[t] == 0 {
                ready.push(Reverse(t));
            }
        }
    }
    Permutation::new(word).expect("acyclic orientation has a linear extension")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn rejects_cycles_and_bad_heads() {
        let k3 = Graph::complete(3);
        // 1→2, 2→3, 3→1
        assert_eq!(AcyclicOrientation::new(&k3, vec![2, 1, 3]), Err(OrientationError::Cyclic));
        assert!(matches!(AcyclicOrientation::new(&k3, vec![3, 1, 2]), Err(OrientationError::NotAnEndpoint { .. })));
        assert!(matches!(AcyclicOrientation::new(&k3, vec![2]), Err(OrientationError::WrongLength { .. })));
    }

    #[test]
    fn reachable_set_examples() {
        let k3 = Graph::complete(3);
        let gamma = AcyclicOrientation::from_arcs(&k3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(gamma.reachable_set(1), BTreeSet::from([1, 2, 3]));
        assert_eq!(gamma.reachable_set(2), BTreeSet::from([2, 3]));
        assert_eq!(gamma.reachable_set(3), BTreeSet::from([3]));
    }

    #[test]
    fn source_component_examples() {
        let k3 = Graph::complete(3);
        let all_in_one = AcyclicOrientation::from_arcs(&k3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(all_in_one.source_components().blocks(), &[vec![1, 2, 3]]);
        let split = AcyclicOrientation::from_arcs(&k3, &[(2, 1), (3, 1), (3, 2)]).unwrap();
        assert_eq!(split.source_components().blocks(), &[vec![1], vec![2], vec![3]]);
        let p3 = Graph::path(3);
        let gamma = AcyclicOrientation::from_arcs(&p3, &[(1, 2), (3, 2)]).unwrap();
        assert_eq!(gamma.source_components().blocks(), &[vec![1, 2], vec![3]]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_acyclic_orientations(&Graph::empty(4)).len(), 1);
        assert_eq!(enumerate_acyclic_orientations(&Graph::complete(3)).len(), 6);
        assert_eq!(enumerate_acyclic_orientations(&Graph::path(3)).len(), 4);
        assert_eq!(enumerate_acyclic_orientations(&Graph::complete(4)).len(), 24);
    }

    #[test]
    fn enumeration_order_follows_head_bits() {
        let p3 = Graph::path(3);
        let shown: Vec<_> = enumerate_acyclic_orientations(&p3).iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["2->1,3->2", "2->1,2->3", "1->2,3->2", "1->2,2->3"]);
    }

    #[test]
    fn orientation_of_permutation_examples() {
        let k3 = Graph::complete(3);
        let gamma = orientation_of_permutation(&k3, &perm(&[1, 2, 3]));
        assert_eq!(gamma.arcs().collect::<Vec<_>>(), vec![(2, 1), (3, 1), (3, 2)]);
        let p3 = Graph::path(3);
        assert_eq!(orientation_of_permutation(&p3, &perm(&[2, 1, 3])).heads(), &[2, 2]);
        let e3 = Graph::empty(3);
        assert!(orientation_of_permutation(&e3, &perm(&[3, 1, 2])).heads().is_empty());
    }

    #[test]
    fn linear_extension_examples() {
        let p3 = Graph::path(3);
        let gamma = AcyclicOrientation::from_arcs(&p3, &[(1, 2), (3, 2)]).unwrap();
        assert_eq!(gamma.linear_extensions(), vec![perm(&[2, 1, 3]), perm(&[2, 3, 1])]);
        assert_eq!(gamma.lex_min_extension(), perm(&[2, 1, 3]));

        let k4 = Graph::complete(4);
        let gamma = orientation_of_permutation(&k4, &perm(&[3, 1, 4, 2]));
        assert_eq!(gamma.linear_extensions(), vec![perm(&[3, 1, 4, 2])]);

        let e3 = Graph::empty(3);
        let only = &enumerate_acyclic_orientations(&e3)[0];
        assert_eq!(only.linear_extensions().len(), 6);
        assert_eq!(only.lex_min_extension(), Permutation::identity(3));

        let k3 = Graph::complete(3);
        let gamma = AcyclicOrientation::from_arcs(&k3, &[(2, 1), (3, 1), (3, 2)]).unwrap();
        assert_eq!(gamma.lex_min_extension(), perm(&[1, 2, 3]));
    }
}
