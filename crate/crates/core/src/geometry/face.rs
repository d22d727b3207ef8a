use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use super::RationalPoint;
use crate::combinatorics::{AcyclicOrientation, Graph, OrderedSetPartition};
use crate::polynomial::{ConnectedPartition, ConnectedPartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaceError {
    #[error(transparent)]
    Partition(#[from] ConnectedPartitionError),
    #[error("block index {0} out of range")]
    UnknownBlock(usize),
    #[error("blocks {0} and {1} are not joined by an edge")]
    NotAdjacent(usize, usize),
    #[error("no dominance given between adjacent blocks {0} and {1}")]
    MissingDirection(usize, usize),
    #[error("blocks {0} and {1} dominate each other")]
    Conflicting(usize, usize),
    #[error("block dominance has a cycle")]
    Cyclic,
}

/// A face of a graphical arrangement: the flat it spans plus the strict
/// order between blocks joined by an edge.
///
/// `(a, b)` in the dominance set means every point of the face has larger
/// coordinates on block `a` than on block `b` (indices into
/// `partition.blocks()`). Only pairs of blocks joined by some edge carry a
/// dominance, so one face has exactly one representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphicalFace {
    partition: ConnectedPartition,
    dominance: BTreeSet<(usize, usize)>,
}

impl GraphicalFace {
    pub fn new(g: &Graph, partition: ConnectedPartition, dominance: BTreeSet<(usize, usize)>) -> Result<Self, FaceError> {
        let k = partition.dim();
        let adjacent = quotient_edges(g, &partition);
        for &(a, b) in &dominance {
            if a >= k || b >= k {
                return Err(FaceError::UnknownBlock(a.max(b)));
            }
            if !adjacent.contains(&(a.min(b), a.max(b))) {
                return Err(FaceError::NotAdjacent(a, b));
            }
            if dominance.contains(&(b, a)) {
                return Err(FaceError::Conflicting(a, b));
            }
        }
        if let Some(&(a, b)) = adjacent.iter().find(|&&(a, b)| !dominance.contains(&(a, b)) && !dominance.contains(&(b, a))) {
            return Err(FaceError::MissingDirection(a, b));
        }
        if !is_acyclic(k, &dominance) {
            return Err(FaceError::Cyclic);
        }
        Ok(GraphicalFace { partition, dominance })
    }

    /// The face labeled by an ordered partition: blocks earlier in the
    /// order carry larger coordinates. Blocks must be connected in `g`.
    pub fn from_ordered(g: &Graph, pi: &OrderedSetPartition) -> Result<Self, FaceError> {
        let partition = ConnectedPartition::new(g, pi.blocks().to_vec())?;
        let index = partition.block_index();
        let rank: Vec<usize> = partition
            .blocks()
            .iter()
            .map(|b| pi.blocks().iter().position(|c| c[0] == b[0]).expect("same blocks"))
            .collect();
        let dominance = g
            .edges()
            .iter()
            .map(|&(u, w)| (index[u], index[w]))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| if rank[a] < rank[b] { (a, b) } else { (b, a) })
            .collect();
        Ok(GraphicalFace { partition, dominance })
    }

    /// The face of the closed region of `gamma` spanning `partition`, if the
    /// region has one: each arc across blocks makes its head's block
    /// dominate its tail's block, and the result must be consistent and
    /// acyclic.
    pub fn in_region(gamma: &AcyclicOrientation<'_>, partition: ConnectedPartition) -> Option<Self> {
        let index = partition.block_index();
        let mut dominance = BTreeSet::new();
        for (t, h) in gamma.arcs() {
            let (a, b) = (index[h], index[t]);
            if a != b {
                if dominance.contains(&(b, a)) {
                    return None;
                }
                dominance.insert((a, b));
            }
        }
        is_acyclic(partition.dim(), &dominance).then_some(GraphicalFace { partition, dominance })
    }

    pub fn partition(&self) -> &ConnectedPartition {
        &self.partition
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        self.partition.blocks()
    }

    pub fn dominance(&self) -> &BTreeSet<(usize, usize)> {
        &self.dominance
    }

    pub fn dim(&self) -> usize {
        self.partition.dim()
    }

    /// An ordered partition labeling this face: blocks listed so that every
    /// dominating block comes first, breaking ties by smallest minimum.
    /// For braid faces this is the unique label.
    pub fn ordered_partition(&self) -> OrderedSetPartition {
        let k = self.dim();
        let mut emitted = vec![false; k];
        let mut order = Vec::with_capacity(k);
        while order.len() < k {
            // blocks are sorted by minimum, so the first ready block has the smallest one
            let next = (0..k)
                .find(|&b| !emitted[b] && self.dominance.iter().all(|&(a, c)| c != b || emitted[a]))
                .expect("dominance is acyclic");
            emitted[next] = true;
            order.push(self.blocks()[next].clone());
        }
        OrderedSetPartition::new(order).expect("blocks of a partition")
    }

    /// The label `(D₁, …, D_ℓ)` with `min Dᵢ < min Dᵢ₊₁`, when the face has
    /// one: that is the blocks in order of their minima, provided this order
    /// respects the dominance.
    pub fn increasing_minima_order(&self) -> Option<OrderedSetPartition> {
        self.dominance
            .iter()
            .all(|&(a, b)| a < b)
            .then(|| OrderedSetPartition::new(self.blocks().to_vec()).expect("blocks of a partition"))
    }

    /// Whether `p` lies in the relative interior of the face: constant on
    /// each block, and strictly ordered as the dominance says across every
    /// edge between blocks.
    pub fn contains_in_interior(&self, g: &Graph, p: &RationalPoint) -> bool {
        let constant_on_blocks = self.blocks().iter().all(|b| b.iter().all(|&i| p.at(i) == p.at(b[0])));
        constant_on_blocks && crosses_match(g, &self.partition, &self.dominance, p)
    }
}

impl fmt::Display for GraphicalFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if !self.dominance.is_empty() {
            let show = |b: usize| format!("{{{}}}", self.blocks()[b].iter().join(","));
            let pairs = self.dominance.iter().map(|&(a, b)| format!("{}>{}", show(a), show(b))).join(" ");
            write!(f, " [{pairs}]")?;
        }
        Ok(())
    }
}

/// Every edge of `g` joining different blocks has `p` strictly larger on
/// the dominating block.
pub(crate) fn crosses_match(
    g: &Graph,
    partition: &ConnectedPartition,
    dominance: &BTreeSet<(usize, usize)>,
    p: &RationalPoint,
) -> bool {
    let index = partition.block_index();
    g.edges().iter().all(|&(u, w)| {
        let (a, b) = (index[u], index[w]);
        if a == b {
            return true;
        }
        let (hi, lo) = if dominance.contains(&(a, b)) { (u, w) } else { (w, u) };
        p.at(hi) > p.at(lo)
    })
}

/// Pairs `(a, b)`, `a < b`, of blocks joined by at least one edge.
fn quotient_edges(g: &Graph, partition: &ConnectedPartition) -> BTreeSet<(usize, usize)> {
    let index = partition.block_index();
    g.edges()
        .iter()
        .map(|&(u, w)| (index[u], index[w]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

fn is_acyclic(k: usize, arcs: &BTreeSet<(usize, usize)>) -> bool {
    let mut indegree = vec![0usize; k];
    for &(_, b) in arcs {
        indegree[b] += 1;
    }
    let mut ready: Vec<usize> = (0..k).filter(|&b| indegree[b] == 0).collect();
    let mut seen = 0;
    while let Some(a) = ready.pop() {
        seen += 1;
        for &(_, b) in arcs.iter().filter(|&&(x, _)| x == a) {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(b);
            }
        }
    }
    seen == k
}
