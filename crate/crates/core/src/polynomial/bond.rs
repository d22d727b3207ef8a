use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::IntPolynomial;
use crate::combinatorics::{block_index, normalize_blocks, set_partitions, write_blocks, Graph, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectedPartitionError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("partition covers [1, {got}] but the graph has {expected} vertices")]
    WrongSize { expected: usize, got: usize },
    #[error("block {0:?} does not induce a connected subgraph")]
    Disconnected(Vec<usize>),
}

/// A partition of `[n]` whose blocks induce connected subgraphs: a flat of
/// the graphical arrangement. Its dimension is the number of blocks.
///
/// Blocks are sorted internally and ordered by their minima, so equal flats
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectedPartition {
    blocks: Vec<Vec<usize>>,
}

impl ConnectedPartition {
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self, ConnectedPartitionError> {
        let mut blocks = normalize_blocks(blocks)?;
        let got: usize = blocks.iter().map(Vec::len).sum();
        if got != g.n() {
            return Err(ConnectedPartitionError::WrongSize { expected: g.n(), got });
        }
        if let Some(b) = blocks.iter().find(|b| !g.is_connected_on(b)) {
            return Err(ConnectedPartitionError::Disconnected(b.clone()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(ConnectedPartition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        ConnectedPartition { blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block position of each vertex (slot 0 unused).
    pub fn block_index(&self) -> Vec<usize> {
        block_index(&self.blocks)
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &ConnectedPartition) -> bool {
        let index = coarser.block_index();
        self.blocks.iter().all(|b| b.iter().all(|&x| index[x] == index[b[0]]))
    }
}

impl fmt::Display for ConnectedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

/// All flats of the graphical arrangement of `g`, listed by decreasing
/// dimension so every flat appears after all flats it covers. The first
/// entry is the all-singletons partition.
pub fn bond_lattice(g: &Graph) -> Vec<ConnectedPartition> {
    let mut flats: Vec<ConnectedPartition> = set_partitions(g.n())
        .into_iter()
        .filter(|blocks| blocks.iter().all(|b| g.is_connected_on(b)))
        .map(|blocks| ConnectedPartition { blocks })
        .collect();
    flats.sort_by_key(|p| std::cmp::Reverse(p.dim()));
    flats
}

/// Möbius values `μ(0̂, L)` for every flat `L`, in [`bond_lattice`] order.
pub fn mobius_values(g: &Graph) -> Vec<(ConnectedPartition, BigInt)> {
    let flats = bond_lattice(g);
    let mut mu: Vec<BigInt> = Vec::with_capacity(flats.len());
    for (k, flat) in flats.iter().enumerate() {
        let value = if k == 0 {
            BigInt::one()
        } else {
            -flats[..k]
                .iter()
                .zip(&mu)
                .filter(|(m, _)| m.refines(flat))
                .map(|(_, v)| v)
                .fold(BigInt::zero(), |acc, v| acc + v)
        };
        mu.push(value);
    }
    flats.into_iter().zip(mu).collect()
}

/// `χ(t) = Σ_L μ(0̂, L) t^{dim L}` over the bond lattice.
pub fn mobius_char_poly(g: &Graph) -> IntPolynomial {
    mobius_values(g).into_iter().map(|(flat, mu)| IntPolynomial::monomial(mu, flat.dim())).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_sizes() {
        assert_eq!(bond_lattice(&Graph::empty(3)), vec![ConnectedPartition::singletons(3)]);
        assert_eq!(bond_lattice(&Graph::complete(3)).len(), 5);
        let p3 = bond_lattice(&Graph::path(3));
        let shown: Vec<_> = p3.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["{1}{2}{3}", "{1,2}{3}", "{1}{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn rejects_disconnected_blocks() {
        let p3 = Graph::path(3);
        assert_eq!(
            ConnectedPartition::new(&p3, vec![vec![1, 3], vec![2]]),
            Err(ConnectedPartitionError::Disconnected(vec![1, 3]))
        );
        assert!(ConnectedPartition::new(&p3, vec![vec![3, 2], vec![1]]).is_ok());
        assert!(matches!(
            ConnectedPartition::new(&p3, vec![vec![1, 2]]),
            Err(ConnectedPartitionError::WrongSize { .. })
        ));
    }

    #[test]
    fn mobius_examples() {
        let single = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(mobius_char_poly(&Graph::empty(2)), IntPolynomial::from_i64s(&[0, 0, 1]));
        assert_eq!(mobius_char_poly(&single), IntPolynomial::from_i64s(&[0, -1, 1]));
        let mu: Vec<i64> = mobius_values(&Graph::complete(3))
            .into_iter()
            .map(|(_, m)| i64::try_from(m).unwrap())
            .collect();
        assert_eq!(mu, [1, -1, -1, -1, 2]);
        assert_eq!(mobius_char_poly(&Graph::complete(3)), IntPolynomial::from_i64s(&[0, 2, -3, 1]));
    }

    #[test]
    fn refinement() {
        let k3 = Graph::complete(3);
        let fine = ConnectedPartition::new(&k3, vec![vec![1], vec![2], vec![3]]).unwrap();
        let mid = ConnectedPartition::new(&k3, vec![vec![1, 3], vec![2]]).unwrap();
        let top = ConnectedPartition::new(&k3, vec![vec![1, 2, 3]]).unwrap();
        assert!(fine.refines(&mid) && mid.refines(&top) && fine.refines(&top));
        assert!(!top.refines(&mid));
        assert!(mid.refines(&mid));
    }
}
