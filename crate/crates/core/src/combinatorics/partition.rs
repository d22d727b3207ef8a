use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("empty block")]
    EmptyBlock,
    #[error("element {0} appears in more than one block")]
    Repeated(usize),
    #[error("blocks do not cover [1, {0}]")]
    NotCovering(usize),
}

/// A sequence of nonempty disjoint blocks covering `[n]`.
///
/// Elements inside a block are stored sorted; the order of the blocks is
/// significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let blocks = normalize_blocks(blocks)?;
        Ok(OrderedSetPartition { blocks })
    }

    /// `(B₁, …, Bₙ)` with `Bᵢ = {i}`.
    pub fn singletons(n: usize) -> Self {
        OrderedSetPartition { blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    /// Every ordered set partition of `[n]`: each set partition followed
    /// by each ordering of its blocks.
    pub fn all(n: usize) -> impl Iterator<Item = OrderedSetPartition> {
        set_partitions(n).into_iter().flat_map(|blocks| {
            let k = blocks.len();
            blocks
                .into_iter()
                .permutations(k)
                .map(|blocks| OrderedSetPartition { blocks })
                .collect::<Vec<_>>()
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn minima(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

pub(crate) fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[Vec<usize>]) -> fmt::Result {
    for b in blocks {
        write!(f, "{{{}}}", b.iter().join(","))?;
    }
    Ok(())
}

/// Sorts each block and checks that the blocks partition `[n]`.
pub(crate) fn normalize_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>, PartitionError> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut seen = vec![false; n + 1];
    for b in &mut blocks {
        if b.is_empty() {
            return Err(PartitionError::EmptyBlock);
        }
        b.sort_unstable();
        for &x in b.iter() {
            if x == 0 || x > n {
                return Err(PartitionError::NotCovering(n));
            }
            if seen[x] {
                return Err(PartitionError::Repeated(x));
            }
            seen[x] = true;
        }
    }
    Ok(blocks)
}

/// Index of the block containing each vertex, indexed by vertex (slot 0
/// unused).
pub fn block_index(blocks: &[Vec<usize>]) -> Vec<usize> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut index = vec![usize::MAX; n + 1];
    for (k, b) in blocks.iter().enumerate() {
        for &x in b {
            index[x] = k;
        }
    }
    index
}

/// All set partitions of `[n]`, as blocks sorted by their minima, in
/// restricted-growth-string order.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn extend(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i > n {
            out.push(blocks.clone());
            return;
        }
        for k in 0..blocks.len() {
            blocks[k].push(i);
            extend(i + 1, n, blocks, out);
            blocks[k].pop();
        }
        blocks.push(vec![i]);
        extend(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    extend(1, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_and_fubini_numbers() {
        let bell: Vec<_> = (1..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, [1, 2, 5, 15, 52, 203]);
        let fubini: Vec<_> = (1..=5).map(|n| OrderedSetPartition::all(n).count()).collect();
        assert_eq!(fubini, [1, 3, 13, 75, 541]);
    }

    #[test]
    fn validates_blocks() {
        assert_eq!(OrderedSetPartition::new(vec![vec![1], vec![]]), Err(PartitionError::EmptyBlock));
        assert_eq!(OrderedSetPartition::new(vec![vec![1, 2], vec![2]]), Err(PartitionError::Repeated(2)));
        assert_eq!(OrderedSetPartition::new(vec![vec![1, 4]]), Err(PartitionError::NotCovering(2)));
        assert_eq!(OrderedSetPartition::new(vec![vec![1, 1]]), Err(PartitionError::Repeated(1)));
        let p = OrderedSetPartition::new(vec![vec![3, 1], vec![2]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2]]);
        assert_eq!(p.to_string(), "{1,3}{2}");
        assert_eq!(p.minima(), vec![1, 2]);
    }

    #[test]
    fn block_index_lookup() {
        assert_eq!(block_index(&[vec![1, 3], vec![2]]), vec![usize::MAX, 0, 1, 0]);
    }
}
