use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use super::partition::OrderedSetPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("word {0:?} is not a permutation of 1..=n")]
pub struct NotAPermutation(pub Vec<usize>);

/// A permutation of `[n]` in one-line notation `σ₁…σₙ`.
///
/// The braid region labeled by `σ` is `x_{σ₁} > … > x_{σₙ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

/// Right-to-left minima of a permutation. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlMinima {
    pub count: usize,
    pub positions: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, NotAPermutation> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(NotAPermutation(word));
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|word| Permutation { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn reversed(&self) -> Permutation {
        Permutation { word: self.word.iter().rev().copied().collect() }
    }

    /// The word with every value `x` replaced by `n + 1 − x`.
    pub fn complement(&self) -> Permutation {
        let n = self.word.len() + 1;
        Permutation { word: self.word.iter().map(|&x| n - x).collect() }
    }

    /// `pos[v]` is the 0-based index of value `v` in the word.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.word.len() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn rl_min(&self) -> RlMinima {
        rl_min(self)
    }

    pub fn lr_max(&self) -> usize {
        lr_max(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // single digits are written without separators, like the usual one-line notation
        if self.word.len() < 10 {
            for x in &self.word {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(" "))
        }
    }
}

/// Positions `i` with `σ_i < σ_j` for every `j > i`.
pub fn rl_min(sigma: &Permutation) -> RlMinima {
    let mut positions = Vec::new();
    let mut suffix_min = usize::MAX;
    for (i, &x) in sigma.word.iter().enumerate().rev() {
        if x < suffix_min {
            positions.push(i + 1);
            suffix_min = x;
        }
    }
    positions.reverse();
    RlMinima { count: positions.len(), positions }
}

/// Number of `i` with `σ_i > σ_j` for every `j < i`.
pub fn lr_max(sigma: &Permutation) -> usize {
    let mut prefix_max = 0;
    let mut count = 0;
    for &x in &sigma.word {
        if x > prefix_max {
            count += 1;
            prefix_max = x;
        }
    }
    count
}

/// Cuts the word of `σ` after every right-to-left minimum.
pub fn partition_at_rl_minima(sigma: &Permutation) -> OrderedSetPartition {
    let mut blocks = Vec::new();
    let mut start = 0;
    for end in rl_min(sigma).positions {
        blocks.push(sigma.word[start..end].to_vec());
        start = end;
    }
    OrderedSetPartition::new(blocks).expect("segments of a permutation word partition [n]")
}
