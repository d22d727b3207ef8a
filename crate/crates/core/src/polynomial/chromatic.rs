use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::IntPolynomial;
use crate::combinatorics::Graph;

/// A simple graph on `0..n` keyed by its sorted edge list.
type Key = (usize, Vec<(usize, usize)>);

/// Memo table for deletion–contraction. Entries are written once and never
/// change, so a table can be reused across graphs.
#[derive(Debug, Default)]
pub struct ChromaticMemo {
    table: HashMap<Key, IntPolynomial>,
}

impl ChromaticMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn chromatic(&mut self, g: &Graph) -> IntPolynomial {
        let edges = g.edges().iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        self.solve((g.n(), edges))
    }

    fn solve(&mut self, key: Key) -> IntPolynomial {
        let (n, edges) = &key;
        if edges.is_empty() {
            return IntPolynomial::monomial(BigInt::one(), *n);
        }
        if let Some(p) = self.table.get(&key) {
            return p.clone();
        }
        let &(u, v) = edges.last().expect("nonempty");
        let deleted: Vec<_> = edges[..edges.len() - 1].to_vec();
        // merge v into u, shift vertices above v down, collapse parallel edges
        let relabel = |w: usize| if w == v { u } else if w > v { w - 1 } else { w };
        let mut contracted: Vec<_> = deleted
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (relabel(a), relabel(b));
                (a.min(b), a.max(b))
            })
            .collect();
        contracted.sort_unstable();
        contracted.dedup();
        let result = &self.solve((*n, deleted)) - &self.solve((n - 1, contracted));
        self.table.insert(key, result.clone());
        result
    }
}

/// Chromatic polynomial by deletion–contraction: `P(G) = P(G − e) − P(G / e)`.
pub fn chromatic_deletion_contraction(g: &Graph) -> IntPolynomial {
    ChromaticMemo::new().chromatic(g)
}

/// Number of proper colorings of `g` with `q` colors, by walking all `qⁿ`
/// assignments.
pub fn chromatic_by_counting(g: &Graph, q: usize) -> u64 {
    let n = g.n();
    if q == 0 {
        return 0;
    }
    let mut color = vec![0usize; n + 1];
    let mut count = 0;
    loop {
        if g.edges().iter().all(|&(i, j)| color[i] != color[j]) {
            count += 1;
        }
        // odometer step over vertices 1..=n
        let mut v = 1;
        loop {
            if v > n {
                return count;
            }
            color[v] += 1;
            if color[v] < q {
                break;
            }
            color[v] = 0;
            v += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deletion_contraction_examples() {
        assert_eq!(chromatic_deletion_contraction(&Graph::empty(3)), IntPolynomial::from_i64s(&[0, 0, 0, 1]));
        assert_eq!(chromatic_deletion_contraction(&Graph::complete(3)), IntPolynomial::from_i64s(&[0, 2, -3, 1]));
        assert_eq!(chromatic_deletion_contraction(&Graph::path(3)), IntPolynomial::from_i64s(&[0, 1, -2, 1]));
    }

    #[test]
    fn counting_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(chromatic_by_counting(&k3, 2), 0);
        assert_eq!(chromatic_by_counting(&k3, 3), 6);
        for q in 0..5u64 {
            assert_eq!(chromatic_by_counting(&Graph::empty(3), q as usize), q.pow(3));
        }
    }

    #[test]
    fn memo_is_shared_across_graphs() {
        let mut memo = ChromaticMemo::new();
        let k4 = memo.chromatic(&Graph::complete(4));
        let filled = memo.len();
        assert_eq!(memo.chromatic(&Graph::complete(4)), k4);
        assert_eq!(memo.len(), filled);
    }
}
