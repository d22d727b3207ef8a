//! Integer polynomials and the two non-geometric routes to the
//! characteristic polynomial of a graphical arrangement: the chromatic
//! polynomial, and Möbius inversion over the bond lattice.

mod bond;
mod chromatic;
mod int_poly;

pub use bond::{bond_lattice, mobius_char_poly, mobius_values, ConnectedPartition, ConnectedPartitionError};
pub use chromatic::{chromatic_by_counting, chromatic_deletion_contraction, ChromaticMemo};
pub use int_poly::{poly_eval, IntPolynomial};

use num_bigint::BigInt;

use crate::combinatorics::{enumerate_acyclic_orientations, Graph};

/// Acyclic orientations counted by number of source components, next to the
/// signed coefficients they should match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GzReport {
    /// `counts[k]`: orientations with exactly `k` source components.
    pub counts: Vec<usize>,
    /// `expected[k] = (−1)^{n−k} · [q^k] χ_G`.
    pub expected: Vec<BigInt>,
    pub holds: bool,
}

/// Compares, for every `k`, the coefficient of `(−1)^{n−k} q^k` in `χ_G`
/// with the number of acyclic orientations having `k` source components.
pub fn gz_coefficient_check(g: &Graph) -> GzReport {
    let n = g.n();
    let chi = chromatic_deletion_contraction(g);
    let mut counts = vec![0usize; n + 1];
    for gamma in enumerate_acyclic_orientations(g) {
        counts[gamma.source_components().block_count()] += 1;
    }
    let expected: Vec<BigInt> =
        (0..=n).map(|k| if (n - k).is_multiple_of(2) { chi.coeff(k) } else { -chi.coeff(k) }).collect();
    let holds = counts.iter().zip(&expected).all(|(&c, e)| BigInt::from(c) == *e);
    GzReport { counts, expected, holds }
}

/// `|χ_G(−1)|` equals the number of regions (acyclic orientations).
pub fn region_count_check(g: &Graph) -> bool {
    let at_minus_one = chromatic_deletion_contraction(g).eval(&BigInt::from(-1));
    at_minus_one.magnitude() == &enumerate_acyclic_orientations(g).len().into()
}
