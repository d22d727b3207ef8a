use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use arrangeproj::combinatorics::Graph;
use arrangeproj::geometry::{char_poly_via_projection, graphical_generic_point};
use arrangeproj::nui::{c_vector, is_nui, product_char_poly, CVector};
use arrangeproj::polynomial::{
    bond_lattice, chromatic_by_counting, chromatic_deletion_contraction, mobius_char_poly, mobius_values, poly_eval,
    IntPolynomial,
};

/// The unique polynomial of degree at most `n` through `(q, counts[q])`,
/// by Lagrange interpolation over the rationals.
fn interpolate(counts: &[u64]) -> Vec<BigRational> {
    let m = counts.len();
    let mut coeffs = vec![BigRational::zero(); m];
    for (k, &y) in counts.iter().enumerate() {
        // basis polynomial ∏_{j≠k} (q − j) / (k − j), ascending coefficients
        let mut basis = vec![BigRational::one()];
        for j in (0..m).filter(|&j| j != k) {
            let denom = BigRational::from_integer(BigInt::from(k as i64 - j as i64));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c / &denom;
                next[d] -= c * BigRational::from_integer(BigInt::from(j)) / &denom;
            }
            basis = next;
        }
        for (d, c) in basis.into_iter().enumerate() {
            coeffs[d] += c * BigRational::from_integer(BigInt::from(y));
        }
    }
    coeffs
}

#[test]
fn deletion_contraction_interpolates_coloring_counts() {
    for n in 1..=5 {
        for g in Graph::all(n) {
            let counts: Vec<u64> = (0..=n).map(|q| chromatic_by_counting(&g, q)).collect();
            let interpolated = interpolate(&counts);
            let chi = chromatic_deletion_contraction(&g);
            for (k, c) in interpolated.iter().enumerate() {
                assert_eq!(*c, BigRational::from_integer(chi.coeff(k)), "graph {g} coefficient {k}");
            }
            // one more sample point than the degree needs
            assert_eq!(chi.eval(&BigInt::from(n + 1)), BigInt::from(chromatic_by_counting(&g, n + 1)));
        }
    }
}

#[test]
fn three_methods_agree_up_to_five_vertices() {
    for n in 1..=5 {
        let v = graphical_generic_point(n);
        for g in Graph::all(n) {
            let chi = chromatic_deletion_contraction(&g);
            assert_eq!(mobius_char_poly(&g), chi, "graph {g}");
            assert_eq!(char_poly_via_projection(&g, &v).unwrap(), chi, "graph {g}");
        }
    }
}

#[test]
fn product_formula_only_for_nui_graphs() {
    for n in 1..=5 {
        for g in Graph::all(n) {
            match c_vector(&g) {
                Ok(c) => assert_eq!(product_char_poly(&c), chromatic_deletion_contraction(&g)),
                Err(_) => assert!(!is_nui(&g)),
            }
        }
        assert_eq!(Graph::all(n).filter(is_nui).count(), CVector::all(n).len());
    }
}

#[test]
fn complete_graph_lattice() {
    let bell = [1, 2, 5, 15, 52, 203];
    for n in 1..=6 {
        let kn = Graph::complete(n);
        assert_eq!(bond_lattice(&kn).len(), bell[n - 1]);
        // μ(0̂, 1̂) = (−1)^{n−1} (n−1)!
        let factorial: i64 = (1..n as i64).product();
        let top = mobius_values(&kn).last().unwrap().1.clone();
        assert_eq!(top, BigInt::from(if n % 2 == 1 { factorial } else { -factorial }));
        // falling factorial q(q−1)…(q−n+1)
        let falling: IntPolynomial = (0..n as i64).map(|c| IntPolynomial::linear(-c)).product();
        assert_eq!(chromatic_deletion_contraction(&kn), falling);
    }
}

#[test]
fn trees_have_q_times_q_minus_one_power() {
    for n in 1..=7 {
        let expected = IntPolynomial::linear(0) * (1..n).map(|_| IntPolynomial::linear(-1)).product::<IntPolynomial>();
        assert_eq!(chromatic_deletion_contraction(&Graph::path(n)), expected);
        assert_eq!(mobius_char_poly(&Graph::path(n)), expected);
    }
}

#[test]
fn evaluation_examples() {
    let k3 = IntPolynomial::from_i64s(&[0, 2, -3, 1]);
    assert_eq!(poly_eval(&IntPolynomial::zero(), &BigInt::from(17)), BigInt::zero());
    assert_eq!(poly_eval(&k3, &BigInt::from(3)), BigInt::from(6));
    assert_eq!(poly_eval(&k3, &BigInt::from(-1)), BigInt::from(-6));
}
