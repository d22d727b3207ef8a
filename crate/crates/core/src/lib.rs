//! Characteristic polynomials of graphical hyperplane arrangements.
//!
//! The arrangement of a graph `G` on `[n]` has one hyperplane `x_i = x_j`
//! per edge. Its characteristic polynomial equals the chromatic polynomial
//! of `G`, and this crate computes it three independent ways:
//!
//! * deletion–contraction on the graph ([`polynomial::chromatic_deletion_contraction`]),
//! * Möbius inversion over the bond lattice ([`polynomial::mobius_char_poly`]),
//! * the projection dimension of a generic point onto every region
//!   ([`geometry::char_poly_via_projection`]).
//!
//! All arithmetic is exact: integers are `BigInt`, points are `BigRational`.

pub mod cli;
pub mod combinatorics;
pub mod geometry;
pub mod nui;
pub mod polynomial;
