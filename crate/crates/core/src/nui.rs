//! Natural unit interval graphs.
//!
//! A graph on `[n]` is natural unit interval when every edge `{i, j}`,
//! `i < j`, forces all edges `{i, k}` and `{k, j}` with `i < k < j`.
//! Equivalently the lower neighbourhood of each `j` is an interval
//! `{j − c_j, …, j − 1}` whose left end never moves backwards, so such
//! graphs are indexed by their c-vectors.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::combinatorics::{
    enumerate_acyclic_orientations, partition_at_rl_minima, Graph, Permutation,
};
use crate::geometry::{GeometryError, RegionProjector, RationalPoint, validate_point_graphical};
use crate::polynomial::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NuiError {
    #[error("graph is not a natural unit interval graph: edge ({i}, {j}) without ({a}, {b})")]
    NotNui { i: usize, j: usize, a: usize, b: usize },
    #[error("invalid c-vector {0:?}: need c_j <= j-1 and j - c_j nondecreasing")]
    InvalidCVector(Vec<usize>),
    #[error("cannot parse c-vector entry {0:?}")]
    Parse(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("point does not satisfy v_i > (6n^2+1) v_(i+1), v_n > 0")]
    HypothesisUnmet,
}

/// `c_j` counts the neighbours of `j` below `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CVector {
    c: Vec<usize>,
}

impl CVector {
    pub fn new(c: Vec<usize>) -> Result<Self, NuiError> {
        let within = c.iter().enumerate().all(|(k, &cj)| cj <= k);
        // j − c_j with j = k + 1
        let monotone = c.iter().enumerate().tuple_windows().all(|((k, &a), (_, &b))| k + 1 - a <= k + 2 - b);
        if c.is_empty() || !within || !monotone {
            return Err(NuiError::InvalidCVector(c));
        }
        Ok(CVector { c })
    }

    /// Every valid c-vector of length `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<CVector> {
        fn extend(j: usize, n: usize, prev_start: usize, c: &mut Vec<usize>, out: &mut Vec<CVector>) {
            if j > n {
                out.push(CVector { c: c.clone() });
                return;
            }
            // the interval start j − c_j ranges over prev_start..=j
            for start in (prev_start..=j).rev() {
                c.push(j - start);
                extend(j + 1, n, start, c, out);
                c.pop();
            }
        }
        let mut out = Vec::new();
        extend(1, n, 1, &mut Vec::new(), &mut out);
        out
    }

    pub fn values(&self) -> &[usize] {
        &self.c
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }
}

impl fmt::Display for CVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c.iter().join(","))
    }
}

/// Comma-separated integers, e.g. `0,1,1`.
impl FromStr for CVector {
    type Err = NuiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| NuiError::Parse(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        CVector::new(c)
    }
}

fn first_nui_violation(g: &Graph) -> Option<NuiError> {
    for &(i, j) in g.edges() {
        for k in i + 1..j {
            for (a, b) in [(i, k), (k, j)] {
                if !g.has_edge(a, b) {
                    return Some(NuiError::NotNui { i, j, a, b });
                }
            }
        }
    }
    None
}

pub fn is_nui(g: &Graph) -> bool {
    first_nui_violation(g).is_none()
}

fn require_nui(g: &Graph) -> Result<(), NuiError> {
    first_nui_violation(g).map_or(Ok(()), Err)
}

pub fn c_vector(g: &Graph) -> Result<CVector, NuiError> {
    require_nui(g)?;
    let c = g.vertices().map(|j| g.neighbors(j).filter(|&i| i < j).count()).collect();
    Ok(CVector::new(c).expect("c-vector of a natural unit interval graph is valid"))
}

/// The graph whose lower neighbourhood of `j` is `{j − c_j, …, j − 1}`.
pub fn nui_from_c_vector(c: &CVector) -> Graph {
    let edges = c.c.iter().enumerate().flat_map(|(k, &cj)| {
        let j = k + 1;
        (j - cj..j).map(move |i| (i, j))
    });
    Graph::from_unordered(c.n(), edges).expect("interval edges are valid")
}

/// Every descent `σᵢ > σᵢ₊₁` of `σ` is an edge of `g`.
pub fn is_g_local_min(g: &Graph, sigma: &Permutation) -> Result<bool, NuiError> {
    require_nui(g)?;
    Ok(is_local_min_unchecked(g, sigma))
}

fn is_local_min_unchecked(g: &Graph, sigma: &Permutation) -> bool {
    sigma.word().windows(2).all(|w| w[0] < w[1] || g.has_edge(w[0], w[1]))
}

/// All G-local minima in lexicographic order.
pub fn enumerate_g_local_minima(g: &Graph) -> Result<Vec<Permutation>, NuiError> {
    require_nui(g)?;
    Ok(Permutation::all(g.n()).filter(|s| is_local_min_unchecked(g, s)).collect())
}

/// `Σ q^{RLmin(σ)}` over the G-local minima, by enumeration.
pub fn rlmin_generating_sum(g: &Graph) -> Result<IntPolynomial, NuiError> {
    let mut coeffs = vec![BigInt::default(); g.n() + 1];
    for sigma in enumerate_g_local_minima(g)? {
        coeffs[sigma.rl_min().count] += BigInt::one();
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `∏ (q − c_j)`.
pub fn product_char_poly(c: &CVector) -> IntPolynomial {
    c.c.iter().map(|&cj| IntPolynomial::linear(-(cj as i64))).product()
}

/// `∏ (q + c_j)`.
pub fn plus_product(c: &CVector) -> IntPolynomial {
    c.c.iter().map(|&cj| IntPolynomial::linear(cj as i64)).product()
}

/// One region's comparison between the projection and its lex-min label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuiRegionCheck {
    pub orientation: String,
    pub lex_min: Permutation,
    pub rl_min: usize,
    pub pd: usize,
    /// The projection lies in the closed braid region of the lex-min label.
    pub in_lex_min_region: bool,
    /// The projection face's blocks are connected in `g`.
    pub face_blocks_connected: bool,
    /// The projection face spans the partition of the lex-min label at its
    /// right-to-left minima.
    pub face_matches_rl_partition: bool,
}

impl NuiRegionCheck {
    pub fn holds(&self) -> bool {
        self.pd == self.rl_min && self.in_lex_min_region && self.face_blocks_connected && self.face_matches_rl_partition
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuiProjectionReport {
    pub regions: Vec<NuiRegionCheck>,
}

impl NuiProjectionReport {
    pub fn holds(&self) -> bool {
        self.regions.iter().all(NuiRegionCheck::holds)
    }
}

/// For every region: the oracle projection dimension equals the number of
/// right-to-left minima of the region's lex-min permutation, the projection
/// sits in that permutation's closed braid region, and the projection face
/// is the flat cut out by those minima.
pub fn nui_projection_check(g: &Graph, v: &RationalPoint) -> Result<NuiProjectionReport, NuiError> {
    require_nui(g)?;
    if !validate_point_graphical(v) {
        return Err(NuiError::HypothesisUnmet);
    }
    let projector = RegionProjector::new(g, v.clone())?;
    let mut regions = Vec::new();
    for gamma in enumerate_acyclic_orientations(g) {
        let projection = projector.oracle(&gamma)?;
        let lex_min = gamma.lex_min_extension();
        let p = &projection.point;
        let in_lex_min_region = lex_min.word().windows(2).all(|w| p.at(w[0]) >= p.at(w[1]));
        let face_blocks_connected = projection.face.blocks().iter().all(|b| g.is_connected_on(b));
        let mut rl_blocks = partition_at_rl_minima(&lex_min).into_blocks();
        rl_blocks.sort_unstable_by_key(|b| b[0]);
        let face_matches_rl_partition = projection.face.blocks() == rl_blocks.as_slice();
        regions.push(NuiRegionCheck {
            orientation: gamma.to_string(),
            rl_min: lex_min.rl_min().count,
            lex_min,
            pd: projection.pd,
            in_lex_min_region,
            face_blocks_connected,
            face_matches_rl_partition,
        });
    }
    Ok(NuiProjectionReport { regions })
}
