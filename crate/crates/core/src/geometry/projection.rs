use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::face::crosses_match;
use super::{validate_point_graphical, GraphicalFace, RationalPoint};
use crate::combinatorics::{enumerate_acyclic_orientations, AcyclicOrientation, Graph, OrderedSetPartition};
use crate::polynomial::{bond_lattice, ConnectedPartition, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("point has {got} coordinates but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point {0} does not satisfy v_i > (6n^2+1) v_(i+1), v_n > 0")]
    HypothesisUnmet(RationalPoint),
    #[error("good faces {first} and {second} are both nearest to the point (squared distance {sq_dist})")]
    NonGenericPoint { first: String, second: String, sq_dist: BigRational },
}

/// The nearest point of a closed region to `v`, the face holding it in its
/// relative interior, and that face's dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionResult {
    pub point: RationalPoint,
    pub face: GraphicalFace,
    pub pd: usize,
}

/// Orthogonal projection onto the flat where coordinates are equal inside
/// each block: every coordinate becomes its block's average.
pub fn project_onto_flat(v: &RationalPoint, blocks: &[Vec<usize>]) -> RationalPoint {
    let mut coords = vec![BigRational::zero(); v.len()];
    for b in blocks {
        let sum = b.iter().fold(BigRational::zero(), |acc, &i| acc + v.at(i));
        let mean = sum / BigRational::from_integer(b.len().into());
        for &i in b {
            coords[i - 1] = mean.clone();
        }
    }
    RationalPoint::new(coords)
}

/// Whether the projection of `v` onto the span of `face` lies in the
/// face's relative interior.
pub fn is_good_face(g: &Graph, v: &RationalPoint, face: &GraphicalFace) -> bool {
    let p = project_onto_flat(v, face.blocks());
    crosses_match(g, face.partition(), face.dominance(), &p)
}

/// Block minima strictly increase along the ordered partition.
pub fn good_face_min_criterion(pi: &OrderedSetPartition) -> bool {
    pi.minima().windows(2).all(|w| w[0] < w[1])
}

/// Every face of the arrangement lying in the closure of the region of
/// `gamma`, in bond-lattice order.
pub fn faces_of_region(gamma: &AcyclicOrientation<'_>) -> Vec<GraphicalFace> {
    bond_lattice(gamma.graph()).into_iter().filter_map(|flat| GraphicalFace::in_region(gamma, flat)).collect()
}

/// The face spanned by the source components of `gamma`, ordered as the
/// region dictates.
pub fn source_component_face(gamma: &AcyclicOrientation<'_>) -> GraphicalFace {
    let blocks = gamma.source_components().into_blocks();
    let flat = ConnectedPartition::new(gamma.graph(), blocks).expect("source components induce connected subgraphs");
    GraphicalFace::in_region(gamma, flat).expect("source components span a face of the region")
}

#[derive(Debug, Clone)]
struct FlatProjection {
    flat: ConnectedPartition,
    point: RationalPoint,
    sq_dist: BigRational,
}

/// A good face of a region together with the projection of `v` onto its
/// span.
#[derive(Debug, Clone)]
pub struct GoodFace<'a> {
    pub face: GraphicalFace,
    pub point: &'a RationalPoint,
    pub sq_dist: &'a BigRational,
}

/// Projects one point onto the regions of one graphical arrangement.
///
/// Flat projections depend only on the flat, so they are computed once
/// and shared by every region.
#[derive(Debug, Clone)]
pub struct RegionProjector<'g> {
    graph: &'g Graph,
    v: RationalPoint,
    flats: Vec<FlatProjection>,
    satisfies_graphical: bool,
}

impl<'g> RegionProjector<'g> {
    pub fn new(graph: &'g Graph, v: RationalPoint) -> Result<Self, GeometryError> {
        if v.len() != graph.n() {
            return Err(GeometryError::DimensionMismatch { expected: graph.n(), got: v.len() });
        }
        let flats = bond_lattice(graph)
            .into_iter()
            .map(|flat| {
                let point = project_onto_flat(&v, flat.blocks());
                let sq_dist = v.sq_dist(&point);
                FlatProjection { flat, point, sq_dist }
            })
            .collect();
        let satisfies_graphical = validate_point_graphical(&v);
        Ok(RegionProjector { graph, v, flats, satisfies_graphical })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn point(&self) -> &RationalPoint {
        &self.v
    }

    fn check_graph(&self, gamma: &AcyclicOrientation<'_>) {
        assert_eq!(gamma.graph(), self.graph, "orientation belongs to a different graph");
    }

    /// Good faces of the region of `gamma`, in bond-lattice order.
    pub fn good_faces(&self, gamma: &AcyclicOrientation<'_>) -> Vec<GoodFace<'_>> {
        self.check_graph(gamma);
        self.flats
            .iter()
            .filter_map(|fp| {
                let face = GraphicalFace::in_region(gamma, fp.flat.clone())?;
                crosses_match(self.graph, face.partition(), face.dominance(), &fp.point).then_some(GoodFace {
                    face,
                    point: &fp.point,
                    sq_dist: &fp.sq_dist,
                })
            })
            .collect()
    }

    /// Projection by exhaustive search: the good face whose flat projection
    /// is strictly nearest to `v`.
    pub fn oracle(&self, gamma: &AcyclicOrientation<'_>) -> Result<ProjectionResult, GeometryError> {
        let good = self.good_faces(gamma);
        let best = good
            .iter()
            .min_by(|a, b| a.sq_dist.cmp(b.sq_dist))
            .expect("the face holding the projection is always good");
        if let Some(rival) = good.iter().find(|g| g.sq_dist == best.sq_dist && g.face != best.face) {
            return Err(GeometryError::NonGenericPoint {
                first: best.face.to_string(),
                second: rival.face.to_string(),
                sq_dist: best.sq_dist.clone(),
            });
        }
        Ok(ProjectionResult { point: best.point.clone(), pd: best.face.dim(), face: best.face.clone() })
    }

    /// Projection read off the source components of `gamma`. Requires the
    /// point to satisfy the graphical inequality system.
    pub fn closed_form(&self, gamma: &AcyclicOrientation<'_>) -> Result<ProjectionResult, GeometryError> {
        self.check_graph(gamma);
        if !self.satisfies_graphical {
            return Err(GeometryError::HypothesisUnmet(self.v.clone()));
        }
        let face = source_component_face(gamma);
        let point = project_onto_flat(&self.v, face.blocks());
        Ok(ProjectionResult { point, pd: face.dim(), face })
    }

    /// Dimension bound, distance bound and prefix containment for the good
    /// faces of one region.
    pub fn good_face_bounds(&self, gamma: &AcyclicOrientation<'_>) -> GoodFaceBounds {
        let source_face = source_component_face(gamma);
        let source_blocks = source_face.blocks().to_vec();
        let good = self.good_faces(gamma);
        let source_good = good.iter().find(|g| g.face == source_face);
        let max_good_dim = good.iter().map(|g| g.face.dim()).max().unwrap_or(0);
        let strictly_nearest = source_good
            .is_some_and(|s| good.iter().filter(|g| g.face != source_face).all(|g| s.sq_dist < g.sq_dist));
        let prefix_containment = good.iter().all(|g| prefix_contained(&source_blocks, &g.face));
        GoodFaceBounds {
            source_components: source_face.dim(),
            good_faces: good.len(),
            max_good_dim,
            source_face_good: source_good.is_some(),
            source_face_strictly_nearest: strictly_nearest,
            prefix_containment,
        }
    }
}

/// Summary of the good faces of one region, against its source components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodFaceBounds {
    pub source_components: usize,
    pub good_faces: usize,
    pub max_good_dim: usize,
    pub source_face_good: bool,
    pub source_face_strictly_nearest: bool,
    pub prefix_containment: bool,
}

impl GoodFaceBounds {
    pub fn holds(&self) -> bool {
        self.source_face_good
            && self.max_good_dim <= self.source_components
            && self.source_face_strictly_nearest
            && self.prefix_containment
    }
}

/// `B₁ ∪ … ∪ Bⱼ ⊆ D₁ ∪ … ∪ Dⱼ` for every `j`, with `(D₁, …, D_ℓ)` the
/// increasing-minima label of `face` and `Dⱼ = ∅` past `ℓ`.
fn prefix_contained(source_blocks: &[Vec<usize>], face: &GraphicalFace) -> bool {
    let Some(label) = face.increasing_minima_order() else {
        return false;
    };
    let mut b_union = BTreeSet::new();
    let mut d_union = BTreeSet::new();
    for (j, b) in source_blocks.iter().enumerate() {
        b_union.extend(b.iter().copied());
        if let Some(d) = label.blocks().get(j) {
            d_union.extend(d.iter().copied());
        }
        if !b_union.is_subset(&d_union) {
            return false;
        }
    }
    true
}

pub fn project_onto_region_closed_form(
    gamma: &AcyclicOrientation<'_>,
    v: &RationalPoint,
) -> Result<ProjectionResult, GeometryError> {
    RegionProjector::new(gamma.graph(), v.clone())?.closed_form(gamma)
}

pub fn project_onto_region_oracle(
    gamma: &AcyclicOrientation<'_>,
    v: &RationalPoint,
) -> Result<ProjectionResult, GeometryError> {
    RegionProjector::new(gamma.graph(), v.clone())?.oracle(gamma)
}

/// Prefix containment of the source components in every good face of the
/// region.
pub fn prefix_containment_check(gamma: &AcyclicOrientation<'_>, v: &RationalPoint) -> Result<bool, GeometryError> {
    Ok(RegionProjector::new(gamma.graph(), v.clone())?.good_face_bounds(gamma).prefix_containment)
}

/// `Σ_R (−1)^{n−pd(R)} t^{pd(R)}` over all regions, with `pd` taken from the
/// source-component closed form.
pub fn char_poly_via_projection(g: &Graph, v: &RationalPoint) -> Result<IntPolynomial, GeometryError> {
    let projector = RegionProjector::new(g, v.clone())?;
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for gamma in enumerate_acyclic_orientations(g) {
        let pd = projector.closed_form(&gamma)?.pd;
        if (n - pd).is_multiple_of(2) {
            coeffs[pd] += BigInt::one();
        } else {
            coeffs[pd] -= BigInt::one();
        }
    }
    Ok(IntPolynomial::new(coeffs))
}
