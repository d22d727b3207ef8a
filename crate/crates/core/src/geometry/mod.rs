//! Exact rational geometry of braid and graphical arrangements.
//!
//! Regions of the graphical arrangement of `G` are labeled by acyclic
//! orientations, faces by a connected partition plus block dominance.
//! Projections onto regions are computed two ways: from the source
//! components of the orientation, and by exhaustive search over good faces.
//! Braid regions have a third route through pool-adjacent-violators.
//!
//! Squared distances are compared throughout; square roots never appear.

mod face;
mod pava;
mod point;
mod projection;

pub use face::{FaceError, GraphicalFace};
pub use pava::pava_chain_projection;
pub use point::{
    braid_generic_point, graphical_generic_point, lrmax_generic_point, validate_point_braid, validate_point_graphical,
    validate_point_lrmax, PointParseError, RationalPoint,
};
pub use projection::{
    char_poly_via_projection, faces_of_region, good_face_min_criterion, is_good_face, prefix_containment_check,
    project_onto_flat, project_onto_region_closed_form, project_onto_region_oracle, source_component_face,
    GeometryError, GoodFace, GoodFaceBounds, ProjectionResult, RegionProjector,
};
