//! Labelled convex quadrilaterals and their toric stability combinatorics.
//!
//! A compact toric 4-orbifold with second Betti number two is encoded by a
//! convex quadrilateral together with a positive label on each side (the
//! inverse of the cone-angle normal scaling).  This crate provides:
//!
//! * a normal form for such quadrilaterals — every convex quadrilateral is
//!   equivalent, under an affine map, to one cut out by two parameters
//!   `(ε, η)` in `(-1, 1)²` ([`quad`]);
//! * exact integration of affine and quadratic data over the quadrilateral
//!   and its boundary with the label-weighted boundary measure ([`measures`]);
//! * the extremal affine function determined by the labels, both as the
//!   solution of the moment system and in closed form ([`extremal`]);
//! * the Futaki invariant of piecewise-linear convex test functions creased
//!   along a diagonal or along a segment joining opposite sides ([`futaki`]);
//! * closed-form polynomials giving the sign of those invariants as the
//!   crease varies, and the resulting explicit destabilizing labels for any
//!   non-parallelogram shape ([`crease_coeffs`], [`destabilize`]);
//! * JSON input/output for quadrilateral descriptions ([`json`]).
//!
//! All arithmetic is exact over arbitrary-precision rationals.

pub mod affine;
pub mod crease_coeffs;
pub mod destabilize;
pub mod extremal;
pub mod futaki;
pub mod json;
pub mod measures;
pub mod quad;

/// Errors produced while building or analysing labelled quadrilaterals.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolytopeError {
    /// The requested crease degenerates (it runs along a side, or one of the
    /// two pieces it cuts has zero area), so the piecewise-linear test
    /// function is affine and carries no stability information.
    #[error("trivial-crease")]
    TrivialCrease,
    /// A triangle handed to the exact integrator has zero area.
    #[error("degenerate simplex")]
    DegenerateSimplex,
    /// The quadrilateral data is inconsistent (non-convex, bad labels, ...).
    #[error("invalid quadrilateral: {0}")]
    InvalidQuad(String),
    /// Malformed caller input (JSON shape, unparsable numbers, ...).
    #[error("invalid input: {0}")]
    BadInput(String),
    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub use affine::{midpoint, p2, signed_area, triangle_area, AffineFn, AffineMap, P2};
pub use crease_coeffs::{
    crease_futaki_coefficient_polynomials, destabilizing_substitution, meeting_side_coefficient,
    off_side_coefficient,
};
pub use destabilize::{find_destabilizing_labels, Destabilizer};
pub use extremal::{
    classify_quad, extremal_affine_function, extremal_affine_function_moment, extremal_components,
    Simplex,
};
pub use futaki::{futaki, futaki_r_coefficients, CreaseFamily, Diagonal, PLConvexFn};
pub use json::{
    quad_from_json, quad_from_json_str, quad_to_normal_form_json, quad_to_raw_json, value_to_rat,
};
pub use measures::{
    boundary_integral, boundary_measure, facet_density, polygon_integral, quad_facet_density,
    quad_integral, quad_integral_split, simplex_integral, unit_facet_density, SplitDiagonal,
};
pub use quad::{
    normal_form_ells, normal_form_vertices, FacetId, LabelledQuad, QuadClass, QuadShape, VertexId,
};
