//! From a labelled quadrilateral to an ambitoric coordinate chart.
//!
//! The route runs in three stages:
//!
//! 1. **Conic selection** ([`conic`]): inside the projective plane of affine
//!    functions on the quadrilateral's plane, the four facet normals span a
//!    pencil of conics through them.  A distinguished member is selected by
//!    one further linear condition tying the constant function `ι ≡ 1` to the
//!    extremal affine function `ζ`.  Whether the selected conic is nonsingular
//!    or a pair of lines decides which chart model applies.
//!
//! 2. **Chart extraction** ([`extract`]): the selected conic is identified
//!    with the standard conic (or line pair) of an ambitoric model, which
//!    turns the four facet normals into four root parameters
//!    `β0 < β∞ ≤ α0 < α∞` on a rational curve, a quadratic `q`, and
//!    calibrated boundary weights.  The result is an [`chart::AmbitoricChart`].
//!
//! 3. **Momentum geometry** ([`momentum`]): the chart's momentum map sends the
//!    coordinate box `[α0,α∞] × [β0,β∞]` back onto the original
//!    quadrilateral; [`momentum::chart_to_quad`] reconstructs the labelled
//!    quadrilateral from the chart, which is the round-trip invariant every
//!    extraction is checked against.
//!
//! [`gauge`] holds the Möbius/rescaling transformations that act on charts
//! without changing the underlying labelled quadrilateral.

pub mod chart;
pub mod conic;
pub mod extract;
pub mod gauge;
pub mod momentum;
pub(crate) mod vec3;

use thiserror::Error;

/// Errors produced while selecting a conic or extracting a chart.
#[derive(Debug, Error)]
pub enum FactorError {
    /// The selection degenerates to a line pair whose singular point is the
    /// constant function, so no member of the pencil induces a chart.
    #[error("no-admissible-conic")]
    NoAdmissibleConic,
    /// The selected conic is a line pair containing the constant function:
    /// the quadrilateral is an equipoised trapezium, whose extremal metric is
    /// of Calabi type rather than ambitoric, so no chart is extracted.
    #[error("calabi-type-case")]
    CalabiTypeCase,
    /// A momentum-map evaluation hit the locus where the chart's defining
    /// denominator vanishes.
    #[error("chart-singularity: {0}")]
    ChartSingularity(String),
    /// Chart data that violates the chart invariants (ordering of the root
    /// parameters, sign pattern of the weights, positivity of `q`).
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    /// An internal consistency check failed.  This is a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub use chart::{AmbitoricChart, Branch, ChartFacetMap, ConicClass, GaugeRecord};
pub use conic::{
    condition_conic_meets, iota_vector, newton_certificate, normal_vector, select_conic,
    unit_normal_vector, zeta_vector, ConicKind, ConicPencil, ConicSelection, SelectedConic,
};
pub use extract::extract_chart;
pub use gauge::{mobius_transform_chart, rescale_chart, Mobius};
pub use momentum::{chart_to_quad, momentum_point, pair_quadratic, SliceCoords};
