//! Exact integration of products of affine functions against the interior
//! (Lebesgue) measure and the boundary measure determined by the labels.
//!
//! The boundary measure `dν` on a facet with inward affine normal `L` is
//! fixed by the identity `dL ∧ dν = −dλ` along the facet: facets with
//! "steeper" normals carry proportionally less measure.

use crate::affine::{triangle_area, AffineFn, P2};
use crate::quad::{FacetId, LabelledQuad};
use crate::PolytopeError;
use exactcore::{rat, Rat};
use num_traits::{Signed, Zero};

/// Exact integral of a product of two affine functions over a triangle:
/// `∫_T a·b dλ = λ(T) · Σ_{j,k} B_{jk} a(v_j) b(v_k)` with
/// `B_{jk} = (1 + δ_{jk})/12`.
///
/// Errors on a degenerate (zero-area) triangle.
pub fn simplex_integral(
    t: &[P2; 3],
    a: &AffineFn,
    b: &AffineFn,
) -> Result<Rat, PolytopeError> {
    let area = triangle_area(&t[0], &t[1], &t[2]);
    if area.is_zero() {
        return Err(PolytopeError::DegenerateSimplex);
    }
    Ok(area * product_moment(t, a, b))
}

/// The moment sum `Σ_{j,k} (1+δ_{jk})/12 · a(v_j) b(v_k)` (no area factor).
fn product_moment(t: &[P2; 3], a: &AffineFn, b: &AffineFn) -> Rat {
    let av: Vec<Rat> = t.iter().map(|p| a.eval(p)).collect();
    let bv: Vec<Rat> = t.iter().map(|p| b.eval(p)).collect();
    let mut sum = Rat::zero();
    for j in 0..3 {
        for k in 0..3 {
            let w = if j == k { rat(2, 12) } else { rat(1, 12) };
            sum += w * &av[j] * &bv[k];
        }
    }
    sum
}

/// Integral of `a·b` over a convex polygon given by its boundary cycle,
/// by fan triangulation from the first vertex.  Consecutive duplicate or
/// collinear points are tolerated (their triangles contribute nothing).
pub fn polygon_integral(poly: &[P2], a: &AffineFn, b: &AffineFn) -> Rat {
    let mut sum = Rat::zero();
    if poly.len() < 3 {
        return sum;
    }
    for i in 1..poly.len() - 1 {
        let tri = [poly[0].clone(), poly[i].clone(), poly[i + 1].clone()];
        if triangle_area(&tri[0], &tri[1], &tri[2]).is_zero() {
            continue;
        }
        sum += simplex_integral(&tri, a, b).expect("nonzero area checked");
    }
    sum
}

/// The boundary-measure density of a facet with inward normal `normal` and
/// endpoints `p0`, `p1`, per unit of the segment parameter `t ∈ [0, 1]`:
/// with `u = (b, c)` the linear part and `T = p1 − p0`, evaluating
/// `dL ∧ dν = −dλ` on the pair `(u/|u|², T)` forces `dν = w·dt` with
/// `w = |c·T_x − b·T_y| / (b² + c²)`.
///
/// The absolute value makes the density independent of the endpoint order;
/// all facet integrals below are symmetric in the endpoints.
pub fn facet_density(normal: &AffineFn, p0: &P2, p1: &P2) -> Rat {
    let [b, c] = normal.linear_part();
    let tx = &p1[0] - &p0[0];
    let ty = &p1[1] - &p0[1];
    let denom = &b * &b + &c * &c;
    assert!(!denom.is_zero(), "facet normal must have a nonzero linear part");
    ((&c * &tx - &b * &ty) / denom).abs()
}

/// Density of facet `f` of a labelled quad with respect to its *actual*
/// labels: `r_j` times the unit-label density.  Omitted facets (`r_j = 0`)
/// carry no boundary measure.
pub fn quad_facet_density(q: &LabelledQuad, f: FacetId) -> Rat {
    q.label(f).clone() * unit_facet_density(q, f)
}

/// Density of facet `f` per unit label (computed from the canonical normal
/// `ℓ_j`; the label `r_j` enters linearly since `L_j = ℓ_j / r_j`).
pub fn unit_facet_density(q: &LabelledQuad, f: FacetId) -> Rat {
    let (p0, p1) = q.facet_endpoints(f);
    facet_density(q.ell(f), p0, p1)
}

/// Total boundary measure `ν(∂Δ)` of a labelled quad.
pub fn boundary_measure(q: &LabelledQuad) -> Rat {
    FacetId::ALL
        .into_iter()
        .map(|f| quad_facet_density(q, f))
        .sum()
}

/// Integral of an affine function over the boundary of a labelled quad
/// against `dν`: on each facet the integrand is affine in the segment
/// parameter, so the integral is the density times the endpoint average.
pub fn boundary_integral(q: &LabelledQuad, a: &AffineFn) -> Rat {
    let half = rat(1, 2);
    FacetId::ALL
        .into_iter()
        .map(|f| {
            let (p0, p1) = q.facet_endpoints(f);
            quad_facet_density(q, f) * (a.eval(p0) + a.eval(p1)) * &half
        })
        .sum()
}

/// Which diagonal to use when splitting a quad into two triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitDiagonal {
    /// Split along A0B0—AIBI.
    Eps,
    /// Split along A0BI—AIB0.
    Eta,
}

/// Integral of `a·b` over a labelled quad's interior, splitting along the
/// requested diagonal.  The result is independent of the choice (a test
/// exercises this).
pub fn quad_integral_split(
    q: &LabelledQuad,
    a: &AffineFn,
    b: &AffineFn,
    diag: SplitDiagonal,
) -> Rat {
    use crate::quad::VertexId::*;
    let tri_pairs = match diag {
        SplitDiagonal::Eps => [[A0B0, AIBI, A0BI], [A0B0, AIB0, AIBI]],
        SplitDiagonal::Eta => [[A0BI, AIB0, A0B0], [A0BI, AIBI, AIB0]],
    };
    let mut sum = Rat::zero();
    for tri in tri_pairs {
        let t = [
            q.vertex(tri[0]).clone(),
            q.vertex(tri[1]).clone(),
            q.vertex(tri[2]).clone(),
        ];
        sum += simplex_integral(&t, a, b).expect("quad triangles are non-degenerate");
    }
    sum
}

/// Integral of `a·b` over the quad's interior (default diagonal split).
pub fn quad_integral(q: &LabelledQuad, a: &AffineFn, b: &AffineFn) -> Rat {
    quad_integral_split(q, a, b, SplitDiagonal::Eps)
}
