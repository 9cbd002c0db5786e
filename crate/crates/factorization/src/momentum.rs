//! Momentum geometry of an ambitoric chart.
//!
//! Points of the coordinate box map into the 3-space `𝔥*` dual to affine
//! functions; the image lies on an affine slice of `𝔥*` and, projected to
//! slice coordinates, is a convex quadrilateral — the original one, with the
//! original labels.
//!
//! * **Positive branch**: `μ(x, y) = (x·y, (x+y)/2, 1) / q(x, y)` where
//!   `q(x, y) = q0·x·y + q1·(x+y) + q2` is the polarised chart quadratic.
//!   A momentum covector `m = (m0, m1, m2)` pairs with a quadratic
//!   `u = (u0, u1, u2)` by `⟨m, u⟩ = m0·u0 + 2·m1·u1 + m2·u2`, so that
//!   `⟨μ(x,y), u⟩ = u(x, y)/q(x, y)` (polarised evaluation) and
//!   `⟨μ, q⟩ = 1`: the image lies on the affine slice `⟨·, q⟩ = 1`.
//!   The facet `x = γ` is cut out by `⟨·, w_γ⟩ / r` with `w_γ = (1, −γ, γ²)`
//!   (the square at `γ`), since `⟨μ, w_γ⟩ = (x−γ)(y−γ)/q`.
//!
//! * **Negative branch**: `μ(x, y) = (1, x, y) / (x − y)` with the plain dot
//!   pairing against coefficient vectors `(u_const, u_x, u_y)` of affine
//!   functions in `x, y`.  The slice is `⟨·, (0, 1, −1)⟩ = 1` (the function
//!   `x − y`), and the facet `x = γ` is cut out by `(γ − x)/(x − y) / r`.

use crate::chart::{AmbitoricChart, Branch};
use crate::FactorError;
use exactcore::{Rat, RatQuadratic};
use num_traits::{One, Zero};
use polytope::{AffineFn, FacetId, LabelledQuad, VertexId, P2};

/// Pair a momentum covector with a quadratic, `m0·u0 + 2·m1·u1 + m2·u2`.
pub fn pair_quadratic(m: &[Rat; 3], u: &RatQuadratic) -> Rat {
    &m[0] * &u.c[0] + Rat::from_integer(2.into()) * &m[1] * &u.c[1] + &m[2] * &u.c[2]
}

/// Momentum image of a box point.
///
/// Errors with [`FactorError::ChartSingularity`] when the defining
/// denominator (`q(x, y)` or `x − y`) vanishes; this cannot happen on the
/// closed box of a valid chart.
pub fn momentum_point(
    chart: &AmbitoricChart,
    x: &Rat,
    y: &Rat,
) -> Result<[Rat; 3], FactorError> {
    match chart.branch {
        Branch::Positive => {
            let q = chart.q.eval_pol(x, y);
            if q.is_zero() {
                return Err(FactorError::ChartSingularity(format!(
                    "q({x}, {y}) = 0"
                )));
            }
            let half = Rat::new(1.into(), 2.into());
            Ok([
                x * y / &q,
                (x + y) * half / &q,
                Rat::one() / &q,
            ])
        }
        Branch::Negative => {
            let d = x - y;
            if d.is_zero() {
                return Err(FactorError::ChartSingularity(format!(
                    "x - y = 0 at ({x}, {y})"
                )));
            }
            Ok([Rat::one() / &d, x / &d, y / &d])
        }
    }
}

/// The affine-coordinate system on the momentum slice.
///
/// The slice is `{m : f·m = 1}` for the slice functional `f`; its affine
/// coordinates are the two components of `m` other than the pivot (the last
/// index where `f` is nonzero), in index order.  Any linear functional
/// `c·m` on `𝔥*` restricts to an affine function of the slice coordinates,
/// obtained by eliminating the pivot component.
#[derive(Clone, Debug)]
pub struct SliceCoords {
    functional: [Rat; 3],
    pivot: usize,
}

impl SliceCoords {
    /// The slice used by a chart's momentum image: `⟨·, q⟩ = 1` (positive
    /// branch; functional `(q0, 2·q1, q2)`), or the `x − y` functional
    /// `(0, 1, −1)` (negative branch).
    pub fn for_chart(chart: &AmbitoricChart) -> Result<SliceCoords, FactorError> {
        let functional = match chart.branch {
            Branch::Positive => [
                chart.q.c[0].clone(),
                Rat::from_integer(2.into()) * &chart.q.c[1],
                chart.q.c[2].clone(),
            ],
            Branch::Negative => [Rat::zero(), Rat::one(), -Rat::one()],
        };
        let pivot = (0..3)
            .rev()
            .find(|&i| !functional[i].is_zero())
            .ok_or_else(|| FactorError::InvalidChart("zero chart quadratic".into()))?;
        Ok(SliceCoords { functional, pivot })
    }

    /// Slice coordinates of a point on the slice (the two non-pivot
    /// components in index order).
    pub fn project(&self, m: &[Rat; 3]) -> P2 {
        let mut coords = m
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != self.pivot)
            .map(|(_, v)| v.clone());
        let x = coords.next().unwrap();
        let y = coords.next().unwrap();
        [x, y]
    }

    /// The affine function of the slice coordinates induced by the linear
    /// functional `m ↦ c·m`:  on the slice, the pivot component is
    /// `m_p = (1 − Σ_{i≠p} f_i·m_i) / f_p`.
    pub fn restrict(&self, c: &[Rat; 3]) -> AffineFn {
        let p = self.pivot;
        let fp = &self.functional[p];
        let ratio = &c[p] / fp;
        let mut linear: Vec<Rat> = Vec::with_capacity(2);
        for i in 0..3 {
            if i == p {
                continue;
            }
            linear.push(&c[i] - &ratio * &self.functional[i]);
        }
        AffineFn::new(ratio, linear[0].clone(), linear[1].clone())
    }
}

/// Chart-role facet functional as a covector on `𝔥*` (before dividing by the
/// weight): positive branch `w_γ`-pairing `(1, −2γ, γ²)`, negative branch
/// `(γ, −1, 0)` for `α`-roles and `(γ, 0, −1)` for `β`-roles.
fn role_covector(chart: &AmbitoricChart, role: FacetId) -> [Rat; 3] {
    let gamma = chart.role_gamma(role).clone();
    match chart.branch {
        Branch::Positive => [
            Rat::one(),
            -Rat::from_integer(2.into()) * &gamma,
            &gamma * &gamma,
        ],
        Branch::Negative => match role {
            FacetId::Alpha0 | FacetId::AlphaInf => [gamma, -Rat::one(), Rat::zero()],
            FacetId::Beta0 | FacetId::BetaInf => [gamma, Rat::zero(), -Rat::one()],
        },
    }
}

/// Sign of the effective weight at each chart role, used to orient omitted
/// facets.  The stored weights follow one convention for both branches
/// (negative at `α0`, `β∞`; positive at `α∞`, `β0`), but the two momentum
/// maps orient the `β`-family oppositely: the effective weight dividing the
/// `β`-covectors is `−r_β` on the negative branch.
fn role_sign(chart: &AmbitoricChart, role: FacetId) -> i64 {
    let stored = match role {
        FacetId::Alpha0 | FacetId::BetaInf => -1,
        FacetId::AlphaInf | FacetId::Beta0 => 1,
    };
    match (chart.branch, role) {
        (Branch::Negative, FacetId::Beta0 | FacetId::BetaInf) => -stored,
        _ => stored,
    }
}

/// The weight by which a role covector is divided to obtain the inward
/// normal: the stored weight, except that the negative-branch momentum map
/// reverses the `β`-family.
fn effective_r(chart: &AmbitoricChart, role: FacetId) -> Rat {
    let r = chart.role_r(role).clone();
    match (chart.branch, role) {
        (Branch::Negative, FacetId::Beta0 | FacetId::BetaInf) => -r,
        _ => r,
    }
}

/// Reconstruct the labelled quadrilateral from a chart.
///
/// The box corner `(α_i, β_j)` maps to the quadrilateral vertex shared by
/// the facets playing the `α_i`- and `β_j`-roles; the facet `x = α_i` (resp.
/// `y = β_j`) maps onto the facet playing that role, with inward normal the
/// restriction of the facet covector divided by the weight.  Omitted facets
/// (weight zero) receive the sign-oriented unit covector instead; the
/// reconstruction then records them as omitted.
pub fn chart_to_quad(chart: &AmbitoricChart) -> Result<LabelledQuad, FactorError> {
    chart.validate()?;
    let slice = SliceCoords::for_chart(chart)?;

    // Vertices: find, for each pair of chart roles (alpha-role, beta-role),
    // the common vertex of the two facets playing them.
    let mut vertices: [Option<P2>; 4] = [None, None, None, None];
    for (a_idx, alpha_role) in [FacetId::Alpha0, FacetId::AlphaInf].into_iter().enumerate() {
        for (b_idx, beta_role) in [FacetId::Beta0, FacetId::BetaInf].into_iter().enumerate() {
            let fa = chart.facet_map.quad_facet(alpha_role);
            let fb = chart.facet_map.quad_facet(beta_role);
            let v = common_vertex(fa, fb).ok_or_else(|| {
                FactorError::InvalidChart(format!(
                    "facets {} and {} share no vertex; facet map must pair \
                     transverse families",
                    fa.tag(),
                    fb.tag()
                ))
            })?;
            let x = &chart.alpha[a_idx];
            let y = &chart.beta[b_idx];
            let m = momentum_point(chart, x, y)?;
            vertices[v.index()] = Some(slice.project(&m));
        }
    }
    let vertices: [P2; 4] = [
        vertices[0].clone().unwrap(),
        vertices[1].clone().unwrap(),
        vertices[2].clone().unwrap(),
        vertices[3].clone().unwrap(),
    ];

    // Normals, in quadrilateral facet order, and the omitted set.
    let mut normals: [Option<AffineFn>; 4] = [None, None, None, None];
    let mut omitted: Vec<FacetId> = Vec::new();
    for role in FacetId::ALL {
        let facet = chart.facet_map.quad_facet(role);
        let cov = role_covector(chart, role);
        let restricted = slice.restrict(&cov);
        let r = chart.role_r(role);
        let normal = if r.is_zero() {
            omitted.push(facet);
            restricted.scale(&Rat::from_integer(role_sign(role).into()))
        } else {
            restricted.scale(&(Rat::one() / r))
        };
        normals[facet.index()] = Some(normal);
    }
    let normals: [AffineFn; 4] = [
        normals[0].clone().unwrap(),
        normals[1].clone().unwrap(),
        normals[2].clone().unwrap(),
        normals[3].clone().unwrap(),
    ];

    LabelledQuad::from_raw(vertices, normals, &omitted)
        .map_err(|e| FactorError::InvalidChart(format!("momentum image is not a valid labelled quadrilateral: {e}")))
}

/// The vertex shared by two facets, if they are adjacent.
fn common_vertex(f: FacetId, g: FacetId) -> Option<VertexId> {
    let (a, b) = f.vertices();
    let (c, d) = g.vertices();
    if a == c || a == d {
        Some(a)
    } else if b == c || b == d {
        Some(b)
    } else {
        None
    }
}
