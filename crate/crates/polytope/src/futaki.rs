//! Simple piecewise-linear convex functions on a labelled quad and their
//! Futaki invariant
//! `F(f) = ∫_∂Δ f dν − ½ ∫_Δ ζ f dλ`,
//! which vanishes on affine functions and is linear in the labels.
//!
//! A *simple* PL convex function has a single crease, either along a
//! diagonal or joining a pair of opposite facets; the latter form two
//! two-parameter projective families (one per facet family).

use crate::affine::{signed_area, AffineFn, P2};
use crate::extremal::extremal_components;
use crate::measures::{polygon_integral, quad_facet_density, unit_facet_density};
use crate::quad::{FacetId, LabelledQuad, VertexId};
use crate::PolytopeError;
use exactcore::{rat, rat_int, Rat};
use num_traits::{Signed, Zero};

/// One of the two diagonals of a quad.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diagonal {
    /// A0B0 — AIBI.
    Eps,
    /// A0BI — AIB0.
    Eta,
}

/// The two families of opposite-facet creases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CreaseFamily {
    /// Creases joining `Alpha0` to `AlphaInf`.
    Alpha,
    /// Creases joining `Beta0` to `BetaInf`.
    Beta,
}

/// A simple piecewise-linear convex function, described by its crease.
/// `Family` creases are parametrized projectively: `s = [s0 : s1]` locates
/// the endpoint on the `0`-end facet, `t = [t0 : t1]` on the `∞`-end facet
/// (both entries nonnegative, not both zero).  The parameters are
/// homogeneous vertex weights: the endpoint is `(s0·P + s1·Q)/(s0 + s1)`
/// where `P` is the facet vertex on the ε-diagonal and `Q` the one on the
/// η-diagonal, so `s = t = [1:0]` traces the ε-diagonal and `s = t = [0:1]`
/// the η-diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PLConvexFn {
    Diagonal(Diagonal),
    Family {
        family: CreaseFamily,
        s: [Rat; 2],
        t: [Rat; 2],
    },
}

impl PLConvexFn {
    pub fn diagonal(d: Diagonal) -> Self {
        PLConvexFn::Diagonal(d)
    }

    pub fn family(family: CreaseFamily, s: [Rat; 2], t: [Rat; 2]) -> Result<Self, PolytopeError> {
        for pair in [&s, &t] {
            if pair[0].is_negative() || pair[1].is_negative() {
                return Err(PolytopeError::BadInput(
                    "crease parameters must be nonnegative".to_string(),
                ));
            }
            if pair[0].is_zero() && pair[1].is_zero() {
                return Err(PolytopeError::BadInput(
                    "crease parameters must not both vanish".to_string(),
                ));
            }
        }
        Ok(PLConvexFn::Family { family, s, t })
    }

    /// Recover the crease through two boundary points of `q`.  The points
    /// must lie on a pair of opposite facets (or be the endpoints of a
    /// diagonal); a segment lying inside a single facet is rejected as a
    /// trivial crease.
    pub fn from_segment(q: &LabelledQuad, p0: &P2, p1: &P2) -> Result<Self, PolytopeError> {
        if p0 == p1 {
            return Err(PolytopeError::BadInput(
                "crease endpoints must be distinct".to_string(),
            ));
        }
        let on0 = facets_containing(q, p0);
        let on1 = facets_containing(q, p1);
        if on0.is_empty() || on1.is_empty() {
            return Err(PolytopeError::BadInput(
                "crease endpoints must lie on the boundary".to_string(),
            ));
        }
        if on0.iter().any(|f| on1.contains(f)) {
            return Err(PolytopeError::TrivialCrease);
        }
        // Diagonals: both endpoints are vertices of the same diagonal.
        let vid = |p: &P2| VertexId::ALL.into_iter().find(|v| q.vertex(*v) == p);
        if let (Some(v0), Some(v1)) = (vid(p0), vid(p1)) {
            use VertexId::*;
            match (v0, v1) {
                (A0B0, AIBI) | (AIBI, A0B0) => return Ok(PLConvexFn::Diagonal(Diagonal::Eps)),
                (A0BI, AIB0) | (AIB0, A0BI) => return Ok(PLConvexFn::Diagonal(Diagonal::Eta)),
                _ => {}
            }
        }
        for f0 in &on0 {
            if let Some(f1) = on1.iter().find(|f1| **f1 == f0.opposite()) {
                // Orient so that the `s` endpoint sits on the 0-end facet.
                let (zero_end, s_point, t_point) = match f0 {
                    FacetId::Alpha0 | FacetId::Beta0 => (*f0, p0, p1),
                    _ => (*f1, p1, p0),
                };
                let family = match zero_end {
                    FacetId::Alpha0 => CreaseFamily::Alpha,
                    FacetId::Beta0 => CreaseFamily::Beta,
                    _ => unreachable!(),
                };
                let s = segment_parameters(q, zero_end, s_point);
                let t = segment_parameters(q, zero_end.opposite(), t_point);
                return PLConvexFn::family(family, s, t);
            }
        }
        Err(PolytopeError::BadInput(
            "crease endpoints must lie on opposite facets".to_string(),
        ))
    }
}

/// The two endpoints of a crease on `q`, as exact points.
pub fn crease_endpoints(q: &LabelledQuad, pl: &PLConvexFn) -> (P2, P2) {
    use VertexId::*;
    match pl {
        PLConvexFn::Diagonal(Diagonal::Eps) => {
            (q.vertex(A0B0).clone(), q.vertex(AIBI).clone())
        }
        PLConvexFn::Diagonal(Diagonal::Eta) => {
            (q.vertex(A0BI).clone(), q.vertex(AIB0).clone())
        }
        PLConvexFn::Family { family, s, t } => {
            // Vertex-weight convention: on every facet the first weight
            // belongs to the vertex on the ε-diagonal and the second to the
            // vertex on the η-diagonal, so `[1:0]` and `[0:1]` always name
            // the diagonal endpoints, `[1:1]` the facet midpoint, and the
            // harmonic involution swapping the diagonals is `[s0:s1]↦[s1:s0]`.
            let (sw, tw) = match family {
                CreaseFamily::Alpha => (
                    ((A0B0, s[0].clone()), (A0BI, s[1].clone())),
                    ((AIBI, t[0].clone()), (AIB0, t[1].clone())),
                ),
                CreaseFamily::Beta => (
                    ((A0B0, s[0].clone()), (AIB0, s[1].clone())),
                    ((AIBI, t[0].clone()), (A0BI, t[1].clone())),
                ),
            };
            (weighted_point(q, sw), weighted_point(q, tw))
        }
    }
}

fn weighted_point(q: &LabelledQuad, w: ((VertexId, Rat), (VertexId, Rat))) -> P2 {
    let ((va, wa), (vb, wb)) = w;
    let norm = &wa + &wb;
    assert!(norm.is_positive(), "crease endpoint weights must not both vanish");
    let a = q.vertex(va);
    let b = q.vertex(vb);
    [
        (&wa * &a[0] + &wb * &b[0]) / &norm,
        (&wa * &a[1] + &wb * &b[1]) / &norm,
    ]
}

/// An affine function vanishing on the crease (sign is arbitrary; the
/// Futaki invariant of `max(0, h)` does not depend on it).
pub fn crease_affine(q: &LabelledQuad, pl: &PLConvexFn) -> AffineFn {
    let (e0, e1) = crease_endpoints(q, pl);
    AffineFn::through(&e0, &e1)
}

/// The Futaki invariant of the simple PL convex function `max(0, h)` where
/// `h` vanishes on the crease.  Errors with `TrivialCrease` when the crease
/// fails to cut the quad into two pieces of positive area.
pub fn futaki(q: &LabelledQuad, pl: &PLConvexFn) -> Result<Rat, PolytopeError> {
    let h = crease_affine(q, pl);
    let plus = clipped_piece(q, &h)?;
    let zeta = crate::extremal::extremal_affine_function(q);
    let interior = polygon_integral(&plus, &zeta, &h);
    let mut boundary = Rat::zero();
    for f in FacetId::ALL {
        boundary += quad_facet_density(q, f) * facet_ramp_integral(q, f, &h);
    }
    Ok(boundary - interior * rat(1, 2))
}

/// The Futaki invariant as a linear function of the labels:
/// `futaki(q, pl) = Σ_j r_j · c_j` with `c_j` independent of `q`'s labels.
pub fn futaki_r_coefficients(
    q: &LabelledQuad,
    pl: &PLConvexFn,
) -> Result<[Rat; 4], PolytopeError> {
    let h = crease_affine(q, pl);
    let plus = clipped_piece(q, &h)?;
    let comps = extremal_components(q);
    let mut out = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for f in FacetId::ALL {
        let j = f.index();
        let boundary_j = unit_facet_density(q, f) * facet_ramp_integral(q, f, &h);
        let interior_j = polygon_integral(&plus, &comps[j], &h);
        out[j] = boundary_j - interior_j * rat(1, 2);
    }
    Ok(out)
}

/// The positive-side piece `{h ≥ 0} ∩ Δ` as a boundary cycle; errors when
/// either side has zero area.
fn clipped_piece(q: &LabelledQuad, h: &AffineFn) -> Result<Vec<P2>, PolytopeError> {
    let cycle: Vec<P2> = q
        .boundary_cycle()
        .iter()
        .map(|v| q.vertex(*v).clone())
        .collect();
    let (plus, minus) = clip_cycle(&cycle, h);
    if polygon_area(&plus).is_zero() || polygon_area(&minus).is_zero() {
        return Err(PolytopeError::TrivialCrease);
    }
    Ok(plus)
}

/// Split a convex polygon cycle along `{h = 0}` into the `h ≥ 0` and
/// `h ≤ 0` pieces (crossing points are computed exactly and appear in both).
fn clip_cycle(cycle: &[P2], h: &AffineFn) -> (Vec<P2>, Vec<P2>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let n = cycle.len();
    for i in 0..n {
        let p = &cycle[i];
        let qn = &cycle[(i + 1) % n];
        let hp = h.eval(p);
        let hq = h.eval(qn);
        if !hp.is_negative() {
            plus.push(p.clone());
        }
        if !hp.is_positive() {
            minus.push(p.clone());
        }
        if (hp.is_positive() && hq.is_negative()) || (hp.is_negative() && hq.is_positive()) {
            let t = &hp / (&hp - &hq);
            let z = [
                &p[0] + &t * (&qn[0] - &p[0]),
                &p[1] + &t * (&qn[1] - &p[1]),
            ];
            plus.push(z.clone());
            minus.push(z);
        }
    }
    (plus, minus)
}

fn polygon_area(poly: &[P2]) -> Rat {
    if poly.len() < 3 {
        return Rat::zero();
    }
    let mut sum = Rat::zero();
    for i in 1..poly.len() - 1 {
        sum += signed_area(&poly[0], &poly[i], &poly[i + 1]);
    }
    sum.abs()
}

/// `∫` over facet `f` of `max(0, h)` per unit of boundary density: the
/// integrand is a linear ramp in the segment parameter, clipped to its
/// nonnegative part.
fn facet_ramp_integral(q: &LabelledQuad, f: FacetId, h: &AffineFn) -> Rat {
    let (p0, p1) = q.facet_endpoints(f);
    let h0 = h.eval(p0);
    let h1 = h.eval(p1);
    let half = rat(1, 2);
    if !h0.is_negative() && !h1.is_negative() {
        return (&h0 + &h1) * half;
    }
    if !h0.is_positive() && !h1.is_positive() {
        return Rat::zero();
    }
    let t = &h0 / (&h0 - &h1);
    if h0.is_positive() {
        // Positive on [0, t): average h0/2 over length t.
        &t * &h0 * &half
    } else {
        // Positive on (t, 1]: average h1/2 over length 1 − t.
        (rat_int(1) - &t) * &h1 * &half
    }
}

/// Locate all facets whose closed segment contains `p`.
fn facets_containing(q: &LabelledQuad, p: &P2) -> Vec<FacetId> {
    FacetId::ALL
        .into_iter()
        .filter(|f| {
            if !q.ell(*f).eval(p).is_zero() {
                return false;
            }
            let (a, b) = q.facet_endpoints(*f);
            between(a, b, p)
        })
        .collect()
}

/// Is `p` on the closed segment `[a, b]`, assuming it already lies on the
/// line through them?
fn between(a: &P2, b: &P2, p: &P2) -> bool {
    for k in 0..2 {
        let (lo, hi) = if a[k] <= b[k] {
            (&a[k], &b[k])
        } else {
            (&b[k], &a[k])
        };
        if &p[k] < lo || &p[k] > hi {
            return false;
        }
    }
    true
}

/// Projective parameters `[s0 : s1]` of a point on facet `f`, inverse to
/// the weighting used by `crease_endpoints`.
fn segment_parameters(q: &LabelledQuad, f: FacetId, p: &P2) -> [Rat; 2] {
    let (va, vb) = f.vertices();
    // The weight convention lists the crease-endpoint vertices as
    // (ε-diagonal vertex, η-diagonal vertex) per facet; match
    // crease_endpoints exactly.
    use FacetId::*;
    use VertexId::*;
    let (v_first, v_second) = match f {
        Alpha0 => (A0B0, A0BI),
        AlphaInf => (AIBI, AIB0),
        Beta0 => (A0B0, AIB0),
        BetaInf => (AIBI, A0BI),
    };
    debug_assert!(
        (va == v_first || va == v_second) && (vb == v_first || vb == v_second),
        "facet vertex tables disagree"
    );
    // p = a·v_first + (1−a)·v_second.
    let pf = q.vertex(v_first);
    let ps = q.vertex(v_second);
    let a = affine_weight(pf, ps, p);
    [a.clone(), rat_int(1) - &a]
}

/// The weight `a` with `p = a·u + (1−a)·v` for `p` on the segment.
fn affine_weight(u: &P2, v: &P2, p: &P2) -> Rat {
    let dx = &u[0] - &v[0];
    let dy = &u[1] - &v[1];
    if !dx.is_zero() {
        (&p[0] - &v[0]) / dx
    } else {
        assert!(!dy.is_zero(), "segment endpoints coincide");
        (&p[1] - &v[1]) / dy
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::extremal_affine_function;
    use crate::quad::LabelledQuad;
    use exactcore::rat;
    use num_traits::One;

    fn quad(e: Rat, n: Rat, r: [Rat; 4]) -> LabelledQuad {
        LabelledQuad::from_normal_form(e, n, r).unwrap()
    }

    fn unit() -> [Rat; 4] {
        [Rat::one(), Rat::one(), Rat::one(), Rat::one()]
    }

    #[test]
    fn diagonal_futaki_sign_matches_extremal_midpoint_value() {
        let cases = [
            (rat(1, 2), rat(1, 3), unit()),
            (rat(-2, 3), rat(1, 5), unit()),
            (rat(9, 10), rat(8, 9), unit()),
            (rat(1, 2), rat(1, 3), [rat_int(5), rat(1, 7), Rat::one(), rat_int(2)]),
            (rat(1, 7), rat(-1, 9), [rat(1, 3), rat_int(2), rat(5, 2), Rat::one()]),
        ];
        for (e, n, r) in cases {
            let q = quad(e, n, r);
            let z = extremal_affine_function(&q);
            for (d, mid) in [(Diagonal::Eps, q.v_eps()), (Diagonal::Eta, q.v_eta())] {
                let f = futaki(&q, &PLConvexFn::Diagonal(d)).unwrap();
                let zm = z.eval(&mid);
                assert_eq!(f.is_positive(), zm.is_positive(), "sign mismatch");
                assert_eq!(f.is_zero(), zm.is_zero(), "zero mismatch");
            }
        }
    }

    #[test]
    fn futaki_is_linear_in_labels() {
        let e = rat(2, 5);
        let n = rat(-1, 4);
        let r = [rat(3, 2), rat(2, 3), rat_int(2), rat(5, 4)];
        let q = quad(e.clone(), n.clone(), r.clone());
        let pl = PLConvexFn::family(
            CreaseFamily::Alpha,
            [rat_int(1), rat_int(2)],
            [rat_int(3), rat_int(1)],
        )
        .unwrap();
        let coeffs = futaki_r_coefficients(&q, &pl).unwrap();
        let direct = futaki(&q, &pl).unwrap();
        let recombined: Rat = (0..4).map(|j| &r[j] * &coeffs[j]).sum();
        assert_eq!(direct, recombined);
        // Coefficients are label-independent: recompute from a unit quad.
        let qu = quad(e, n, unit());
        assert_eq!(coeffs, futaki_r_coefficients(&qu, &pl).unwrap());
    }

    #[test]
    fn family_degenerations_reproduce_diagonals() {
        let q = quad(rat(1, 2), rat(1, 3), unit());
        let one0: [Rat; 2] = [Rat::one(), Rat::zero()];
        let zero1: [Rat; 2] = [Rat::zero(), Rat::one()];
        for fam in [CreaseFamily::Alpha, CreaseFamily::Beta] {
            let pl = PLConvexFn::family(fam, one0.clone(), one0.clone()).unwrap();
            let (a, b) = crease_endpoints(&q, &pl);
            assert_eq!(&a, q.vertex(VertexId::A0B0));
            assert_eq!(&b, q.vertex(VertexId::AIBI));
            assert_eq!(
                futaki(&q, &pl).unwrap(),
                futaki(&q, &PLConvexFn::Diagonal(Diagonal::Eps)).unwrap()
            );
            let pl2 = PLConvexFn::family(fam, zero1.clone(), zero1.clone()).unwrap();
            let f2 = futaki(&q, &pl2).unwrap();
            assert_eq!(
                f2,
                futaki(&q, &PLConvexFn::Diagonal(Diagonal::Eta)).unwrap()
            );
        }
    }

    #[test]
    fn boundary_crease_is_trivial() {
        let q = quad(rat(1, 2), rat(1, 3), unit());
        // s = [1:0], t = [0:1] in the α family joins A0B0 to AIB0, i.e. runs
        // along the Beta0 facet: no interior crease.
        let pl = PLConvexFn::family(
            CreaseFamily::Alpha,
            [Rat::one(), Rat::zero()],
            [Rat::zero(), Rat::one()],
        )
        .unwrap();
        match futaki(&q, &pl) {
            Err(PolytopeError::TrivialCrease) => {}
            other => panic!("expected trivial-crease, got {:?}", other),
        }
    }

    #[test]
    fn from_segment_round_trips() {
        let q = quad(rat(1, 2), rat(-1, 3), unit());
        for (fam, s, t) in [
            (CreaseFamily::Alpha, [rat_int(1), rat_int(2)], [rat_int(1), rat_int(1)]),
            (CreaseFamily::Beta, [rat_int(2), rat_int(5)], [rat(1, 3), rat_int(1)]),
            (CreaseFamily::Beta, [Rat::one(), Rat::zero()], [rat_int(2), rat_int(3)]),
        ] {
            let pl = PLConvexFn::family(fam, s, t).unwrap();
            let (a, b) = crease_endpoints(&q, &pl);
            let back = PLConvexFn::from_segment(&q, &a, &b).unwrap();
            // Projective parameters: compare via futaki values and endpoints.
            let (a2, b2) = crease_endpoints(&q, &back);
            assert!(
                (a2 == a && b2 == b) || (a2 == b && b2 == a),
                "endpoints changed: {:?} vs {:?}",
                (a, b),
                (a2, b2)
            );
            assert_eq!(futaki(&q, &pl).unwrap(), futaki(&q, &back).unwrap());
        }
        // Diagonal endpoints produce the diagonal variant.
        let d = PLConvexFn::from_segment(
            &q,
            &q.vertex(VertexId::AIBI).clone(),
            &q.vertex(VertexId::A0B0).clone(),
        )
        .unwrap();
        assert_eq!(d, PLConvexFn::Diagonal(Diagonal::Eps));
        // Two points on the same facet: trivial crease.
        let (p0, p1) = q.facet_endpoints(FacetId::Beta0);
        let mid = crate::affine::midpoint(p0, p1);
        let err = PLConvexFn::from_segment(&q, &p0.clone(), &mid);
        assert!(matches!(err, Err(PolytopeError::TrivialCrease)));
    }

    #[test]
    fn futaki_positive_on_parallelogram_diagonals() {
        // For the unit-label square the extremal affine function is the
        // constant 16, so both diagonal creases have strictly positive
        // Futaki invariant (consistent with the square being a product).
        let q = quad(Rat::zero(), Rat::zero(), unit());
        let z = extremal_affine_function(&q);
        assert_eq!(z, AffineFn::constant(rat_int(16)));
        for d in [Diagonal::Eps, Diagonal::Eta] {
            assert!(futaki(&q, &PLConvexFn::Diagonal(d)).unwrap().is_positive());
        }
    }

    #[test]
    fn endpoint_order_does_not_change_futaki() {
        // max(0, h) and max(0, −h) differ by the affine h, on which the
        // invariant vanishes; swapping segment endpoints flips h's sign.
        let q = quad(rat(1, 3), rat(1, 5), [rat_int(2), Rat::one(), rat(1, 2), rat_int(3)]);
        let pl = PLConvexFn::family(
            CreaseFamily::Beta,
            [rat_int(3), rat_int(2)],
            [rat_int(1), rat_int(4)],
        )
        .unwrap();
        let (a, b) = crease_endpoints(&q, &pl);
        let fwd = PLConvexFn::from_segment(&q, &a, &b).unwrap();
        let rev = PLConvexFn::from_segment(&q, &b, &a).unwrap();
        assert_eq!(futaki(&q, &fwd).unwrap(), futaki(&q, &rev).unwrap());
        assert_eq!(futaki(&q, &fwd).unwrap(), futaki(&q, &pl).unwrap());
    }

    #[test]
    fn futaki_invariant_under_diagonal_swapping_reflection() {
        // The reflection (x, y) ↦ (−x, y) carries the normal form with
        // parameters (ε, η) onto the one with parameters (−η, −ε): it swaps
        // the two crease-meeting facets (Alpha0 ↔ AlphaInf), fixes Beta0 and
        // BetaInf, and exchanges the two diagonals.  Transporting labels and
        // creases along it must preserve Futaki invariants exactly (the map
        // has |det| = 1), and the per-label coefficient vectors must match
        // after the same facet permutation.
        let reflect = |p: &crate::affine::P2| [-p[0].clone(), p[1].clone()];
        let cases = [
            (rat(1, 2), rat(1, 3), [rat(3, 2), Rat::one(), rat(2, 5), rat(7, 4)]),
            (rat(-2, 5), rat(1, 7), [Rat::one(), rat(1, 3), rat(5, 2), Rat::one()]),
            (rat(3, 4), rat(-3, 4), [rat(1, 6), rat(2, 3), Rat::one(), rat(4, 3)]),
        ];
        for (e, n, r) in cases {
            let q = quad(e.clone(), n.clone(), r.clone());
            let q2 = quad(
                -n.clone(),
                -e.clone(),
                [r[1].clone(), r[0].clone(), r[2].clone(), r[3].clone()],
            );
            let mut creases = vec![
                PLConvexFn::diagonal(Diagonal::Eps),
                PLConvexFn::diagonal(Diagonal::Eta),
            ];
            for (family, s, t) in [
                (CreaseFamily::Alpha, [rat(1, 2), rat(1, 3)], [rat_int(2), Rat::one()]),
                (CreaseFamily::Alpha, [Rat::one(), rat_int(4)], [rat(1, 5), Rat::one()]),
                (CreaseFamily::Beta, [Rat::one(), Rat::one()], [rat(2, 3), rat(3, 2)]),
                (CreaseFamily::Beta, [rat_int(3), rat(1, 2)], [Rat::one(), rat_int(2)]),
            ] {
                creases.push(PLConvexFn::family(family, s, t).unwrap());
            }
            for pl in creases {
                let (p0, p1) = crease_endpoints(&q, &pl);
                let pl2 = PLConvexFn::from_segment(&q2, &reflect(&p0), &reflect(&p1)).unwrap();
                assert_eq!(
                    futaki(&q, &pl).unwrap(),
                    futaki(&q2, &pl2).unwrap(),
                    "futaki changes under reflection transport: e={} n={} crease={:?}",
                    e,
                    n,
                    pl
                );
                let c = futaki_r_coefficients(&q, &pl).unwrap();
                let c2 = futaki_r_coefficients(&q2, &pl2).unwrap();
                assert_eq!(
                    c2,
                    [c[1].clone(), c[0].clone(), c[2].clone(), c[3].clone()],
                    "coefficient vector fails the facet permutation: e={} n={}",
                    e,
                    n
                );
            }
        }
    }
}
