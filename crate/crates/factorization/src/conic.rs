//! Selecting the distinguished conic through the four facet normals.
//!
//! Affine functions on the quadrilateral's plane form a 3-dimensional space
//! `𝔥`; an affine function `a + b·x + c·y` is encoded as the vector
//! `[a, b, c]`.  The four facet normals give four points in `P(𝔥)` in general
//! position (any three of the four are independent for every normalised
//! quadrilateral), so the conics through all four form a pencil.  Two
//! distinguished degenerate members span it:
//!
//! * the **family pair** — the line through the two `α`-normals together
//!   with the line through the two `β`-normals;
//! * the **edge pair** — the line through the two `0`-end normals together
//!   with the line through the two `∞`-end normals.
//!
//! The selected conic is the unique member `Q` with `Q(ι, ζ) = 0`, where
//! `ι ≡ 1` is the constant function and `ζ` the extremal affine function of
//! the labelled quadrilateral.  Its type (nonsingular versus line pair) and
//! whether `ι` lies on it route the chart extraction.

use crate::vec3::{cross, is_zero_vec, primitive_scale, primitive_vec};
use crate::FactorError;
use exactcore::{QuadForm3, Rat};
use num_traits::{One, Signed, Zero};
use polytope::{classify_quad, extremal_affine_function, FacetId, LabelledQuad, QuadShape};

/// Coefficient vector of the *labelled* inward normal `L_j = ℓ_j / r_j`
/// (for an omitted facet the unit normal itself, matching
/// [`LabelledQuad::normal`]).
pub fn normal_vector(q: &LabelledQuad, f: FacetId) -> [Rat; 3] {
    q.normal(f).coeffs().clone()
}

/// Coefficient vector of the unit inward normal `ℓ_j` (label-independent).
pub fn unit_normal_vector(q: &LabelledQuad, f: FacetId) -> [Rat; 3] {
    q.ell(f).coeffs().clone()
}

/// The constant affine function `ι ≡ 1`.
pub fn iota_vector() -> [Rat; 3] {
    [Rat::one(), Rat::zero(), Rat::zero()]
}

/// Coefficient vector of the extremal affine function `ζ`.
pub fn zeta_vector(q: &LabelledQuad) -> [Rat; 3] {
    extremal_affine_function(q).coeffs().clone()
}

/// The pencil of conics through the four facet normals, presented by its two
/// degenerate generators.
#[derive(Clone, Debug)]
pub struct ConicPencil {
    family_pair: QuadForm3<Rat>,
    edge_pair: QuadForm3<Rat>,
}

impl ConicPencil {
    /// Build the pencil from the unit normals of `quad`.
    pub fn new(quad: &LabelledQuad) -> Self {
        let l = |f: FacetId| unit_normal_vector(quad, f);
        let a0 = l(FacetId::Alpha0);
        let ai = l(FacetId::AlphaInf);
        let b0 = l(FacetId::Beta0);
        let bi = l(FacetId::BetaInf);
        // A line through two points of P(𝔥) is the kernel of the covector
        // `cross(p, q)`; a pair of lines `u, v` is the rank-≤2 conic
        // `u ⊙ v = u vᵀ + v uᵀ`.
        let alpha_line = cross(&a0, &ai);
        let beta_line = cross(&b0, &bi);
        let zero_line = cross(&a0, &b0);
        let inf_line = cross(&ai, &bi);
        let family_pair = normalize_qform(&QuadForm3::symmetric_product(&alpha_line, &beta_line));
        let edge_pair = normalize_qform(&QuadForm3::symmetric_product(&zero_line, &inf_line));
        ConicPencil {
            family_pair,
            edge_pair,
        }
    }

    /// The degenerate member splitting into the `α`-line and the `β`-line.
    pub fn family_pair(&self) -> &QuadForm3<Rat> {
        &self.family_pair
    }

    /// The degenerate member splitting into the `0`-end line and the
    /// `∞`-end line.
    pub fn edge_pair(&self) -> &QuadForm3<Rat> {
        &self.edge_pair
    }

    /// The member `λ·family + μ·edge`.
    pub fn member(&self, lambda: &Rat, mu: &Rat) -> QuadForm3<Rat> {
        self.family_pair.scale(lambda).add(&self.edge_pair.scale(mu))
    }
}

/// Type of the selected conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicKind {
    /// Nonsingular: the chart model is the one with quadratic denominator.
    Nonsingular,
    /// A pair of distinct lines (rank 2).
    LinePair,
}

/// The distinguished member of the pencil, deterministically normalised
/// (coprime integer entries, first nonzero entry of the upper triangle
/// positive).
#[derive(Clone, Debug)]
pub struct SelectedConic {
    form: QuadForm3<Rat>,
    kind: ConicKind,
    iota_on_conic: bool,
    selection: (Rat, Rat),
}

impl SelectedConic {
    /// The conic as a symmetric bilinear form on `𝔥`.
    pub fn form(&self) -> &QuadForm3<Rat> {
        &self.form
    }

    pub fn kind(&self) -> ConicKind {
        self.kind
    }

    /// Whether the constant function lies on the conic.  This happens exactly
    /// when the quadrilateral is equipoised.
    pub fn iota_on_conic(&self) -> bool {
        self.iota_on_conic
    }

    /// The pencil coordinates `(λ : μ)` (family : edge) that produced the
    /// conic, before normalisation.
    pub fn selection(&self) -> &(Rat, Rat) {
        &self.selection
    }

    /// For a line pair, the singular point (line crossing) as a primitive
    /// vector.
    pub fn singular_point(&self) -> Result<[Rat; 3], FactorError> {
        if self.kind != ConicKind::LinePair {
            return Err(FactorError::Internal(
                "singular_point on a nonsingular conic".into(),
            ));
        }
        singular_point_of(&self.form).ok_or_else(|| {
            FactorError::Internal("rank-2 form with no kernel vector found".into())
        })
    }
}

/// Result of the selection.
#[derive(Clone, Debug)]
pub enum ConicSelection {
    /// The generic case: a unique admissible member.
    Unique(SelectedConic),
    /// Both generators already satisfy the selection condition, so every
    /// member does; no unique conic exists.  The caller decides how to
    /// proceed (any admissible member determines the same verdict).
    FullPencil { pencil: ConicPencil },
    /// Parallelograms: the selection condition degenerates because `ι` is
    /// the singular point of the family pair.  No chart is needed — such
    /// quadrilaterals are products and are handled combinatorially.
    ParallelogramDegenerate { pencil: ConicPencil },
}

/// Deterministic representative of a nonzero symmetric form: coprime integer
/// entries with the first nonzero entry of `(m00, m01, m02, m11, m12, m22)`
/// positive.
pub(crate) fn normalize_qform(q: &QuadForm3<Rat>) -> QuadForm3<Rat> {
    let m = q.matrix();
    let upper = [
        m[0][0].clone(),
        m[0][1].clone(),
        m[0][2].clone(),
        m[1][1].clone(),
        m[1][2].clone(),
        m[2][2].clone(),
    ];
    let mut s = primitive_scale(upper.iter());
    if let Some(first) = upper.iter().find(|c| !c.is_zero()) {
        if (first.clone() * &s).is_negative() {
            s = -s;
        }
    }
    q.scale(&s)
}

/// A kernel vector of a rank-2 symmetric form (its adjugate has rank 1 and
/// every nonzero column spans the kernel), primitive-normalised.
fn singular_point_of(q: &QuadForm3<Rat>) -> Option<[Rat; 3]> {
    let adj = q.adjugate();
    let m = adj.matrix();
    for col in 0..3 {
        let v = [m[0][col].clone(), m[1][col].clone(), m[2][col].clone()];
        if !is_zero_vec(&v) {
            return Some(primitive_vec(&v));
        }
    }
    None
}

/// Select the distinguished conic for `quad`.
///
/// The member `Q = λ·C₁ + μ·C₂` (family, edge generators) is pinned by
/// `Q(ι, ζ) = 0`, i.e. `(λ : μ) = (C₂(ι,ζ) : −C₁(ι,ζ))`.  Degenerations:
///
/// * parallelogram → [`ConicSelection::ParallelogramDegenerate`] (for these
///   `ι` is the singular point of the family pair, so the condition cannot
///   single out a member);
/// * both pairing values zero → [`ConicSelection::FullPencil`];
/// * a line pair whose singular point is `ι` itself →
///   [`FactorError::NoAdmissibleConic`] (defensive; geometrically this only
///   happens for parallelograms, which are caught earlier).
pub fn select_conic(quad: &LabelledQuad) -> Result<ConicSelection, FactorError> {
    let pencil = ConicPencil::new(quad);
    let iota = iota_vector();
    let zeta = zeta_vector(quad);
    let c1 = pencil.family_pair.eval(&iota, &zeta);
    let c2 = pencil.edge_pair.eval(&iota, &zeta);

    if quad.shape() == QuadShape::Parallelogram {
        return Ok(ConicSelection::ParallelogramDegenerate { pencil });
    }
    if c1.is_zero() && c2.is_zero() {
        return Ok(ConicSelection::FullPencil { pencil });
    }

    let lambda = c2.clone();
    let mu = -c1.clone();
    let form = normalize_qform(&pencil.member(&lambda, &mu));

    // Postconditions of the selection: the conic passes through all four
    // labelled normals and pairs ι with ζ to zero.
    for f in FacetId::ALL {
        let n = normal_vector(quad, f);
        if !form.eval_quad(&n).is_zero() {
            return Err(FactorError::Internal(format!(
                "selected conic misses the {} normal",
                f.tag()
            )));
        }
    }
    if !form.eval(&iota, &zeta).is_zero() {
        return Err(FactorError::Internal(
            "selected conic does not annihilate (iota, zeta)".into(),
        ));
    }

    let det = form.det();
    let kind = if det.is_zero() {
        ConicKind::LinePair
    } else {
        ConicKind::Nonsingular
    };
    if kind == ConicKind::LinePair {
        // Rank 1 cannot happen for four base points in general position.
        if singular_point_of(&form).is_none() {
            return Err(FactorError::Internal(
                "selected conic has rank <= 1".into(),
            ));
        }
        // ι being the singular point would leave no admissible conic.
        if is_zero_vec(&form.apply(&iota)) {
            return Err(FactorError::NoAdmissibleConic);
        }
    }
    let iota_on_conic = form.eval_quad(&iota).is_zero();

    Ok(ConicSelection::Unique(SelectedConic {
        form,
        kind,
        iota_on_conic,
        selection: (lambda, mu),
    }))
}

/// Does the selected conic meet the interior of the dual cone spanned by the
/// four unit normals?
///
/// The four normals are extreme rays of a 4-gonal cone in `𝔥`, cyclically
/// ordered `α₀, β₀, α∞, β∞`.  The conic meets the interior of its
/// projectivisation exactly when the four polar values
/// `Q(ℓ_i, ℓ_j)` along adjacent extreme-ray pairs take both a strictly
/// positive and a strictly negative value.  (On the conic itself each facet
/// normal gives `Q(ℓ_j, ℓ_j) = 0`; a zero polar value between adjacent
/// normals means the conic contains the whole edge line, which happens only
/// for the edge pair — and that member never meets the interior.)
pub fn condition_conic_meets(quad: &LabelledQuad, conic: &SelectedConic) -> bool {
    let l = |f: FacetId| unit_normal_vector(quad, f);
    let ring = [
        l(FacetId::Alpha0),
        l(FacetId::Beta0),
        l(FacetId::AlphaInf),
        l(FacetId::BetaInf),
    ];
    let mut has_pos = false;
    let mut has_neg = false;
    for i in 0..4 {
        let v = conic.form.eval(&ring[i], &ring[(i + 1) % 4]);
        if v.is_positive() {
            has_pos = true;
        } else if v.is_negative() {
            has_neg = true;
        }
    }
    has_pos && has_neg
}

/// A sufficient certificate that the selected conic meets the dual-cone
/// interior: an affine function `h` conjugate to `ι` with respect to the
/// conic (`Q(ι, h) = 0`) that has the same strict sign at the two boundary
/// midpoints `v_ε` and `v_η`.
///
/// Returns such an `h` (as a coefficient vector) when one exists among the
/// pencil `h = h_a + t·h_b` spanned by a basis of the polar plane of `ι`,
/// or `None` if the search is inconclusive.  Used as a cross-check of
/// [`condition_conic_meets`]; this direction is only sufficient.
pub fn newton_certificate(quad: &LabelledQuad, conic: &SelectedConic) -> Option<[Rat; 3]> {
    let iota = iota_vector();
    let w = conic.form.apply(&iota);
    if is_zero_vec(&w) {
        return None;
    }
    // Basis of the plane {h : w·h = 0}: cross products of w with the
    // standard basis, keeping two independent ones.
    let mut basis: Vec<[Rat; 3]> = Vec::new();
    for i in 0..3 {
        let mut e = [Rat::zero(), Rat::zero(), Rat::zero()];
        e[i] = Rat::one();
        let c = cross(&w, &e);
        if !is_zero_vec(&c) && basis.iter().all(|b| !crate::vec3::proportional(b, &c)) {
            basis.push(c);
        }
        if basis.len() == 2 {
            break;
        }
    }
    if basis.len() < 2 {
        return None;
    }
    let (ha, hb) = (basis[0].clone(), basis[1].clone());
    let veps = quad.v_eps();
    let veta = quad.v_eta();
    let eval_at = |h: &[Rat; 3], p: &polytope::P2| -> Rat {
        &h[0] + &h[1] * &p[0] + &h[2] * &p[1]
    };
    let a1 = eval_at(&ha, &veps);
    let a2 = eval_at(&ha, &veta);
    let b1 = eval_at(&hb, &veps);
    let b2 = eval_at(&hb, &veta);
    // f(t) = (a1 + t b1)(a2 + t b2) > 0 for some rational t?
    let mut candidates: Vec<Rat> = vec![Rat::zero(), Rat::one(), -Rat::one()];
    // Large |t| probes the leading behaviour b1·b2·t².
    candidates.push(Rat::from_integer(1000.into()));
    candidates.push(Rat::from_integer((-1000).into()));
    // Midpoint of the two roots, where f is extremal.
    let lead = &b1 * &b2;
    if !lead.is_zero() {
        let mid = -(&a1 * &b2 + &a2 * &b1) / (Rat::from_integer(2.into()) * &lead);
        candidates.push(mid);
    }
    for t in candidates {
        let val = (&a1 + &t * &b1) * (&a2 + &t * &b2);
        if val.is_positive() {
            let h = [
                &ha[0] + &t * &hb[0],
                &ha[1] + &t * &hb[1],
                &ha[2] + &t * &hb[2],
            ];
            return Some(h);
        }
    }
    None
}

/// Convenience: is the quadrilateral's classification consistent with the
/// conic data?  (`iota_on_conic ⟺ equipoised`.)  Exposed for tests.
pub fn iota_matches_equipoise(quad: &LabelledQuad, conic: &SelectedConic) -> bool {
    classify_quad(quad).equipoised == conic.iota_on_conic
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::rat;

    fn quad_unit(eps: (i64, i64), eta: (i64, i64)) -> LabelledQuad {
        LabelledQuad::from_normal_form(
            rat(eps.0, eps.1),
            rat(eta.0, eta.1),
            [Rat::one(), Rat::one(), Rat::one(), Rat::one()],
        )
        .unwrap()
    }

    #[test]
    fn pencil_generators_pass_through_normals() {
        let q = quad_unit((1, 2), (1, 3));
        let pencil = ConicPencil::new(&q);
        for f in FacetId::ALL {
            let n = unit_normal_vector(&q, f);
            assert!(pencil.family_pair().eval_quad(&n).is_zero());
            assert!(pencil.edge_pair().eval_quad(&n).is_zero());
        }
    }

    #[test]
    fn family_pair_meets_and_edge_pair_does_not() {
        let q = quad_unit((1, 2), (1, 3));
        // Wrap the generators as SelectedConic just to reuse the polar test.
        let mk = |form: &QuadForm3<Rat>| SelectedConic {
            form: form.clone(),
            kind: ConicKind::LinePair,
            iota_on_conic: false,
            selection: (Rat::zero(), Rat::zero()),
        };
        let pencil = ConicPencil::new(&q);
        assert!(condition_conic_meets(&q, &mk(pencil.family_pair())));
        assert!(!condition_conic_meets(&q, &mk(pencil.edge_pair())));
    }

    #[test]
    fn parallelogram_is_degenerate() {
        let q = quad_unit((0, 1), (0, 1));
        match select_conic(&q).unwrap() {
            ConicSelection::ParallelogramDegenerate { .. } => {}
            other => panic!("expected parallelogram degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn selection_is_primitive_and_deterministic() {
        let q = quad_unit((1, 2), (1, 3));
        let sel = match select_conic(&q).unwrap() {
            ConicSelection::Unique(s) => s,
            other => panic!("expected unique conic, got {other:?}"),
        };
        let m = sel.form().matrix();
        // integer entries
        for row in m {
            for e in row {
                assert!(e.denom().is_one(), "entry {e} not an integer");
            }
        }
        // run twice, same representative
        let sel2 = match select_conic(&q).unwrap() {
            ConicSelection::Unique(s) => s,
            _ => unreachable!(),
        };
        assert_eq!(sel.form().matrix(), sel2.form().matrix());
    }
}
