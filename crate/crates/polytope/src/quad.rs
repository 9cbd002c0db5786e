//! Labelled convex quadrilaterals: normal form, construction from raw data,
//! and shape classification.
//!
//! Every convex quadrilateral with an interior diagonal crossing is affinely
//! equivalent to a two-parameter normal form `(ε, η)` with `|ε|, |η| < 1`,
//! whose diagonals meet at the origin.  Vertices are named by the pair of
//! facets meeting there; the two facet families `α` and `β` each consist of a
//! pair of *opposite* facets (indexed `0` and `∞`).

use crate::affine::{midpoint, signed_area, AffineFn, AffineMap, P2};
use crate::PolytopeError;
use exactcore::{rat, rat_int, Rat};
use num_traits::{Signed, Zero};

/// One of the four facets.  The `α` pair is opposite, as is the `β` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetId {
    Alpha0 = 0,
    AlphaInf = 1,
    Beta0 = 2,
    BetaInf = 3,
}

impl FacetId {
    pub const ALL: [FacetId; 4] = [
        FacetId::Alpha0,
        FacetId::AlphaInf,
        FacetId::Beta0,
        FacetId::BetaInf,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The opposite facet (same family, other end).
    pub fn opposite(self) -> FacetId {
        match self {
            FacetId::Alpha0 => FacetId::AlphaInf,
            FacetId::AlphaInf => FacetId::Alpha0,
            FacetId::Beta0 => FacetId::BetaInf,
            FacetId::BetaInf => FacetId::Beta0,
        }
    }

    /// Stable textual tag used in JSON.
    pub fn tag(self) -> &'static str {
        match self {
            FacetId::Alpha0 => "alpha0",
            FacetId::AlphaInf => "alphaInf",
            FacetId::Beta0 => "beta0",
            FacetId::BetaInf => "betaInf",
        }
    }

    pub fn from_tag(tag: &str) -> Option<FacetId> {
        match tag {
            "alpha0" => Some(FacetId::Alpha0),
            "alphaInf" => Some(FacetId::AlphaInf),
            "beta0" => Some(FacetId::Beta0),
            "betaInf" => Some(FacetId::BetaInf),
            _ => None,
        }
    }

    /// The two vertices on this facet.
    pub fn vertices(self) -> (VertexId, VertexId) {
        match self {
            FacetId::Alpha0 => (VertexId::A0B0, VertexId::A0BI),
            FacetId::AlphaInf => (VertexId::AIB0, VertexId::AIBI),
            FacetId::Beta0 => (VertexId::A0B0, VertexId::AIB0),
            FacetId::BetaInf => (VertexId::A0BI, VertexId::AIBI),
        }
    }

    /// The two vertices *not* on this facet.
    pub fn off_vertices(self) -> (VertexId, VertexId) {
        let (a, b) = self.opposite().vertices();
        (a, b)
    }
}

/// A vertex, named by the two facets that meet there (`A`/`B` for the
/// families, `0`/`I` for the `0`/`∞` ends).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexId {
    /// `Alpha0 ∩ Beta0`
    A0B0 = 0,
    /// `AlphaInf ∩ BetaInf`
    AIBI = 1,
    /// `Alpha0 ∩ BetaInf`
    A0BI = 2,
    /// `AlphaInf ∩ Beta0`
    AIB0 = 3,
}

impl VertexId {
    pub const ALL: [VertexId; 4] = [
        VertexId::A0B0,
        VertexId::AIBI,
        VertexId::A0BI,
        VertexId::AIB0,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Coarse affine shape of a quadrilateral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadShape {
    /// `ε = η = 0`.
    Parallelogram,
    /// `η = ±ε ≠ 0` (exactly one pair of parallel sides).
    Trapezium,
    Generic,
}

/// Classification data of a labelled quadrilateral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadClass {
    pub shape: QuadShape,
    /// The extremal affine function takes equal values at the two diagonal
    /// midpoints.
    pub equipoised: bool,
    /// The extremal affine function is strictly positive at both diagonal
    /// midpoints.
    pub temperate: bool,
}

/// Normal-form vertex coordinates for parameters `(ε, η)`, in internal order
/// `[A0B0, AIBI, A0BI, AIB0]`.
pub fn normal_form_vertices(eps: &Rat, eta: &Rat) -> [P2; 4] {
    let one = rat_int(1);
    let m1 = rat_int(-1);
    let de0 = &one - eps; // 1 - ε
    let dei = &one + eps; // 1 + ε
    let dn0 = &one - eta; // 1 - η
    let dni = &one + eta; // 1 + η
    [
        [&m1 / &de0, &m1 / &de0],   // A0B0 = (−1,−1)/(1−ε)
        [&one / &dei, &one / &dei], // AIBI = (1,1)/(1+ε)
        [&m1 / &dn0, &one / &dn0],  // A0BI = (−1,1)/(1−η)
        [&one / &dni, &m1 / &dni],  // AIB0 = (1,−1)/(1+η)
    ]
}

/// Canonical facet normals `ℓ_j` of the normal form, in internal order
/// `[Alpha0, AlphaInf, Beta0, BetaInf]`.  They are positive on the interior,
/// vanish on their facet, and satisfy `Σ_j ℓ_j = 1`.
pub fn normal_form_ells(eps: &Rat, eta: &Rat) -> [AffineFn; 4] {
    let one = rat_int(1);
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let de0 = &one - eps;
    let dei = &one + eps;
    let dn0 = &one - eta;
    let dni = &one + eta;
    let s = eps + eta; // ε + η
    let d = eps - eta; // ε − η
    // ℓ′ functions: w ± x and w ± y for w = 1 − (ε+η)x/2 − (ε−η)y/2.
    let lp_a0 = AffineFn::new(one.clone(), (rat_int(2) - &s) * &half, -(&d * &half));
    let lp_ai = AffineFn::new(one.clone(), -((rat_int(2) + &s) * &half), -(&d * &half));
    let lp_b0 = AffineFn::new(one.clone(), -(&s * &half), (rat_int(2) - &d) * &half);
    let lp_bi = AffineFn::new(one.clone(), -(&s * &half), -((rat_int(2) + &d) * &half));
    [
        lp_a0.scale(&(&dei * &dni * &quarter)), // ℓ_{α,0} = ¼(1+ε)(1+η)·ℓ′
        lp_ai.scale(&(&de0 * &dn0 * &quarter)), // ℓ_{α,∞} = ¼(1−ε)(1−η)·ℓ′
        lp_b0.scale(&(&dei * &dn0 * &quarter)), // ℓ_{β,0} = ¼(1+ε)(1−η)·ℓ′
        lp_bi.scale(&(&de0 * &dni * &quarter)), // ℓ_{β,∞} = ¼(1−ε)(1+η)·ℓ′
    ]
}

/// A convex quadrilateral together with a label `r_j ≥ 0` on each facet
/// (`r_j = 0` marks the facet as omitted, i.e. an unbounded "complete end"
/// of the associated geometry).
///
/// Internally everything is stored in whatever coordinate frame the quad was
/// constructed in; the affine invariants `(ε, η)` and the canonical normals
/// `ℓ_j` determine all downstream computations.
#[derive(Clone, Debug)]
pub struct LabelledQuad {
    eps: Rat,
    eta: Rat,
    /// Vertex coordinates in order `[A0B0, AIBI, A0BI, AIB0]`.
    vertices: [P2; 4],
    /// Labels in facet order `[Alpha0, AlphaInf, Beta0, BetaInf]`.
    r: [Rat; 4],
    /// Canonical normals in facet order; `ℓ_j` vanishes on facet `j`, is
    /// positive inside, and `Σ ℓ_j = 1`.
    ell: [AffineFn; 4],
}

impl LabelledQuad {
    /// Build a quad in normal form from `(ε, η)` and labels.
    pub fn from_normal_form(eps: Rat, eta: Rat, r: [Rat; 4]) -> Result<Self, PolytopeError> {
        let one = rat_int(1);
        if eps.abs() >= one || eta.abs() >= one {
            return Err(PolytopeError::InvalidQuad(format!(
                "normal-form parameters must lie in (-1, 1), got epsilon={}, eta={}",
                eps, eta
            )));
        }
        validate_labels(&r)?;
        let vertices = normal_form_vertices(&eps, &eta);
        let ell = normal_form_ells(&eps, &eta);
        Ok(LabelledQuad {
            eps,
            eta,
            vertices,
            r,
            ell,
        })
    }

    /// Build a quad from raw data: vertices in order `[A0B0, AIBI, A0BI, AIB0]`,
    /// inward normals in *facet* order `[Alpha0, AlphaInf, Beta0, BetaInf]`
    /// (each vanishing on its facet and positive inside), and the set of
    /// omitted facets.  For a present facet `j` the label is recovered from
    /// the scale of the normal: `r_j = ℓ_j / L_j`.
    pub fn from_raw(
        vertices: [P2; 4],
        normals: [AffineFn; 4],
        omitted: &[FacetId],
    ) -> Result<Self, PolytopeError> {
        // 1. The diagonals A0B0—AIBI and A0BI—AIB0 must cross strictly
        //    inside both segments; this is exactly convex position.
        let (lambda, mu) = diagonal_crossing(&vertices)?;
        let one = rat_int(1);
        let two = rat_int(2);
        let eps = &one - &two * &lambda;
        let eta = &one - &two * &mu;

        // 2. Pull the canonical normals back through the unique affine map
        //    onto the normal form.
        let nf = normal_form_vertices(&eps, &eta);
        let src = [
            vertices[0].clone(),
            vertices[1].clone(),
            vertices[2].clone(),
        ];
        let dst = [nf[0].clone(), nf[1].clone(), nf[2].clone()];
        let t = AffineMap::from_three_points(&src, &dst).ok_or_else(|| {
            PolytopeError::InvalidQuad("vertices are degenerate".to_string())
        })?;
        // The fourth vertex follows automatically from the construction of
        // (ε, η); keep a hard check as an internal consistency guard.
        let mapped = t.apply(&vertices[3]);
        assert_eq!(
            mapped, nf[3],
            "internal error: fourth vertex fails the normal-form correspondence"
        );
        let ell_nf = normal_form_ells(&eps, &eta);
        let ell: [AffineFn; 4] = [
            ell_nf[0].compose(&t),
            ell_nf[1].compose(&t),
            ell_nf[2].compose(&t),
            ell_nf[3].compose(&t),
        ];

        // 3. Validate each supplied normal and recover its label.
        let mut r = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for f in FacetId::ALL {
            let j = f.index();
            let n = &normals[j];
            let (va, vb) = f.vertices();
            if !n.eval(&vertices[va.index()]).is_zero()
                || !n.eval(&vertices[vb.index()]).is_zero()
            {
                return Err(PolytopeError::InvalidQuad(format!(
                    "normal for facet {} does not vanish on that facet",
                    f.tag()
                )));
            }
            let (vc, _) = f.off_vertices();
            let denom = n.eval(&vertices[vc.index()]);
            if denom.is_zero() {
                return Err(PolytopeError::InvalidQuad(format!(
                    "normal for facet {} is identically zero on the quad",
                    f.tag()
                )));
            }
            // Both n and ℓ_j are affine functions vanishing on the same
            // (non-degenerate) facet line, hence proportional; one off-facet
            // ratio determines the constant.
            let rho = ell[j].eval(&vertices[vc.index()]) / denom;
            if !rho.is_positive() {
                return Err(PolytopeError::InvalidQuad(format!(
                    "normal for facet {} points outward (labels must be positive)",
                    f.tag()
                )));
            }
            r[j] = if omitted.contains(&f) { Rat::zero() } else { rho };
        }
        validate_labels(&r)?;
        Ok(LabelledQuad {
            eps,
            eta,
            vertices,
            r,
            ell,
        })
    }

    pub fn eps(&self) -> &Rat {
        &self.eps
    }

    pub fn eta(&self) -> &Rat {
        &self.eta
    }

    /// Labels in facet order `[Alpha0, AlphaInf, Beta0, BetaInf]`.
    pub fn labels(&self) -> &[Rat; 4] {
        &self.r
    }

    pub fn label(&self, f: FacetId) -> &Rat {
        &self.r[f.index()]
    }

    pub fn is_omitted(&self, f: FacetId) -> bool {
        self.r[f.index()].is_zero()
    }

    pub fn omitted_facets(&self) -> Vec<FacetId> {
        FacetId::ALL
            .into_iter()
            .filter(|f| self.is_omitted(*f))
            .collect()
    }

    pub fn vertex(&self, v: VertexId) -> &P2 {
        &self.vertices[v.index()]
    }

    /// Vertices in internal order `[A0B0, AIBI, A0BI, AIB0]`.
    pub fn vertices(&self) -> &[P2; 4] {
        &self.vertices
    }

    /// Canonical normal `ℓ_j` (positive inside, `Σ ℓ_j = 1`).
    pub fn ell(&self, f: FacetId) -> &AffineFn {
        &self.ell[f.index()]
    }

    /// The user-facing normal `L_j`: equal to `ℓ_j / r_j` for a present
    /// facet, and to the canonical `ℓ_j` for an omitted one.
    pub fn normal(&self, f: FacetId) -> AffineFn {
        let rj = self.label(f);
        if rj.is_zero() {
            self.ell(f).clone()
        } else {
            self.ell(f).scale(&(rat_int(1) / rj))
        }
    }

    /// Endpoints of a facet, in the vertex order given by
    /// `FacetId::vertices`.
    pub fn facet_endpoints(&self, f: FacetId) -> (&P2, &P2) {
        let (a, b) = f.vertices();
        (self.vertex(a), self.vertex(b))
    }

    /// Boundary cycle of the quadrilateral (a simple closed walk; in the
    /// normal form it is counter-clockwise).  Edge `i` of the cycle joins
    /// entry `i` to entry `i+1 (mod 4)`; the facets traversed are
    /// `[Beta0, AlphaInf, BetaInf, Alpha0]`.
    pub fn boundary_cycle(&self) -> [VertexId; 4] {
        [
            VertexId::A0B0,
            VertexId::AIB0,
            VertexId::AIBI,
            VertexId::A0BI,
        ]
    }

    /// Midpoint of the diagonal A0B0—AIBI.
    pub fn v_eps(&self) -> P2 {
        midpoint(
            self.vertex(VertexId::A0B0),
            self.vertex(VertexId::AIBI),
        )
    }

    /// Midpoint of the diagonal A0BI—AIB0.
    pub fn v_eta(&self) -> P2 {
        midpoint(
            self.vertex(VertexId::A0BI),
            self.vertex(VertexId::AIB0),
        )
    }

    /// Centroid (midpoint of the two diagonal midpoints).
    pub fn centroid(&self) -> P2 {
        midpoint(&self.v_eps(), &self.v_eta())
    }

    /// Area of the quadrilateral.
    pub fn area(&self) -> Rat {
        let cycle = self.boundary_cycle();
        let p: Vec<&P2> = cycle.iter().map(|v| self.vertex(*v)).collect();
        (signed_area(p[0], p[1], p[2]) + signed_area(p[0], p[2], p[3])).abs()
    }

    pub fn shape(&self) -> QuadShape {
        if self.eps.is_zero() && self.eta.is_zero() {
            QuadShape::Parallelogram
        } else if self.eta == self.eps || self.eta == -self.eps.clone() {
            QuadShape::Trapezium
        } else {
            QuadShape::Generic
        }
    }
}

fn validate_labels(r: &[Rat; 4]) -> Result<(), PolytopeError> {
    for (f, rj) in FacetId::ALL.iter().zip(r.iter()) {
        if rj.is_negative() {
            return Err(PolytopeError::InvalidQuad(format!(
                "label for facet {} must be nonnegative, got {}",
                f.tag(),
                rj
            )));
        }
    }
    if r.iter().all(|rj| rj.is_zero()) {
        return Err(PolytopeError::InvalidQuad(
            "at least one facet must carry a positive label".to_string(),
        ));
    }
    Ok(())
}

/// Intersection parameters of the diagonals: the crossing point is
/// `λ·A0B0 + (1−λ)·AIBI = μ·A0BI + (1−μ)·AIB0`; both must lie strictly in
/// `(0, 1)`.
fn diagonal_crossing(vertices: &[P2; 4]) -> Result<(Rat, Rat), PolytopeError> {
    let [a, c, b, d] = vertices; // diagonals a—c and b—d
    // λ·a + (1−λ)·c = μ·b + (1−μ)·d  ⇒  λ·(a−c) − μ·(b−d) = d − c.
    let m = [
        [&a[0] - &c[0], &d[0] - &b[0]],
        [&a[1] - &c[1], &d[1] - &b[1]],
    ];
    let rhs = [&d[0] - &c[0], &d[1] - &c[1]];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return Err(PolytopeError::InvalidQuad(
            "diagonals are parallel or degenerate".to_string(),
        ));
    }
    let lambda = (&rhs[0] * &m[1][1] - &rhs[1] * &m[0][1]) / &det;
    let mu = (&m[0][0] * &rhs[1] - &m[1][0] * &rhs[0]) / &det;
    let zero = Rat::zero();
    let one = rat_int(1);
    if lambda <= zero || lambda >= one || mu <= zero || mu >= one {
        return Err(PolytopeError::InvalidQuad(
            "diagonals do not cross strictly inside the quadrilateral".to_string(),
        ));
    }
    Ok((lambda, mu))
}
