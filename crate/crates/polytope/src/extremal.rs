//! The extremal affine function `ζ` of a labelled polytope: the unique
//! affine function satisfying the moment conditions
//! `∫_Δ ⟨ξ, ζ⟩ ξ dλ = 2 ∫_∂Δ ξ dν` for all affine `ξ`.
//!
//! Two independent computations are provided for quads: solving the 3×3
//! moment system exactly, and a closed form linear in the labels.

use crate::affine::{triangle_area, AffineFn, P2};
use crate::measures::{
    boundary_integral, facet_density, quad_integral, simplex_integral,
};
use crate::quad::{FacetId, LabelledQuad, QuadClass};
use crate::PolytopeError;
use exactcore::{rat, rat_int, solve_linear, LinearOutcome, Mat, Rat};
use num_traits::{Signed, Zero};

/// Solve the moment system for a labelled quad exactly.  The Gram matrix of
/// the affine basis is positive definite for a non-degenerate quad, so the
/// system always has a unique solution.
pub fn extremal_affine_function_moment(q: &LabelledQuad) -> AffineFn {
    let basis = [AffineFn::one(), AffineFn::coord_x(), AffineFn::coord_y()];
    let mut m = vec![vec![Rat::zero(); 3]; 3];
    let mut rhs = vec![Rat::zero(); 3];
    for (i, ei) in basis.iter().enumerate() {
        for (j, ej) in basis.iter().enumerate() {
            m[i][j] = quad_integral(q, ei, ej);
        }
        rhs[i] = rat_int(2) * boundary_integral(q, ei);
    }
    match solve_linear(&Mat::from_rows(m), &rhs) {
        LinearOutcome::Solved { particular, .. } => AffineFn::new(
            particular[0].clone(),
            particular[1].clone(),
            particular[2].clone(),
        ),
        LinearOutcome::Inconsistent { .. } => {
            unreachable!("the moment Gram matrix of a non-degenerate quad is invertible")
        }
    }
}

/// Closed form for `ζ`: `ζ = c(ε,η) Σ_j r_j ζ_j` where
/// `ζ_j = 2(1 − 2ℓ_j) + 4 n_{j'} (2 ℓ_{j'} − 1)` with `j'` the opposite
/// facet, `n_{j'}` its canonical normalization constant, and
/// `c(ε,η) = 24 / (4 − (1−ε²)(1−η²))`.
pub fn extremal_affine_function(q: &LabelledQuad) -> AffineFn {
    let comps = extremal_components(q);
    let mut z = AffineFn::zero();
    for f in FacetId::ALL {
        z = z.add(&comps[f.index()].scale(q.label(f)));
    }
    z
}

/// The per-label components `∂ζ/∂r_j` (each includes the normalization
/// `c(ε,η)`), in facet order.  `ζ = Σ_j r_j · component_j`.
pub fn extremal_components(q: &LabelledQuad) -> [AffineFn; 4] {
    let one = rat_int(1);
    let eps = q.eps();
    let eta = q.eta();
    let c = rat_int(24)
        / (rat_int(4) - (&one - eps * eps) * (&one - eta * eta));
    // Normalization constants of the canonical normals: ℓ_j = n_j·ℓ'_j.
    let n = [
        (&one + eps) * (&one + eta) * rat(1, 4), // Alpha0
        (&one - eps) * (&one - eta) * rat(1, 4), // AlphaInf
        (&one + eps) * (&one - eta) * rat(1, 4), // Beta0
        (&one - eps) * (&one + eta) * rat(1, 4), // BetaInf
    ];
    let two = rat_int(2);
    let mut comps = [
        AffineFn::zero(),
        AffineFn::zero(),
        AffineFn::zero(),
        AffineFn::zero(),
    ];
    for f in FacetId::ALL {
        let j = f.index();
        let jp = f.opposite().index();
        // 2(1 − 2ℓ_j) + 4 n_{j'} (2 ℓ_{j'} − 1)
        let term1 = AffineFn::constant(two.clone()).sub(&q.ell(f).scale(&rat_int(4)));
        let term2 = q
            .ell(f.opposite())
            .scale(&two)
            .sub(&AffineFn::one())
            .scale(&(rat_int(4) * &n[jp]));
        comps[j] = term1.add(&term2).scale(&c);
    }
    comps
}

/// Classification of a labelled quad (shape, equipoised, temperate).
pub fn classify_quad(q: &LabelledQuad) -> QuadClass {
    let z = extremal_affine_function(q);
    let ze = z.eval(&q.v_eps());
    let zn = z.eval(&q.v_eta());
    QuadClass {
        shape: q.shape(),
        equipoised: ze == zn,
        temperate: ze.is_positive() && zn.is_positive(),
    }
}

/// A labelled triangle (simplex), used as a reference case: its extremal
/// affine function has a one-line closed form.
#[derive(Clone, Debug)]
pub struct Simplex {
    vertices: [P2; 3],
    r: [Rat; 3],
    /// Barycentric affine functions: `ℓ_j(v_k) = δ_{jk}`.
    ell: [AffineFn; 3],
}

impl Simplex {
    pub fn new(vertices: [P2; 3], r: [Rat; 3]) -> Result<Self, PolytopeError> {
        if triangle_area(&vertices[0], &vertices[1], &vertices[2]).is_zero() {
            return Err(PolytopeError::DegenerateSimplex);
        }
        for rj in &r {
            if !rj.is_positive() {
                return Err(PolytopeError::InvalidQuad(
                    "simplex labels must be positive".to_string(),
                ));
            }
        }
        let ell = barycentric(&vertices);
        Ok(Simplex { vertices, r, ell })
    }

    pub fn vertices(&self) -> &[P2; 3] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Rat; 3] {
        &self.r
    }

    pub fn ell(&self, j: usize) -> &AffineFn {
        &self.ell[j]
    }

    pub fn area(&self) -> Rat {
        triangle_area(&self.vertices[0], &self.vertices[1], &self.vertices[2])
    }

    /// Facet `j` is opposite vertex `j`; returns its endpoints.
    pub fn facet_endpoints(&self, j: usize) -> (&P2, &P2) {
        (&self.vertices[(j + 1) % 3], &self.vertices[(j + 2) % 3])
    }

    /// Boundary density of facet `j` (with actual labels): the normal is
    /// `ℓ_j / r_j`, where `ℓ_j` is barycentric.
    pub fn facet_nu_density(&self, j: usize) -> Rat {
        let (p0, p1) = self.facet_endpoints(j);
        self.r[j].clone() * facet_density(&self.ell[j], p0, p1)
    }

    /// Closed form for the simplex extremal affine function:
    /// `ζ = Σ_j r_j · 12(1 − 2ℓ_j)` with `ℓ_j` barycentric.  (Solving the
    /// moment system in the barycentric basis gives, for the component of
    /// facet `j`, coefficients `(−12, 12, 12)` on `(ℓ_j, ℓ_{j+1}, ℓ_{j+2})`
    /// independently of the triangle, since `∫ ℓ_i ℓ_k dλ = λ(Δ)(1+δ_{ik})/12`
    /// and `ν(F_j) = 2 r_j λ(Δ)`.)
    pub fn extremal_affine_function(&self) -> AffineFn {
        let mut z = AffineFn::zero();
        for j in 0..3 {
            let comp = AffineFn::constant(rat_int(1))
                .sub(&self.ell[j].scale(&rat_int(2)))
                .scale(&rat_int(12));
            z = z.add(&comp.scale(&self.r[j]));
        }
        z
    }

    /// Independent path: solve the moment system for the simplex.
    pub fn extremal_affine_function_moment(&self) -> AffineFn {
        let basis = [AffineFn::one(), AffineFn::coord_x(), AffineFn::coord_y()];
        let tri = &self.vertices;
        let half = rat(1, 2);
        let mut m = vec![vec![Rat::zero(); 3]; 3];
        let mut rhs = vec![Rat::zero(); 3];
        for (i, ei) in basis.iter().enumerate() {
            for (j, ej) in basis.iter().enumerate() {
                m[i][j] = simplex_integral(tri, ei, ej).expect("non-degenerate");
            }
            let mut b = Rat::zero();
            for j in 0..3 {
                let (p0, p1) = self.facet_endpoints(j);
                b += self.facet_nu_density(j) * (ei.eval(p0) + ei.eval(p1)) * &half;
            }
            rhs[i] = rat_int(2) * b;
        }
        match solve_linear(&Mat::from_rows(m), &rhs) {
            LinearOutcome::Solved { particular, .. } => AffineFn::new(
                particular[0].clone(),
                particular[1].clone(),
                particular[2].clone(),
            ),
            LinearOutcome::Inconsistent { .. } => unreachable!("Gram matrix invertible"),
        }
    }
}

fn barycentric(vertices: &[P2; 3]) -> [AffineFn; 3] {
    let mut out = [AffineFn::zero(), AffineFn::zero(), AffineFn::zero()];
    for j in 0..3 {
        let p = &vertices[(j + 1) % 3];
        let q = &vertices[(j + 2) % 3];
        let line = AffineFn::through(p, q);
        let v = line.eval(&vertices[j]);
        out[j] = line.scale(&(rat_int(1) / v));
    }
    out
}
