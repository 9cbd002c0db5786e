//! Gauge actions on ambitoric charts.
//!
//! Two charts describe the same labelled quadrilateral when they differ by
//!
//! * a **Möbius change of the chart coordinate** `z ↦ M(z)` (positive
//!   branch; on the negative branch only affine maps preserve the model's
//!   normalisation `q ≡ 1`), or
//! * a **rescaling** `(q, r) ↦ (c·q, r/c)` with `c > 0` (positive branch
//!   only — the negative branch has no quadratic scale freedom).
//!
//! Both leave [`crate::momentum::chart_to_quad`] unchanged; verdicts and
//! solutions computed from gauge-equivalent charts must agree.

use crate::chart::{AmbitoricChart, Branch};
use crate::FactorError;
use exactcore::{Rat, RatQuadratic};
use num_traits::{One, Signed, Zero};

/// A Möbius transformation `z ↦ (a·z + b) / (c·z + d)` with `ad − bc ≠ 0`,
/// acting on the projective line of chart coordinates.  Points are
/// projective pairs `(num, den)`, with `(1, 0)` the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub m: [[Rat; 2]; 2],
}

impl Mobius {
    pub fn new(m: [[Rat; 2]; 2]) -> Result<Self, FactorError> {
        let mob = Mobius { m };
        if mob.det().is_zero() {
            return Err(FactorError::InvalidChart(
                "Mobius matrix is singular".into(),
            ));
        }
        Ok(mob)
    }

    pub fn identity() -> Self {
        Mobius {
            m: [[Rat::one(), Rat::zero()], [Rat::zero(), Rat::one()]],
        }
    }

    pub fn det(&self) -> Rat {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    /// Apply to a projective pair.
    pub fn apply_proj(&self, p: &(Rat, Rat)) -> (Rat, Rat) {
        (
            &self.m[0][0] * &p.0 + &self.m[0][1] * &p.1,
            &self.m[1][0] * &p.0 + &self.m[1][1] * &p.1,
        )
    }

    /// Apply to a finite value; `None` if the image is the point at
    /// infinity.
    pub fn apply(&self, z: &Rat) -> Option<Rat> {
        let (num, den) = self.apply_proj(&(z.clone(), Rat::one()));
        if den.is_zero() {
            None
        } else {
            Some(num / den)
        }
    }

    /// The inverse transformation (via the adjugate matrix; projectively the
    /// determinant factor is immaterial).
    pub fn inverse(&self) -> Mobius {
        Mobius {
            m: [
                [self.m[1][1].clone(), -self.m[0][1].clone()],
                [-self.m[1][0].clone(), self.m[0][0].clone()],
            ],
        }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Mobius) -> Mobius {
        let a = &self.m;
        let b = &other.m;
        let mut m = [
            [Rat::zero(), Rat::zero()],
            [Rat::zero(), Rat::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
            }
        }
        Mobius { m }
    }

    /// The unique Möbius transformation sending three distinct projective
    /// points to `0, 1, 2` respectively.  Returns an error when two of the
    /// sources coincide.
    pub fn three_points_to_0_1_2(
        p1: &(Rat, Rat),
        p2: &(Rat, Rat),
        p3: &(Rat, Rat),
    ) -> Result<Mobius, FactorError> {
        let det = |u: &(Rat, Rat), v: &(Rat, Rat)| -> Rat { &u.0 * &v.1 - &u.1 * &v.0 };
        // N sends (p1, p2, p3) to (0, 1, ∞):
        //   N(z) = det(z, p1)·det(p2, p3) / (det(z, p3)·det(p2, p1)).
        let k1 = det(p2, p3);
        let k3 = det(p2, p1);
        if k1.is_zero() || k3.is_zero() || det(p1, p3).is_zero() {
            return Err(FactorError::Internal(
                "three_points_to_0_1_2 with coincident source points".into(),
            ));
        }
        let n = Mobius {
            m: [
                [&p1.1 * &k1, -(&p1.0 * &k1)],
                [&p3.1 * &k3, -(&p3.0 * &k3)],
            ],
        };
        // T sends (0, 1, ∞) to (0, 1, 2): T(w) = 2w / (w + 1).
        let t = Mobius {
            m: [
                [Rat::from_integer(2.into()), Rat::zero()],
                [Rat::one(), Rat::one()],
            ],
        };
        Ok(t.compose(&n))
    }
}

/// Pull a quadratic back through a Möbius map: if `z = M⁻¹(z′)` then the
/// binary-form pullback is `q̂(v) = q(adj(M)·v)`, i.e.
/// `q̂(z′) = (−C·z′ + A)² · q(M⁻¹(z′))` for `M = [[A, B], [C, D]]`.
/// Roots transform as `root ↦ M(root)`.
pub fn pullback_quadratic(q: &RatQuadratic, m: &Mobius) -> RatQuadratic {
    // adj(M) = [[D, −B], [−C, A]] sends (z0, z1) ↦ (D·z0 − B·z1, −C·z0 + A·z1).
    let [a, b] = [&m.m[0][0], &m.m[0][1]];
    let [c, d] = [&m.m[1][0], &m.m[1][1]];
    // Homogeneous q(z0, z1) = q0·z0² + 2·q1·z0·z1 + q2·z1² evaluated at
    // (d·z0 − b·z1, −c·z0 + a·z1); read off the new (q0, q1, q2).
    let [q0, q1, q2] = [&q.c[0], &q.c[1], &q.c[2]];
    let new0 = q0 * d * d - (q1 * d * c) * Rat::from_integer(2.into()) + q2 * c * c;
    let new1 = -(q0 * d * b) + q1 * (d * a + b * c) - q2 * (c * a);
    let new2 = q0 * b * b - (q1 * b * a) * Rat::from_integer(2.into()) + q2 * a * a;
    RatQuadratic::new(new0, new1, new2)
}

/// The rescaling gauge `(q, r) ↦ (c·q, r/c)` with `c > 0` (positive branch
/// only; the negative model pins `q ≡ 1`).
pub fn rescale_chart(chart: &AmbitoricChart, c: &Rat) -> Result<AmbitoricChart, FactorError> {
    if !c.is_positive() {
        return Err(FactorError::InvalidChart(
            "rescaling factor must be positive".into(),
        ));
    }
    if chart.branch != Branch::Positive {
        return Err(FactorError::InvalidChart(
            "rescaling gauge applies to the positive branch only".into(),
        ));
    }
    let inv = Rat::one() / c;
    let mut out = chart.clone();
    out.q = chart.q.scale(c);
    out.r_alpha = [&chart.r_alpha[0] * &inv, &chart.r_alpha[1] * &inv];
    out.r_beta = [&chart.r_beta[0] * &inv, &chart.r_beta[1] * &inv];
    out.validate()?;
    Ok(out)
}

/// Change the chart coordinate by a Möbius map `M` (finite on the box,
/// order-preserving).  The data transform as
///
/// * root parameters: `γ ↦ M(γ)`;
/// * quadratic: binary-form pullback (see [`pullback_quadratic`]);
/// * weights: `r ↦ r / (C·γ + D)²` where `(C, D)` is the bottom row of `M`
///   — exactly what keeps the momentum image (and hence the reconstructed
///   quadrilateral) unchanged.
///
/// On the negative branch only affine maps (`C = 0`) preserve the model, and
/// they leave the weights unchanged while `q ≡ 1` is kept by convention.
pub fn mobius_transform_chart(
    chart: &AmbitoricChart,
    m: &Mobius,
) -> Result<AmbitoricChart, FactorError> {
    let map = |z: &Rat| -> Result<Rat, FactorError> {
        m.apply(z).ok_or_else(|| {
            FactorError::InvalidChart("Mobius map sends a root parameter to infinity".into())
        })
    };
    let alpha = [map(&chart.alpha[0])?, map(&chart.alpha[1])?];
    let beta = [map(&chart.beta[0])?, map(&chart.beta[1])?];
    match chart.branch {
        Branch::Positive => {
            let q = pullback_quadratic(&chart.q, m);
            let denom_sq = |gamma: &Rat| -> Rat {
                let v = &m.m[1][0] * gamma + &m.m[1][1];
                &v * &v
            };
            let r_alpha = [
                &chart.r_alpha[0] / denom_sq(&chart.alpha[0]),
                &chart.r_alpha[1] / denom_sq(&chart.alpha[1]),
            ];
            let r_beta = [
                &chart.r_beta[0] / denom_sq(&chart.beta[0]),
                &chart.r_beta[1] / denom_sq(&chart.beta[1]),
            ];
            AmbitoricChart::new(
                Branch::Positive,
                q,
                alpha,
                beta,
                r_alpha,
                r_beta,
                chart.facet_map,
                chart.gauge.clone(),
            )
        }
        Branch::Negative => {
            if !m.m[1][0].is_zero() {
                return Err(FactorError::InvalidChart(
                    "negative-branch gauge maps must be affine".into(),
                ));
            }
            // z ↦ (a·z + b)/d with a/d > 0 to preserve orientation.
            AmbitoricChart::new(
                Branch::Negative,
                chart.q.clone(),
                alpha,
                beta,
                chart.r_alpha.clone(),
                chart.r_beta.clone(),
                chart.facet_map,
                chart.gauge.clone(),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::rat;

    #[test]
    fn three_point_map_hits_targets() {
        let p1 = (Rat::zero(), Rat::one());
        let p2 = (rat(3, 4), Rat::one());
        let p3 = (rat(2, 1), Rat::one());
        let m = Mobius::three_points_to_0_1_2(&p1, &p2, &p3).unwrap();
        assert_eq!(m.apply(&Rat::zero()).unwrap(), Rat::zero());
        assert_eq!(m.apply(&rat(3, 4)).unwrap(), Rat::one());
        assert_eq!(m.apply(&rat(2, 1)).unwrap(), rat(2, 1));
        // This particular map is z ↦ 5z/(z+3).
        assert_eq!(m.apply(&rat(3, 2)).unwrap(), rat(5, 3));
    }

    #[test]
    fn pullback_moves_roots_forward() {
        // q with roots 1 and 3; M(z) = z + 2 should give roots 3 and 5.
        let q = RatQuadratic::from_poly_coeffs(Rat::one(), rat(-4, 1), rat(3, 1));
        let m = Mobius::new([[Rat::one(), rat(2, 1)], [Rat::zero(), Rat::one()]]).unwrap();
        let qq = pullback_quadratic(&q, &m);
        assert!(qq.eval(&rat(3, 1)).is_zero());
        assert!(qq.eval(&rat(5, 1)).is_zero());
    }

    #[test]
    fn inverse_composes_to_scalar_identity() {
        let m = Mobius::new([[rat(5, 1), Rat::zero()], [Rat::one(), rat(3, 1)]]).unwrap();
        let id = m.compose(&m.inverse());
        // Projectively the identity: off-diagonal zero, diagonal equal.
        assert!(id.m[0][1].is_zero() && id.m[1][0].is_zero());
        assert_eq!(id.m[0][0], id.m[1][1]);
        let z = rat(7, 9);
        let w = m.apply(&z).unwrap();
        assert_eq!(m.inverse().apply(&w).unwrap(), z);
    }
}
