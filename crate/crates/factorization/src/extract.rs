//! Chart extraction: identify the selected conic with a standard model and
//! read off the chart data.
//!
//! **Positive branch** (nonsingular conic `Q`): the conic is rational; a
//! stereographic projection from the base point `O = ℓ_{β0}` (unit normal of
//! the quadrilateral's `β0`-facet) assigns each facet normal a parameter on
//! a projective line.  A Möbius change of parameter sends the normals
//! playing the chart roles `(β0, β∞, α∞)` to `(0, 1, 2)`, after which the
//! remaining normal must land in `[1, 2)` — this is the gauge
//! `β = (0, 1), α∞ = 2`.  Polarising the conic against the parametrised
//! point `Û(z)` produces, for each facet normal, an exact square
//! `c_j·(z − γ_j)²`: the chart facet quadratics and their calibration
//! constants.  The chart quadratic is `q = φ(ι)` scaled so the polarised
//! value at the box centre is `1`, and the weights are
//! `r_j = label_j / c_j`.
//!
//! **Negative branch** (line pair with singular point `S` not containing
//! the constant function `ι`): each line of the pair carries the two normals
//! of one family.  In the model, affine functions of the chart coordinates
//! split as `span{1, x}` ⊕ `span{1, y}` over the two lines, with crossing
//! at the constants.  Expanding `ι` and the normals in the basis
//! `{S, ℓ_{A0}, ℓ_{B0}}`, the normalisation `ψ(ι) = x − y` together with the
//! gauge `β = (0, 1)` determines every coefficient by exact linear algebra.
//!
//! Eight role assignments are enumerated in both cases (which family plays
//! the chart `α`-pair, and the orientation of each family), the admissible
//! window and the weight sign pattern filter them, and the first passing
//! assignment in the fixed enumeration order is taken.  Every extraction
//! ends by rebuilding the labelled quadrilateral from the chart and checking
//! it equals the input exactly.

use crate::chart::{AmbitoricChart, Branch, ChartFacetMap, GaugeRecord};
use crate::conic::{condition_conic_meets, iota_vector, unit_normal_vector, ConicKind, SelectedConic};
use crate::gauge::Mobius;
use crate::momentum::chart_to_quad;
use crate::vec3::{add_vec, cross, det3, dot, proportional, scale_vec};
use crate::FactorError;
use exactcore::{Rat, RatQuadratic};
use num_traits::{One, Signed, Zero};
use polytope::{FacetId, LabelledQuad};

/// Extract the ambitoric chart of `quad` determined by its selected conic.
///
/// Preconditions: the conic must meet the interior of the dual cone (always
/// true for temperate quadrilaterals).  A line pair through the constant
/// function means the quadrilateral is an equipoised trapezium and the
/// extremal metric is of Calabi type: [`FactorError::CalabiTypeCase`].
pub fn extract_chart(
    quad: &LabelledQuad,
    sel: &SelectedConic,
) -> Result<AmbitoricChart, FactorError> {
    if !condition_conic_meets(quad, sel) {
        return Err(FactorError::Internal(
            "chart extraction requires the selected conic to meet the dual cone interior".into(),
        ));
    }
    match sel.kind() {
        ConicKind::Nonsingular => extract_positive(quad, sel),
        ConicKind::LinePair => {
            if sel.iota_on_conic() {
                Err(FactorError::CalabiTypeCase)
            } else {
                extract_negative(quad, sel)
            }
        }
    }
}

/// The eight role assignments `(roleA0, roleAI, roleB0, roleBI)` in a fixed
/// deterministic order, the identity assignment first.
fn role_assignments() -> Vec<[FacetId; 4]> {
    let mut out = Vec::with_capacity(8);
    for pair_choice in 0..2 {
        let (alpha_pair, beta_pair) = if pair_choice == 0 {
            (
                [FacetId::Alpha0, FacetId::AlphaInf],
                [FacetId::Beta0, FacetId::BetaInf],
            )
        } else {
            (
                [FacetId::Beta0, FacetId::BetaInf],
                [FacetId::Alpha0, FacetId::AlphaInf],
            )
        };
        for a_flip in 0..2 {
            for b_flip in 0..2 {
                let a = if a_flip == 0 {
                    alpha_pair
                } else {
                    [alpha_pair[1], alpha_pair[0]]
                };
                let b = if b_flip == 0 {
                    beta_pair
                } else {
                    [beta_pair[1], beta_pair[0]]
                };
                out.push([a[0], a[1], b[0], b[1]]);
            }
        }
    }
    out
}

/// Sign the chart weight must have at each chart role.
fn role_weight_sign(role: FacetId) -> i8 {
    match role {
        FacetId::Alpha0 | FacetId::BetaInf => -1,
        FacetId::AlphaInf | FacetId::Beta0 => 1,
    }
}

fn check_weight_signs(r_hat: &[Rat; 4]) -> bool {
    FacetId::ALL.iter().all(|role| {
        let v = &r_hat[role.index()];
        match role_weight_sign(*role) {
            -1 => v.is_negative(),
            _ => v.is_positive(),
        }
    })
}

/// Verify the reconstruction invariant: the momentum image of the chart is
/// the original labelled quadrilateral.
fn check_round_trip(quad: &LabelledQuad, chart: &AmbitoricChart) -> Result<(), FactorError> {
    let back = chart_to_quad(chart)?;
    let same = back.eps() == quad.eps()
        && back.eta() == quad.eta()
        && back.labels() == quad.labels();
    if !same {
        return Err(FactorError::Internal(format!(
            "chart round trip mismatch: got (eps, eta) = ({}, {}), labels {:?}; \
             expected ({}, {}), labels {:?}",
            back.eps(),
            back.eta(),
            back.labels(),
            quad.eps(),
            quad.eta(),
            quad.labels()
        )));
    }
    Ok(())
}

fn extract_positive(
    quad: &LabelledQuad,
    sel: &SelectedConic,
) -> Result<AmbitoricChart, FactorError> {
    let qf = sel.form();
    let ells: [[Rat; 3]; 4] = [
        unit_normal_vector(quad, FacetId::Alpha0),
        unit_normal_vector(quad, FacetId::AlphaInf),
        unit_normal_vector(quad, FacetId::Beta0),
        unit_normal_vector(quad, FacetId::BetaInf),
    ];
    let o = ells[FacetId::Beta0.index()].clone();

    // Reference frame for the stereographic parameter: the first standard
    // basis pair independent of O.
    let basis = |i: usize| -> [Rat; 3] {
        let mut e = [Rat::zero(), Rat::zero(), Rat::zero()];
        e[i] = Rat::one();
        e
    };
    let (e_vec, f_vec) = [(0usize, 1usize), (0, 2), (1, 2)]
        .into_iter()
        .find_map(|(i, j)| {
            let e = basis(i);
            let f = basis(j);
            if det3(&o, &e, &f).is_zero() {
                None
            } else {
                Some((e, f))
            }
        })
        .ok_or_else(|| FactorError::Internal("base normal is the zero vector".into()))?;

    // Stereographic parameter of each facet normal as a projective pair:
    // the chord (or, for O itself, tangent) line meets the reference line
    // span{E, F} in a point v·E + u·F, recorded as (u, v).
    let param_of = |p: &[Rat; 3]| -> (Rat, Rat) {
        let line = if proportional(p, &o) {
            qf.apply(&o)
        } else {
            cross(&o, p)
        };
        (-dot(&line, &e_vec), dot(&line, &f_vec))
    };
    let params: [(Rat, Rat); 4] = [
        param_of(&ells[0]),
        param_of(&ells[1]),
        param_of(&ells[2]),
        param_of(&ells[3]),
    ];

    let iota = iota_vector();
    let two = Rat::from_integer(2.into());
    let mut chosen: Option<AmbitoricChart> = None;

    'assignments: for roles in role_assignments() {
        let [fa0, fai, fb0, fbi] = roles;
        let mob = match Mobius::three_points_to_0_1_2(
            &params[fb0.index()],
            &params[fbi.index()],
            &params[fai.index()],
        ) {
            Ok(m) => m,
            Err(_) => continue,
        };
        // The fourth normal must land finitely in the window [1, 2).
        let (n0, d0) = mob.apply_proj(&params[fa0.index()]);
        if d0.is_zero() {
            continue;
        }
        let a0 = n0 / d0;
        if !(a0 >= Rat::one() && a0 < two) {
            continue;
        }

        // ṽ(z) = (a·E − b·F) + z·(d·F − c·E) traces the reference line as z
        // runs through chart coordinates (via M⁻¹), and
        // Û(z) = Q(ṽ,ṽ)·O − 2·Q(O,ṽ)·ṽ is the moving point of the conic.
        let [a, b] = [mob.m[0][0].clone(), mob.m[0][1].clone()];
        let [c, d] = [mob.m[1][0].clone(), mob.m[1][1].clone()];
        let v1 = add_vec(&scale_vec(&f_vec, &d), &scale_vec(&e_vec, &(-c.clone())));
        let v0 = add_vec(&scale_vec(&e_vec, &a), &scale_vec(&f_vec, &(-b.clone())));
        let g2 = qf.eval_quad(&v1);
        let g1 = qf.eval(&v0, &v1);
        let g0 = qf.eval_quad(&v0);
        let h1 = qf.eval(&o, &v1);
        let h0 = qf.eval(&o, &v0);
        let u2 = add_vec(
            &scale_vec(&o, &g2),
            &scale_vec(&v1, &(-&two * &h1)),
        );
        let u1 = add_vec(
            &scale_vec(&o, &(&two * &g1)),
            &add_vec(
                &scale_vec(&v0, &(-&two * &h1)),
                &scale_vec(&v1, &(-&two * &h0)),
            ),
        );
        let u0 = add_vec(
            &scale_vec(&o, &g0),
            &scale_vec(&v0, &(-&two * &h0)),
        );
        let phi = |fv: &[Rat; 3]| -> RatQuadratic {
            RatQuadratic::from_poly_coeffs(qf.eval(fv, &u2), qf.eval(fv, &u1), qf.eval(fv, &u0))
        };

        // Facet quadratics: each must be an exact square at its target root.
        let gammas = [a0.clone(), two.clone(), Rat::zero(), Rat::one()];
        let mut c_role: [Rat; 4] = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for (role_idx, facet) in [fa0, fai, fb0, fbi].into_iter().enumerate() {
            let u = phi(&ells[facet.index()]);
            let cj = u.c[0].clone();
            if cj.is_zero() {
                return Err(FactorError::Internal(
                    "facet quadratic degenerated (zero leading coefficient)".into(),
                ));
            }
            let expected = RatQuadratic::square_at(&gammas[role_idx]).scale(&cj);
            if u.c != expected.c {
                return Err(FactorError::Internal(format!(
                    "facet quadratic is not a perfect square at its root: got {:?}, expected {:?}",
                    u.c, expected.c
                )));
            }
            c_role[role_idx] = cj;
        }

        // Scale so the polarised chart quadratic is 1 at the box centre.
        let q_raw = phi(&iota);
        let half = Rat::new(1.into(), 2.into());
        let center_x = (&a0 + &two) * &half;
        let center_y = half.clone();
        let q_center = q_raw.eval_pol(&center_x, &center_y);
        if q_center.is_zero() {
            continue;
        }
        let scale = Rat::one() / &q_center;
        let q = q_raw.scale(&scale);
        for cj in c_role.iter_mut() {
            *cj = cj.clone() * &scale;
        }

        // q must be positive on the closed box (bi-affine, so corners
        // suffice).
        let corners = [
            (a0.clone(), Rat::zero()),
            (two.clone(), Rat::zero()),
            (a0.clone(), Rat::one()),
            (two.clone(), Rat::one()),
        ];
        if !corners
            .iter()
            .all(|(x, y)| q.eval_pol(x, y).is_positive())
        {
            continue;
        }

        // Calibrated weights: sign pattern first (label-independent), then
        // scaled by the labels.
        let r_hat: [Rat; 4] = [
            Rat::one() / &c_role[0],
            Rat::one() / &c_role[1],
            Rat::one() / &c_role[2],
            Rat::one() / &c_role[3],
        ];
        if !check_weight_signs(&r_hat) {
            continue;
        }
        let r_of = |role_idx: usize, facet: FacetId| -> Rat { quad.label(facet) * &r_hat[role_idx] };
        let r_alpha = [r_of(0, fa0), r_of(1, fai)];
        let r_beta = [r_of(2, fb0), r_of(3, fbi)];

        let chart = match AmbitoricChart::new(
            Branch::Positive,
            q,
            [a0.clone(), two.clone()],
            [Rat::zero(), Rat::one()],
            r_alpha,
            r_beta,
            ChartFacetMap {
                by_role: [fa0, fai, fb0, fbi],
            },
            GaugeRecord {
                mobius: mob.m.clone(),
                phi_scale: scale,
            },
        ) {
            Ok(chart) => chart,
            Err(_) => continue,
        };
        chosen = Some(chart);
        break 'assignments;
    }

    let chart = chosen.ok_or_else(|| {
        FactorError::Internal("no role assignment produced an admissible positive chart".into())
    })?;
    check_round_trip(quad, &chart)?;
    Ok(chart)
}

fn extract_negative(
    quad: &LabelledQuad,
    sel: &SelectedConic,
) -> Result<AmbitoricChart, FactorError> {
    let s = sel.singular_point()?;
    let ells: [[Rat; 3]; 4] = [
        unit_normal_vector(quad, FacetId::Alpha0),
        unit_normal_vector(quad, FacetId::AlphaInf),
        unit_normal_vector(quad, FacetId::Beta0),
        unit_normal_vector(quad, FacetId::BetaInf),
    ];
    // The two lines of the pair must each carry the two normals of one
    // family: collinearity with the singular point pairs the facets up.
    let collinear = |f: FacetId, g: FacetId| -> bool {
        det3(&s, &ells[f.index()], &ells[g.index()]).is_zero()
    };
    if !collinear(FacetId::Alpha0, FacetId::AlphaInf)
        || !collinear(FacetId::Beta0, FacetId::BetaInf)
        || collinear(FacetId::Alpha0, FacetId::Beta0)
        || collinear(FacetId::Alpha0, FacetId::BetaInf)
    {
        return Err(FactorError::Internal(
            "line pair does not separate the two facet families".into(),
        ));
    }

    let iota = iota_vector();
    let mut chosen: Option<AmbitoricChart> = None;

    'assignments: for roles in role_assignments() {
        let [fa0, fai, fb0, fbi] = roles;
        // Expand ℓ_{AI}, ℓ_{BI}, ι in the basis {S, ℓ_{A0}, ℓ_{B0}} by
        // Cramer's rule on columns.
        let ea = &ells[fa0.index()];
        let eb = &ells[fb0.index()];
        let det = det3(&s, ea, eb);
        if det.is_zero() {
            return Err(FactorError::Internal(
                "singular point lies on a facet normal".into(),
            ));
        }
        let expand = |b: &[Rat; 3]| -> [Rat; 3] {
            [
                det3(b, ea, eb) / &det,
                det3(&s, b, eb) / &det,
                det3(&s, ea, b) / &det,
            ]
        };
        let x_ai = expand(&ells[fai.index()]);
        let x_bi = expand(&ells[fbi.index()]);
        let x_iota = expand(&iota);
        if !x_ai[2].is_zero() || !x_bi[1].is_zero() {
            return Err(FactorError::Internal(
                "family expansion leaked across the line pair".into(),
            ));
        }
        let (u_a, v_a) = (&x_ai[0], &x_ai[1]);
        let (u_b, v_b) = (&x_bi[0], &x_bi[2]);
        let (p, uu, ww) = (&x_iota[0], &x_iota[1], &x_iota[2]);
        if uu.is_zero() || ww.is_zero() || u_b.is_zero() || v_a.is_zero() || v_b.is_zero() {
            continue;
        }

        // ψ(ι) = x − y and the gauge β = (0, 1) pin every coefficient:
        let c_a0 = -Rat::one() / uu;
        let c_b0 = Rat::one() / ww;
        let c_s = v_b * &c_b0 / u_b;
        let a0 = p * &c_s;
        let a_inf = &a0 + u_a * &c_s / (v_a * &c_a0);
        let c_ai = v_a * &c_a0;
        let c_bi = v_b * &c_b0;

        if !(a0 > Rat::one() && a_inf > a0) {
            continue;
        }
        let r_hat: [Rat; 4] = [
            Rat::one() / &c_a0,
            Rat::one() / &c_ai,
            -Rat::one() / &c_b0,
            -Rat::one() / &c_bi,
        ];
        if !check_weight_signs(&r_hat) {
            continue;
        }
        let r_of = |role_idx: usize, facet: FacetId| -> Rat { quad.label(facet) * &r_hat[role_idx] };
        let r_alpha = [r_of(0, fa0), r_of(1, fai)];
        let r_beta = [r_of(2, fb0), r_of(3, fbi)];

        let chart = match AmbitoricChart::new(
            Branch::Negative,
            RatQuadratic::one_quadratic(),
            [a0.clone(), a_inf.clone()],
            [Rat::zero(), Rat::one()],
            r_alpha,
            r_beta,
            ChartFacetMap {
                by_role: [fa0, fai, fb0, fbi],
            },
            GaugeRecord::identity(),
        ) {
            Ok(chart) => chart,
            Err(_) => continue,
        };
        chosen = Some(chart);
        break 'assignments;
    }

    let chart = chosen.ok_or_else(|| {
        FactorError::Internal("no role assignment produced an admissible negative chart".into())
    })?;
    check_round_trip(quad, &chart)?;
    Ok(chart)
}
