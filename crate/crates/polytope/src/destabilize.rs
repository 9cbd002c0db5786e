//! Constructing destabilizing labels for any non-parallelogram shape.
//!
//! For every quad shape other than a parallelogram there is a crease whose
//! Futaki coefficient on one facet is strictly negative; boosting that
//! facet's label then makes the whole invariant negative.  Parallelograms
//! admit no such crease (every labelling is K-polystable).

use crate::crease_coeffs::destabilizing_substitution;
use crate::futaki::{futaki, futaki_r_coefficients, CreaseFamily, PLConvexFn};
use crate::quad::{LabelledQuad, QuadShape};
use crate::PolytopeError;
use exactcore::{rat_int, Rat};
use num_traits::Signed;

/// A certified destabilizer: a labelled quad of the requested shape together
/// with a crease whose Futaki invariant is strictly negative (value
/// included).
#[derive(Clone, Debug)]
pub struct Destabilizer {
    pub quad: LabelledQuad,
    pub crease: PLConvexFn,
    pub futaki_value: Rat,
}

/// Find labels making the shape `(ε, η)` K-unstable, together with the
/// witnessing crease; returns `None` exactly for parallelograms.
///
/// The search tries the crease `s = [(1−η)t1 : (1−ε)t0]` first and then the
/// transposed `s = [(1−ε)t1 : (1−η)t0]`, whose meeting-side coefficient
/// pattern collapses by exact factorization to
/// `−4 (1−ε)² (1−η)² (t0+t1)² t0² t1² (η−ε)²`, strictly negative whenever
/// `ε ≠ η`; when `ε = η ≠ 0` the mirrored β-family substitutions (with η
/// negated) work since then `ε ≠ −η`.  The label boost is certified by
/// exact evaluation of the Futaki invariant.
pub fn find_destabilizing_labels(
    eps: &Rat,
    eta: &Rat,
) -> Result<Option<Destabilizer>, PolytopeError> {
    let unit = [rat_int(1), rat_int(1), rat_int(1), rat_int(1)];
    let shape_probe = LabelledQuad::from_normal_form(eps.clone(), eta.clone(), unit)?;
    if shape_probe.shape() == QuadShape::Parallelogram {
        return Ok(None);
    }
    let t = [rat_int(1), rat_int(1)];
    // The α pattern with η negated is the β pattern, so for ε = η ≠ 0
    // (where the α construction degenerates) the β family takes over.
    let (family, n_eff) = if eps != eta {
        (CreaseFamily::Alpha, eta.clone())
    } else {
        (CreaseFamily::Beta, -eta.clone())
    };
    let transposed = destabilizing_substitution(eps, &n_eff, &t);
    let candidates = [[transposed[1].clone(), transposed[0].clone()], transposed];
    let mut chosen: Option<(PLConvexFn, [Rat; 4], usize)> = None;
    for s in candidates {
        let crease = PLConvexFn::family(family, s, t.clone())?;
        let coeffs = futaki_r_coefficients(&shape_probe, &crease)?;
        let j_min = (0..4)
            .min_by(|a, b| coeffs[*a].cmp(&coeffs[*b]))
            .expect("four coefficients");
        if coeffs[j_min].is_negative() {
            chosen = Some((crease, coeffs, j_min));
            break;
        }
    }
    let Some((crease, coeffs, j_star)) = chosen else {
        return Err(PolytopeError::Internal(format!(
            "destabilizing creases have no negative coefficient at ({}, {})",
            eps, eta
        )));
    };
    let c_star = &coeffs[j_star];
    let rest: Rat = coeffs
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != j_star)
        .map(|(_, c)| c.clone())
        .sum();
    // Choose the boosted label so the total is exactly −1 when possible,
    // and default to 1 when the other coefficients already sum ≤ −1.
    let boost = &rest + rat_int(1);
    let r_star = if boost.is_positive() {
        boost / -c_star.clone()
    } else {
        rat_int(1)
    };
    let mut r = [rat_int(1), rat_int(1), rat_int(1), rat_int(1)];
    r[j_star] = r_star;
    let quad = LabelledQuad::from_normal_form(eps.clone(), eta.clone(), r)?;
    let value = futaki(&quad, &crease)?;
    if !value.is_negative() {
        return Err(PolytopeError::Internal(format!(
            "destabilizer certification failed at ({}, {}): futaki = {}",
            eps, eta, value
        )));
    }
    Ok(Some(Destabilizer {
        quad,
        crease,
        futaki_value: value,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use exactcore::rat;

    #[test]
    fn parallelogram_has_no_destabilizer() {
        assert!(find_destabilizing_labels(&Rat::zero(), &Rat::zero())
            .unwrap()
            .is_none());
    }

    #[test]
    fn generic_trapezoid_and_skew_shapes_are_destabilized() {
        let shapes = [
            (rat(1, 2), rat(1, 3)),   // generic
            (rat(1, 2), rat(1, 2)),   // trapezium ε = η
            (rat(1, 2), rat(-1, 2)),  // trapezium ε = −η
            (Rat::zero(), rat(1, 3)), // ε = 0 ≠ η
            (rat(-3, 4), Rat::zero()),
            (rat(9, 10), rat(-9, 10)),
        ];
        for (e, n) in shapes {
            let d = find_destabilizing_labels(&e, &n)
                .unwrap()
                .unwrap_or_else(|| panic!("no destabilizer at ({}, {})", e, n));
            assert!(d.futaki_value.is_negative());
            // Re-certify from scratch.
            assert_eq!(futaki(&d.quad, &d.crease).unwrap(), d.futaki_value);
        }
    }
}
