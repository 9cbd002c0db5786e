//! Closed-form label coefficients of crease Futaki invariants.
//!
//! For a crease in either opposite-facet family, the Futaki invariant is a
//! linear function `Σ_j c_j(ε, η, s, t) · r_j` of the labels, and each
//! coefficient is a polynomial of bidegree (3,3) in the projective crease
//! parameters `s`, `t` once the harmless denominators are cleared.  The
//! sharp statement, which the tests verify on exact grids, is
//!
//! ```text
//! pattern_j(ε, η, s, t) = κ(ε, η) · (s0+s1)³ (t0+t1)³ · c_j(ε, η, s, t),
//! κ(ε, η) = (1−ε²)² (1−η²)² (4 − (1−ε²)(1−η²)) / 8  >  0,
//! ```
//!
//! where `c_j` are the exact label coefficients computed by the Futaki
//! integration and the *same* positive factor `κ` serves every facet of both
//! families.  Two base polynomials generate all eight patterns through the
//! dihedral symmetries of the quad: one for a facet that meets the crease,
//! one for a facet that does not.
//!
//! Everything here is generic over a commutative ring so the identities can
//! be tested symbolically with multivariate polynomial scalars.

use crate::futaki::CreaseFamily;
use exactcore::Ring;

/// Coefficient pattern for the `0`-end facet of the family the crease
/// belongs to (a facet that *meets* the crease):
///
/// ```text
/// 2 (s0+s1) ((1+η)t0 + (1+ε)t1) ((1−η)s0t0 − (1−ε)s1t1)²
///   − (1−ε)(1−η) ((1−η)s0 + (1−ε)s1) (t0+t1) ((1+η)s0t0 − (1+ε)s1t1)²
/// ```
pub fn meeting_side_coefficient<T: Ring>(e: &T, n: &T, s: &[T; 2], t: &[T; 2]) -> T {
    let one = T::one();
    let two = T::from_i64(2);
    let om_e = one.clone() - e.clone(); // 1 − ε
    let op_e = one.clone() + e.clone(); // 1 + ε
    let om_n = one.clone() - n.clone(); // 1 − η
    let op_n = one.clone() + n.clone(); // 1 + η
    let sq = |x: T| x.clone() * x;
    let first = two
        * (s[0].clone() + s[1].clone())
        * (op_n.clone() * t[0].clone() + op_e.clone() * t[1].clone())
        * sq(om_n.clone() * s[0].clone() * t[0].clone()
            - om_e.clone() * s[1].clone() * t[1].clone());
    let second = om_e.clone()
        * om_n.clone()
        * (om_n * s[0].clone() + om_e * s[1].clone())
        * (t[0].clone() + t[1].clone())
        * sq(op_n * s[0].clone() * t[0].clone() - op_e * s[1].clone() * t[1].clone());
    first - second
}

/// Coefficient pattern for the `0`-end facet of the *other* family (a facet
/// that does not meet the crease): a twelve-term bidegree-(3,3) polynomial.
///
/// ```text
///   (1−η)²(1+η)(1+ε−η+εη)                                   s0³t0³
/// + (1−η)(1+η)((1+ε)² + (1−η)² + (1+εη)(2+ε−η))             s0³t0²t1
/// + 2(1+η)(4 − (1−ε²)(1−η²))                                s0³t0t1²
/// + 2(1−η)²(2+ε−η+2εη)                                      s0²s1t0³
/// + (1−η)((1+εη)(10+ε−η+(1+ε)(1−η)) + 3(1+ε)² + 3(1−η)²)    s0²s1t0²t1
/// + (40 − 12(1−ε²)(1−η²) − 8εη)                             s0²s1t0t1²
/// + 2(1+ε)(4 − (1−ε²)(1−η²))                                s0²s1t1³
/// + 4(1−ε)(1−η)(1+εη)                                       s0s1²t0²t1
/// + (1−ε)((1+εη)(10−ε+η+(1−ε)(1+η)) + 3(1−ε)² + 3(1+η)²)    s0s1²t0t1²
/// + (1−ε)(1+ε)((1−ε)² + (1+η)² + (1+εη)(2−ε+η))             s0s1²t1³
/// + 2(1−ε)²(2−ε+η+2εη)                                      s1³t0t1²
/// + (1−ε)²(1+ε)(1−ε+η+εη)                                   s1³t1³
/// ```
///
/// Of the twelve coefficients only the four attached to `s0³t0³`, `s0²s1t0³`,
/// `s1³t0t1²`, `s1³t1³` can be negative on the shape domain; the signs at the
/// two diagonal ends are governed by `1 ± (ε−η) + εη`.
pub fn off_side_coefficient<T: Ring>(e: &T, n: &T, s: &[T; 2], t: &[T; 2]) -> T {
    let one = T::one();
    let two = T::from_i64(2);
    let three = T::from_i64(3);
    let om_e = one.clone() - e.clone(); // 1 − ε
    let op_e = one.clone() + e.clone(); // 1 + ε
    let om_n = one.clone() - n.clone(); // 1 − η
    let op_n = one.clone() + n.clone(); // 1 + η
    let en = e.clone() * n.clone(); // εη
    let open = one.clone() + en.clone(); // 1 + εη
    let sq = |x: &T| x.clone() * x.clone();
    // 4 − (1−ε²)(1−η²)
    let gap = T::from_i64(4)
        - (one.clone() - e.clone() * e.clone()) * (one.clone() - n.clone() * n.clone());
    let s0 = &s[0];
    let s1 = &s[1];
    let t0 = &t[0];
    let t1 = &t[1];
    let cube = |x: &T| x.clone() * x.clone() * x.clone();
    let mut total = T::zero();
    // (1−η)²(1+η)(1+ε−η+εη) s0³t0³
    total = total
        + sq(&om_n)
            * op_n.clone()
            * (one.clone() + e.clone() - n.clone() + en.clone())
            * cube(s0)
            * cube(t0);
    // (1−η)(1+η)((1+ε)² + (1−η)² + (1+εη)(2+ε−η)) s0³ t0²t1
    total = total
        + om_n.clone()
            * op_n.clone()
            * (sq(&op_e)
                + sq(&om_n)
                + open.clone() * (two.clone() + e.clone() - n.clone()))
            * cube(s0)
            * sq(t0)
            * t1.clone();
    // 2(1+η)(4 − (1−ε²)(1−η²)) s0³ t0t1²
    total = total + two.clone() * op_n.clone() * gap.clone() * cube(s0) * t0.clone() * sq(t1);
    // 2(1−η)²(2+ε−η+2εη) s0²s1 t0³
    total = total
        + two.clone()
            * sq(&om_n)
            * (two.clone() + e.clone() - n.clone() + two.clone() * en.clone())
            * sq(s0)
            * s1.clone()
            * cube(t0);
    // (1−η)((1+εη)(10+ε−η+(1+ε)(1−η)) + 3(1+ε)² + 3(1−η)²) s0²s1 t0²t1
    total = total
        + om_n.clone()
            * (open.clone()
                * (T::from_i64(10) + e.clone() - n.clone() + op_e.clone() * om_n.clone())
                + three.clone() * sq(&op_e)
                + three.clone() * sq(&om_n))
            * sq(s0)
            * s1.clone()
            * sq(t0)
            * t1.clone();
    // (40 − 12(1−ε²)(1−η²) − 8εη) s0²s1 t0t1²
    total = total
        + (T::from_i64(40)
            - T::from_i64(12)
                * (one.clone() - e.clone() * e.clone())
                * (one.clone() - n.clone() * n.clone())
            - T::from_i64(8) * en.clone())
            * sq(s0)
            * s1.clone()
            * t0.clone()
            * sq(t1);
    // 2(1+ε)(4 − (1−ε²)(1−η²)) s0²s1 t1³
    total = total + two.clone() * op_e.clone() * gap * sq(s0) * s1.clone() * cube(t1);
    // 4(1−ε)(1−η)(1+εη) s0s1² t0²t1
    total = total
        + T::from_i64(4)
            * om_e.clone()
            * om_n.clone()
            * open.clone()
            * s0.clone()
            * sq(s1)
            * sq(t0)
            * t1.clone();
    // (1−ε)((1+εη)(10−ε+η+(1−ε)(1+η)) + 3(1−ε)² + 3(1+η)²) s0s1² t0t1²
    total = total
        + om_e.clone()
            * (open.clone()
                * (T::from_i64(10) - e.clone() + n.clone() + om_e.clone() * op_n.clone())
                + three.clone() * sq(&om_e)
                + three * sq(&op_n))
            * s0.clone()
            * sq(s1)
            * t0.clone()
            * sq(t1);
    // (1−ε)(1+ε)((1−ε)² + (1+η)² + (1+εη)(2−ε+η)) s0s1² t1³
    total = total
        + om_e.clone()
            * op_e.clone()
            * (sq(&om_e)
                + sq(&op_n)
                + open * (two.clone() - e.clone() + n.clone()))
            * s0.clone()
            * sq(s1)
            * cube(t1);
    // 2(1−ε)²(2−ε+η+2εη) s1³ t0t1²
    total = total
        + two.clone()
            * sq(&om_e)
            * (two - e.clone() + n.clone() + T::from_i64(2) * en.clone())
            * cube(s1)
            * t0.clone()
            * sq(t1);
    // (1−ε)²(1+ε)(1−ε+η+εη) s1³t1³
    total = total + sq(&om_e) * op_e * (one + n.clone() - e.clone() + en) * cube(s1) * cube(t1);
    total
}

/// All four label coefficients (up to one positive factor per quad shared by
/// the whole vector) of a family crease, in facet order
/// `[Alpha0, AlphaInf, Beta0, BetaInf]`.  The entries are generated from the
/// two base patterns by the dihedral symmetries: reflecting through the
/// horizontal/vertical axes negates `ε` and/or `η` and may swap `s` with `t`.
pub fn crease_futaki_coefficient_polynomials<T: Ring>(
    family: CreaseFamily,
    e: &T,
    n: &T,
    s: &[T; 2],
    t: &[T; 2],
) -> [T; 4] {
    let ne = -e.clone();
    let nn = -n.clone();
    match family {
        CreaseFamily::Alpha => [
            meeting_side_coefficient(e, n, s, t),
            meeting_side_coefficient(&ne, &nn, t, s),
            off_side_coefficient(e, &nn, s, t),
            off_side_coefficient(&ne, n, t, s),
        ],
        CreaseFamily::Beta => [
            off_side_coefficient(e, n, s, t),
            off_side_coefficient(&ne, &nn, t, s),
            meeting_side_coefficient(e, &nn, s, t),
            meeting_side_coefficient(&ne, n, t, s),
        ],
    }
}

/// The exact factorization the destabilizing construction rests on: setting
/// `s = [(1−ε)t1 : (1−η)t0]` in the meeting-side pattern collapses it to
/// `−4 (1−ε)² (1−η)² (t0+t1)² t0² t1² (η−ε)²`,
/// which is strictly negative whenever `ε ≠ η` and `t0, t1 > 0`.
pub fn destabilizing_substitution<T: Ring>(e: &T, n: &T, t: &[T; 2]) -> [T; 2] {
    let one = T::one();
    [
        (one.clone() - e.clone()) * t[1].clone(),
        (one - n.clone()) * t[0].clone(),
    ]
}
