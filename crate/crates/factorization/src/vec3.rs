//! Small exact helpers for length-3 rational vectors (projective plane
//! coordinates for affine functions `a + b·x + c·y ↔ [a, b, c]`).

use exactcore::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn dot(u: &[Rat; 3], v: &[Rat; 3]) -> Rat {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

pub(crate) fn cross(u: &[Rat; 3], v: &[Rat; 3]) -> [Rat; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

pub(crate) fn det3(u: &[Rat; 3], v: &[Rat; 3], w: &[Rat; 3]) -> Rat {
    dot(u, &cross(v, w))
}

pub(crate) fn is_zero_vec(u: &[Rat; 3]) -> bool {
    u.iter().all(|c| c.is_zero())
}

pub(crate) fn scale_vec(u: &[Rat; 3], s: &Rat) -> [Rat; 3] {
    [&u[0] * s, &u[1] * s, &u[2] * s]
}

pub(crate) fn add_vec(u: &[Rat; 3], v: &[Rat; 3]) -> [Rat; 3] {
    [&u[0] + &v[0], &u[1] + &v[1], &u[2] + &v[2]]
}

/// `u` and `v` represent the same projective point (both nonzero, parallel).
pub(crate) fn proportional(u: &[Rat; 3], v: &[Rat; 3]) -> bool {
    !is_zero_vec(u) && !is_zero_vec(v) && is_zero_vec(&cross(u, v))
}

/// The positive rational `s` such that multiplying the (not all zero)
/// entries by `s` yields coprime integers.
pub(crate) fn primitive_scale<'a>(entries: impl Iterator<Item = &'a Rat>) -> Rat {
    let mut den_lcm: BigInt = BigInt::one();
    let mut num_gcd: BigInt = BigInt::zero();
    let mut any = false;
    for e in entries {
        if e.is_zero() {
            continue;
        }
        any = true;
        den_lcm = den_lcm.lcm(e.denom());
        num_gcd = num_gcd.gcd(e.numer());
    }
    assert!(any, "primitive_scale of the zero vector");
    Rat::new(den_lcm, num_gcd)
}

/// Scale a nonzero rational vector so its entries are coprime integers and
/// the first nonzero entry is positive: the deterministic representative of
/// the projective point.
pub(crate) fn primitive_vec(u: &[Rat; 3]) -> [Rat; 3] {
    let s = primitive_scale(u.iter());
    let mut out = scale_vec(u, &s);
    if let Some(first) = out.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            let minus_one = -Rat::one();
            out = scale_vec(&out, &minus_one);
        }
    }
    out
}
