//! Quadratic polynomials in the half-coefficient convention
//! `u(z) = u0 z^2 + 2 u1 z + u2`, together with the invariant pairing, the
//! derivation bracket, and the constructions used throughout the chart
//! algebra (monic squares, conjugate quadratics, torus complements).
//!
//! Conventions fixed here and relied on everywhere else:
//! * pairing `<u, v> = u0 v2 - 2 u1 v1 + u2 v0`, so `<u, u> = 2 (u0 u2 - u1^2)`
//!   and `<square_at(g), p> = p(g)` for every quadratic `p`;
//! * bracket `{u, v} = u' v - u v'`, again a quadratic;
//! * `conjugate_at(q, g)(z) = (z - g) q(z, g)` (polarized second slot), which
//!   satisfies `{q, square_at(g)} = -2 conjugate_at(q, g)` and is always
//!   pairing-orthogonal to `q`.

use crate::poly::Poly;
use crate::scalar::{Field, Ring};
use num_traits::Zero;

/// Quadratic `u0 z^2 + 2 u1 z + u2`, stored as `[u0, u1, u2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadratic2<T> {
    pub c: [T; 3],
}

// ---- Constructors ----

impl<T: Ring> Quadratic2<T> {
    pub fn new(c0: T, c1: T, c2: T) -> Self {
        Quadratic2 { c: [c0, c1, c2] }
    }

    pub fn zero_quadratic() -> Self {
        Quadratic2::new(T::zero(), T::zero(), T::zero())
    }

    /// The constant 1.
    pub fn one_quadratic() -> Self {
        Quadratic2::new(T::zero(), T::zero(), T::one())
    }

    /// Builds from plain polynomial coefficients `a z^2 + b z + c`; `b` must
    /// be halved, so this needs a field scalar.
    pub fn from_poly_coeffs(a: T, b: T, c: T) -> Self
    where
        T: Field,
    {
        let half = T::one() / T::from_i64(2);
        Quadratic2::new(a, b * half, c)
    }

    /// Monic square `(z - g)^2`.
    pub fn square_at(g: &T) -> Self {
        Quadratic2::new(T::one(), -g.clone(), g.clone() * g.clone())
    }

    pub fn is_zero_quadratic(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

// ---- Evaluation ----

impl<T: Ring> Quadratic2<T> {
    /// Univariate value `u(z)`.
    pub fn eval(&self, z: &T) -> T {
        self.c[0].clone() * z.clone() * z.clone()
            + T::from_i64(2) * self.c[1].clone() * z.clone()
            + self.c[2].clone()
    }

    /// Polarized value `u(x, y) = u0 x y + u1 (x + y) + u2`, the symmetric
    /// bilinear extension with `u(z, z) = u(z)`.
    pub fn eval_pol(&self, x: &T, y: &T) -> T {
        self.c[0].clone() * x.clone() * y.clone()
            + self.c[1].clone() * (x.clone() + y.clone())
            + self.c[2].clone()
    }

    /// Plain polynomial derivative `2 u0 z + 2 u1` as a [`Poly`].
    pub fn derivative_poly(&self) -> Poly<T> {
        Poly::new(vec![
            T::from_i64(2) * self.c[1].clone(),
            T::from_i64(2) * self.c[0].clone(),
        ])
    }

    /// Dense polynomial form `u0 z^2 + 2 u1 z + u2`.
    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(vec![
            self.c[2].clone(),
            T::from_i64(2) * self.c[1].clone(),
            self.c[0].clone(),
        ])
    }

    /// Discriminant-type quantity `q1^2 - q0 q2`; positive for two distinct
    /// real roots, zero for a double root, negative for no real roots.
    pub fn disc(&self) -> T {
        self.c[1].clone() * self.c[1].clone() - self.c[0].clone() * self.c[2].clone()
    }
}

// ---- Linear structure ----

impl<T: Ring> Quadratic2<T> {
    pub fn add(&self, other: &Self) -> Self {
        Quadratic2::new(
            self.c[0].clone() + other.c[0].clone(),
            self.c[1].clone() + other.c[1].clone(),
            self.c[2].clone() + other.c[2].clone(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Quadratic2::new(
            self.c[0].clone() - other.c[0].clone(),
            self.c[1].clone() - other.c[1].clone(),
            self.c[2].clone() - other.c[2].clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Quadratic2::new(-self.c[0].clone(), -self.c[1].clone(), -self.c[2].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Quadratic2::new(
            self.c[0].clone() * s.clone(),
            self.c[1].clone() * s.clone(),
            self.c[2].clone() * s.clone(),
        )
    }
}

// ---- Invariant pairing and bracket ----

impl<T: Ring> Quadratic2<T> {
    /// `<u, v> = u0 v2 - 2 u1 v1 + u2 v0`.
    pub fn pairing(&self, other: &Self) -> T {
        self.c[0].clone() * other.c[2].clone()
            - T::from_i64(2) * self.c[1].clone() * other.c[1].clone()
            + self.c[2].clone() * other.c[0].clone()
    }

    /// `{u, v} = u' v - u v'`, itself a quadratic:
    /// `2 (u0 v1 - u1 v0) z^2 + 2 (u0 v2 - u2 v0) z + 2 (u1 v2 - u2 v1)`.
    pub fn bracket(&self, other: &Self) -> Self {
        let [u0, u1, u2] = self.c.clone();
        let [v0, v1, v2] = other.c.clone();
        let two = T::from_i64(2);
        Quadratic2::new(
            two.clone() * (u0.clone() * v1.clone() - u1.clone() * v0.clone()),
            u0 * v2.clone() - u2.clone() * v0,
            two * (u1 * v2 - u2 * v1),
        )
    }

    /// `ad_q(u) = -1/2 {q, u}` where `self` is `q`.
    pub fn ad(&self, other: &Self) -> Self
    where
        T: Field,
    {
        let half = T::one() / T::from_i64(2);
        self.bracket(other).scale(&half).neg()
    }

    /// Conjugate quadratic `(z - g) q(z, g)` of `q = self` at the parameter
    /// `g`. Orthogonal to `q` under the pairing for every `g`.
    pub fn conjugate_at(&self, g: &T) -> Self
    where
        T: Field,
    {
        let [q0, q1, q2] = self.c.clone();
        let half = T::one() / T::from_i64(2);
        Quadratic2::new(
            q0.clone() * g.clone() + q1.clone(),
            (q2.clone() - q0 * g.clone() * g.clone()) * half,
            -g.clone() * (q1 * g.clone() + q2),
        )
    }
}

// ---- Torus complement ----

/// A deterministic ordered basis of a two-dimensional complement to
/// `span{q}` inside the quadratics, orthogonal to `q` whenever the pairing
/// allows it.
///
/// For non-parabolic `q` (nonzero discriminant) the pairing-orthogonal
/// subspace `{u : <u, q> = 0}` is transverse to `q` (since `<q, q> != 0`)
/// and is returned, with a division-free canonical basis. For parabolic `q`
/// the orthogonal subspace contains `q` itself — its elements would include
/// a generator with constant momentum — so a genuine complement is returned
/// instead: the two coordinate quadratics from `(z^2, z, 1)` remaining after
/// dropping the last coordinate in which `q` is nonzero. In particular
/// `q = 1` yields `span{z^2, z}`, the generators whose momenta are `x y`
/// and `(x + y)/2`.
pub fn quadratic_orthogonal_complement<T: Ring>(q: &Quadratic2<T>) -> [Quadratic2<T>; 2] {
    assert!(!q.is_zero_quadratic(), "complement of the zero quadratic");
    if !q.disc().is_zero() {
        // Kernel of the functional u -> <u, q> = q2 u0 - 2 q1 u1 + q0 u2.
        let l = [
            q.c[2].clone(),
            -(q.c[1].clone() + q.c[1].clone()),
            q.c[0].clone(),
        ];
        let pivot = (0..3).find(|&k| !l[k].is_zero()).expect("q nonzero");
        let mut basis = Vec::with_capacity(2);
        for j in 0..3 {
            if j == pivot {
                continue;
            }
            // l[pivot] e_j - l[j] e_pivot annihilates the functional.
            let mut c = [T::zero(), T::zero(), T::zero()];
            c[j] = l[pivot].clone();
            c[pivot] = -l[j].clone();
            basis.push(Quadratic2 { c });
        }
        return [basis[0].clone(), basis[1].clone()];
    }
    let drop = (0..3).rev().find(|&k| !q.c[k].is_zero()).unwrap();
    let mut basis = Vec::with_capacity(2);
    for k in 0..3 {
        if k == drop {
            continue;
        }
        let mut c = [T::zero(), T::zero(), T::zero()];
        c[k] = T::one();
        basis.push(Quadratic2 { c });
    }
    [basis[0].clone(), basis[1].clone()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int, RatQuadratic};

    fn q(c0: i64, c1: i64, c2: i64) -> RatQuadratic {
        Quadratic2::new(rat_int(c0), rat_int(c1), rat_int(c2))
    }

    #[test]
    fn pairing_against_squares_evaluates() {
        let p = q(3, -2, 5);
        for g in [rat_int(0), rat_int(1), rat(-7, 3)] {
            let w = RatQuadratic::square_at(&g);
            assert_eq!(w.pairing(&p), p.eval(&g));
            assert_eq!(p.pairing(&w), p.eval(&g));
        }
    }

    #[test]
    fn self_pairing_is_twice_negative_disc() {
        let p = q(2, 3, -1);
        assert_eq!(p.pairing(&p), rat_int(2) * (p.c[0].clone() * p.c[2].clone() - p.c[1].clone() * p.c[1].clone()));
    }

    #[test]
    fn bracket_against_square_is_minus_two_conjugates() {
        let qq = q(1, -1, 4);
        for g in [rat_int(2), rat(1, 3), rat_int(-5)] {
            let w = RatQuadratic::square_at(&g);
            let lhs = qq.bracket(&w);
            let rhs = qq.conjugate_at(&g).scale(&rat_int(-2));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn conjugate_is_orthogonal_to_q() {
        let qq = q(3, 1, -2);
        for g in [rat_int(0), rat_int(7), rat(-2, 5)] {
            let p = qq.conjugate_at(&g);
            assert!(qq.pairing(&p).is_zero());
            // (z - g) q(z, g) vanishes at g.
            assert!(p.eval(&g).is_zero());
        }
    }

    #[test]
    fn complement_of_one_is_top_two_monomials() {
        let one = RatQuadratic::one_quadratic();
        let [a, b] = quadratic_orthogonal_complement(&one);
        assert_eq!(a, q(1, 0, 0));
        assert_eq!(b, q(0, 1, 0));
    }

    #[test]
    fn complement_spans_with_q() {
        for qq in [q(0, 1, 0), q(1, 0, 3), q(0, 0, 2), q(5, -1, 1), q(1, -2, 4)] {
            let [a, b] = quadratic_orthogonal_complement(&qq);
            let m = crate::Mat::from_rows(vec![a.c.to_vec(), b.c.to_vec(), qq.c.to_vec()]);
            assert!(!crate::det(&m).is_zero());
        }
    }

    #[test]
    fn complement_is_orthogonal_when_nonparabolic() {
        // q = z spans {z^2, 1}; q = z^2 + 1 gives an elliptic complement.
        for qq in [
            RatQuadratic::new(rat_int(0), rat(1, 2), rat_int(0)),
            q(1, 0, 1),
            q(2, 1, -3),
        ] {
            assert!(!qq.disc().is_zero());
            let [a, b] = quadratic_orthogonal_complement(&qq);
            assert!(a.pairing(&qq).is_zero());
            assert!(b.pairing(&qq).is_zero());
        }
        let z = RatQuadratic::new(rat_int(0), rat(1, 2), rat_int(0));
        let [a, b] = quadratic_orthogonal_complement(&z);
        // Both basis members avoid the z coordinate entirely.
        assert!(a.c[1].is_zero() && b.c[1].is_zero());
    }

    #[test]
    fn complement_of_parabolic_square() {
        // (z - 2)^2: the pairing kernel contains q itself, so a transverse
        // complement is returned instead.
        let sq = RatQuadratic::square_at(&rat_int(2));
        let [a, b] = quadratic_orthogonal_complement(&sq);
        let m = crate::Mat::from_rows(vec![a.c.to_vec(), b.c.to_vec(), sq.c.to_vec()]);
        assert!(!crate::det(&m).is_zero());
    }

    #[test]
    fn polarization_agrees_on_diagonal() {
        let p = q(4, -3, 2);
        for z in [rat_int(2), rat(5, 7)] {
            assert_eq!(p.eval_pol(&z, &z), p.eval(&z));
        }
    }
}
