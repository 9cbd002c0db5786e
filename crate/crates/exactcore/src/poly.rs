//! Dense univariate polynomials with ascending coefficients.
//!
//! Invariant: the coefficient vector never ends in a zero (the zero
//! polynomial is the empty vector), maintained by a private `normalize`.
//! Arithmetic needs only [`Ring`]; Euclidean division, gcd and derived
//! algorithms additionally need [`Field`].

use crate::scalar::{Field, Ring};
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial `c[0] + c[1] z + ... + c[n] z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

// ---- Constructors ----

impl<T: Ring> Poly<T> {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn zero_poly() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c z^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// Monic product of `(z - r)` over the given roots.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut p = Poly::constant(T::one());
        for r in roots {
            p = &p * &Poly::new(vec![-r.clone(), T::one()]);
        }
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

// ---- Inspection ----

impl<T: Ring> Poly<T> {
    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero_poly();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| T::from_i64(k as i64) * c.clone())
            .collect();
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Substitutes `z -> a z + b`.
    pub fn compose_affine(&self, a: &T, b: &T) -> Self {
        let inner = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero_poly();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

// ---- Ring operations ----

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero_poly() || rhs.is_zero_poly() {
            return Poly::zero_poly();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

// ---- Euclidean structure ----

impl<T: Field> Poly<T> {
    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly<T>) -> (Poly<T>, Poly<T>) {
        assert!(!divisor.is_zero_poly(), "division by the zero polynomial");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().unwrap().clone() / dlead.clone();
            let shift = rdeg - ddeg;
            quot[shift] = factor.clone();
            let scaled = divisor.scale(&factor);
            let mut shifted = vec![T::zero(); shift];
            shifted.extend_from_slice(&scaled.coeffs);
            rem = &rem - &Poly::new(shifted);
        }
        (Poly::new(quot), rem)
    }

    /// Monic greatest common divisor (1 for coprime inputs, 0 only if both
    /// inputs are 0).
    pub fn gcd(&self, other: &Poly<T>) -> Poly<T> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero_poly() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => {
                let inv = T::one() / l.clone();
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// Monic squarefree part `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> Poly<T> {
        if self.is_zero_poly() {
            return Poly::zero_poly();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero_poly());
        let inv = T::one() / q.leading().unwrap().clone();
        q.scale(&inv)
    }

    /// Divides out all factors `(z - root)`, returning the reduced
    /// polynomial and the multiplicity removed.
    pub fn remove_root(&self, root: &T) -> (Poly<T>, usize) {
        let linear = Poly::new(vec![-root.clone(), T::one()]);
        let mut p = self.clone();
        let mut mult = 0;
        while !p.is_zero_poly() && p.eval(root).is_zero() {
            let (q, r) = p.divrem(&linear);
            debug_assert!(r.is_zero_poly());
            p = q;
            mult += 1;
        }
        (p, mult)
    }
}

// ---- num-traits instances (Poly is itself a Ring) ----

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero_poly()
    }
    fn is_zero(&self) -> bool {
        self.is_zero_poly()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring> num_traits::FromPrimitive for Poly<T> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Poly::constant(T::from_i64(n)))
    }
    fn from_u64(n: u64) -> Option<Self> {
        i64::try_from(n).ok().map(|n| Poly::constant(T::from_i64(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int, Rat, RatPoly};

    fn p(cs: &[i64]) -> RatPoly {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn arithmetic_and_normalization() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 0, -3]);
        assert_eq!((&a + &b).degree(), Some(1));
        assert_eq!(&a - &a, RatPoly::zero_poly());
        let prod = &p(&[1, 1]) * &p(&[-1, 1]);
        assert_eq!(prod, p(&[-1, 0, 1]));
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[2, -3, 0, 5, 1]);
        let b = p(&[1, 0, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let shared = p(&[-2, 1]);
        let a = &shared * &p(&[1, 1]);
        let b = &shared * &p(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), shared);
    }

    #[test]
    fn squarefree_and_root_removal() {
        let dbl = &p(&[-1, 2]) * &p(&[-1, 2]);
        let a = &dbl * &p(&[5, 1]);
        let sf = a.squarefree_part();
        assert_eq!(sf, &p(&[-1, 2]).scale(&rat(1, 2)) * &p(&[5, 1]).scale(&rat_int(1)));
        let (reduced, mult) = a.remove_root(&rat(1, 2));
        assert_eq!(mult, 2);
        assert!(!reduced.eval(&rat(1, 2)).is_zero());
    }

    #[test]
    fn from_roots_and_eval() {
        let roots = vec![rat_int(-3), rat_int(0), rat_int(1), rat_int(2)];
        let q = RatPoly::from_roots(&roots);
        for r in &roots {
            assert!(q.eval(r).is_zero());
        }
        assert_eq!(q.eval(&rat_int(3)), rat_int(3 * 6 * 2 * 1));
    }

    #[test]
    fn affine_composition() {
        let a = p(&[0, 0, 1]);
        let shifted = a.compose_affine(&rat_int(2), &rat_int(-1));
        assert_eq!(shifted.eval(&rat_int(3)), rat_int(25));
        assert_eq!(shifted, p(&[1, -4, 4]));
    }

    #[test]
    fn derivative_matches_calculus() {
        let a = p(&[7, -2, 0, 4]);
        assert_eq!(a.derivative(), p(&[-2, 0, 12]));
        assert_eq!(RatPoly::constant(Rat::from_integer(5.into())).derivative(), RatPoly::zero_poly());
    }
}
