//! Sparse multivariate polynomials with a fixed number of variables.
//!
//! Exponent vectors are the map keys; the invariant is that no stored
//! coefficient is zero. `MPoly<T, N>` satisfies the same `Ring` bound as the
//! base scalars, so the generic polynomial and determinant code can run with
//! symbolic coefficients; this is how the symbolic identity tests avoid
//! trusting any single numeric instantiation.

use crate::scalar::Ring;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `N` variables over `T`, sparse in the exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly<T, const N: usize> {
    terms: BTreeMap<[u32; N], T>,
}

// ---- Constructors ----

impl<T: Ring, const N: usize> MPoly<T, N> {
    pub fn zero_mpoly() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0u32; N], c);
        }
        MPoly { terms }
    }

    /// The variable with the given index.
    pub fn var(i: usize) -> Self {
        assert!(i < N, "variable index out of range");
        let mut exp = [0u32; N];
        exp[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, T::one());
        MPoly { terms }
    }

    pub fn term(c: T, exp: [u32; N]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MPoly { terms }
    }

    fn insert_add(&mut self, exp: [u32; N], c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }
}

// ---- Inspection ----

impl<T: Ring, const N: usize> MPoly<T, N> {
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32; N]) -> T {
        self.terms.get(exp).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Substitutes values for all variables.
    pub fn eval(&self, point: &[T; N]) -> T {
        let mut acc = T::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    term = term * point[i].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes polynomials for all variables (full composition).
    pub fn compose(&self, point: &[MPoly<T, N>; N]) -> MPoly<T, N> {
        let mut acc = MPoly::zero_mpoly();
        for (exp, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    term = term * point[i].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }
}

// ---- Ring operations ----

impl<T: Ring, const N: usize> Add for MPoly<T, N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (exp, c) in rhs.terms {
            self.insert_add(exp, c);
        }
        self
    }
}

impl<T: Ring, const N: usize> Sub for MPoly<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring, const N: usize> Neg for MPoly<T, N> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<T: Ring, const N: usize> Mul for MPoly<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = MPoly::zero_mpoly();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut exp = [0u32; N];
                for i in 0..N {
                    exp[i] = ea[i] + eb[i];
                }
                out.insert_add(exp, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Ring, const N: usize> Zero for MPoly<T, N> {
    fn zero() -> Self {
        MPoly::zero_mpoly()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring, const N: usize> One for MPoly<T, N> {
    fn one() -> Self {
        MPoly::constant(T::one())
    }
}

impl<T: Ring, const N: usize> num_traits::FromPrimitive for MPoly<T, N> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(MPoly::constant(T::from_i64(n)))
    }
    fn from_u64(n: u64) -> Option<Self> {
        i64::try_from(n).ok().map(|n| MPoly::constant(T::from_i64(n)))
    }
}

// ---- Display ----

impl<T: Ring + std::fmt::Display, const N: usize> MPoly<T, N> {
    /// Renders with the given variable names, highest total degree first.
    pub fn render(&self, names: &[&str; N]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&[u32; N]> = self.terms.keys().collect();
        keys.sort_by_key(|e| (std::cmp::Reverse(e.iter().sum::<u32>()), (*e).clone()));
        let mut out = String::new();
        for (i, exp) in keys.iter().enumerate() {
            let c = &self.terms[*exp];
            if i > 0 {
                out.push_str(" + ");
            }
            let mut piece = format!("{c}");
            for (v, &e) in exp.iter().enumerate() {
                if e == 1 {
                    piece.push_str(&format!("*{}", names[v]));
                } else if e > 1 {
                    piece.push_str(&format!("*{}^{}", names[v], e));
                }
            }
            out.push_str(&piece);
        }
        out
    }
}
