//! Dense bivariate polynomials and their fraction field, used by the
//! symbolic curvature computations.
//!
//! `BiPoly` stores coefficients as a rectangle `c[i][j] x^i y^j` with no
//! all-zero trailing rows or columns. `BiRat` is a fraction of bivariate
//! polynomials with no gcd reduction: equality is decided by
//! cross-multiplication, which is exact and cheap enough at the degrees the
//! curvature oracle produces.

use crate::poly::Poly;
use crate::quadratic::Quadratic2;
use crate::scalar::{Field, Ring};

/// Bivariate polynomial `sum c[i][j] x^i y^j`, dense in both variables.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<T> {
    /// `rows[i][j]` is the coefficient of `x^i y^j`; empty means zero.
    rows: Vec<Vec<T>>,
}

// ---- Constructors ----

impl<T: Ring> BiPoly<T> {
    pub fn zero_bipoly() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        let mut p = BiPoly { rows: vec![vec![c]] };
        p.normalize();
        p
    }

    /// `x^i y^j`.
    pub fn monomial(c: T, i: usize, j: usize) -> Self {
        let mut rows = vec![vec![T::zero(); j + 1]; i + 1];
        rows[i][j] = c;
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }

    pub fn x() -> Self {
        BiPoly::monomial(T::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(T::one(), 0, 1)
    }

    /// Embeds a univariate polynomial in the first variable.
    pub fn from_poly_x(p: &Poly<T>) -> Self {
        let rows = p.coeffs().iter().map(|c| vec![c.clone()]).collect();
        let mut q = BiPoly { rows };
        q.normalize();
        q
    }

    /// Embeds a univariate polynomial in the second variable.
    pub fn from_poly_y(p: &Poly<T>) -> Self {
        if p.is_zero_poly() {
            return BiPoly::zero_bipoly();
        }
        BiPoly { rows: vec![p.coeffs().to_vec()] }
    }

    /// Polarized quadratic `u0 x y + u1 (x + y) + u2`.
    pub fn from_quadratic_polarized(u: &Quadratic2<T>) -> Self {
        let mut p = BiPoly {
            rows: vec![
                vec![u.c[2].clone(), u.c[1].clone()],
                vec![u.c[1].clone(), u.c[0].clone()],
            ],
        };
        p.normalize();
        p
    }

    /// `x - y`.
    pub fn x_minus_y() -> Self {
        BiPoly::x() - BiPoly::y()
    }

    fn normalize(&mut self) {
        for row in &mut self.rows {
            while matches!(row.last(), Some(c) if c.is_zero()) {
                row.pop();
            }
        }
        while matches!(self.rows.last(), Some(r) if r.is_empty()) {
            self.rows.pop();
        }
    }
}

// ---- Inspection ----

impl<T: Ring> BiPoly<T> {
    pub fn is_zero_bipoly(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Degree in `x` and `y`, or `None` when zero.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        if self.is_zero_bipoly() {
            return None;
        }
        let dx = self.rows.len() - 1;
        let dy = self.rows.iter().map(|r| r.len()).max().unwrap() - 1;
        Some((dx, dy))
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        for row in self.rows.iter().rev() {
            let mut row_val = T::zero();
            for c in row.iter().rev() {
                row_val = row_val * y.clone() + c.clone();
            }
            acc = acc * x.clone() + row_val;
        }
        acc
    }

    pub fn dx(&self) -> Self {
        if self.rows.len() <= 1 {
            return BiPoly::zero_bipoly();
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, row)| row.iter().map(|c| T::from_i64(i as i64) * c.clone()).collect())
            .collect();
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }

    pub fn dy(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, c)| T::from_i64(j as i64) * c.clone())
                    .collect()
            })
            .collect();
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }

    /// Iterates over the nonzero coefficients as `(i, j, value)`.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }
}

// ---- Arithmetic ----

impl<T: Ring> std::ops::Add for BiPoly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let ni = self.rows.len().max(rhs.rows.len());
        let mut rows = Vec::with_capacity(ni);
        for i in 0..ni {
            let nj = self
                .rows
                .get(i)
                .map_or(0, Vec::len)
                .max(rhs.rows.get(i).map_or(0, Vec::len));
            let row = (0..nj).map(|j| self.coeff(i, j) + rhs.coeff(i, j)).collect();
            rows.push(row);
        }
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }
}

impl<T: Ring> std::ops::Sub for BiPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> std::ops::Neg for BiPoly<T> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for row in &mut self.rows {
            for c in row {
                *c = -c.clone();
            }
        }
        self
    }
}

impl<T: Ring> std::ops::Mul for BiPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero_bipoly() || rhs.is_zero_bipoly() {
            return BiPoly::zero_bipoly();
        }
        let (ax, ay) = self.bidegree().unwrap();
        let (bx, by) = rhs.bidegree().unwrap();
        let mut rows = vec![vec![T::zero(); ay + by + 1]; ax + bx + 1];
        for (i, j, c) in self.iter_terms() {
            for (k, l, d) in rhs.iter_terms() {
                rows[i + k][j + l] = rows[i + k][j + l].clone() + c.clone() * d.clone();
            }
        }
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }
}

impl<T: Ring> BiPoly<T> {
    pub fn scale(&self, s: &T) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.clone() * s.clone()).collect())
            .collect();
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }
}

// ---- Fractions ----

/// Fraction of bivariate polynomials, kept unreduced.
#[derive(Clone, Debug)]
pub struct BiRat<T> {
    pub num: BiPoly<T>,
    pub den: BiPoly<T>,
}

impl<T: Field> BiRat<T> {
    pub fn new(num: BiPoly<T>, den: BiPoly<T>) -> Self {
        assert!(!den.is_zero_bipoly(), "zero denominator");
        BiRat { num, den }
    }

    pub fn from_poly(p: BiPoly<T>) -> Self {
        BiRat { num: p, den: BiPoly::constant(T::one()) }
    }

    pub fn zero_rat() -> Self {
        BiRat::from_poly(BiPoly::zero_bipoly())
    }

    pub fn is_zero_rat(&self) -> bool {
        self.num.is_zero_bipoly()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        BiRat::new(
            self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            self.den.clone() * rhs.den.clone(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        BiRat::new(
            self.num.clone() * rhs.den.clone() - rhs.num.clone() * self.den.clone(),
            self.den.clone() * rhs.den.clone(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        BiRat::new(self.num.clone() * rhs.num.clone(), self.den.clone() * rhs.den.clone())
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero_rat(), "division by zero rational function");
        BiRat::new(self.num.clone() * rhs.den.clone(), self.den.clone() * rhs.num.clone())
    }

    pub fn neg(&self) -> Self {
        BiRat { num: -self.num.clone(), den: self.den.clone() }
    }

    /// Partial derivative in `x` via the quotient rule.
    pub fn dx(&self) -> Self {
        BiRat::new(
            self.num.dx() * self.den.clone() - self.num.clone() * self.den.dx(),
            self.den.clone() * self.den.clone(),
        )
    }

    /// Partial derivative in `y` via the quotient rule.
    pub fn dy(&self) -> Self {
        BiRat::new(
            self.num.dy() * self.den.clone() - self.num.clone() * self.den.dy(),
            self.den.clone() * self.den.clone(),
        )
    }

    /// Exact equality by cross-multiplication.
    pub fn eq_rat(&self, rhs: &Self) -> bool {
        (self.num.clone() * rhs.den.clone()) == (rhs.num.clone() * self.den.clone())
    }
}
