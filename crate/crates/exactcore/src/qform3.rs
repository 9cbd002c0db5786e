//! Symmetric 3x3 quadratic forms: the exact representation of conics on the
//! projectivized space of affine functions.

use crate::scalar::Ring;

/// Symmetric 3x3 quadratic form over an exact scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadForm3<T> {
    m: [[T; 3]; 3],
}

impl<T: Ring> QuadForm3<T> {
    /// Builds from a full matrix, asserting exact symmetry.
    pub fn new(m: [[T; 3]; 3]) -> Self {
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert!(m[i][j] == m[j][i], "quadratic form matrix must be symmetric");
            }
        }
        QuadForm3 { m }
    }

    /// Builds from the upper triangle `(m00, m01, m02, m11, m12, m22)`.
    pub fn from_upper(u: [T; 6]) -> Self {
        let [a, b, c, d, e, f] = u;
        QuadForm3 {
            m: [
                [a.clone(), b.clone(), c.clone()],
                [b, d.clone(), e.clone()],
                [c, e, f],
            ],
        }
    }

    /// The symmetric product of two vectors as a form: `v w^T + w v^T`
    /// halved is avoided (no division in `Ring`); this returns the rank-≤2
    /// form `v w^T + w v^T`, which suffices for pencils of line pairs.
    pub fn symmetric_product(v: &[T; 3], w: &[T; 3]) -> Self {
        let mut m: [[T; 3]; 3] = core::array::from_fn(|_| core::array::from_fn(|_| T::zero()));
        #[allow(clippy::needless_range_loop)]
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = v[i].clone() * w[j].clone() + w[i].clone() * v[j].clone();
            }
        }
        QuadForm3 { m }
    }

    pub fn zero_form() -> Self {
        QuadForm3 {
            m: core::array::from_fn(|_| core::array::from_fn(|_| T::zero())),
        }
    }

    pub fn is_zero_form(&self) -> bool {
        self.m.iter().flatten().all(num_traits::Zero::is_zero)
    }

    pub fn matrix(&self) -> &[[T; 3]; 3] {
        &self.m
    }

    /// Bilinear evaluation `v^T M w`.
    pub fn eval(&self, v: &[T; 3], w: &[T; 3]) -> T {
        let mut acc = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc = acc + v[i].clone() * self.m[i][j].clone() * w[j].clone();
            }
        }
        acc
    }

    /// Quadratic evaluation `v^T M v`.
    pub fn eval_quad(&self, v: &[T; 3]) -> T {
        self.eval(v, v)
    }

    /// Image of a vector under the form's matrix (the polar of `v`).
    pub fn apply(&self, v: &[T; 3]) -> [T; 3] {
        core::array::from_fn(|i| {
            self.m[i][0].clone() * v[0].clone()
                + self.m[i][1].clone() * v[1].clone()
                + self.m[i][2].clone() * v[2].clone()
        })
    }

    pub fn det(&self) -> T {
        let m = &self.m;
        m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
            - m[0][1].clone()
                * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
            + m[0][2].clone()
                * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
    }

    /// Adjugate (transposed cofactor matrix), symmetric again; satisfies
    /// `M adj(M) = det(M) I` exactly.
    pub fn adjugate(&self) -> Self {
        let m = &self.m;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            m[r0][c0].clone() * m[r1][c1].clone() - m[r0][c1].clone() * m[r1][c0].clone()
        };
        // For a symmetric matrix the adjugate is symmetric; build the upper
        // triangle of cofactors with signs.
        QuadForm3::from_upper([
            cof(1, 2, 1, 2),
            -cof(1, 2, 0, 2),
            cof(1, 2, 0, 1),
            cof(0, 2, 0, 2),
            -cof(0, 2, 0, 1),
            cof(0, 1, 0, 1),
        ])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let m = core::array::from_fn(|i| {
            core::array::from_fn(|j| self.m[i][j].clone() + rhs.m[i][j].clone())
        });
        QuadForm3 { m }
    }

    pub fn scale(&self, s: &T) -> Self {
        let m = core::array::from_fn(|i| {
            core::array::from_fn(|j| self.m[i][j].clone() * s.clone())
        });
        QuadForm3 { m }
    }
}
