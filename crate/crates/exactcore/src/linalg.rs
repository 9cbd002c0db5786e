//! Exact dense linear algebra: Gauss-Jordan solving with certificates and
//! determinants over a plain ring.
//!
//! `solve_linear` never guesses: it returns either a particular solution
//! together with a kernel basis, or an inconsistency certificate, a row
//! vector `c` with `c^T A = 0` and `c^T b != 0` that callers can surface as
//! an exact infeasibility proof.

use crate::scalar::{Field, Ring};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len(), "shape mismatch");
        Mat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.at(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Vector-matrix product (left action by a row vector).
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = T::zero();
                for i in 0..self.rows {
                    acc = acc + v[i].clone() * self.at(i, j).clone();
                }
                acc
            })
            .collect()
    }
}

/// Determinant by cofactor expansion; needs only ring operations, so it
/// works for polynomial entries (used by the symbolic minor computations).
pub fn det<T: Ring>(m: &Mat<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    det_rec(&(0..m.rows).collect::<Vec<_>>(), &(0..m.cols).collect::<Vec<_>>(), m)
}

fn det_rec<T: Ring>(rows: &[usize], cols: &[usize], m: &Mat<T>) -> T {
    if rows.len() == 1 {
        return m.at(rows[0], cols[0]).clone();
    }
    let mut acc = T::zero();
    let sub_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let a = m.at(rows[0], c).clone();
        if a.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> =
            cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &cc)| cc).collect();
        let minor = det_rec(sub_rows, &sub_cols, m);
        let term = a * minor;
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearOutcome<T> {
    Solved {
        /// One solution of `A x = b`.
        particular: Vec<T>,
        /// Basis of the kernel of `A`; empty when the solution is unique.
        kernel: Vec<Vec<T>>,
    },
    Inconsistent {
        /// Row vector with `certificate^T A = 0` and `certificate^T b != 0`.
        certificate: Vec<T>,
    },
}

/// Gauss-Jordan over an exact field with row-operation tracking.
///
/// Pivots are the first nonzero entry in each column; there is no numeric
/// pivot-size heuristic because the arithmetic is exact.
pub fn solve_linear<T: Field>(a: &Mat<T>, b: &[T]) -> LinearOutcome<T> {
    assert_eq!(b.len(), a.rows(), "right-hand side length mismatch");
    let m = a.rows();
    let n = a.cols();
    let mut work = a.clone();
    let mut rhs = b.to_vec();
    // Row-operation record: starts as the identity, so at any point
    // record * original_A = work and record * original_b = rhs.
    let mut record = Mat::<T>::identity(m);
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;

    for col in 0..n {
        // Find a pivot at or below `rank`.
        let Some(pivot_row) = (rank..m).find(|&r| !work.at(r, col).is_zero()) else {
            continue;
        };
        // Swap into place.
        if pivot_row != rank {
            for j in 0..n {
                let tmp = work.at(rank, j).clone();
                *work.at_mut(rank, j) = work.at(pivot_row, j).clone();
                *work.at_mut(pivot_row, j) = tmp;
            }
            rhs.swap(rank, pivot_row);
            for j in 0..m {
                let tmp = record.at(rank, j).clone();
                *record.at_mut(rank, j) = record.at(pivot_row, j).clone();
                *record.at_mut(pivot_row, j) = tmp;
            }
        }
        // Scale the pivot row to make the pivot 1.
        let inv = T::one() / work.at(rank, col).clone();
        for j in 0..n {
            *work.at_mut(rank, j) = work.at(rank, j).clone() * inv.clone();
        }
        rhs[rank] = rhs[rank].clone() * inv.clone();
        for j in 0..m {
            *record.at_mut(rank, j) = record.at(rank, j).clone() * inv.clone();
        }
        // Eliminate the column everywhere else.
        for r in 0..m {
            if r == rank || work.at(r, col).is_zero() {
                continue;
            }
            let factor = work.at(r, col).clone();
            for j in 0..n {
                let delta = factor.clone() * work.at(rank, j).clone();
                *work.at_mut(r, j) = work.at(r, j).clone() - delta;
            }
            let delta = factor.clone() * rhs[rank].clone();
            rhs[r] = rhs[r].clone() - delta;
            for j in 0..m {
                let delta = factor.clone() * record.at(rank, j).clone();
                *record.at_mut(r, j) = record.at(r, j).clone() - delta;
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == m {
            break;
        }
    }

    // Inconsistency: a zero row of the reduced matrix with nonzero rhs.
    for r in rank..m {
        if !rhs[r].is_zero() {
            debug_assert!((0..n).all(|j| work.at(r, j).is_zero()));
            return LinearOutcome::Inconsistent { certificate: record.row(r).to_vec() };
        }
    }

    // Particular solution: free variables set to zero.
    let mut particular = vec![T::zero(); n];
    for (i, &col) in pivot_cols.iter().enumerate() {
        particular[col] = rhs[i].clone();
    }
    // Kernel basis: one vector per free column.
    let mut kernel = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![T::zero(); n];
        v[free] = T::one();
        for (i, &col) in pivot_cols.iter().enumerate() {
            v[col] = -work.at(i, free).clone();
        }
        kernel.push(v);
    }
    LinearOutcome::Solved { particular, kernel }
}
