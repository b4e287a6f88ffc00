//! Exact dense linear algebra over a field.
//!
//! Everything here is plain Gaussian elimination with exact arithmetic:
//! pivots are chosen as the first nonzero entry in a column, never by
//! magnitude, so results are deterministic. Matrices are row-major
//! `Vec<Vec<F>>` and stay small (basis sizes grow like (2l+1)^2), so no
//! sparse representation is needed.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Operations the elimination routines need. `inv` may fail only on zero,
/// which the routines never invert.
pub trait Field: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>
    where
        Self: Sized;
    fn is_zero(&self) -> bool;
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Scalar::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Scalar::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Scalar::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        Scalar::inv(self)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { F::one() } else { F::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(a: &[Vec<F>], v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), v.len());
            row.iter()
                .zip(v)
                .fold(F::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
        })
        .collect()
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Matrix<F> {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), b.len());
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(F::zero(), |acc, (x, brow)| acc.add(&x.mul(&brow[j])))
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form. Returns the reduced matrix together with the
/// pivot column of each nonzero row, in order.
pub fn rref<F: Field>(m: &[Vec<F>]) -> Result<(Matrix<F>, Vec<usize>)> {
    let mut m: Matrix<F> = m.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let scale = m[r][c].inv()?;
        for x in m[r].iter_mut() {
            *x = x.mul(&scale);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&delta);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    Ok((m, pivots))
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> Result<usize> {
    Ok(rref(m)?.1.len())
}

/// Determinant of a square matrix by forward elimination without row
/// scaling: the determinant is the signed product of the pivots.
pub fn det<F: Field>(m: &[Vec<F>]) -> Result<F> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut m: Matrix<F> = m.to_vec();
    let mut acc = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Ok(F::zero());
        };
        if p != c {
            m.swap(c, p);
            acc = acc.neg();
        }
        let pivot_inv = m[c][c].inv()?;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].mul(&pivot_inv);
            for j in c..n {
                let delta = f.mul(&m[c][j]);
                m[i][j] = m[i][j].sub(&delta);
            }
        }
        acc = acc.mul(&m[c][c]);
    }
    Ok(acc)
}

/// Solves `a y = b` as far as the column span allows. Returns `(y, r)` with
/// `r = b - a y`; the system is consistent exactly when `r` is zero. Free
/// variables are set to zero, so the solution is deterministic.
pub fn solve_with_residual<F: Field>(a: &[Vec<F>], b: &[F]) -> Result<(Vec<F>, Vec<F>)> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if b.len() != rows {
        return Err(Error::InvalidArgument(
            "right-hand side length does not match row count".into(),
        ));
    }
    let aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug)?;
    let mut y = vec![F::zero(); cols];
    for (row, &pc) in red.iter().zip(&pivots) {
        if pc < cols {
            y[pc] = row[cols].clone();
        }
    }
    let residual: Vec<F> = mat_vec(a, &y)
        .iter()
        .zip(b)
        .map(|(ai, bi)| bi.sub(ai))
        .collect();
    Ok((y, residual))
}

/// Basis of the kernel of `a`, one vector per free column.
pub fn nullspace<F: Field>(a: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let (red, pivots) = rref(a)?;
    let mut basis = Vec::new();
    for j in 0..cols {
        if pivots.contains(&j) {
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[j] = F::one();
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = row[j].neg();
        }
        basis.push(v);
    }
    Ok(basis)
}
