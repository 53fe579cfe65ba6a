//! Small dense exact linear algebra over the period field.
//!
//! Pivoting always takes the first nonzero entry, so echelon forms, kernels
//! and splittings are deterministic functions of the input.

use num::BigRational;
use thiserror::Error;

use crate::period::{PeriodError, PeriodValue};

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("arithmetic error: {0}")]
    Arith(#[from] PeriodError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PMatrix {
    rows: usize,
    cols: usize,
    data: Vec<PeriodValue>,
}

impl PMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<PeriodValue>) -> Self {
        assert_eq!(data.len(), rows * cols);
        PMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        PMatrix::new(rows, cols, vec![PeriodValue::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = PeriodValue::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> PeriodValue) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        PMatrix::new(rows, cols, data)
    }

    pub fn from_rationals(rows: &[Vec<BigRational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        PMatrix::from_fn(r, c, |i, j| PeriodValue::from_rational(rows[i][j].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> PMatrix {
        PMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &PMatrix) -> PMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        PMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = PeriodValue::zero();
            for k in 0..self.cols {
                acc = acc.add(&self[(i, k)].mul(&other[(k, j)]));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[PeriodValue]) -> Vec<PeriodValue> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = PeriodValue::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self[(i, k)].mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<PeriodValue> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> PMatrix {
        PMatrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    /// Concatenate columns of `self` and `other`.
    pub fn hcat(&self, other: &PMatrix) -> PMatrix {
        assert_eq!(self.rows, other.rows);
        PMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn scale(&self, s: &PeriodValue) -> PMatrix {
        PMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].mul(s))
    }

    pub fn all_real(&self) -> bool {
        self.data.iter().all(|v| v.is_real())
    }

    pub fn all_rational(&self) -> bool {
        self.data.iter().all(|v| v.as_rational().is_some())
    }

    /// Division-free cofactor determinant (fast for symbolic entries).
    fn det_cofactor(&self, rows: &[usize], cols: &[usize]) -> PeriodValue {
        let n = rows.len();
        if n == 0 {
            return PeriodValue::one();
        }
        if n == 1 {
            return self[(rows[0], cols[0])].clone();
        }
        let mut acc = PeriodValue::zero();
        let sub_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let entry = &self[(rows[0], c)];
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> =
                cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_cofactor(sub_rows, &sub_cols);
            let term = entry.mul(&minor);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    /// Determinant: cofactor expansion for small sizes, fraction Gaussian
    /// elimination otherwise.
    pub fn det(&self) -> Result<PeriodValue, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare);
        }
        let n = self.rows;
        if n <= 6 {
            let idx: Vec<usize> = (0..n).collect();
            return Ok(self.det_cofactor(&idx, &idx));
        }
        let mut m = self.clone();
        let mut det = PeriodValue::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else {
                return Ok(PeriodValue::zero());
            };
            if p != col {
                for j in 0..n {
                    let a = m[(p, j)].clone();
                    let b = m[(col, j)].clone();
                    m[(p, j)] = b;
                    m[(col, j)] = a;
                }
                det = det.neg();
            }
            let piv = m[(col, col)].clone();
            det = det.mul(&piv);
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].div(&piv)?;
                for j in col..n {
                    let sub = factor.mul(&m[(col, j)]);
                    m[(r, j)] = m[(r, j)].sub(&sub);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<PMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare);
        }
        let n = self.rows;
        if n <= 5 {
            // adjugate: division only by the determinant
            let det = self.det()?;
            if det.is_zero() {
                return Err(LinalgError::Singular);
            }
            let inv_det = det.inv()?;
            let all: Vec<usize> = (0..n).collect();
            return Ok(PMatrix::from_fn(n, n, |i, j| {
                // cofactor C_{j i} / det
                let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
                let minor = self.det_cofactor(&rows, &cols);
                let sign = if (i + j) % 2 == 0 { minor } else { minor.neg() };
                sign.mul(&inv_det)
            }));
        }
        let mut m = self.hcat(&PMatrix::identity(n));
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero()).ok_or(LinalgError::Singular)?;
            if pivot != col {
                for j in 0..2 * n {
                    let a = m[(pivot, j)].clone();
                    let b = m[(col, j)].clone();
                    m[(pivot, j)] = b;
                    m[(col, j)] = a;
                }
            }
            let piv = m[(col, col)].clone();
            let inv = piv.inv()?;
            for j in 0..2 * n {
                m[(col, j)] = m[(col, j)].mul(&inv);
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in 0..2 * n {
                    let sub = factor.mul(&m[(col, j)]);
                    m[(r, j)] = m[(r, j)].sub(&sub);
                }
            }
        }
        Ok(PMatrix::from_fn(n, n, |i, j| m[(i, j + n)].clone()))
    }
}

impl std::ops::Index<(usize, usize)> for PMatrix {
    type Output = PeriodValue;
    fn index(&self, (r, c): (usize, usize)) -> &PeriodValue {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut PeriodValue {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row echelon data of a matrix.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rank: usize,
    /// Pivot columns, ascending (first nonzero column per pivot row).
    pub pivot_cols: Vec<usize>,
    /// Original row indices where the column-selected submatrix has pivots.
    pub pivot_rows: Vec<usize>,
    /// Kernel basis: one column per free column of the input.
    pub kernel: PMatrix,
    pub rref: PMatrix,
}

/// Row-reduce with deterministic first-nonzero pivoting.
pub fn echelon(m: &PMatrix) -> Result<Echelon, LinalgError> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivot_cols = Vec::new();
    let mut pivot_rows_perm: Vec<usize> = (0..rows).collect();
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !a[(r, col)].is_zero());
        let Some(p) = pivot else { continue };
        if p != rank {
            for j in 0..cols {
                let x = a[(p, j)].clone();
                let y = a[(rank, j)].clone();
                a[(p, j)] = y;
                a[(rank, j)] = x;
            }
            pivot_rows_perm.swap(p, rank);
        }
        let inv = a[(rank, col)].inv()?;
        for j in 0..cols {
            a[(rank, j)] = a[(rank, j)].mul(&inv);
        }
        for r in 0..rows {
            if r == rank || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for j in 0..cols {
                let sub = factor.mul(&a[(rank, j)]);
                a[(r, j)] = a[(r, j)].sub(&sub);
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    // Kernel: for each free column f, vector with 1 at f and -rref entries
    // at the pivot columns.
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut kernel = PMatrix::zero(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        kernel[(f, k)] = PeriodValue::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            kernel[(pc, k)] = a[(r, f)].neg();
        }
    }
    // Pivot rows of the original matrix: row-reduce the column-selected
    // submatrix tracking original indices.
    let pivot_rows = {
        let sub = m.select_columns(&pivot_cols);
        let mut b = sub.clone();
        let mut order: Vec<usize> = (0..rows).collect();
        let mut out = Vec::new();
        let mut rk = 0usize;
        for col in 0..b.cols() {
            let pivot = (rk..rows).find(|&r| !b[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            if p != rk {
                for j in 0..b.cols() {
                    let x = b[(p, j)].clone();
                    let y = b[(rk, j)].clone();
                    b[(p, j)] = y;
                    b[(rk, j)] = x;
                }
                order.swap(p, rk);
            }
            let inv = b[(rk, col)].inv()?;
            for j in 0..b.cols() {
                b[(rk, j)] = b[(rk, j)].mul(&inv);
            }
            for r in rk + 1..rows {
                if b[(r, col)].is_zero() {
                    continue;
                }
                let factor = b[(r, col)].clone();
                for j in 0..b.cols() {
                    let sub2 = factor.mul(&b[(rk, j)]);
                    b[(r, j)] = b[(r, j)].sub(&sub2);
                }
            }
            out.push(order[rk]);
            rk += 1;
        }
        out.sort_unstable();
        out
    };
    Ok(Echelon {
        rank,
        pivot_cols,
        pivot_rows,
        kernel,
        rref: a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(n: i64) -> PeriodValue {
        PeriodValue::from_int(n)
    }

    #[test]
    fn det_and_inverse() {
        let m = PMatrix::new(
            2,
            2,
            vec![pv(1), PeriodValue::pi(), pv(0), pv(2)],
        );
        assert_eq!(m.det().unwrap(), pv(2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), PMatrix::identity(2));
        let sing = PMatrix::new(2, 2, vec![pv(1), pv(2), pv(2), pv(4)]);
        assert_eq!(sing.det().unwrap(), PeriodValue::zero());
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn echelon_kernel() {
        // [1 1; 1 1] has rank 1, kernel spanned by (1, -1)
        let m = PMatrix::new(2, 2, vec![pv(1), pv(1), pv(1), pv(1)]);
        let e = echelon(&m).unwrap();
        assert_eq!(e.rank, 1);
        assert_eq!(e.pivot_cols, vec![0]);
        assert_eq!(e.pivot_rows, vec![0]);
        assert_eq!(e.kernel.cols(), 1);
        let v = e.kernel.column(0);
        let img = m.mul_vec(&v);
        assert!(img.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn echelon_with_symbolic_entries() {
        // [pi, 1] row vector: kernel is (1, -pi) up to scale
        let m = PMatrix::new(1, 2, vec![PeriodValue::pi(), pv(1)]);
        let e = echelon(&m).unwrap();
        assert_eq!(e.rank, 1);
        let v = e.kernel.column(0);
        assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
    }
}
