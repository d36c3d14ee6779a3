//! Dense exact linear algebra over the scalar field.
//!
//! Row reduction never pivots for size (there is no rounding), only for
//! nonzeroness, so results are exact and deterministic.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix with `Scalar` entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Domain("ragged rows in matrix constructor".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Stack `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Domain("column count mismatch in stack".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Domain("dimension mismatch in matrix product".into()));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if self.cols != v.len() {
            return Err(Error::Domain("dimension mismatch in matrix-vector product".into()));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                let acc = out[i].clone();
                out[i] = acc + a * x;
            }
        }
        Ok(out)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if found != pivot_row {
                for c in 0..self.cols {
                    self.data.swap(found * self.cols + c, pivot_row * self.cols + c);
                }
            }
            let inv = self.get(pivot_row, col).inv().expect("pivot is nonzero");
            for c in col..self.cols {
                if self.get(pivot_row, c).is_zero() {
                    continue;
                }
                let v = self.get(pivot_row, c) * &inv;
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    if self.get(pivot_row, c).is_zero() {
                        continue;
                    }
                    let v = self.get(r, c).clone() - &factor * self.get(pivot_row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref().len()
    }

    /// Basis of the right kernel, one vector per free column, in column
    /// order. Entries are exact field elements.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut work = self.clone();
        let pivots = work.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -work.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Scalar};

    fn si(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_and_rank() {
        let mut m = Matrix::from_rows(vec![
            vec![si(1), si(2), si(3)],
            vec![si(2), si(4), si(6)],
            vec![si(0), si(1), si(1)],
        ])
        .unwrap();
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = Matrix::from_rows(vec![
            vec![si(1), si(2), si(3)],
            vec![si(2), si(4), si(6)],
        ])
        .unwrap();
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            let image = m.mul_vec(v).unwrap();
            assert!(image.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn kernel_with_field_entries() {
        // x + sqrt2 * y = 0 has kernel spanned by (-sqrt2, 1)
        let m = Matrix::from_rows(vec![vec![si(1), Scalar::sqrt2()]]).unwrap();
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0][0], -Scalar::sqrt2());
        assert_eq!(kernel[0][1], Scalar::one());
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let m = Matrix::from_rows(vec![
            vec![si(1), Scalar::sqrt2()],
            vec![Scalar::sqrt5(), Scalar::from_rational(rat(1, 3))],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn identity_multiplication() {
        let m = Matrix::from_rows(vec![
            vec![si(1), si(2)],
            vec![si(3), si(4)],
        ])
        .unwrap();
        assert_eq!(m.mul(&Matrix::identity(2)).unwrap(), m);
    }
}
