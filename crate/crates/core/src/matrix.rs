//! Dense matrices over an exact field, with reduced row echelon form as the
//! canonicalization workhorse.
//!
//! Convention: a matrix with `r` rows and `c` cols represents a linear map
//! K^c -> K^r acting on column vectors via [`Matrix::apply`]. Subspaces store
//! their basis vectors as matrix rows.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from row vectors; validates rectangularity and field uniformity.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimMismatch {
                    context: "matrix row",
                    expected: c,
                    got: row.len(),
                });
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch("matrix entry"));
                }
            }
            data.extend(row.iter().cloned());
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            field,
            data,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zero(rows, cols, field);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(v.field() == self.field, "field mismatch in Matrix::set");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows, self.field)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "matrix add shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j) + other.get(i, j)
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "matrix sub shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j) - other.get(i, j)
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| self.get(i, j) * s)
    }

    /// Matrix product self * other (composition of maps).
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert!(
            self.cols == other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
        let mut m = Matrix::zero(self.rows, other.cols, self.field);
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
                    let upd = m.get(i, j) + &(a * b);
                    m.set(i, j, upd);
                }
            }
        }
        m
    }

    /// Applies the map to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert!(
            v.len() == self.cols,
            "apply: vector length {} vs {} cols",
            v.len(),
            self.cols
        );
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self.get(i, j).is_zero() {
                        acc = &acc + &(self.get(i, j) * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `other` to the right.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Stacks `other` below.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert!(self.cols == other.cols, "vstack col mismatch");
        Matrix::from_fn(self.rows + other.rows, self.cols, self.field, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Reduced row echelon form and the pivot column list.
    ///
    /// Canonical: leading entries are 1, pivot columns are strictly
    /// increasing, each pivot column is zero elsewhere, zero rows sink to the
    /// bottom. Deterministic (first nonzero candidate row wins), so equal row
    /// spaces yield identical output.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, col).is_zero() {
                    let factor = m.get(i, col).clone();
                    for j in col..m.cols {
                        let v = m.get(i, j) - &(&factor * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space { v : self * v = 0 } with RREF-canonical basis.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut gens = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            gens.push(v);
        }
        Subspace::from_generators(self.cols, self.field, &gens)
    }

    /// Column space (the image of the map).
    pub fn image(&self) -> Subspace {
        let t = self.transpose();
        let rows: Vec<Vec<Scalar>> = (0..t.rows()).map(|i| t.row_vec(i)).collect();
        Subspace::from_generators(self.rows, self.field, &rows)
    }

    /// One solution of self * x = rhs (free coordinates set to zero).
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>> {
        assert!(rhs.len() == self.rows, "solve: rhs length mismatch");
        let rhs_col = Matrix::from_fn(self.rows, 1, self.field, |i, _| rhs[i].clone());
        let aug = self.hstack(&rhs_col);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::Unsolvable);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotInvertible);
        }
        let aug = self.hstack(&Matrix::identity(self.rows, self.field));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::NotInvertible);
        }
        Ok(Matrix::from_fn(self.rows, self.rows, self.field, |i, j| {
            r.get(i, self.cols + j).clone()
        }))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmat(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_dependent_rows() {
        // [[2,4],[1,2]] -> [[1,2],[0,0]], pivots [0]
        let (r, p) = qmat(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, qmat(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_is_idempotent_and_canonical() {
        let m = qmat(&[&[0, 2, 1], &[3, 6, 0], &[3, 8, 1]]);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        // Same row space, different generator order: identical canonical form.
        let m2 = qmat(&[&[3, 8, 1], &[0, 2, 1], &[3, 6, 0]]);
        assert_eq!(m.rref().0, m2.rref().0);
    }

    #[test]
    fn kernel_of_wide_row() {
        // ker [[1,2]] = span{(1,-1/2)} after canonicalization
        let k = qmat(&[&[1, 2]]).kernel();
        assert_eq!(k.dim(), 1);
        let f = Field::Rationals;
        let v = k.basis_row(0);
        assert_eq!(v[0], f.one());
        assert_eq!(v[1], f.parse("-1/2").unwrap());
    }

    #[test]
    fn rank_nullity() {
        let m = qmat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        assert_eq!(m.image().dim(), m.rank());
    }

    #[test]
    fn solve_and_inverse() {
        let m = qmat(&[&[2, 1], &[1, 1]]);
        let f = Field::Rationals;
        let x = m.solve(&[f.from_i64(3), f.from_i64(2)]).unwrap();
        assert_eq!(m.apply(&x), vec![f.from_i64(3), f.from_i64(2)]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        // Inconsistent system
        let s = qmat(&[&[1, 2], &[2, 4]]);
        assert!(matches!(
            s.solve(&[f.from_i64(1), f.from_i64(3)]),
            Err(Error::Unsolvable)
        ));
        assert!(s.inverse().is_err());
    }

    #[test]
    fn gf5_rref() {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_rows(
            f,
            vec![
                vec![f.from_i64(2), f.from_i64(1)],
                vec![f.from_i64(4), f.from_i64(2)],
            ],
        )
        .unwrap();
        let (r, p) = m.rref();
        // row2 = 2*row1 mod 5, so rank 1; leading one via 2^-1 = 3
        assert_eq!(p, vec![0]);
        assert_eq!(*r.get(0, 0), f.one());
        assert_eq!(*r.get(0, 1), f.from_i64(3));
        assert_eq!(m.rank() + m.kernel().dim(), 2);
    }
}
