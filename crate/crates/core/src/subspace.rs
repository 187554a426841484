//! Subspaces of K^n in canonical (RREF basis) form.
//!
//! Two subspaces are equal iff their canonical bases are entrywise equal, so
//! derived `PartialEq` is genuine subspace equality.

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    /// RREF rows, no zero rows; row count == dim.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given vectors, canonicalized.
    pub fn from_generators(ambient: usize, field: Field, gens: &[Vec<Scalar>]) -> Subspace {
        for g in gens {
            assert!(
                g.len() == ambient,
                "generator length {} vs ambient {}",
                g.len(),
                ambient
            );
        }
        let m = Matrix::from_rows(field, gens.to_vec()).expect("validated generators");
        let (r, pivots) = m.rref();
        let basis = Matrix::from_fn(pivots.len(), ambient, field, |i, j| r.get(i, j).clone());
        Subspace {
            ambient,
            field,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize, field: Field) -> Subspace {
        Subspace::from_generators(ambient, field, &[])
    }

    pub fn full(ambient: usize, field: Field) -> Subspace {
        let id = Matrix::identity(ambient, field);
        let rows: Vec<Vec<Scalar>> = (0..ambient).map(|i| id.row_vec(i)).collect();
        Subspace::from_generators(ambient, field, &rows)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> Vec<Scalar> {
        self.basis.row_vec(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Residual of v after eliminating all pivot coordinates against the
    /// basis; zero iff v lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert!(v.len() == self.ambient, "reduce: length mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for j in 0..self.ambient {
                    w[j] = &w[j] - &(&c * self.basis.get(row, j));
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coefficients of v in the canonical basis, if v is a member.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vec(v) {
            return None;
        }
        // With an RREF basis the coefficient of row r is v[pivot_r].
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains_vec(&other.basis_row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert!(self.ambient == other.ambient, "sum: ambient mismatch");
        let mut gens: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| self.basis_row(i)).collect();
        gens.extend((0..other.dim()).map(|i| other.basis_row(i)));
        Subspace::from_generators(self.ambient, self.field, &gens)
    }

    /// Intersection via the kernel of stacked coordinates: (x, y) with
    /// x*A = y*B sweeps exactly the common vectors x*A.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert!(self.ambient == other.ambient, "intersect: ambient mismatch");
        let a = self.dim();
        let b = other.dim();
        // Columns: a coefficients for self's basis, b for other's (negated).
        let m = Matrix::from_fn(self.ambient, a + b, self.field, |i, j| {
            if j < a {
                self.basis.get(j, i).clone()
            } else {
                -other.basis.get(j - a, i)
            }
        });
        let k = m.kernel();
        let mut gens = Vec::with_capacity(k.dim());
        for r in 0..k.dim() {
            let xy = k.basis_row(r);
            let mut v = vec![self.field.zero(); self.ambient];
            for (idx, coeff) in xy.iter().take(a).enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    v[j] = &v[j] + &(coeff * self.basis.get(idx, j));
                }
            }
            gens.push(v);
        }
        Subspace::from_generators(self.ambient, self.field, &gens)
    }

    /// Image of this subspace under a linear map (columns = ambient).
    pub fn map_through(&self, m: &Matrix) -> Subspace {
        assert!(m.cols() == self.ambient, "map_through: shape mismatch");
        let gens: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|i| m.apply(&self.basis_row(i)))
            .collect();
        Subspace::from_generators(m.rows(), self.field, &gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::Rationals
    }

    fn vecq(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f().from_i64(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let s1 = Subspace::from_generators(3, f(), &[vecq(&[1, 1, 0]), vecq(&[0, 0, 1])]);
        let s2 = Subspace::from_generators(3, f(), &[vecq(&[1, 1, 1]), vecq(&[2, 2, 1])]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
    }

    #[test]
    fn membership_and_coords() {
        let s = Subspace::from_generators(3, f(), &[vecq(&[1, 0, 2]), vecq(&[0, 1, 3])]);
        assert!(s.contains_vec(&vecq(&[2, 1, 7])));
        assert!(!s.contains_vec(&vecq(&[0, 0, 1])));
        let c = s.coords(&vecq(&[2, 1, 7])).unwrap();
        assert_eq!(c, vecq(&[2, 1]));
        assert!(s.coords(&vecq(&[0, 0, 1])).is_none());
    }

    #[test]
    fn modular_law_instances() {
        // dim(A) + dim(B) = dim(A+B) + dim(A∩B)
        let a = Subspace::from_generators(4, f(), &[vecq(&[1, 0, 0, 0]), vecq(&[0, 1, 0, 0])]);
        let b = Subspace::from_generators(4, f(), &[vecq(&[0, 1, 1, 0]), vecq(&[0, 0, 0, 1])]);
        let s = a.sum(&b);
        let i = a.intersect(&b);
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
        for r in 0..i.dim() {
            let v = i.basis_row(r);
            assert!(a.contains_vec(&v) && b.contains_vec(&v));
        }
    }

    #[test]
    fn intersect_disjoint_and_nested() {
        let a = Subspace::from_generators(3, f(), &[vecq(&[1, 0, 0])]);
        let b = Subspace::from_generators(3, f(), &[vecq(&[0, 1, 0])]);
        assert!(a.intersect(&b).is_zero());
        let big = Subspace::from_generators(3, f(), &[vecq(&[1, 0, 0]), vecq(&[0, 1, 0])]);
        assert_eq!(big.intersect(&a), a);
        assert!(big.contains_subspace(&a));
        assert!(!a.contains_subspace(&big));
    }
}
