//! Quotients K^n / W with explicit projection and a canonical linear section,
//! plus flat indexing for tensor-square coordinates.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;

/// K^n / W. The section picks the non-pivot coordinates of W's canonical
/// basis as quotient representatives, so proj * section = Id and
/// proj(v) = 0 iff v in W.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    kernel: Subspace,
    /// Non-pivot (free) coordinates, one per quotient dimension.
    free: Vec<usize>,
    proj: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn new(kernel: Subspace) -> QuotientSpace {
        let n = kernel.ambient();
        let field = kernel.field();
        let free: Vec<usize> = (0..n).filter(|c| !kernel.pivots().contains(c)).collect();
        let q = free.len();
        let mut proj = Matrix::zero(q, n, field);
        for (t, col) in (0..n).map(|col| {
            let mut e = vec![field.zero(); n];
            e[col] = field.one();
            (kernel.reduce(&e), col)
        }) {
            for (r, &fc) in free.iter().enumerate() {
                proj.set(r, col, t[fc].clone());
            }
        }
        let mut section = Matrix::zero(n, q, field);
        for (t, &fc) in free.iter().enumerate() {
            section.set(fc, t, field.one());
        }
        QuotientSpace {
            kernel,
            free,
            proj,
            section,
        }
    }

    pub fn ambient(&self) -> usize {
        self.kernel.ambient()
    }

    pub fn field(&self) -> Field {
        self.kernel.field()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn free_coords(&self) -> &[usize] {
        &self.free
    }

    /// q x n projection matrix.
    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    /// n x q section matrix (right inverse of proj).
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.proj.apply(v)
    }

    pub fn lift(&self, w: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(w)
    }

    /// Matrix of the map induced on quotients by `m` (dst_ambient x
    /// src_ambient), checking the descent condition m(ker_src) ⊆ ker_dst.
    pub fn induced_map(src: &QuotientSpace, dst: &QuotientSpace, m: &Matrix) -> Result<Matrix> {
        if m.cols() != src.ambient() || m.rows() != dst.ambient() {
            return Err(Error::DimMismatch {
                context: "induced_map",
                expected: src.ambient(),
                got: m.cols(),
            });
        }
        for i in 0..src.kernel.dim() {
            let image = m.apply(&src.kernel.basis_row(i));
            if !dst.kernel.contains_vec(&image) {
                return Err(Error::Precondition(
                    "map does not descend: image of kernel escapes kernel".into(),
                ));
            }
        }
        let induced = dst.proj.matmul(m).matmul(&src.section);
        // Well-definedness just checked implies proj_dst * m = induced * proj_src.
        debug_assert_eq!(dst.proj.matmul(m), induced.matmul(&src.proj));
        Ok(induced)
    }
}

/// Flat indexing of V ⊗ W coordinates: (i, j) <-> i * right_dim + j.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TensorIndex {
    pub left_dim: usize,
    pub right_dim: usize,
}

impl TensorIndex {
    pub fn new(left_dim: usize, right_dim: usize) -> TensorIndex {
        TensorIndex {
            left_dim,
            right_dim,
        }
    }

    pub fn square(n: usize) -> TensorIndex {
        TensorIndex::new(n, n)
    }

    pub fn dim(&self) -> usize {
        self.left_dim * self.right_dim
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left_dim && j < self.right_dim);
        i * self.right_dim + j
    }

    pub fn split(&self, t: usize) -> (usize, usize) {
        (t / self.right_dim, t % self.right_dim)
    }

    /// u ⊗ v as a flat vector.
    pub fn tensor_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert!(
            u.len() == self.left_dim && v.len() == self.right_dim,
            "tensor_vec shape"
        );
        let mut out = Vec::with_capacity(self.dim());
        for ui in u {
            for vj in v {
                out.push(ui * vj);
            }
        }
        out
    }

    /// a ⊗ b as a map on flat tensor coordinates: sends the (i,j) basis
    /// tensor to a(e_i) ⊗ b(e_j).
    pub fn tensor_map(a: &Matrix, b: &Matrix) -> Matrix {
        let field = a.field();
        let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
        Matrix::from_fn(ar * br, ac * bc, field, |rij, cij| {
            let (ri, rj) = (rij / br, rij % br);
            let (ci, cj) = (cij / bc, cij % bc);
            a.get(ri, ci) * b.get(rj, cj)
        })
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
    fn quotient_by_diagonal_line() {
        // K^2 / span{(1,1)}: dim 1, representatives on the free coordinate.
        let w = Subspace::from_generators(2, f(), &[vecq(&[1, 1])]);
        let q = QuotientSpace::new(w);
        assert_eq!(q.dim(), 1);
        assert!(q.proj.matmul(q.section()).is_identity());
        assert!(q.project(&vecq(&[1, 1])).iter().all(Scalar::is_zero));
        let p10 = q.project(&vecq(&[1, 0]));
        let p01 = q.project(&vecq(&[0, 1]));
        // (1,0) and (0,1) differ by a kernel vector: opposite classes.
        assert_eq!(p10[0], -&p01[0]);
        assert!(!p10[0].is_zero());
        // Section lands in a complement and projects back to the identity.
        let back = q.project(&q.lift(&p01));
        assert_eq!(back, p01);
    }

    #[test]
    fn projection_kernel_is_exactly_w() {
        let w = Subspace::from_generators(3, f(), &[vecq(&[1, 2, 0]), vecq(&[0, 0, 1])]);
        let q = QuotientSpace::new(w.clone());
        assert_eq!(q.dim(), 1);
        assert_eq!(q.proj().kernel(), w);
    }

    #[test]
    fn induced_map_descends_and_commutes() {
        // m = rotation-ish map on K^2 preserving span{(1,1)}
        let m = Matrix::from_rows(f(), vec![vecq(&[0, 1]), vecq(&[1, 0])]).unwrap();
        let w = Subspace::from_generators(2, f(), &[vecq(&[1, 1])]);
        let q = QuotientSpace::new(w);
        let ind = QuotientSpace::induced_map(&q, &q, &m).unwrap();
        assert_eq!(q.proj().matmul(&m), ind.matmul(q.proj()));
        // A map that does not preserve W must be rejected.
        let bad = Matrix::from_rows(f(), vec![vecq(&[1, 0]), vecq(&[0, 2])]).unwrap();
        assert!(QuotientSpace::induced_map(&q, &q, &bad).is_err());
    }

    #[test]
    fn tensor_index_round_trip() {
        let t = TensorIndex::new(3, 4);
        for i in 0..3 {
            for j in 0..4 {
                assert_eq!(t.split(t.pair(i, j)), (i, j));
            }
        }
        let u = vecq(&[1, 2, 0]);
        let v = vecq(&[3, 0, 0, 1]);
        let tv = t.tensor_vec(&u, &v);
        assert_eq!(tv[t.pair(0, 0)], f().from_i64(3));
        assert_eq!(tv[t.pair(1, 3)], f().from_i64(2));
    }

    #[test]
    fn tensor_map_matches_tensor_vec() {
        let a = Matrix::from_rows(f(), vec![vecq(&[1, 2]), vecq(&[0, 1])]).unwrap();
        let b = Matrix::from_rows(f(), vec![vecq(&[2, 0]), vecq(&[1, 1])]).unwrap();
        let t = TensorIndex::new(2, 2);
        let m = TensorIndex::tensor_map(&a, &b);
        let u = vecq(&[1, 3]);
        let v = vecq(&[-1, 2]);
        let lhs = m.apply(&t.tensor_vec(&u, &v));
        let rhs = t.tensor_vec(&a.apply(&u), &b.apply(&v));
        assert_eq!(lhs, rhs);
    }
}
