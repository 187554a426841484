//! Structure-constant algebras with a twist endomorphism.
//!
//! A `HomAlgebra` is K^n with a bilinear bracket given by structure constants
//! `c[i][j][k]` (coefficient of basis vector k in the bracket of basis
//! vectors i and j) and a linear twist `alpha`. Nothing about validity is
//! enforced at construction beyond shape and field uniformity: the compatible
//! twist law and the twisted Leibniz identity are checked on demand and
//! reported with witnesses, so invalid inputs can be examined rather than
//! rejected outright.
//!
//! Quantifying the multilinear identities over basis tuples is complete: both
//! sides are multilinear, so agreement on basis tuples implies agreement
//! everywhere.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::par::{par_find_first, par_map_vec};
use crate::quotient::QuotientSpace;
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Debug)]
pub struct HomAlgebra {
    dim: usize,
    field: Field,
    /// c[i][j] = coefficient vector of the bracket of basis i and basis j.
    c: Vec<Vec<Vec<Scalar>>>,
    alpha: Matrix,
}

impl HomAlgebra {
    pub fn new(field: Field, c: Vec<Vec<Vec<Scalar>>>, alpha: Matrix) -> Result<HomAlgebra> {
        let n = c.len();
        for row in &c {
            if row.len() != n {
                return Err(Error::DimMismatch {
                    context: "structure constants",
                    expected: n,
                    got: row.len(),
                });
            }
            for entry in row {
                if entry.len() != n {
                    return Err(Error::DimMismatch {
                        context: "structure constants",
                        expected: n,
                        got: entry.len(),
                    });
                }
                for s in entry {
                    if s.field() != field {
                        return Err(Error::FieldMismatch("structure constants"));
                    }
                }
            }
        }
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimMismatch {
                context: "twist matrix",
                expected: n,
                got: alpha.rows(),
            });
        }
        if alpha.field() != field {
            return Err(Error::FieldMismatch("twist matrix"));
        }
        Ok(HomAlgebra {
            dim: n,
            field,
            c,
            alpha,
        })
    }

    /// Zero bracket on K^n with the given twist.
    pub fn abelian(dim: usize, field: Field, alpha: Matrix) -> Result<HomAlgebra> {
        let zero = vec![field.zero(); dim];
        let c = vec![vec![zero; dim]; dim];
        HomAlgebra::new(field, c, alpha)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    pub fn structure_constants(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.c
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut e = vec![self.field.zero(); self.dim];
        e[i] = self.field.one();
        e
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn apply_alpha(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.alpha.apply(v)
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert!(
            x.len() == self.dim && y.len() == self.dim,
            "bracket: vector length"
        );
        let mut out = self.zero_vec();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coef = &x[i] * &y[j];
                for k in 0..self.dim {
                    let ck = &self.c[i][j][k];
                    if !ck.is_zero() {
                        out[k] = &out[k] + &(&coef * ck);
                    }
                }
            }
        }
        out
    }

    /// n x n^2 matrix of the bracket-evaluation map sending the (i,j) basis
    /// tensor to the bracket of basis i and j.
    pub fn bracket_eval_matrix(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n * n, self.field, |k, t| self.c[t / n][t % n][k].clone())
    }

    /// First basis triple (i, j, k) violating the twisted Leibniz identity
    ///   [alpha(x), [y, z]] = [[x, y], alpha(z)] - [[x, z], alpha(y)],
    /// or None if the identity holds.
    pub fn check_hom_leibniz(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        let alpha_cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.alpha.col_vec(i)).collect();
        par_find_first(n * n * n, |t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            let lhs = self.bracket(&alpha_cols[i], &self.c[j][k]);
            let r1 = self.bracket(&self.c[i][j], &alpha_cols[k]);
            let r2 = self.bracket(&self.c[i][k], &alpha_cols[j]);
            let ok = (0..n).all(|s| lhs[s] == &r1[s] - &r2[s]);
            if ok {
                None
            } else {
                Some((i, j, k))
            }
        })
    }

    /// First basis pair (i, j) violating alpha([x,y]) = [alpha(x), alpha(y)],
    /// or None if the twist is compatible.
    pub fn check_multiplicative(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        let alpha_cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.alpha.col_vec(i)).collect();
        par_find_first(n * n, |t| {
            let (i, j) = (t / n, t % n);
            let lhs = self.apply_alpha(&self.c[i][j]);
            let rhs = self.bracket(&alpha_cols[i], &alpha_cols[j]);
            if lhs == rhs {
                None
            } else {
                Some((i, j))
            }
        })
    }

    /// Structural summary: identity/twist witnesses, characteristic subspace
    /// dimensions, perfectness flags.
    pub fn report(&self) -> AlgebraReport {
        let derived = self.derived();
        let center = self.center();
        let ann = self.ann_ideal();
        let alpha_rank = self.alpha.rank();
        let mut warnings = Vec::new();
        if alpha_rank < self.dim {
            warnings.push(
                "twist is not surjective: the span of squares is saturated to an ideal, and \
                 center-based constructions need not be twist-invariant"
                    .to_string(),
            );
        }
        AlgebraReport {
            dim: self.dim,
            field: self.field,
            hom_leibniz_witness: self.check_hom_leibniz(),
            multiplicative_witness: self.check_multiplicative(),
            derived_dim: derived.dim(),
            center_dim: center.dim(),
            ann_dim: ann.dim(),
            alpha_rank,
            perfect: derived.is_full(),
            alpha_perfect: self.is_alpha_perfect(),
            warnings,
        }
    }

    /// Twists a Leibniz algebra (twist = Id) along one of its endomorphisms:
    /// the new bracket is the old bracket of the phi-images, the new twist is
    /// phi. The result always satisfies the twisted identities (checked by
    /// tests, not assumed here).
    pub fn yau_twist(&self, phi: &Matrix) -> Result<HomAlgebra> {
        if !self.alpha.is_identity() {
            return Err(Error::Precondition(
                "yau_twist input must have identity twist".into(),
            ));
        }
        if phi.rows() != self.dim || phi.cols() != self.dim {
            return Err(Error::DimMismatch {
                context: "yau_twist phi",
                expected: self.dim,
                got: phi.rows(),
            });
        }
        let n = self.dim;
        let phi_cols: Vec<Vec<Scalar>> = (0..n).map(|i| phi.col_vec(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = phi.apply(&self.c[i][j]);
                let rhs = self.bracket(&phi_cols[i], &phi_cols[j]);
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "phi is not an endomorphism: bracket compatibility fails at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.bracket(&phi_cols[i], &phi_cols[j]))
                    .collect()
            })
            .collect();
        HomAlgebra::new(self.field, c, phi.clone())
    }

    /// Closure of S under bracket with basis vectors (both sides) and the
    /// twist: the smallest two-sided twist-invariant ideal containing S.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let mut gens: Vec<Vec<Scalar>> = (0..cur.dim()).map(|i| cur.basis_row(i)).collect();
            for r in 0..cur.dim() {
                let v = cur.basis_row(r);
                gens.push(self.apply_alpha(&v));
                for j in 0..self.dim {
                    let e = self.basis_vec(j);
                    gens.push(self.bracket(&v, &e));
                    gens.push(self.bracket(&e, &v));
                }
            }
            let next = Subspace::from_generators(self.dim, self.field, &gens);
            if next.dim() == cur.dim() {
                return next;
            }
            cur = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        assert!(s.ambient() == self.dim, "is_subalgebra: ambient mismatch");
        for a in 0..s.dim() {
            let u = s.basis_row(a);
            if !s.contains_vec(&self.apply_alpha(&u)) {
                return false;
            }
            for b in 0..s.dim() {
                let v = s.basis_row(b);
                if !s.contains_vec(&self.bracket(&u, &v)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        assert!(
            s.ambient() == self.dim,
            "is_two_sided_ideal: ambient mismatch"
        );
        for a in 0..s.dim() {
            let u = s.basis_row(a);
            if !s.contains_vec(&self.apply_alpha(&u)) {
                return false;
            }
            for j in 0..self.dim {
                let e = self.basis_vec(j);
                if !s.contains_vec(&self.bracket(&u, &e)) || !s.contains_vec(&self.bracket(&e, &u))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Span of brackets of H against K (one-sided, in that order).
    pub fn commutator(&self, h: &Subspace, k: &Subspace) -> Subspace {
        let mut gens = Vec::with_capacity(h.dim() * k.dim());
        for a in 0..h.dim() {
            let u = h.basis_row(a);
            for b in 0..k.dim() {
                gens.push(self.bracket(&u, &k.basis_row(b)));
            }
        }
        Subspace::from_generators(self.dim, self.field, &gens)
    }

    /// Derived subspace: span of all basis brackets.
    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.dim, self.field);
        self.commutator(&full, &full)
    }

    /// Two-sided annihilator: x with [x, y] = 0 = [y, x] for all y.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // For each basis j, x -> [x, e_j] has matrix R_j[k][i] = c[i][j][k];
        // x -> [e_j, x] has matrix L_j[k][i] = c[j][i][k]. Stack and kernel.
        let stacked = Matrix::from_fn(2 * n * n, n, self.field, |row, i| {
            let (side, rest) = (row / (n * n), row % (n * n));
            let (j, k) = (rest / n, rest % n);
            if side == 0 {
                self.c[i][j][k].clone()
            } else {
                self.c[j][i][k].clone()
            }
        });
        stacked.kernel()
    }

    /// Ideal generated by squares. Bilinearity reduces the generating set to
    /// the polarization family: diagonal brackets plus symmetrized pairs.
    /// For surjective twists the bare span is already an ideal; the closure
    /// is taken so the quotient below is always defined.
    pub fn ann_ideal(&self) -> Subspace {
        let mut gens = Vec::new();
        for i in 0..self.dim {
            gens.push(self.c[i][i].clone());
            for j in (i + 1)..self.dim {
                let sym: Vec<Scalar> = (0..self.dim)
                    .map(|k| &self.c[i][j][k] + &self.c[j][i][k])
                    .collect();
                gens.push(sym);
            }
        }
        let span = Subspace::from_generators(self.dim, self.field, &gens);
        self.ideal_closure(&span)
    }

    /// Quotient by a two-sided twist-invariant ideal, with the projection.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<(HomAlgebra, Matrix)> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::Precondition(
                "quotient_algebra: subspace is not a two-sided ideal".into(),
            ));
        }
        let q = QuotientSpace::new(ideal.clone());
        let m = q.dim();
        let lifts: Vec<Vec<Scalar>> = (0..m).map(|r| q.section().col_vec(r)).collect();
        let c = (0..m)
            .map(|r| {
                (0..m)
                    .map(|s| q.project(&self.bracket(&lifts[r], &lifts[s])))
                    .collect()
            })
            .collect();
        let alpha = QuotientSpace::induced_map(&q, &q, &self.alpha)?;
        Ok((HomAlgebra::new(self.field, c, alpha)?, q.proj().clone()))
    }

    /// Quotient by the ideal generated by squares; antisymmetric by
    /// construction (the symmetrized brackets are divided out).
    pub fn lie_quotient(&self) -> Result<(HomAlgebra, Matrix)> {
        self.quotient_algebra(&self.ann_ideal())
    }

    /// Smallest multiplicative quotient: divides out the ideal closure of the
    /// defect span alpha([x,y]) - [alpha(x), alpha(y)] over basis pairs.
    pub fn multiplicativization(&self) -> Result<(HomAlgebra, Matrix)> {
        let n = self.dim;
        let alpha_cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.alpha.col_vec(i)).collect();
        let mut gens = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let ab = self.apply_alpha(&self.c[i][j]);
                let ba = self.bracket(&alpha_cols[i], &alpha_cols[j]);
                gens.push((0..n).map(|k| &ab[k] - &ba[k]).collect());
            }
        }
        let span = Subspace::from_generators(n, self.field, &gens);
        let ideal = self.ideal_closure(&span);
        self.quotient_algebra(&ideal)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().is_full()
    }

    pub fn alpha_image(&self) -> Subspace {
        self.alpha.image()
    }

    /// True iff brackets of twist images span everything.
    pub fn is_alpha_perfect(&self) -> bool {
        let n = self.dim;
        let alpha_cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.alpha.col_vec(i)).collect();
        let gens: Vec<Vec<Scalar>> = par_map_vec(n * n, |t| {
            self.bracket(&alpha_cols[t / n], &alpha_cols[t % n])
        });
        Subspace::from_generators(n, self.field, &gens).is_full()
    }

    /// Span of brackets of twist images (the alpha-derived subspace).
    pub fn alpha_derived(&self) -> Subspace {
        let n = self.dim;
        let alpha_cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.alpha.col_vec(i)).collect();
        let gens: Vec<Vec<Scalar>> = par_map_vec(n * n, |t| {
            self.bracket(&alpha_cols[t / n], &alpha_cols[t % n])
        });
        Subspace::from_generators(n, self.field, &gens)
    }

    /// Sub-structure constants on a subalgebra, with the inclusion matrix.
    pub fn restrict_to(&self, s: &Subspace) -> Result<(HomAlgebra, Matrix)> {
        if !self.is_subalgebra(s) {
            return Err(Error::Precondition(
                "restrict_to: subspace is not a subalgebra".into(),
            ));
        }
        let k = s.dim();
        let mut c = vec![vec![vec![self.field.zero(); k]; k]; k];
        for a in 0..k {
            for b in 0..k {
                let br = self.bracket(&s.basis_row(a), &s.basis_row(b));
                c[a][b] = s.coords(&br).expect("subalgebra closure");
            }
        }
        let alpha = Matrix::from_fn(k, k, self.field, |_, _| self.field.zero());
        let mut alpha = alpha;
        for a in 0..k {
            let im = self.apply_alpha(&s.basis_row(a));
            let coords = s.coords(&im).expect("twist invariance");
            for r in 0..k {
                alpha.set(r, a, coords[r].clone());
            }
        }
        let incl = Matrix::from_fn(self.dim, k, self.field, |i, a| s.basis().get(a, i).clone());
        Ok((HomAlgebra::new(self.field, c, alpha)?, incl))
    }

    /// Componentwise direct product (block bracket, block twist).
    pub fn direct_product(&self, other: &HomAlgebra) -> Result<HomAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("direct_product"));
        }
        let (n, m) = (self.dim, other.dim);
        let d = n + m;
        let mut c = vec![vec![vec![self.field.zero(); d]; d]; d];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[i][j][k] = self.c[i][j][k].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c[n + i][n + j][n + k] = other.c[i][j][k].clone();
                }
            }
        }
        let alpha = Matrix::from_fn(d, d, self.field, |i, j| {
            if i < n && j < n {
                self.alpha.get(i, j).clone()
            } else if i >= n && j >= n {
                other.alpha.get(i - n, j - n).clone()
            } else {
                self.field.zero()
            }
        });
        HomAlgebra::new(self.field, c, alpha)
    }
}

/// Validation summary for one algebra.
#[derive(Clone, Debug)]
pub struct AlgebraReport {
    pub dim: usize,
    pub field: Field,
    pub hom_leibniz_witness: Option<(usize, usize, usize)>,
    pub multiplicative_witness: Option<(usize, usize)>,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub ann_dim: usize,
    pub alpha_rank: usize,
    pub perfect: bool,
    pub alpha_perfect: bool,
    pub warnings: Vec<String>,
}

impl AlgebraReport {
    pub fn valid(&self) -> bool {
        self.hom_leibniz_witness.is_none() && self.multiplicative_witness.is_none()
    }
}

/// A linear map between algebras, validated to respect brackets and twists.
#[derive(Clone, Debug)]
pub struct HomMorphism {
    pub src: HomAlgebra,
    pub dst: HomAlgebra,
    pub matrix: Matrix,
}

/// Compatibility witnesses for a candidate morphism matrix.
#[derive(Clone, Debug)]
pub struct MorphismReport {
    /// First basis pair where f([x,y]) != [f(x), f(y)].
    pub bracket_witness: Option<(usize, usize)>,
    /// Whether f composed with the source twist equals the target twist
    /// composed with f.
    pub twist_ok: bool,
}

impl MorphismReport {
    pub fn valid(&self) -> bool {
        self.bracket_witness.is_none() && self.twist_ok
    }
}

/// Checks bracket and twist compatibility of `f` as a map src -> dst.
pub fn check_morphism(f: &Matrix, src: &HomAlgebra, dst: &HomAlgebra) -> MorphismReport {
    assert!(
        f.cols() == src.dim() && f.rows() == dst.dim(),
        "check_morphism: shape {}x{} vs {} -> {}",
        f.rows(),
        f.cols(),
        src.dim(),
        dst.dim()
    );
    let n = src.dim();
    let f_cols: Vec<Vec<Scalar>> = (0..n).map(|i| f.col_vec(i)).collect();
    let bracket_witness = par_find_first(n * n, |t| {
        let (i, j) = (t / n, t % n);
        let lhs = f.apply(src.basis_bracket(i, j));
        let rhs = dst.bracket(&f_cols[i], &f_cols[j]);
        if lhs == rhs {
            None
        } else {
            Some((i, j))
        }
    });
    let twist_ok = f.matmul(src.alpha()) == dst.alpha().matmul(f);
    MorphismReport {
        bracket_witness,
        twist_ok,
    }
}

impl HomMorphism {
    /// Validated constructor; rejects non-morphisms with the witness.
    pub fn new(src: HomAlgebra, dst: HomAlgebra, matrix: Matrix) -> Result<HomMorphism> {
        if matrix.cols() != src.dim() || matrix.rows() != dst.dim() {
            return Err(Error::DimMismatch {
                context: "morphism matrix",
                expected: src.dim(),
                got: matrix.cols(),
            });
        }
        if src.field() != dst.field() || matrix.field() != src.field() {
            return Err(Error::FieldMismatch("morphism"));
        }
        let rep = check_morphism(&matrix, &src, &dst);
        if let Some((i, j)) = rep.bracket_witness {
            return Err(Error::Invalid(format!(
                "not a morphism: bracket compatibility fails at basis pair ({i}, {j})"
            )));
        }
        if !rep.twist_ok {
            return Err(Error::Invalid(
                "not a morphism: twist compatibility fails".into(),
            ));
        }
        Ok(HomMorphism { src, dst, matrix })
    }

    pub fn identity(alg: &HomAlgebra) -> HomMorphism {
        HomMorphism {
            src: alg.clone(),
            dst: alg.clone(),
            matrix: Matrix::identity(alg.dim(), alg.field()),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.src.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.dst.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.src.dim() == self.dst.dim() && self.matrix.rank() == self.src.dim()
    }

    /// self after g (usual composition order).
    pub fn compose(&self, g: &HomMorphism) -> Result<HomMorphism> {
        if g.dst.dim() != self.src.dim() {
            return Err(Error::DimMismatch {
                context: "compose",
                expected: self.src.dim(),
                got: g.dst.dim(),
            });
        }
        Ok(HomMorphism {
            src: g.src.clone(),
            dst: self.dst.clone(),
            matrix: self.matrix.matmul(&g.matrix),
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn kernel_subspace(&self) -> Subspace {
        self.matrix.kernel()
    }
}
