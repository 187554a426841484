//! Named example algebras, morphisms, and semidirect products used across the
//! test suite, the benchmarks, and the bundled data files.
//!
//! Everything here is over the rationals. Dimensions stay small (2 to 12) so
//! each object is checkable by hand, but the family is chosen to exercise
//! every code path: abelian and nonabelian, twist zero / identity /
//! invertible-non-identity, perfect and non-perfect, and second homology
//! zero and nonzero.

use crate::action::{semidirect, HomAction, SemidirectProduct};
use crate::algebra::{HomAlgebra, HomMorphism};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

const Q: Field = Field::Rationals;

fn q(n: i64) -> Scalar {
    Q.from_i64(n)
}

fn qq(n: i64, d: i64) -> Scalar {
    Q.from_i64(n)
        .div(&Q.from_i64(d))
        .expect("nonzero denominator")
}

/// Structure constants from a sparse (i, j, k, value) table.
fn sc(n: usize, entries: &[(usize, usize, usize, i64)]) -> Vec<Vec<Vec<Scalar>>> {
    let mut c = vec![vec![vec![q(0); n]; n]; n];
    for &(i, j, k, v) in entries {
        c[i][j][k] = q(v);
    }
    c
}

pub fn diag(entries: &[Scalar]) -> Matrix {
    let n = entries.len();
    Matrix::from_fn(n, n, entries[0].field(), |i, j| {
        if i == j {
            entries[i].clone()
        } else {
            entries[0].field().zero()
        }
    })
}

/// Two-dimensional abelian algebra with zero twist.
pub fn ab2() -> HomAlgebra {
    HomAlgebra::abelian(2, Q, Matrix::zero(2, 2, Q)).expect("ab2")
}

/// Two-dimensional nonabelian nilpotent algebra: basis (a, b), bracket
/// [a,a] = b, twist identity. The square [a,a] is nonzero, so this is not
/// antisymmetric.
pub fn nl2() -> HomAlgebra {
    HomAlgebra::new(Q, sc(2, &[(0, 0, 1, 1)]), Matrix::identity(2, Q)).expect("nl2")
}

/// Split simple three-dimensional algebra, basis (e, h, f):
/// [e,f] = h, [h,e] = 2e, [h,f] = -2f, antisymmetric, twist identity.
pub fn sl2() -> HomAlgebra {
    let c = sc(
        3,
        &[
            (0, 2, 1, 1),
            (2, 0, 1, -1),
            (1, 0, 0, 2),
            (0, 1, 0, -2),
            (1, 2, 2, -2),
            (2, 1, 2, 2),
        ],
    );
    HomAlgebra::new(Q, c, Matrix::identity(3, Q)).expect("sl2")
}

/// The diagonal automorphism diag(2, 1, 1/2) of `sl2` (scaling by the square
/// of a torus parameter).
pub fn sl2_phi() -> Matrix {
    diag(&[q(2), q(1), qq(1, 2)])
}

/// Twisted version of `sl2`: its bracket composed with `sl2_phi` on both
/// arguments, twist `sl2_phi`. Invertible non-identity twist; still perfect.
pub fn tw2() -> HomAlgebra {
    sl2().yau_twist(&sl2_phi()).expect("tw2")
}

/// The order-two automorphism of `sl2` swapping the root vectors with signs:
/// e -> -f, h -> -h, f -> -e.
pub fn sl2_omega() -> Matrix {
    Matrix::from_rows(
        Q,
        vec![
            vec![q(0), q(0), q(-1)],
            vec![q(0), q(-1), q(0)],
            vec![q(-1), q(0), q(0)],
        ],
    )
    .expect("omega")
}

/// The torus automorphism diag(t^2, 1, t^-2) of `sl2` (and of `tw2`, with
/// which it commutes). `t` must be nonzero.
pub fn sl2_torus(t: i64) -> Matrix {
    assert!(t != 0, "torus parameter must be nonzero");
    diag(&[q(t * t), q(1), qq(1, t * t)])
}

/// A unipotent automorphism of `sl2`: conjugation by the elementary
/// upper-triangular matrix with unit off-diagonal entry.
pub fn sl2_unipotent() -> Matrix {
    Matrix::from_rows(
        Q,
        vec![
            vec![q(1), q(-2), q(-1)],
            vec![q(0), q(1), q(1)],
            vec![q(0), q(0), q(1)],
        ],
    )
    .expect("unipotent")
}

/// Left bracket by the basis vector with the given index, as a matrix.
pub fn ad(alg: &HomAlgebra, idx: usize) -> Matrix {
    let n = alg.dim();
    Matrix::from_fn(n, n, alg.field(), |r, c| {
        alg.basis_bracket(idx, c)[r].clone()
    })
}

/// A diagonal derivation of `tw2` compatible with its twist: the left-bracket
/// derivation by h of the untwisted algebra composed with the twist,
/// diag(4, 0, -1).
pub fn tw2_diag_derivation() -> Matrix {
    diag(&[q(4), q(0), q(-1)])
}

/// Three-dimensional two-step nilpotent algebra, basis (x, y, z):
/// [x,y] = z = -[y,x], twist identity.
pub fn heis() -> HomAlgebra {
    HomAlgebra::new(
        Q,
        sc(3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        Matrix::identity(3, Q),
    )
    .expect("heis")
}

fn truncated_current(degrees: usize) -> HomAlgebra {
    // Basis (a, i) -> a*3 + i: copy i of the sl2 basis in t-degree a; the
    // bracket adds degrees and truncates.
    let base = sl2();
    let n = 3 * degrees;
    let mut c = vec![vec![vec![q(0); n]; n]; n];
    for a in 0..degrees {
        for b in 0..degrees {
            if a + b >= degrees {
                continue;
            }
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        c[a * 3 + i][b * 3 + j][(a + b) * 3 + k] =
                            base.basis_bracket(i, j)[k].clone();
                    }
                }
            }
        }
    }
    HomAlgebra::new(Q, c, Matrix::identity(n, Q)).expect("truncated current")
}

/// `sl2` tensored with polynomials truncated above degree 1: a perfect
/// six-dimensional algebra whose second homology is one-dimensional.
pub fn cur2() -> HomAlgebra {
    truncated_current(2)
}

/// `sl2` tensored with polynomials truncated above degree 2: a perfect
/// nine-dimensional algebra whose second homology is two-dimensional.
pub fn cur3() -> HomAlgebra {
    truncated_current(3)
}

/// The degree-scaling automorphism of `cur3`: multiplies degree a by c^a.
pub fn cur3_scale(c: i64) -> Matrix {
    assert!(c != 0, "scale parameter must be nonzero");
    let mut d = Vec::new();
    for a in 0..3u32 {
        for _ in 0..3 {
            d.push(q(c.pow(a)));
        }
    }
    diag(&d)
}

/// The degree-counting derivation of `cur3`: multiplies degree a by a.
pub fn cur3_euler() -> Matrix {
    let mut d = Vec::new();
    for a in 0..3 {
        for _ in 0..3 {
            d.push(q(a));
        }
    }
    diag(&d)
}

/// The torus automorphism of `cur3` acting as diag(4, 1, 1/4) in every
/// degree.
pub fn cur3_torus() -> Matrix {
    let mut d = Vec::new();
    for _ in 0..3 {
        d.push(q(4));
        d.push(q(1));
        d.push(qq(1, 4));
    }
    diag(&d)
}

/// `sl2` acting on itself by its own bracket, and the resulting
/// six-dimensional semidirect product.
pub fn sd1() -> SemidirectProduct {
    semidirect(&HomAction::self_action(&sl2())).expect("sd1")
}

/// Direct product `tw2` x `sl2`, realized as the semidirect product of the
/// trivial action.
pub fn dp() -> SemidirectProduct {
    let action = HomAction::trivial(sl2(), tw2()).expect("trivial action");
    semidirect(&action).expect("dp")
}

/// `sl2` acting on itself through the automorphism `sl2_omega` (the
/// self-action pulled back along it), and the resulting product.
pub fn sd2() -> SemidirectProduct {
    let base = sl2();
    let omega = HomMorphism::new(base.clone(), base.clone(), sl2_omega()).expect("omega");
    let action = HomAction::self_action(&base)
        .pullback(&omega)
        .expect("pullback");
    semidirect(&action).expect("sd2")
}

/// `sl2` acting on `cur2` degree-wise by the adjoint bracket, and the
/// resulting nine-dimensional product. Unlike `sd1` and `dp`, the kernel
/// side here has nonzero second homology.
pub fn sd3() -> SemidirectProduct {
    let base = sl2();
    let m = cur2();
    let mut lambda = vec![vec![Vec::new(); 6]; 3];
    let mut rho = vec![vec![Vec::new(); 3]; 6];
    for i in 0..3 {
        for a in 0..2 {
            for j in 0..3 {
                let mut lv = vec![q(0); 6];
                let mut rv = vec![q(0); 6];
                for k in 0..3 {
                    lv[a * 3 + k] = base.basis_bracket(i, j)[k].clone();
                    rv[a * 3 + k] = base.basis_bracket(j, i)[k].clone();
                }
                lambda[i][a * 3 + j] = lv;
                rho[a * 3 + j][i] = rv;
            }
        }
    }
    let action = HomAction::new(base, m, lambda, rho).expect("sd3 action");
    semidirect(&action).expect("sd3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_morphism;
    use crate::subspace::Subspace;

    #[test]
    fn every_corpus_algebra_validates() {
        for (name, alg) in [
            ("ab2", ab2()),
            ("nl2", nl2()),
            ("sl2", sl2()),
            ("tw2", tw2()),
            ("heis", heis()),
            ("cur2", cur2()),
            ("cur3", cur3()),
            ("sd1", sd1().alg),
            ("dp", dp().alg),
            ("sd2", sd2().alg),
            ("sd3", sd3().alg),
        ] {
            let rep = alg.report();
            assert!(rep.valid(), "{name}: {rep:?}");
        }
    }

    #[test]
    fn twisted_table_matches_hand_expansion() {
        let t = tw2();
        // [h,e] = [h, 2e] = 4e; [h,f] = [h, f/2] = -f; [e,f] = [2e, f/2] = h.
        assert_eq!(t.basis_bracket(1, 0), &[q(4), q(0), q(0)]);
        assert_eq!(t.basis_bracket(1, 2), &[q(0), q(0), q(-1)]);
        assert_eq!(t.basis_bracket(0, 2), &[q(0), q(1), q(0)]);
        assert_eq!(t.basis_bracket(2, 0), &[q(0), q(-1), q(0)]);
        assert!(!t.alpha().is_identity());
        assert!(t.is_alpha_perfect());
    }

    #[test]
    fn characteristic_subspaces_match_hand_computations() {
        let h = heis();
        let z = Subspace::from_generators(3, Q, &[vec![q(0), q(0), q(1)]]);
        assert_eq!(h.center(), z);
        assert!(
            h.ann_ideal().is_zero(),
            "antisymmetric bracket has no squares"
        );

        let n = nl2();
        let b = Subspace::from_generators(2, Q, &[vec![q(0), q(1)]]);
        assert_eq!(n.ann_ideal(), b);
        let (lie, _) = n.lie_quotient().unwrap();
        assert_eq!(lie.dim(), 1);
        assert!(lie.basis_bracket(0, 0).iter().all(|s| s.is_zero()));

        assert!(sl2().center().is_zero());
        assert!(ab2().ann_ideal().is_zero());
    }

    #[test]
    fn perfectness_flags() {
        assert!(sl2().is_perfect() && sl2().is_alpha_perfect());
        assert!(tw2().is_perfect() && tw2().is_alpha_perfect());
        assert!(cur2().is_perfect() && cur3().is_perfect());
        assert!(!ab2().is_perfect() && !ab2().is_alpha_perfect());
        assert!(!nl2().is_perfect());
        assert!(!heis().is_perfect());
        for sd in [sd1(), dp(), sd2(), sd3()] {
            assert!(sd.alg.is_perfect());
            assert!(sd.alg.is_alpha_perfect());
        }
    }

    #[test]
    fn named_maps_are_automorphisms_or_derivations() {
        let s = sl2();
        for m in [
            sl2_phi(),
            sl2_omega(),
            sl2_torus(2),
            sl2_torus(-3),
            sl2_unipotent(),
        ] {
            let rep = check_morphism(&m, &s, &s);
            assert!(rep.valid(), "map {m:?} fails: {rep:?}");
            assert_eq!(m.rank(), 3);
        }
        let t = tw2();
        let rep = check_morphism(&sl2_torus(2), &t, &t);
        assert!(rep.valid(), "torus map should respect the twisted bracket");

        let c = cur3();
        for m in [cur3_scale(2), cur3_scale(-1), cur3_torus()] {
            let rep = check_morphism(&m, &c, &c);
            assert!(rep.valid(), "map {m:?} fails: {rep:?}");
            assert_eq!(m.rank(), 9);
        }
    }

    #[test]
    fn semidirect_bracket_spot_checks() {
        // In sd1 (kernel copy first): [(0,h), (e,0)] = ([h,e], 0) = (2e, 0).
        let sd = sd1();
        let sigma_h = sd.sigma.matrix.col_vec(1);
        let i_e = sd.i.matrix.col_vec(0);
        let br = sd.alg.bracket(&sigma_h, &i_e);
        assert_eq!(br, vec![q(2), q(0), q(0), q(0), q(0), q(0)]);

        // In dp the two factors commute.
        let d = dp();
        for a in 0..3 {
            for b in 0..3 {
                let v = d
                    .alg
                    .bracket(&d.i.matrix.col_vec(a), &d.sigma.matrix.col_vec(b));
                assert!(v.iter().all(|s| s.is_zero()));
            }
        }
    }

    #[test]
    fn multiplicativization_examples() {
        // Twist a |-> a + b, b |-> b has no defect on nl2.
        let n = nl2();
        let shear = HomAlgebra::new(
            Q,
            n.structure_constants().clone(),
            Matrix::from_rows(Q, vec![vec![q(1), q(0)], vec![q(1), q(1)]]).unwrap(),
        )
        .unwrap();
        assert!(shear.check_hom_leibniz().is_none());
        assert!(shear.check_multiplicative().is_none());
        let (m, _) = shear.multiplicativization().unwrap();
        assert_eq!(m.dim(), 2);

        // Twist a |-> 2a, b |-> b has defect -3b; the quotient collapses to
        // a line with zero bracket.
        let stretch =
            HomAlgebra::new(Q, n.structure_constants().clone(), diag(&[q(2), q(1)])).unwrap();
        assert!(stretch.check_hom_leibniz().is_none());
        assert_eq!(stretch.check_multiplicative(), Some((0, 0)));
        let (m, proj) = stretch.multiplicativization().unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.basis_bracket(0, 0)[0].is_zero());
        assert_eq!(proj.rank(), 1);
        let back = m.report();
        assert!(back.valid());
    }

    #[test]
    fn invalid_twist_detected_with_witness() {
        // Swap e <-> f (fix h) but keep the bracket, then perturb one
        // structure constant: both checks must fail with witnesses.
        let s = sl2();
        let mut c = s.structure_constants().clone();
        c[0][0][0] = q(1);
        let swap = Matrix::from_rows(
            Q,
            vec![
                vec![q(0), q(0), q(1)],
                vec![q(0), q(1), q(0)],
                vec![q(1), q(0), q(0)],
            ],
        )
        .unwrap();
        let broken = HomAlgebra::new(Q, c, swap).unwrap();
        assert!(broken.check_hom_leibniz().is_some());
        let rep = broken.report();
        assert!(!rep.valid());
    }
}
