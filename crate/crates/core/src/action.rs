//! Actions of one algebra on another, semidirect products, split extensions,
//! and derivations.
//!
//! An action consists of two bilinear maps: `lambda` (actor on the left,
//! `l . m`) and `rho` (actor on the right, `m . l`), subject to eight
//! identities labelled a) through h). Axioms a)-f) relate the action maps to
//! both brackets; g) and h) say the twists intertwine the action maps. As
//! with algebras, validity is diagnosed by a report rather than enforced at
//! construction.

use crate::algebra::{HomAlgebra, HomMorphism};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::par::par_find_first;
use crate::scalar::Scalar;

/// Bilinear action data of `actor` on `target`.
#[derive(Clone, Debug)]
pub struct HomAction {
    actor: HomAlgebra,
    target: HomAlgebra,
    /// lambda[i][j] = actor basis i acting on target basis j, a target vector.
    lambda: Vec<Vec<Vec<Scalar>>>,
    /// rho[i][j] = target basis i acted on by actor basis j, a target vector.
    rho: Vec<Vec<Vec<Scalar>>>,
}

impl HomAction {
    pub fn new(
        actor: HomAlgebra,
        target: HomAlgebra,
        lambda: Vec<Vec<Vec<Scalar>>>,
        rho: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<HomAction> {
        if actor.field() != target.field() {
            return Err(Error::FieldMismatch("action"));
        }
        let (l, m) = (actor.dim(), target.dim());
        let shape_ok = lambda.len() == l
            && lambda
                .iter()
                .all(|r| r.len() == m && r.iter().all(|v| v.len() == m))
            && rho.len() == m
            && rho
                .iter()
                .all(|r| r.len() == l && r.iter().all(|v| v.len() == m));
        if !shape_ok {
            return Err(Error::DimMismatch {
                context: "action tensors",
                expected: l * m,
                got: 0,
            });
        }
        for v in lambda
            .iter()
            .flatten()
            .flatten()
            .chain(rho.iter().flatten().flatten())
        {
            if v.field() != actor.field() {
                return Err(Error::FieldMismatch("action tensors"));
            }
        }
        Ok(HomAction {
            actor,
            target,
            lambda,
            rho,
        })
    }

    /// Zero action; valid for any pair of algebras.
    pub fn trivial(actor: HomAlgebra, target: HomAlgebra) -> Result<HomAction> {
        let zero = vec![target.field().zero(); target.dim()];
        let lambda = vec![vec![zero.clone(); target.dim()]; actor.dim()];
        let rho = vec![vec![zero; actor.dim()]; target.dim()];
        HomAction::new(actor, target, lambda, rho)
    }

    /// An algebra acting on itself by its own bracket.
    pub fn self_action(alg: &HomAlgebra) -> HomAction {
        let n = alg.dim();
        let lambda: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| (0..n).map(|j| alg.basis_bracket(i, j).to_vec()).collect())
            .collect();
        HomAction {
            actor: alg.clone(),
            target: alg.clone(),
            lambda: lambda.clone(),
            rho: lambda,
        }
    }

    /// Precomposes the actor side with a morphism f: X -> actor, giving an
    /// action of X on the same target.
    pub fn pullback(&self, f: &HomMorphism) -> Result<HomAction> {
        if f.dst.dim() != self.actor.dim() || f.dst != self.actor {
            return Err(Error::Precondition(
                "pullback: morphism target is not the actor".into(),
            ));
        }
        let x = f.src.dim();
        let m = self.target.dim();
        let f_cols: Vec<Vec<Scalar>> = (0..x).map(|i| f.matrix.col_vec(i)).collect();
        let lambda = (0..x)
            .map(|i| {
                (0..m)
                    .map(|j| self.act_left(&f_cols[i], &self.target.basis_vec(j)))
                    .collect()
            })
            .collect();
        let rho = (0..m)
            .map(|j| {
                (0..x)
                    .map(|i| self.act_right(&self.target.basis_vec(j), &f_cols[i]))
                    .collect()
            })
            .collect();
        HomAction::new(f.src.clone(), self.target.clone(), lambda, rho)
    }

    pub fn actor(&self) -> &HomAlgebra {
        &self.actor
    }

    pub fn target(&self) -> &HomAlgebra {
        &self.target
    }

    pub fn lambda(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.lambda
    }

    pub fn rho(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.rho
    }

    /// l . m for an actor vector and a target vector.
    pub fn act_left(&self, l: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        bilinear(&self.lambda, l, m, self.target.dim(), self.target.field())
    }

    /// m . l for a target vector and an actor vector.
    pub fn act_right(&self, m: &[Scalar], l: &[Scalar]) -> Vec<Scalar> {
        bilinear(&self.rho, m, l, self.target.dim(), self.target.field())
    }

    /// Checks the eight action identities on basis tuples, recording the
    /// first witness per failing axiom.
    pub fn check_axioms(&self) -> ActionReport {
        let l = self.actor.dim();
        let m = self.target.dim();
        let al = &self.actor;
        let tg = &self.target;
        let alc: Vec<Vec<Scalar>> = (0..l).map(|i| al.alpha().col_vec(i)).collect();
        let amc: Vec<Vec<Scalar>> = (0..m).map(|i| tg.alpha().col_vec(i)).collect();
        let lb: Vec<Vec<Scalar>> = (0..l).map(|i| al.basis_vec(i)).collect();
        let mb: Vec<Vec<Scalar>> = (0..m).map(|i| tg.basis_vec(i)).collect();

        let mut failures: Vec<(char, Vec<usize>)> = Vec::new();

        // a) alpha_M(m) . [x,y] = (m.x) . alpha_L(y) - (m.y) . alpha_L(x)
        if let Some(w) = par_find_first(m * l * l, |t| {
            let (i, j, k) = (t / (l * l), (t / l) % l, t % l);
            let lhs = self.act_right(&amc[i], al.basis_bracket(j, k));
            let r1 = self.act_right(&self.act_right(&mb[i], &lb[j]), &alc[k]);
            let r2 = self.act_right(&self.act_right(&mb[i], &lb[k]), &alc[j]);
            if eq_diff(&lhs, &r1, &r2) {
                None
            } else {
                Some(vec![i, j, k])
            }
        }) {
            failures.push(('a', w));
        }
        // b) alpha_L(x) . (m.y) = (x.m) . alpha_L(y) - [x,y] . alpha_M(m)
        if let Some(w) = par_find_first(l * m * l, |t| {
            let (i, j, k) = (t / (m * l), (t / l) % m, t % l);
            let lhs = self.act_left(&alc[i], &self.act_right(&mb[j], &lb[k]));
            let r1 = self.act_right(&self.act_left(&lb[i], &mb[j]), &alc[k]);
            let r2 = self.act_left(al.basis_bracket(i, k), &amc[j]);
            if eq_diff(&lhs, &r1, &r2) {
                None
            } else {
                Some(vec![i, j, k])
            }
        }) {
            failures.push(('b', w));
        }
        // c) alpha_L(x) . (y.m) = [x,y] . alpha_M(m) - (x.m) . alpha_L(y)
        if let Some(w) = par_find_first(l * l * m, |t| {
            let (i, j, k) = (t / (l * m), (t / m) % l, t % m);
            let lhs = self.act_left(&alc[i], &self.act_left(&lb[j], &mb[k]));
            let r1 = self.act_left(al.basis_bracket(i, j), &amc[k]);
            let r2 = self.act_right(&self.act_left(&lb[i], &mb[k]), &alc[j]);
            if eq_diff(&lhs, &r1, &r2) {
                None
            } else {
                Some(vec![i, j, k])
            }
        }) {
            failures.push(('c', w));
        }
        // d) alpha_L(x) . [m,m'] = [x.m, alpha_M(m')] - [x.m', alpha_M(m)]
        if let Some(w) = par_find_first(l * m * m, |t| {
            let (i, j, k) = (t / (m * m), (t / m) % m, t % m);
            let lhs = self.act_left(&alc[i], tg.basis_bracket(j, k));
            let r1 = tg.bracket(&self.act_left(&lb[i], &mb[j]), &amc[k]);
            let r2 = tg.bracket(&self.act_left(&lb[i], &mb[k]), &amc[j]);
            if eq_diff(&lhs, &r1, &r2) {
                None
            } else {
                Some(vec![i, j, k])
            }
        }) {
            failures.push(('d', w));
        }
        // e) [alpha_M(m), m'.x] = [m,m'] . alpha_L(x) - [m.x, alpha_M(m')]
        if let Some(w) = par_find_first(m * m * l, |t| {
            let (i, j, k) = (t / (m * l), (t / l) % m, t % l);
            let lhs = tg.bracket(&amc[i], &self.act_right(&mb[j], &lb[k]));
            let r1 = self.act_right(tg.basis_bracket(i, j), &alc[k]);
            let r2 = tg.bracket(&self.act_right(&mb[i], &lb[k]), &amc[j]);
            if eq_diff(&lhs, &r1, &r2) {
                None
            } else {
                Some(vec![i, j, k])
            }
        }) {
            failures.push(('e', w));
        }
        // f) [alpha_M(m), x.m'] = [m.x, alpha_M(m')] - [m,m'] . alpha_L(x)
        if let Some(w) = par_find_first(m * l * m, |t| {
            let (i, j, k) = (t / (l * m), (t / m) % l, t % m);
            let lhs = tg.bracket(&amc[i], &self.act_left(&lb[j], &mb[k]));
            let r1 = tg.bracket(&self.act_right(&mb[i], &lb[j]), &amc[k]);
            let r2 = self.act_right(tg.basis_bracket(i, k), &alc[j]);
            if eq_diff(&lhs, &r1, &r2) {
                None
            } else {
                Some(vec![i, j, k])
            }
        }) {
            failures.push(('f', w));
        }
        // g) alpha_M(x.m) = alpha_L(x) . alpha_M(m)
        if let Some(w) = par_find_first(l * m, |t| {
            let (i, j) = (t / m, t % m);
            let lhs = tg.apply_alpha(&self.lambda[i][j]);
            let rhs = self.act_left(&alc[i], &amc[j]);
            if lhs == rhs {
                None
            } else {
                Some(vec![i, j])
            }
        }) {
            failures.push(('g', w));
        }
        // h) alpha_M(m.x) = alpha_M(m) . alpha_L(x)
        if let Some(w) = par_find_first(m * l, |t| {
            let (i, j) = (t / l, t % l);
            let lhs = tg.apply_alpha(&self.rho[i][j]);
            let rhs = self.act_right(&amc[i], &alc[j]);
            if lhs == rhs {
                None
            } else {
                Some(vec![i, j])
            }
        }) {
            failures.push(('h', w));
        }

        let letters: Vec<char> = failures.iter().map(|(c, _)| *c).collect();
        let note = if letters == ['b'] || letters == ['c'] {
            Some(
                "only one of the two mixed-middle identities fails; these two differ only by \
                 argument order and sign, so check the source's sign conventions before trusting \
                 the verdict"
                    .to_string(),
            )
        } else {
            None
        };
        ActionReport { failures, note }
    }

    /// True iff the target bracket is zero (the action is then a
    /// representation).
    pub fn target_is_abelian(&self) -> bool {
        let m = self.target.dim();
        (0..m).all(|i| (0..m).all(|j| self.target.basis_bracket(i, j).iter().all(|s| s.is_zero())))
    }
}

fn bilinear(
    tensor: &[Vec<Vec<Scalar>>],
    a: &[Scalar],
    b: &[Scalar],
    out_dim: usize,
    field: crate::scalar::Field,
) -> Vec<Scalar> {
    assert!(a.len() == tensor.len(), "bilinear: left length");
    let mut out = vec![field.zero(); out_dim];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        assert!(b.len() == tensor[i].len(), "bilinear: right length");
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let coef = ai * bj;
            for k in 0..out_dim {
                let t = &tensor[i][j][k];
                if !t.is_zero() {
                    out[k] = &out[k] + &(&coef * t);
                }
            }
        }
    }
    out
}

/// lhs == r1 - r2, componentwise.
fn eq_diff(lhs: &[Scalar], r1: &[Scalar], r2: &[Scalar]) -> bool {
    (0..lhs.len()).all(|s| lhs[s] == &r1[s] - &r2[s])
}

/// Axiom-check outcome: first witness tuple per failing axiom letter.
#[derive(Clone, Debug)]
pub struct ActionReport {
    pub failures: Vec<(char, Vec<usize>)>,
    /// Set when exactly one of the order-symmetric pair b)/c) fails.
    pub note: Option<String>,
}

impl ActionReport {
    pub fn valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The bracket of a subalgebra against a two-sided ideal, bundled as an
/// action of the one on the other.
pub fn action_from_embedding(
    l: &HomAlgebra,
    k: &crate::subspace::Subspace,
    h: &crate::subspace::Subspace,
) -> Result<(HomAction, Matrix, Matrix)> {
    if !l.is_subalgebra(k) {
        return Err(Error::Precondition(
            "action_from_embedding: K is not a subalgebra".into(),
        ));
    }
    if !l.is_two_sided_ideal(h) {
        return Err(Error::Precondition(
            "action_from_embedding: H is not a two-sided ideal".into(),
        ));
    }
    let (actor, k_incl) = l.restrict_to(k)?;
    let (target, h_incl) = l.restrict_to(h)?;
    let kd = actor.dim();
    let hd = target.dim();
    let mut lambda = vec![vec![Vec::new(); hd]; kd];
    let mut rho = vec![vec![Vec::new(); kd]; hd];
    for a in 0..kd {
        for b in 0..hd {
            let lm = l.bracket(&k.basis_row(a), &h.basis_row(b));
            let ml = l.bracket(&h.basis_row(b), &k.basis_row(a));
            lambda[a][b] = h.coords(&lm).ok_or_else(|| {
                Error::Invalid("action_from_embedding: bracket leaves the ideal".into())
            })?;
            rho[b][a] = h.coords(&ml).ok_or_else(|| {
                Error::Invalid("action_from_embedding: bracket leaves the ideal".into())
            })?;
        }
    }
    let action = HomAction::new(actor, target, lambda, rho)?;
    Ok((action, k_incl, h_incl))
}

/// A semidirect product together with its canonical maps. Basis convention:
/// target coordinates first, then actor coordinates.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub action: HomAction,
    pub alg: HomAlgebra,
    /// target -> alg, m |-> (m, 0)
    pub i: HomMorphism,
    /// alg -> actor, (m, l) |-> l
    pub pi: HomMorphism,
    /// actor -> alg, l |-> (0, l)
    pub sigma: HomMorphism,
}

/// Builds the semidirect product of a valid action: the bracket on the direct
/// sum is
///   [(m1,l1),(m2,l2)] = ([m1,m2] + alpha_L(l1).m2 + m1.alpha_L(l2), [l1,l2])
/// and the twist acts componentwise. The construction is verified to produce
/// a valid algebra and a split short exact sequence.
pub fn semidirect(action: &HomAction) -> Result<SemidirectProduct> {
    let report = action.check_axioms();
    if let Some((axiom, witness)) = report.failures.first() {
        return Err(Error::Invalid(format!(
            "semidirect: action axiom {axiom}) fails at basis tuple {witness:?}"
        )));
    }
    let tg = action.target();
    let al = action.actor();
    let field = tg.field();
    let (m, l) = (tg.dim(), al.dim());
    let d = m + l;
    let alc: Vec<Vec<Scalar>> = (0..l).map(|i| al.alpha().col_vec(i)).collect();

    let mut c = vec![vec![vec![field.zero(); d]; d]; d];
    for i in 0..m {
        for j in 0..m {
            let br = tg.basis_bracket(i, j);
            for k in 0..m {
                c[i][j][k] = br[k].clone();
            }
        }
        for j in 0..l {
            let v = action.act_right(&tg.basis_vec(i), &alc[j]);
            for k in 0..m {
                c[i][m + j][k] = v[k].clone();
            }
        }
    }
    for i in 0..l {
        for j in 0..m {
            let v = action.act_left(&alc[i], &tg.basis_vec(j));
            for k in 0..m {
                c[m + i][j][k] = v[k].clone();
            }
        }
        for j in 0..l {
            let br = al.basis_bracket(i, j);
            for k in 0..l {
                c[m + i][m + j][m + k] = br[k].clone();
            }
        }
    }
    let alpha = Matrix::from_fn(d, d, field, |r, s| {
        if r < m && s < m {
            tg.alpha().get(r, s).clone()
        } else if r >= m && s >= m {
            al.alpha().get(r - m, s - m).clone()
        } else {
            field.zero()
        }
    });
    let alg = HomAlgebra::new(field, c, alpha)?;
    if let Some(w) = alg.check_hom_leibniz() {
        return Err(Error::ConsistencyViolation(format!(
            "semidirect product of a valid action fails the twisted Leibniz identity at {w:?}"
        )));
    }
    if let Some(w) = alg.check_multiplicative() {
        return Err(Error::ConsistencyViolation(format!(
            "semidirect product of a valid action has an incompatible twist at {w:?}"
        )));
    }
    let i_mat = Matrix::from_fn(
        d,
        m,
        field,
        |r, s| {
            if r == s {
                field.one()
            } else {
                field.zero()
            }
        },
    );
    let pi_mat = Matrix::from_fn(l, d, field, |r, s| {
        if s == m + r {
            field.one()
        } else {
            field.zero()
        }
    });
    let sigma_mat = Matrix::from_fn(d, l, field, |r, s| {
        if r == m + s {
            field.one()
        } else {
            field.zero()
        }
    });
    let i = HomMorphism::new(tg.clone(), alg.clone(), i_mat)?;
    let pi = HomMorphism::new(alg.clone(), al.clone(), pi_mat)?;
    let sigma = HomMorphism::new(al.clone(), alg.clone(), sigma_mat)?;
    Ok(SemidirectProduct {
        action: action.clone(),
        alg,
        i,
        pi,
        sigma,
    })
}

impl SemidirectProduct {
    /// The canonical split short exact sequence of the product.
    pub fn split_extension(&self) -> Result<SplitExtension> {
        SplitExtension::new(self.i.clone(), self.pi.clone(), self.sigma.clone())
    }
}

/// A short exact sequence M -> B -> C with a splitting s of the projection.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    pub i: HomMorphism,
    pub pi: HomMorphism,
    pub s: HomMorphism,
}

impl SplitExtension {
    pub fn new(i: HomMorphism, pi: HomMorphism, s: HomMorphism) -> Result<SplitExtension> {
        if i.dst != pi.src || s.dst != pi.src || s.src != pi.dst {
            return Err(Error::Precondition(
                "split extension: endpoints do not line up".into(),
            ));
        }
        if !i.is_injective() {
            return Err(Error::Invalid("split extension: i is not injective".into()));
        }
        if !pi.is_surjective() {
            return Err(Error::Invalid(
                "split extension: pi is not surjective".into(),
            ));
        }
        if i.matrix.image() != pi.matrix.kernel() {
            return Err(Error::Invalid(
                "split extension: image(i) != kernel(pi)".into(),
            ));
        }
        let comp = pi.matrix.matmul(&s.matrix);
        if !comp.is_identity() {
            return Err(Error::Invalid("split extension: pi . s != Id".into()));
        }
        // twist compatibility of i, pi, s is already part of their morphism
        // validation
        Ok(SplitExtension { i, pi, s })
    }

    pub fn kernel_alg(&self) -> &HomAlgebra {
        &self.i.src
    }

    pub fn middle(&self) -> &HomAlgebra {
        &self.pi.src
    }

    pub fn quotient(&self) -> &HomAlgebra {
        &self.pi.dst
    }
}

/// Recovers the action hidden in a split extension whose quotient twist is
/// the identity: c . a = i^{-1}[s(c), i(a)] and a . c = i^{-1}[i(a), s(c)].
pub fn induced_action_from_split(se: &SplitExtension) -> Result<HomAction> {
    let c_alg = se.quotient();
    if !c_alg.alpha().is_identity() {
        return Err(Error::Precondition(
            "induced_action_from_split: quotient twist must be the identity".into(),
        ));
    }
    let m_alg = se.kernel_alg();
    let b = se.middle();
    let (cd, md) = (c_alg.dim(), m_alg.dim());
    let s_cols: Vec<Vec<Scalar>> = (0..cd).map(|j| se.s.matrix.col_vec(j)).collect();
    let i_cols: Vec<Vec<Scalar>> = (0..md).map(|a| se.i.matrix.col_vec(a)).collect();
    let pull = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        se.i.matrix.solve(v).map_err(|_| {
            Error::Invalid(
                "induced_action_from_split: bracket with the section leaves the kernel copy".into(),
            )
        })
    };
    let mut lambda = vec![vec![Vec::new(); md]; cd];
    let mut rho = vec![vec![Vec::new(); cd]; md];
    for j in 0..cd {
        for a in 0..md {
            lambda[j][a] = pull(&b.bracket(&s_cols[j], &i_cols[a]))?;
            rho[a][j] = pull(&b.bracket(&i_cols[a], &s_cols[j]))?;
        }
    }
    let action = HomAction::new(c_alg.clone(), m_alg.clone(), lambda, rho)?;
    let rep = action.check_axioms();
    if let Some((axiom, witness)) = rep.failures.first() {
        return Err(Error::ConsistencyViolation(format!(
            "action induced from a valid split extension fails axiom {axiom}) at {witness:?}"
        )));
    }
    Ok(action)
}

/// Rebuilds the semidirect product from the induced action and verifies that
/// (a, c) |-> i(a) + s(c) is an isomorphism of extensions. Returns the
/// comparison morphism; failure of any step is a violated theorem, reported
/// as an error.
pub fn check_split_equivalence(se: &SplitExtension) -> Result<HomMorphism> {
    let action = induced_action_from_split(se)?;
    let sd = semidirect(&action)?;
    let phi_mat = se.i.matrix.hstack(&se.s.matrix);
    let phi = HomMorphism::new(sd.alg.clone(), se.middle().clone(), phi_mat).map_err(|e| {
        Error::ConsistencyViolation(format!(
            "split-equivalence comparison map is not a morphism: {e}"
        ))
    })?;
    if !phi.is_bijective() {
        return Err(Error::ConsistencyViolation(
            "split-equivalence comparison map is not bijective".into(),
        ));
    }
    if phi.matrix.matmul(&sd.i.matrix) != se.i.matrix {
        return Err(Error::ConsistencyViolation(
            "split-equivalence ladder fails on the kernel side".into(),
        ));
    }
    if se.pi.matrix.matmul(&phi.matrix) != sd.pi.matrix {
        return Err(Error::ConsistencyViolation(
            "split-equivalence ladder fails on the quotient side".into(),
        ));
    }
    Ok(phi)
}

/// A linear map d from the actor (or a domain mapped into the actor) to the
/// target of an action, to be checked against the derivation law.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub action: HomAction,
    /// target.dim() x domain rows/cols map.
    pub d: Matrix,
    /// For plain derivations None (domain = actor); otherwise the morphism f
    /// whose images feed the action side of the law.
    pub along: Option<HomMorphism>,
}

/// Outcome of the two derivation conditions.
#[derive(Clone, Debug)]
pub struct DerivationReport {
    /// First basis pair violating
    /// d[x1,x2] = alpha_L(f x1) . d(x2) + d(x1) . alpha_L(f x2).
    pub law_witness: Option<(usize, usize)>,
    /// Whether d intertwines the twists: d . alpha_src = alpha_M . d.
    pub twist_ok: bool,
}

impl DerivationReport {
    pub fn valid(&self) -> bool {
        self.law_witness.is_none() && self.twist_ok
    }
}

impl Derivation {
    /// Domain algebra of d (the actor, or the source of `along`).
    pub fn domain(&self) -> &HomAlgebra {
        match &self.along {
            Some(f) => &f.src,
            None => self.action.actor(),
        }
    }
}

pub fn check_derivation(der: &Derivation) -> DerivationReport {
    let dom = der.domain().clone();
    let act = &der.action;
    let al = act.actor();
    let n = dom.dim();
    assert!(
        der.d.rows() == act.target().dim() && der.d.cols() == n,
        "check_derivation: d shape"
    );
    // f-image of basis vectors, as actor vectors (identity if plain).
    let f_cols: Vec<Vec<Scalar>> = match &der.along {
        Some(f) => (0..n).map(|i| f.matrix.col_vec(i)).collect(),
        None => (0..n).map(|i| al.basis_vec(i)).collect(),
    };
    let af_cols: Vec<Vec<Scalar>> = f_cols.iter().map(|v| al.apply_alpha(v)).collect();
    let d_cols: Vec<Vec<Scalar>> = (0..n).map(|i| der.d.col_vec(i)).collect();
    let law_witness = par_find_first(n * n, |t| {
        let (i, j) = (t / n, t % n);
        let lhs = der.d.apply(dom.basis_bracket(i, j));
        let r1 = act.act_left(&af_cols[i], &d_cols[j]);
        let r2 = act.act_right(&d_cols[i], &af_cols[j]);
        let ok = (0..lhs.len()).all(|s| lhs[s] == &r1[s] + &r2[s]);
        if ok {
            None
        } else {
            Some((i, j))
        }
    });
    let twist_ok = der.d.matmul(dom.alpha()) == act.target().alpha().matmul(&der.d);
    DerivationReport {
        law_witness,
        twist_ok,
    }
}

/// Packs a morphism f: X -> L and an f-derivation d: X -> M into the single
/// morphism x |-> (d(x), f(x)) into the semidirect product. The target must
/// be a representation (abelian), which is what makes the packed map respect
/// brackets.
pub fn derivation_to_hom(
    sd: &SemidirectProduct,
    f: &HomMorphism,
    d: &Matrix,
) -> Result<HomMorphism> {
    if f.dst != *sd.action.actor() {
        return Err(Error::Precondition(
            "derivation_to_hom: f must land in the actor".into(),
        ));
    }
    if !sd.action.target_is_abelian() {
        return Err(Error::Precondition(
            "derivation_to_hom: the action target must be abelian (a representation)".into(),
        ));
    }
    let der = Derivation {
        action: sd.action.clone(),
        d: d.clone(),
        along: Some(f.clone()),
    };
    let rep = check_derivation(&der);
    if let Some((i, j)) = rep.law_witness {
        return Err(Error::Invalid(format!(
            "derivation_to_hom: derivation law fails at basis pair ({i}, {j})"
        )));
    }
    if !rep.twist_ok {
        return Err(Error::Invalid(
            "derivation_to_hom: d does not intertwine the twists".into(),
        ));
    }
    let h_mat = d.vstack(&f.matrix);
    HomMorphism::new(f.src.clone(), sd.alg.clone(), h_mat)
}

/// Splits a morphism h: X -> M x| L into its quotient part f = pi . h and
/// derivation part d = theta . h, where theta(m, l) = m.
pub fn hom_to_derivation(
    sd: &SemidirectProduct,
    h: &HomMorphism,
) -> Result<(HomMorphism, Derivation)> {
    if h.dst != sd.alg {
        return Err(Error::Precondition(
            "hom_to_derivation: h must land in the product".into(),
        ));
    }
    let f = sd.pi.compose(h)?;
    let m = sd.action.target().dim();
    let d = Matrix::from_fn(m, h.src.dim(), h.matrix.field(), |r, c| {
        h.matrix.get(r, c).clone()
    });
    let der = Derivation {
        action: sd.action.clone(),
        d,
        along: Some(f.clone()),
    };
    Ok((f, der))
}

/// The projection theta(m, l) = m of a semidirect product onto its target,
/// viewed against the action pulled back along pi; always a derivation when
/// the target is a representation.
pub fn theta_projection(sd: &SemidirectProduct) -> Result<Derivation> {
    let m = sd.action.target().dim();
    let d = Matrix::from_fn(m, sd.alg.dim(), sd.alg.field(), |r, c| {
        if r == c {
            sd.alg.field().one()
        } else {
            sd.alg.field().zero()
        }
    });
    let action = sd.action.pullback(&sd.pi)?;
    Ok(Derivation {
        action,
        d,
        along: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::matrix::Matrix;
    use crate::scalar::Field;
    use crate::subspace::Subspace;

    const Q: Field = Field::Rationals;

    fn q(n: i64) -> Scalar {
        Q.from_i64(n)
    }

    /// sl2 acting on its own underlying space with the bracket, but with the
    /// target bracket erased: a representation.
    fn adjoint_rep() -> HomAction {
        let s = corpus::sl2();
        let ab = HomAlgebra::abelian(3, Q, Matrix::identity(3, Q)).unwrap();
        let tensors: Vec<Vec<Vec<Scalar>>> = (0..3)
            .map(|i| (0..3).map(|j| s.basis_bracket(i, j).to_vec()).collect())
            .collect();
        HomAction::new(s, ab, tensors.clone(), tensors).unwrap()
    }

    #[test]
    fn self_action_and_trivial_action_validate() {
        assert!(HomAction::self_action(&corpus::sl2())
            .check_axioms()
            .valid());
        assert!(HomAction::self_action(&corpus::tw2())
            .check_axioms()
            .valid());
        assert!(HomAction::self_action(&corpus::nl2())
            .check_axioms()
            .valid());
        let t = HomAction::trivial(corpus::sl2(), corpus::heis()).unwrap();
        assert!(t.check_axioms().valid());
        assert!(adjoint_rep().check_axioms().valid());
    }

    #[test]
    fn broken_action_fails_with_witness() {
        // Zero action except for one lambda entry, with a zero-twist actor
        // and a nonabelian target: mixing the nonzero action value into the
        // target bracket breaks the twist-compatibility identities.
        let actor = corpus::ab2();
        let target = corpus::nl2();
        let mut lambda = vec![vec![vec![q(0); 2]; 2]; 2];
        lambda[0][0][0] = q(1);
        let rho = vec![vec![vec![q(0); 2]; 2]; 2];
        let action = HomAction::new(actor, target, lambda, rho).unwrap();
        let rep = action.check_axioms();
        assert!(!rep.valid());
        let letters: Vec<char> = rep.failures.iter().map(|(c, _)| *c).collect();
        assert_eq!(letters, vec!['f', 'g']);
        assert_eq!(rep.failures[0].1, vec![0, 0, 0]);
    }

    #[test]
    fn exactly_one_mixed_identity_failing_sets_the_note() {
        // One-dimensional representation of nl2 via a functional vanishing
        // on the derived line; taking rho = +lambda (instead of the valid
        // -lambda) breaks identity c) alone.
        let actor = corpus::nl2();
        let target = HomAlgebra::abelian(1, Q, Matrix::identity(1, Q)).unwrap();
        let ell = |i: usize| if i == 0 { q(1) } else { q(0) };
        let lambda: Vec<Vec<Vec<Scalar>>> = (0..2)
            .map(|i| (0..1).map(|_| vec![ell(i)]).collect())
            .collect();
        let rho: Vec<Vec<Vec<Scalar>>> = (0..1)
            .map(|_| (0..2).map(|i| vec![ell(i)]).collect())
            .collect();
        let bad = HomAction::new(actor.clone(), target.clone(), lambda.clone(), rho).unwrap();
        let rep = bad.check_axioms();
        let letters: Vec<char> = rep.failures.iter().map(|(c, _)| *c).collect();
        assert_eq!(letters, vec!['c']);
        assert!(rep.note.is_some());

        // The sign-corrected version validates.
        let rho_ok: Vec<Vec<Vec<Scalar>>> = (0..1)
            .map(|_| (0..2).map(|i| vec![&q(0) - &ell(i)]).collect())
            .collect();
        let good = HomAction::new(actor, target, lambda, rho_ok).unwrap();
        assert!(good.check_axioms().valid());
    }

    #[test]
    fn embedding_actions() {
        let s = corpus::sl2();
        let full = Subspace::full(3, Q);
        let (a, _, _) = action_from_embedding(&s, &full, &full).unwrap();
        assert!(a.check_axioms().valid());
        assert_eq!(a.lambda(), HomAction::self_action(&s).lambda());

        let h = corpus::heis();
        let kx = Subspace::from_generators(3, Q, &[vec![q(1), q(0), q(0)]]);
        let hz = Subspace::from_generators(3, Q, &[vec![q(0), q(0), q(1)]]);
        let (a, _, _) = action_from_embedding(&h, &kx, &hz).unwrap();
        assert!(a.check_axioms().valid());
        assert!(a.lambda()[0][0][0].is_zero());
        assert!(a.rho()[0][0][0].is_zero());

        let zero = Subspace::zero(3, Q);
        let (a, _, _) = action_from_embedding(&s, &full, &zero).unwrap();
        assert!(a.check_axioms().valid());
        assert_eq!(a.target().dim(), 0);
    }

    #[test]
    fn split_extension_contract_and_recovered_action() {
        for sd in [corpus::sd1(), corpus::dp(), corpus::sd2(), corpus::sd3()] {
            let se = sd.split_extension().unwrap();
            assert_eq!(se.i.matrix.image(), se.pi.matrix.kernel());
            // twist naturality of the splitting
            assert_eq!(
                se.s.dst.alpha().matmul(&se.s.matrix),
                se.s.matrix.matmul(se.s.src.alpha())
            );
            let induced = induced_action_from_split(&se).unwrap();
            assert_eq!(induced.lambda(), sd.action.lambda());
            assert_eq!(induced.rho(), sd.action.rho());
            let phi = check_split_equivalence(&se).unwrap();
            assert!(phi.matrix.is_identity());
        }
    }

    #[test]
    fn conjugated_split_extension_yields_the_conjugation_as_equivalence() {
        // Transport sd1's canonical extension along a block automorphism of
        // the middle algebra; the comparison map must recover it.
        let sd = corpus::sd1();
        let t = corpus::sl2_torus(2);
        let psi_mat = Matrix::from_fn(6, 6, Q, |i, j| {
            if i < 3 && j < 3 {
                t.get(i, j).clone()
            } else if i >= 3 && j >= 3 {
                t.get(i - 3, j - 3).clone()
            } else {
                q(0)
            }
        });
        let psi = HomMorphism::new(sd.alg.clone(), sd.alg.clone(), psi_mat).unwrap();
        let psi_inv = HomMorphism::new(
            sd.alg.clone(),
            sd.alg.clone(),
            psi.matrix.inverse().unwrap(),
        )
        .unwrap();
        let se = SplitExtension::new(
            psi.compose(&sd.i).unwrap(),
            sd.pi.compose(&psi_inv).unwrap(),
            psi.compose(&sd.sigma).unwrap(),
        )
        .unwrap();
        let phi = check_split_equivalence(&se).unwrap();
        assert_eq!(phi.matrix, psi.matrix);
    }

    #[test]
    fn derivation_checks() {
        let s = corpus::sl2();
        let self_act = HomAction::self_action(&s);
        let zero = Derivation {
            action: self_act.clone(),
            d: Matrix::zero(3, 3, Q),
            along: None,
        };
        assert!(check_derivation(&zero).valid());
        for idx in 0..3 {
            let der = Derivation {
                action: self_act.clone(),
                d: corpus::ad(&s, idx),
                along: None,
            };
            assert!(
                check_derivation(&der).valid(),
                "left bracket by basis {idx}"
            );
        }
        // The twisted corpus algebra has its own diagonal derivation.
        let t = corpus::tw2();
        let der = Derivation {
            action: HomAction::self_action(&t),
            d: corpus::tw2_diag_derivation(),
            along: None,
        };
        assert!(check_derivation(&der).valid());
        // A non-derivation: the identity map on sl2.
        let bad = Derivation {
            action: self_act,
            d: Matrix::identity(3, Q),
            along: None,
        };
        assert!(!check_derivation(&bad).valid());
    }

    #[test]
    fn target_projection_is_a_derivation_for_representations_only() {
        let rep = adjoint_rep();
        let sd = semidirect(&rep).unwrap();
        let theta = theta_projection(&sd).unwrap();
        assert!(check_derivation(&theta).valid());

        // With a nonabelian kernel the same projection fails the law.
        let sd1 = corpus::sd1();
        let theta = theta_projection(&sd1).unwrap();
        assert!(check_derivation(&theta).law_witness.is_some());
    }

    #[test]
    fn derivation_hom_round_trips() {
        let rep = adjoint_rep();
        let sd = semidirect(&rep).unwrap();
        let s = corpus::sl2();
        let id = HomMorphism::identity(&s);
        let torus = HomMorphism::new(s.clone(), s.clone(), corpus::sl2_torus(2)).unwrap();
        let pairs: Vec<(HomMorphism, Matrix)> = vec![
            (id.clone(), Matrix::zero(3, 3, Q)),
            (id.clone(), corpus::ad(&s, 0)),
            (id.clone(), corpus::ad(&s, 1)),
            (id, corpus::ad(&s, 2)),
            (torus.clone(), Matrix::zero(3, 3, Q)),
            (torus.clone(), corpus::ad(&s, 1).matmul(&torus.matrix)),
            (torus.clone(), corpus::ad(&s, 0).matmul(&torus.matrix)),
        ];
        for (f, d) in &pairs {
            let h = derivation_to_hom(&sd, f, d).unwrap();
            let (f2, d2) = hom_to_derivation(&sd, &h).unwrap();
            assert_eq!(f2.matrix, f.matrix);
            assert_eq!(d2.d, *d);
            assert!(check_derivation(&d2).valid());
            let h2 = derivation_to_hom(&sd, &f2, &d2.d).unwrap();
            assert_eq!(h2.matrix, h.matrix);
        }
        // d = 0 packs to the canonical section composed with f.
        let h = derivation_to_hom(&sd, &torus, &Matrix::zero(3, 3, Q)).unwrap();
        assert_eq!(h.matrix, sd.sigma.matrix.matmul(&torus.matrix));
    }

    #[test]
    fn derivation_to_hom_requires_a_representation() {
        let sd1 = corpus::sd1();
        let s = corpus::sl2();
        let id = HomMorphism::identity(&s);
        let err = derivation_to_hom(&sd1, &id, &Matrix::zero(3, 3, Q));
        assert!(err.is_err());
    }
}
