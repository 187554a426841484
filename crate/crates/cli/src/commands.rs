//! Subcommand implementations.
//!
//! Each command parses its input files, runs the relevant engine
//! constructions, and returns an [`Outcome`]: a [`Report`] of named checks
//! plus, for the constructive commands (`uce`, `semidirect`, `lift-aut`,
//! `lift-der`), a definition file that `--out` can materialize.
//!
//! Error discipline: malformed files (syntax, shape, index range, field
//! mismatches) abort with an error — exit code 2. Mathematically meaningful
//! failures (violated axioms, refused preconditions, obstructed lifts,
//! falsified statements) become failed checks in the report — exit code 1.

use crate::format::{self, DefFile};
use crate::report::Report;
use anyhow::{anyhow, bail, Result};
use homleib::{
    check_derivation, check_lift_bijections, check_morphism, check_split_equivalence,
    check_statement_1_2_3, check_statement_4_5, check_theorem_equivalences, corpus, cover_report,
    derivation_to_hom, hom_to_derivation, induced_action_from_split, induced_action_uceq_on_ucem,
    induced_to_central, is_alpha_central, is_central, is_centrally_closed, lift_automorphism,
    lift_derivation, make_alpha_cover, make_setup, quotient_cover, relation_generators, semidirect,
    uce, uce_alpha, AutLift, DerLift, Derivation, Extension, Field, HomAction, HomAlgebra,
    HomMorphism, Matrix, Scalar, SplitExtension, Subspace, UceResult,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;

/// Default seed for the randomized spot checks of the `corpus` command.
pub const DEFAULT_SEED: u64 = 1729;

pub struct Outcome {
    pub report: Report,
    /// Definition file produced by constructive commands; written when the
    /// user passes `--out`.
    pub artifact: Option<DefFile>,
}

impl Outcome {
    fn report_only(report: Report) -> Outcome {
        Outcome {
            report,
            artifact: None,
        }
    }
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn vec_str(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Runs an engine call whose refusal is a reportable verdict: precondition
/// and validity failures become a failed check, anything else (shape or
/// field mismatches, internal inconsistencies) aborts the command.
fn precheck<T>(report: &mut Report, name: &str, result: homleib::Result<T>) -> Result<Option<T>> {
    match result {
        Ok(v) => {
            report.check(name, true, None);
            Ok(Some(v))
        }
        Err(e @ (homleib::Error::Precondition(_) | homleib::Error::Invalid(_))) => {
            report.check(name, false, Some(e.to_string()));
            Ok(None)
        }
        Err(e) => Err(anyhow!(e)),
    }
}

/// Records the axiom checks and structural statistics of one algebra under
/// a name prefix; returns whether both axioms hold.
fn algebra_checks(report: &mut Report, prefix: &str, alg: &HomAlgebra) -> bool {
    let rep = alg.report();
    match rep.hom_leibniz_witness {
        None => report.check(format!("{prefix}hom_leibniz"), true, None),
        Some(w) => report.check(
            format!("{prefix}hom_leibniz"),
            false,
            Some(format!("identity fails at basis triple {w:?}")),
        ),
    }
    match rep.multiplicative_witness {
        None => report.check(format!("{prefix}multiplicative"), true, None),
        Some(w) => report.check(
            format!("{prefix}multiplicative"),
            false,
            Some(format!(
                "twist fails to preserve the bracket at basis pair {w:?}"
            )),
        ),
    }
    report.info(format!("{prefix}dim"), rep.dim);
    report.info(format!("{prefix}derived_dim"), rep.derived_dim);
    report.info(format!("{prefix}center_dim"), rep.center_dim);
    report.info(format!("{prefix}alpha_rank"), rep.alpha_rank);
    report.info(format!("{prefix}perfect"), rep.perfect);
    report.info(format!("{prefix}alpha_perfect"), rep.alpha_perfect);
    rep.valid()
}

fn expect_algebra(file: DefFile, path: &Path) -> Result<format::AlgebraFile> {
    match file {
        DefFile::Algebra(f) => Ok(f),
        other => bail!(
            "{} is a {} file; this command expects an algebra file",
            path.display(),
            other.kind()
        ),
    }
}

fn expect_split_extension(file: DefFile, path: &Path) -> Result<format::SplitExtensionFile> {
    match file {
        DefFile::SplitExtension(f) => Ok(f),
        other => bail!(
            "{} is a {} file; this command expects a split_extension file",
            path.display(),
            other.kind()
        ),
    }
}

fn expect_cover(file: DefFile, path: &Path) -> Result<format::CoverFile> {
    match file {
        DefFile::Cover(f) => Ok(f),
        other => bail!(
            "{} is a {} file; this command expects a cover file",
            path.display(),
            other.kind()
        ),
    }
}

fn expect_map(file: DefFile, path: &Path) -> Result<format::MapFile> {
    match file {
        DefFile::Map(f) => Ok(f),
        other => bail!(
            "{} is a {} file; this command expects a map file",
            path.display(),
            other.kind()
        ),
    }
}

/// Builds a split extension from its file while reporting each validation
/// step; returns `None` (with the failure recorded) when a step fails.
fn split_extension_checks(
    report: &mut Report,
    f: &format::SplitExtensionFile,
) -> Result<Option<SplitExtension>> {
    let kernel = f.kernel.to_algebra()?;
    let middle = f.middle.to_algebra()?;
    let quotient = f.quotient.to_algebra()?;
    let mut ok = algebra_checks(report, "kernel/", &kernel);
    ok &= algebra_checks(report, "middle/", &middle);
    ok &= algebra_checks(report, "quotient/", &quotient);
    if !ok {
        return Ok(None);
    }
    let field = kernel.field();
    let i = format::parse_matrix(field, &f.i, middle.dim(), kernel.dim(), "map i")?;
    let pi = format::parse_matrix(field, &f.pi, quotient.dim(), middle.dim(), "map pi")?;
    let s = format::parse_matrix(field, &f.s, middle.dim(), quotient.dim(), "map s")?;
    let mut maps_ok = true;
    for (name, m, src, dst) in [
        ("i_is_morphism", &i, &kernel, &middle),
        ("pi_is_morphism", &pi, &middle, &quotient),
        ("s_is_morphism", &s, &quotient, &middle),
    ] {
        let rep = check_morphism(m, src, dst);
        let witness = match rep.bracket_witness {
            Some(w) => format!("bracket compatibility fails at basis pair {w:?}"),
            None => "map does not intertwine the twists".to_string(),
        };
        report.check(name, rep.valid(), Some(witness));
        maps_ok &= rep.valid();
    }
    if !maps_ok {
        return Ok(None);
    }
    let i = HomMorphism::new(kernel, middle.clone(), i).map_err(|e| anyhow!(e))?;
    let pi = HomMorphism::new(middle.clone(), quotient.clone(), pi).map_err(|e| anyhow!(e))?;
    let s = HomMorphism::new(quotient, middle, s).map_err(|e| anyhow!(e))?;
    precheck(
        report,
        "sequence_split_exact",
        SplitExtension::new(i, pi, s),
    )
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

pub fn cmd_validate(path: &Path) -> Result<Outcome> {
    let file = format::parse_file(path)?;
    let mut report = Report::new(format!("validate {}", path.display()));
    report.info("kind", file.kind());
    match &file {
        DefFile::Algebra(f) => {
            let alg = f.algebra.to_algebra()?;
            report.info("name", &f.algebra.name);
            algebra_checks(&mut report, "", &alg);
        }
        DefFile::Action(f) => {
            f.to_tensors()?;
            report.info("name", &f.name);
            report.info("actor_dim", f.actor_dim);
            report.info("target_dim", f.target_dim);
            report.check("well_formed", true, None);
        }
        DefFile::SplitExtension(f) => {
            report.info("name", &f.name);
            split_extension_checks(&mut report, f)?;
        }
        DefFile::Cover(f) => {
            report.info("name", &f.name);
            let source = f.source.to_algebra()?;
            let base = f.base.to_algebra()?;
            let mut ok = algebra_checks(&mut report, "source/", &source);
            ok &= algebra_checks(&mut report, "base/", &base);
            if ok {
                let m =
                    format::parse_matrix(source.field(), &f.f, base.dim(), source.dim(), "map f")?;
                let rep = check_morphism(&m, &source, &base);
                let witness = match rep.bracket_witness {
                    Some(w) => format!("bracket compatibility fails at basis pair {w:?}"),
                    None => "map does not intertwine the twists".to_string(),
                };
                report.check("f_is_morphism", rep.valid(), Some(witness));
                report.info("f_surjective", m.rank() == base.dim());
            }
        }
        DefFile::Map(f) => {
            report.info("name", &f.name);
            report.info("rows", f.matrix.len());
            report.info("cols", f.matrix.first().map_or(0, |r| r.len()));
            report.check("well_formed", true, None);
        }
    }
    Ok(Outcome::report_only(report))
}

// ---------------------------------------------------------------------------
// uce
// ---------------------------------------------------------------------------

fn uce_checks(report: &mut Report, r: &UceResult, alpha: bool) -> Result<()> {
    let n = r.base.dim();
    report.info("tensor_square_dim", n * n);
    report.info("relation_rank", n * n - r.alg.dim());
    report.info("carrier_dim", r.alg.dim());
    report.info("hl2_dim", r.hl2.dim());
    let carrier = r.alg.report();
    report.check_wit(
        "carrier_valid",
        carrier.valid(),
        "quotient algebra violates an axiom",
    );
    report.check("projection_surjective", r.u.is_surjective(), None);
    let ext = Extension::from_surjection(&r.u).map_err(|e| anyhow!(e))?;
    if alpha {
        report.check("extension_alpha_central", is_alpha_central(&ext), None);
        report.check("carrier_alpha_perfect", r.alg.is_alpha_perfect(), None);
    } else {
        report.check("extension_central", is_central(&ext), None);
        report.check("carrier_perfect", r.alg.is_perfect(), None);
        let closed = is_centrally_closed(&r.alg).map_err(|e| anyhow!(e))?;
        report.info("carrier_centrally_closed", closed);
    }
    Ok(())
}

pub fn cmd_uce(path: &Path, alpha: bool) -> Result<Outcome> {
    let file = expect_algebra(format::parse_file(path)?, path)?;
    let alg = file.algebra.to_algebra()?;
    let flag = if alpha { " --alpha" } else { "" };
    let mut report = Report::new(format!("uce{flag} {}", path.display()));
    report.info("name", &file.algebra.name);
    if !algebra_checks(&mut report, "", &alg) {
        return Ok(Outcome::report_only(report));
    }
    let built = if alpha {
        precheck(&mut report, "base_alpha_perfect", uce_alpha(&alg))?
    } else {
        precheck(&mut report, "base_perfect", uce(&alg))?
    };
    let Some(r) = built else {
        return Ok(Outcome::report_only(report));
    };
    uce_checks(&mut report, &r, alpha)?;
    let artifact = format::algebra_file(&format!("{}-uce", file.algebra.name), None, &r.alg);
    Ok(Outcome {
        report,
        artifact: Some(artifact),
    })
}

// ---------------------------------------------------------------------------
// semidirect
// ---------------------------------------------------------------------------

pub fn cmd_semidirect(target: &Path, actor: &Path, action: &Path) -> Result<Outcome> {
    let target_file = expect_algebra(format::parse_file(target)?, target)?;
    let actor_file = expect_algebra(format::parse_file(actor)?, actor)?;
    let action_file = match format::parse_file(action)? {
        DefFile::Action(f) => f,
        other => bail!(
            "{} is a {} file; this command expects an action file",
            action.display(),
            other.kind()
        ),
    };
    let m_alg = target_file.algebra.to_algebra()?;
    let q_alg = actor_file.algebra.to_algebra()?;
    let (field, lambda, rho) = action_file.to_tensors()?;
    if field != m_alg.field() || field != q_alg.field() {
        bail!("field tags of the action and algebra files disagree");
    }
    if action_file.actor_dim != q_alg.dim() || action_file.target_dim != m_alg.dim() {
        bail!(
            "action is {}x{} but actor has dim {} and target dim {}",
            action_file.actor_dim,
            action_file.target_dim,
            q_alg.dim(),
            m_alg.dim()
        );
    }
    let mut report = Report::new(format!(
        "semidirect {} {} {}",
        target.display(),
        actor.display(),
        action.display()
    ));
    let mut ok = algebra_checks(&mut report, "target/", &m_alg);
    ok &= algebra_checks(&mut report, "actor/", &q_alg);
    if !ok {
        return Ok(Outcome::report_only(report));
    }
    let act = HomAction::new(q_alg.clone(), m_alg.clone(), lambda, rho).map_err(|e| anyhow!(e))?;
    let axioms = act.check_axioms();
    match axioms.failures.first() {
        None => report.check("action_axioms", true, None),
        Some((axiom, idx)) => report.check(
            "action_axioms",
            false,
            Some(format!("axiom {axiom}) fails at basis indices {idx:?}")),
        ),
    }
    if !axioms.valid() {
        return Ok(Outcome::report_only(report));
    }
    let Some(sd) = precheck(&mut report, "product_constructed", semidirect(&act))? else {
        return Ok(Outcome::report_only(report));
    };
    let prod = sd.alg.report();
    report.check_wit(
        "product_hom_leibniz",
        prod.hom_leibniz_witness.is_none(),
        format!(
            "identity fails at {:?}",
            prod.hom_leibniz_witness.unwrap_or_default()
        ),
    );
    report.check_wit(
        "product_multiplicative",
        prod.multiplicative_witness.is_none(),
        format!(
            "twist fails at {:?}",
            prod.multiplicative_witness.unwrap_or_default()
        ),
    );
    let exact = sd.i.is_injective()
        && sd.pi.is_surjective()
        && sd.i.matrix.image() == sd.pi.kernel_subspace();
    report.check("sequence_exact", exact, None);
    report.check(
        "splitting_section",
        sd.pi.matrix.matmul(&sd.sigma.matrix).is_identity(),
        None,
    );
    report.check(
        "splitting_intertwines_twists",
        sd.sigma.matrix.matmul(q_alg.alpha()) == sd.alg.alpha().matmul(&sd.sigma.matrix),
        None,
    );
    report.info("product_dim", sd.alg.dim());
    let artifact = format::algebra_file(&format!("{}-product", action_file.name), None, &sd.alg);
    Ok(Outcome {
        report,
        artifact: Some(artifact),
    })
}

// ---------------------------------------------------------------------------
// check-split
// ---------------------------------------------------------------------------

pub fn cmd_check_split(path: &Path) -> Result<Outcome> {
    let file = expect_split_extension(format::parse_file(path)?, path)?;
    let mut report = Report::new(format!("check-split {}", path.display()));
    report.info("name", &file.name);
    let Some(se) = split_extension_checks(&mut report, &file)? else {
        return Ok(Outcome::report_only(report));
    };
    report.check(
        "quotient_twist_identity",
        se.quotient().alpha().is_identity(),
        Some(
            "the induced-action equivalence requires the quotient twist to be the identity".into(),
        ),
    );
    if !se.quotient().alpha().is_identity() {
        return Ok(Outcome::report_only(report));
    }
    let Some(act) = precheck(
        &mut report,
        "induced_action_built",
        induced_action_from_split(&se),
    )?
    else {
        return Ok(Outcome::report_only(report));
    };
    let axioms = act.check_axioms();
    match axioms.failures.first() {
        None => report.check("induced_action_axioms", true, None),
        Some((axiom, idx)) => report.check(
            "induced_action_axioms",
            false,
            Some(format!("axiom {axiom}) fails at basis indices {idx:?}")),
        ),
    }
    let Some(phi) = precheck(&mut report, "equivalence_map", check_split_equivalence(&se))? else {
        return Ok(Outcome::report_only(report));
    };
    report.check("equivalence_isomorphism", phi.is_bijective(), None);
    let sd = semidirect(&act).map_err(|e| anyhow!(e))?;
    let se2 = sd.split_extension().map_err(|e| anyhow!(e))?;
    let act2 = induced_action_from_split(&se2).map_err(|e| anyhow!(e))?;
    report.check(
        "action_round_trip",
        act2.lambda() == act.lambda() && act2.rho() == act.rho(),
        Some("re-deriving the action from the rebuilt product changes a tensor entry".into()),
    );
    report.info("kernel_dim", se.kernel_alg().dim());
    report.info("middle_dim", se.middle().dim());
    report.info("quotient_dim", se.quotient().dim());
    Ok(Outcome::report_only(report))
}

// ---------------------------------------------------------------------------
// lift-aut / lift-der
// ---------------------------------------------------------------------------

struct CoverInput {
    cover: homleib::AlphaCover,
}

fn load_cover(report: &mut Report, path: &Path) -> Result<Option<CoverInput>> {
    let file = expect_cover(format::parse_file(path)?, path)?;
    report.info("cover", &file.name);
    let f = file.to_morphism()?;
    let rep = check_morphism(&f.matrix, &f.src, &f.dst);
    let witness = match rep.bracket_witness {
        Some(w) => format!("bracket compatibility fails at basis pair {w:?}"),
        None => "map does not intertwine the twists".to_string(),
    };
    report.check("cover_map_is_morphism", rep.valid(), Some(witness));
    if !rep.valid() {
        return Ok(None);
    }
    let Some(cover) = precheck(report, "cover_preconditions", make_alpha_cover(&f))? else {
        return Ok(None);
    };
    report.info("source_dim", cover.f.src.dim());
    report.info("base_dim", cover.f.dst.dim());
    report.info("cover_kernel_dim", cover.kernel().dim());
    report.info("source_hl2_dim", cover.uce_src.hl2.dim());
    report.info("base_hl2_dim", cover.uce_dst.hl2.dim());
    report.info("obstruction_dim", cover.c.dim());
    Ok(Some(CoverInput { cover }))
}

pub fn cmd_lift_aut(cover_path: &Path, map_path: &Path) -> Result<Outcome> {
    let mut report = Report::new(format!(
        "lift-aut {} {}",
        cover_path.display(),
        map_path.display()
    ));
    let Some(input) = load_cover(&mut report, cover_path)? else {
        return Ok(Outcome::report_only(report));
    };
    let cov = input.cover;
    let base = cov.f.dst.clone();
    let map = expect_map(format::parse_file(map_path)?, map_path)?;
    report.info("map", &map.name);
    let h = map.to_matrix(base.field(), base.dim(), base.dim())?;
    let rep = check_morphism(&h, &base, &base);
    let witness = match rep.bracket_witness {
        Some(w) => format!("bracket compatibility fails at basis pair {w:?}"),
        None => "map does not commute with the twist".to_string(),
    };
    report.check("map_is_endomorphism", rep.valid(), Some(witness));
    if !rep.valid() {
        return Ok(Outcome::report_only(report));
    }
    report.check(
        "map_is_automorphism",
        h.rank() == base.dim(),
        Some("matrix is singular".into()),
    );
    if h.rank() != base.dim() {
        return Ok(Outcome::report_only(report));
    }
    let h = HomMorphism::new(base.clone(), base, h).map_err(|e| anyhow!(e))?;
    match lift_automorphism(&cov, &h).map_err(|e| anyhow!(e))? {
        AutLift::Lifted(theta) => {
            report.check("lift_exists", true, None);
            report.check(
                "square_commutes",
                cov.f.matrix.matmul(&theta.matrix) == h.matrix.matmul(&cov.f.matrix),
                None,
            );
            report.check("lift_is_automorphism", theta.is_bijective(), None);
            report.check(
                "lift_preserves_kernel",
                cov.kernel().map_through(&theta.matrix) == cov.kernel(),
                None,
            );
            let artifact = format::map_file(&format!("{}-lift", map.name), &theta.matrix);
            Ok(Outcome {
                report,
                artifact: Some(artifact),
            })
        }
        AutLift::Obstructed { witness } => {
            report.check(
                "lift_exists",
                false,
                Some(format!(
                    "obstruction subspace vector {} maps outside the obstruction subspace",
                    vec_str(&witness)
                )),
            );
            Ok(Outcome::report_only(report))
        }
    }
}

pub fn cmd_lift_der(cover_path: &Path, map_path: &Path) -> Result<Outcome> {
    let mut report = Report::new(format!(
        "lift-der {} {}",
        cover_path.display(),
        map_path.display()
    ));
    let Some(input) = load_cover(&mut report, cover_path)? else {
        return Ok(Outcome::report_only(report));
    };
    let cov = input.cover;
    let base = cov.f.dst.clone();
    let map = expect_map(format::parse_file(map_path)?, map_path)?;
    report.info("map", &map.name);
    let d = map.to_matrix(base.field(), base.dim(), base.dim())?;
    let der = Derivation {
        action: HomAction::self_action(&base),
        d: d.clone(),
        along: None,
    };
    let rep = check_derivation(&der);
    let witness = match rep.law_witness {
        Some(w) => format!("derivation law fails at basis pair {w:?}"),
        None => "map does not commute with the twist".to_string(),
    };
    report.check("map_is_derivation", rep.valid(), Some(witness));
    if !rep.valid() {
        return Ok(Outcome::report_only(report));
    }
    match lift_derivation(&cov, &d).map_err(|e| anyhow!(e))? {
        DerLift::Lifted(delta) => {
            report.check("lift_exists", true, None);
            report.check(
                "square_commutes",
                cov.f.matrix.matmul(&delta) == d.matmul(&cov.f.matrix),
                None,
            );
            report.check(
                "lift_absorbs_kernel",
                cov.kernel()
                    .contains_subspace(&cov.kernel().map_through(&delta)),
                None,
            );
            let artifact = format::map_file(&format!("{}-lift", map.name), &delta);
            Ok(Outcome {
                report,
                artifact: Some(artifact),
            })
        }
        DerLift::Obstructed { witness } => {
            report.check(
                "lift_exists",
                false,
                Some(format!(
                    "obstruction subspace vector {} maps outside the obstruction subspace",
                    vec_str(&witness)
                )),
            );
            Ok(Outcome::report_only(report))
        }
    }
}

// ---------------------------------------------------------------------------
// check-s5
// ---------------------------------------------------------------------------

pub fn cmd_check_s5(path: &Path) -> Result<Outcome> {
    let file = expect_split_extension(format::parse_file(path)?, path)?;
    let mut report = Report::new(format!("check-s5 {}", path.display()));
    report.info("name", &file.name);
    let Some(se) = split_extension_checks(&mut report, &file)? else {
        return Ok(Outcome::report_only(report));
    };
    let Some(setup) = precheck(&mut report, "setup_preconditions", make_setup(&se))? else {
        return Ok(Outcome::report_only(report));
    };
    report.info("uce_kernel_dim", setup.uce_m.alg.dim());
    report.info("uce_quotient_dim", setup.uce_q.alg.dim());
    report.info("uce_middle_dim", setup.uce_g.alg.dim());
    report.info("kernel_hl2_dim", setup.uce_m.hl2.dim());
    report.info("quotient_hl2_dim", setup.uce_q.hl2.dim());
    report.info("middle_hl2_dim", setup.uce_g.hl2.dim());
    report.info("action_symmetric", setup.symmetric);
    report.check(
        "projection_section_identity",
        setup
            .pi_hat
            .matrix
            .matmul(&setup.sigma.matrix)
            .is_identity(),
        None,
    );
    let s123 = check_statement_1_2_3(&setup);
    report.check("kernel_is_tau_image", s123.kernel_is_tau_image, None);
    report.check(
        "internal_semidirect_decomposition",
        s123.internal_semidirect,
        None,
    );
    report.check("section_injective", s123.sigma_injective, None);
    report.check(
        "kernel_direct_sum_decomposition",
        s123.kernel_decomposition,
        None,
    );
    report.check(
        "section_brackets_absorbed",
        s123.section_brackets_in_tau_image,
        None,
    );
    if !setup.symmetric {
        report.info(
            "statements_4_5",
            "skipped: the underlying action is not symmetric",
        );
        return Ok(Outcome::report_only(report));
    }
    let act = induced_action_uceq_on_ucem(&setup).map_err(|e| anyhow!(e))?;
    report.check("uce_action_axioms", act.check_axioms().valid(), None);
    let s45 = check_statement_4_5(&setup).map_err(|e| anyhow!(e))?;
    report.check("comparison_surjective", s45.phi_surjective, None);
    report.check("comparison_diagram_commutes", s45.diagram_commutes, None);
    report.check("comparison_kernel_matches", s45.phi_kernel_matches, None);
    report.check(
        "product_map_kernel_matches",
        s45.tau_sigma_kernel_matches,
        None,
    );
    let thm = check_theorem_equivalences(&setup).map_err(|e| anyhow!(e))?;
    report.check_wit(
        "equivalence_booleans_agree",
        thm.agree(),
        format!(
            "central={} trivial_action={} bijective={} injective={}",
            thm.phi_central,
            thm.action_on_kernel_trivial,
            thm.tau_sigma_bijective,
            thm.tau_injective
        ),
    );
    report.info(
        "equivalence_verdict",
        if thm.all_true() {
            "all four equivalent statements hold"
        } else {
            "all four equivalent statements fail"
        },
    );
    Ok(Outcome::report_only(report))
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

/// The shipped corpus: every definition file the binary can emit, with its
/// canonical file name. Built deterministically from the built-in examples.
pub fn corpus_files() -> Result<Vec<(&'static str, DefFile)>> {
    let sl2 = corpus::sl2();
    let cur3 = corpus::cur3();
    let sd1 = corpus::sd1();
    let dp = corpus::dp();
    let sl2_uce = uce_alpha(&sl2).map_err(|e| anyhow!(e))?;
    let cur3_uce = uce_alpha(&cur3).map_err(|e| anyhow!(e))?;
    let k0 = cur3_uce.hl2.basis_row(0);
    let k1 = cur3_uce.hl2.basis_row(1);
    let diag: Vec<Scalar> = k0.iter().zip(&k1).map(|(a, b)| a + b).collect();
    let w = Subspace::from_generators(cur3_uce.alg.dim(), cur3.field(), &[diag]);
    let cur3_cover = quotient_cover(&cur3_uce, &w).map_err(|e| anyhow!(e))?;
    let labels = |v: &[&str]| Some(v.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    Ok(vec![
        (
            "ab2.toml",
            format::algebra_file("ab2", labels(&["a", "b"]), &corpus::ab2()),
        ),
        (
            "nl2.toml",
            format::algebra_file("nl2", labels(&["a", "b"]), &corpus::nl2()),
        ),
        (
            "sl2.toml",
            format::algebra_file("sl2", labels(&["e", "h", "f"]), &sl2),
        ),
        (
            "tw2.toml",
            format::algebra_file("tw2", labels(&["e", "h", "f"]), &corpus::tw2()),
        ),
        (
            "heis.toml",
            format::algebra_file("heis", labels(&["x", "y", "z"]), &corpus::heis()),
        ),
        ("cur3.toml", format::algebra_file("cur3", None, &cur3)),
        (
            "sl2_adjoint.toml",
            format::action_file("sl2-adjoint", &sd1.action),
        ),
        (
            "sd1.toml",
            format::split_extension_file("sd1", &sd1.split_extension().map_err(|e| anyhow!(e))?),
        ),
        (
            "dp.toml",
            format::split_extension_file("dp", &dp.split_extension().map_err(|e| anyhow!(e))?),
        ),
        (
            "sl2_cover.toml",
            format::cover_file("sl2-universal", &sl2_uce.u),
        ),
        (
            "cur3_cover.toml",
            format::cover_file("cur3-diagonal", &cur3_cover),
        ),
        (
            "sl2_omega.toml",
            format::map_file("sl2-omega", &corpus::sl2_omega()),
        ),
        (
            "sl2_torus2.toml",
            format::map_file("sl2-torus2", &corpus::sl2_torus(2)),
        ),
        (
            "sl2_ad_e.toml",
            format::map_file("sl2-ad-e", &corpus::ad(&sl2, 0)),
        ),
        (
            "cur3_scale2.toml",
            format::map_file("cur3-scale2", &corpus::cur3_scale(2)),
        ),
        (
            "cur3_torus.toml",
            format::map_file("cur3-torus", &corpus::cur3_torus()),
        ),
        (
            "cur3_euler.toml",
            format::map_file("cur3-euler", &corpus::cur3_euler()),
        ),
    ])
}

fn emit_corpus(report: &mut Report, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let files = corpus_files()?;
    report.info("directory", dir.display());
    report.info("files", files.len());
    for (name, file) in &files {
        let text = format::serialize(file);
        let path = dir.join(name);
        std::fs::write(&path, &text)?;
        let reparsed = format::parse_str(&text)
            .map_err(|e| anyhow!("emitted {} does not re-parse: {e}", name))?;
        report.check(
            format!("emit/{name}/round_trip"),
            format::serialize(&reparsed) == text,
            Some("serialize . parse is not the identity on the emitted text".into()),
        );
    }
    Ok(())
}

// --- seeded endomorphism families -----------------------------------------

fn rand_rational(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    let num = field.from_i64(rng.gen_range(-6..=6));
    let den = field.from_i64([1, 1, 1, 2, 3][rng.gen_range(0..5)]);
    num.div(&den).expect("nonzero denominator")
}

/// Endomorphisms of the two-dimensional non-Lie example: a ↦ x·a + y·b,
/// b ↦ x²·b.
fn rand_nl2_endo(rng: &mut ChaCha8Rng, field: Field) -> Matrix {
    let x = rand_rational(rng, field);
    let y = rand_rational(rng, field);
    let xx = &x * &x;
    Matrix::from_rows(field, vec![vec![x, field.zero()], vec![y, xx]]).expect("shape")
}

/// Automorphism words in the torus, unipotent, and swap generators, plus the
/// zero endomorphism.
fn rand_sl2_endo(rng: &mut ChaCha8Rng, field: Field) -> Matrix {
    if rng.gen_range(0..10) == 0 {
        return Matrix::from_fn(3, 3, field, |_, _| field.zero());
    }
    let mut m = Matrix::identity(3, field);
    for _ in 0..rng.gen_range(1..=4) {
        let letter = match rng.gen_range(0..4) {
            0 | 1 => corpus::sl2_torus([1, 2, 3, -2][rng.gen_range(0..4)]),
            2 => corpus::sl2_unipotent(),
            _ => corpus::sl2_omega(),
        };
        m = letter.matmul(&m);
    }
    m
}

/// Endomorphisms of the Heisenberg algebra: x and y map freely, z follows
/// the determinant of their spans.
fn rand_heis_endo(rng: &mut ChaCha8Rng, field: Field) -> Matrix {
    let a: Vec<Scalar> = (0..3).map(|_| rand_rational(rng, field)).collect();
    let b: Vec<Scalar> = (0..3).map(|_| rand_rational(rng, field)).collect();
    let det = &(&a[0] * &b[1]) - &(&a[1] * &b[0]);
    Matrix::from_rows(
        field,
        vec![
            vec![a[0].clone(), b[0].clone(), field.zero()],
            vec![a[1].clone(), b[1].clone(), field.zero()],
            vec![a[2].clone(), b[2].clone(), det],
        ],
    )
    .expect("shape")
}

fn yau_twist_battery(report: &mut Report, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: [(&str, HomAlgebra, usize); 3] = [
        ("nl2", corpus::nl2(), 17),
        ("sl2", corpus::sl2(), 17),
        ("heis", corpus::heis(), 16),
    ];
    let mut total = 0usize;
    for (name, alg, count) in cases {
        let field = alg.field();
        let mut failure = None;
        for k in 0..count {
            let phi = match name {
                "nl2" => rand_nl2_endo(&mut rng, field),
                "sl2" => rand_sl2_endo(&mut rng, field),
                _ => rand_heis_endo(&mut rng, field),
            };
            if !check_morphism(&phi, &alg, &alg).valid() {
                failure = Some(format!("sample {k} is not an endomorphism"));
                break;
            }
            match alg.yau_twist(&phi) {
                Ok(twisted) if twisted.report().valid() => {}
                Ok(_) => {
                    failure = Some(format!("sample {k} twists to an invalid algebra"));
                    break;
                }
                Err(e) => {
                    failure = Some(format!("sample {k}: {e}"));
                    break;
                }
            }
            total += 1;
        }
        report.check(
            format!("yau_twist/{name}/closure"),
            failure.is_none(),
            failure,
        );
    }
    report.info("yau_twist_samples", total);
}

fn semidirect_battery(
    report: &mut Report,
    name: &str,
    sd: &homleib::SemidirectProduct,
) -> Result<()> {
    report.check(
        format!("semidirect/{name}/action_axioms"),
        sd.action.check_axioms().valid(),
        None,
    );
    report.check(
        format!("semidirect/{name}/product_valid"),
        sd.alg.report().valid(),
        None,
    );
    let exact = sd.i.is_injective()
        && sd.pi.is_surjective()
        && sd.i.matrix.image() == sd.pi.kernel_subspace()
        && sd.pi.matrix.matmul(&sd.sigma.matrix).is_identity();
    report.check(
        format!("semidirect/{name}/sequence_split_exact"),
        exact,
        None,
    );
    report.check(
        format!("semidirect/{name}/splitting_intertwines_twists"),
        sd.sigma.matrix.matmul(sd.action.actor().alpha())
            == sd.alg.alpha().matmul(&sd.sigma.matrix),
        None,
    );
    let se = sd.split_extension().map_err(|e| anyhow!(e))?;
    let phi = check_split_equivalence(&se).map_err(|e| anyhow!(e))?;
    report.check(
        format!("split_equiv/{name}/equivalence_isomorphism"),
        phi.is_bijective(),
        None,
    );
    let act = induced_action_from_split(&se).map_err(|e| anyhow!(e))?;
    report.check(
        format!("split_equiv/{name}/action_round_trip"),
        act.lambda() == sd.action.lambda() && act.rho() == sd.action.rho(),
        None,
    );
    Ok(())
}

fn derivation_battery(report: &mut Report) -> Result<()> {
    // Morphism/derivation round trips require a representation (abelian
    // target); the adjoint representation of sl2 provides one.
    let s = corpus::sl2();
    let field = s.field();
    let ab = HomAlgebra::abelian(3, field, Matrix::identity(3, field)).map_err(|e| anyhow!(e))?;
    let tensors: Vec<Vec<Vec<Scalar>>> = (0..3)
        .map(|i| (0..3).map(|j| s.basis_bracket(i, j).to_vec()).collect())
        .collect();
    let rep = HomAction::new(s.clone(), ab, tensors.clone(), tensors).map_err(|e| anyhow!(e))?;
    let sd = semidirect(&rep).map_err(|e| anyhow!(e))?;
    let id = HomMorphism::identity(&s);
    let torus =
        HomMorphism::new(s.clone(), s.clone(), corpus::sl2_torus(2)).map_err(|e| anyhow!(e))?;
    let theta = homleib::action::theta_projection(&sd).map_err(|e| anyhow!(e))?;
    let zero = || Matrix::from_fn(3, 3, field, |_, _| field.zero());
    let cases: Vec<(HomMorphism, Matrix)> = vec![
        (id.clone(), zero()),
        (id.clone(), corpus::ad(&s, 0)),
        (id.clone(), corpus::ad(&s, 1)),
        (id, corpus::ad(&s, 2)),
        (torus.clone(), zero()),
        (torus.clone(), corpus::ad(&s, 0).matmul(&torus.matrix)),
        (torus.clone(), corpus::ad(&s, 1).matmul(&torus.matrix)),
        (sd.pi.clone(), theta.d.clone()),
    ];
    let mut pairs = 0usize;
    let mut failure: Option<String> = None;
    for (f, d) in &cases {
        let h = derivation_to_hom(&sd, f, d).map_err(|e| anyhow!(e))?;
        let (f2, d2) = hom_to_derivation(&sd, &h).map_err(|e| anyhow!(e))?;
        if f2.matrix != f.matrix || d2.d != *d {
            failure = Some(format!("round trip altered pair {pairs}"));
        }
        let h2 = derivation_to_hom(&sd, &f2, &d2.d).map_err(|e| anyhow!(e))?;
        if h2.matrix != h.matrix {
            failure = Some(format!("round trip altered the morphism of pair {pairs}"));
        }
        pairs += 1;
    }
    report.check("derivations/hom_round_trip", failure.is_none(), failure);
    report.info("derivation_pairs", pairs);
    Ok(())
}

fn annihilation_battery(report: &mut Report) {
    let entries: [(&str, HomAlgebra); 7] = [
        ("ab2", corpus::ab2()),
        ("nl2", corpus::nl2()),
        ("sl2", corpus::sl2()),
        ("tw2", corpus::tw2()),
        ("heis", corpus::heis()),
        ("sd1", corpus::sd1().alg),
        ("dp", corpus::dp().alg),
    ];
    for (name, alg) in entries {
        let gens = relation_generators(&alg);
        let ev = alg.bracket_eval_matrix();
        report.check(
            format!("uce/{name}/relations_annihilated"),
            ev.matmul(&gens.transpose()).is_zero(),
            Some("a relation generator survives bracket evaluation".into()),
        );
    }
}

fn uce_battery(report: &mut Report) -> Result<()> {
    // Refusal on a non-perfect base.
    report.check(
        "uce/ab2/refused_not_perfect",
        matches!(uce(&corpus::ab2()), Err(homleib::Error::Precondition(_))),
        Some("the non-perfect base was not refused".into()),
    );

    // Full extension checks plus plain/twisted coincidence on the perfect
    // entries.
    let perfect: [(&str, HomAlgebra); 4] = [
        ("sl2", corpus::sl2()),
        ("tw2", corpus::tw2()),
        ("sd1_middle", corpus::sd1().alg),
        ("dp_middle", corpus::dp().alg),
    ];
    let mut sl2_uce = None;
    for (name, alg) in perfect {
        let plain = uce(&alg).map_err(|e| anyhow!(e))?;
        let twisted = uce_alpha(&alg).map_err(|e| anyhow!(e))?;
        let ext = Extension::from_surjection(&plain.u).map_err(|e| anyhow!(e))?;
        report.check(
            format!("uce/{name}/extension_central"),
            is_central(&ext) && plain.u.is_surjective(),
            None,
        );
        report.check(
            format!("uce/{name}/carrier_perfect"),
            plain.alg.report().valid() && plain.alg.is_perfect(),
            None,
        );
        report.check(
            format!("uce/{name}/dim_arithmetic"),
            plain.alg.dim() == alg.dim() * alg.dim() - relation_generators(&alg).rank(),
            None,
        );
        report.check(
            format!("uce/{name}/plain_twisted_coincide"),
            plain.alg == twisted.alg
                && plain.u.matrix == twisted.u.matrix
                && plain.hl2 == twisted.hl2,
            None,
        );
        report.info(format!("uce/{name}/carrier_dim"), plain.alg.dim());
        report.info(format!("uce/{name}/hl2_dim"), plain.hl2.dim());
        if name == "sl2" {
            report.check(
                "uce/sl2/centrally_closed",
                is_centrally_closed(&plain.alg).map_err(|e| anyhow!(e))?,
                None,
            );
            report.check(
                "cover/sl2/criteria",
                cover_report(&plain.u).map_err(|e| anyhow!(e))?.all_pass(),
                None,
            );
            sl2_uce = Some(plain);
        }
    }
    let sl2_uce = sl2_uce.expect("sl2 entry present");
    let sl2 = corpus::sl2();

    // Mediating morphism to an independent central extension.
    let prod = sl2.direct_product(&corpus::ab2()).map_err(|e| anyhow!(e))?;
    let proj = Matrix::from_fn(3, 5, sl2.field(), |r, c| {
        if r == c {
            sl2.field().one()
        } else {
            sl2.field().zero()
        }
    });
    let proj = HomMorphism::new(prod, sl2.clone(), proj).map_err(|e| anyhow!(e))?;
    let ext = Extension::from_surjection(&proj).map_err(|e| anyhow!(e))?;
    let h = induced_to_central(&sl2_uce, &ext).map_err(|e| anyhow!(e))?;
    report.check(
        "uce/universal_property/mediates",
        is_central(&ext) && ext.pi.matrix.matmul(&h.matrix) == sl2_uce.u.matrix,
        None,
    );

    // Functoriality: identity, composition, kernel invariance.
    let id = homleib::uce_functor(&sl2_uce, &sl2_uce, &HomMorphism::identity(&sl2))
        .map_err(|e| anyhow!(e))?;
    report.check("uce/functor/identity", id.matrix.is_identity(), None);
    let f =
        HomMorphism::new(sl2.clone(), sl2.clone(), corpus::sl2_torus(2)).map_err(|e| anyhow!(e))?;
    let g =
        HomMorphism::new(sl2.clone(), sl2.clone(), corpus::sl2_omega()).map_err(|e| anyhow!(e))?;
    let gf = g.compose(&f).map_err(|e| anyhow!(e))?;
    let ugf = homleib::uce_functor(&sl2_uce, &sl2_uce, &gf).map_err(|e| anyhow!(e))?;
    let ug = homleib::uce_functor(&sl2_uce, &sl2_uce, &g).map_err(|e| anyhow!(e))?;
    let uf = homleib::uce_functor(&sl2_uce, &sl2_uce, &f).map_err(|e| anyhow!(e))?;
    report.check(
        "uce/functor/composition",
        ugf.matrix == ug.matrix.matmul(&uf.matrix),
        None,
    );
    let cur3 = corpus::cur3();
    let cur3_uce = uce_alpha(&cur3).map_err(|e| anyhow!(e))?;
    let scale =
        HomMorphism::new(cur3.clone(), cur3, corpus::cur3_scale(2)).map_err(|e| anyhow!(e))?;
    let us = homleib::uce_alpha_functor(&cur3_uce, &cur3_uce, &scale).map_err(|e| anyhow!(e))?;
    report.check(
        "uce/functor/hl2_invariant",
        cur3_uce.hl2.map_through(&us.matrix) == cur3_uce.hl2,
        None,
    );
    report.info("uce/cur3/carrier_dim", cur3_uce.alg.dim());
    report.info("uce/cur3/hl2_dim", cur3_uce.hl2.dim());
    Ok(())
}

fn lift_battery(report: &mut Report) -> Result<()> {
    let sl2 = corpus::sl2();
    let sl2_uce = uce_alpha(&sl2).map_err(|e| anyhow!(e))?;
    let cov = make_alpha_cover(&sl2_uce.u).map_err(|e| anyhow!(e))?;
    report.check("lift/sl2/obstruction_vanishes", cov.c.dim() == 0, None);
    let autos: Vec<HomMorphism> = [
        corpus::sl2_omega(),
        corpus::sl2_torus(2),
        corpus::sl2_torus(3),
        corpus::sl2_unipotent(),
    ]
    .into_iter()
    .map(|m| HomMorphism::new(sl2.clone(), sl2.clone(), m))
    .collect::<homleib::Result<_>>()
    .map_err(|e| anyhow!(e))?;
    let ders: Vec<Matrix> = (0..3).map(|k| corpus::ad(&sl2, k)).collect();
    let sample = check_lift_bijections(&cov, &autos, &ders).map_err(|e| anyhow!(e))?;
    report.check_wit(
        "lift/sl2/sampled_lifts_behave",
        sample.all_pass(),
        format!(
            "composition={} inverses={} injective={} round_trip={} linear={}",
            sample.composition, sample.inverses, sample.injective, sample.round_trip, sample.linear
        ),
    );

    // A cover with a one-dimensional obstruction: the universal extension of
    // the three-point current algebra, quotiented by the diagonal of its
    // two-dimensional kernel.
    let cur3 = corpus::cur3();
    let cur3_uce = uce_alpha(&cur3).map_err(|e| anyhow!(e))?;
    let k0 = cur3_uce.hl2.basis_row(0);
    let k1 = cur3_uce.hl2.basis_row(1);
    let diag: Vec<Scalar> = k0.iter().zip(&k1).map(|(a, b)| a + b).collect();
    let w = Subspace::from_generators(cur3_uce.alg.dim(), cur3.field(), &[diag]);
    let f = quotient_cover(&cur3_uce, &w).map_err(|e| anyhow!(e))?;
    let cov = make_alpha_cover(&f).map_err(|e| anyhow!(e))?;
    report.check(
        "lift/cur3_diagonal/obstruction_line",
        cov.c.dim() == 1,
        None,
    );
    let scale = HomMorphism::new(cur3.clone(), cur3.clone(), corpus::cur3_scale(2))
        .map_err(|e| anyhow!(e))?;
    let obstructed = matches!(
        lift_automorphism(&cov, &scale).map_err(|e| anyhow!(e))?,
        AutLift::Obstructed { .. }
    );
    report.check("lift/cur3_diagonal/scaling_obstructed", obstructed, None);
    let torus =
        HomMorphism::new(cur3.clone(), cur3, corpus::cur3_torus()).map_err(|e| anyhow!(e))?;
    let lifted = lift_automorphism(&cov, &torus).map_err(|e| anyhow!(e))?;
    report.check(
        "lift/cur3_diagonal/torus_lifts",
        lifted.lifted().is_some(),
        None,
    );
    Ok(())
}

fn sdp_battery(report: &mut Report) -> Result<()> {
    for (name, sd) in [("sd1", corpus::sd1()), ("dp", corpus::dp())] {
        let se = sd.split_extension().map_err(|e| anyhow!(e))?;
        let setup = make_setup(&se).map_err(|e| anyhow!(e))?;
        report.check(
            format!("sdp/{name}/projection_section_identity"),
            setup
                .pi_hat
                .matrix
                .matmul(&setup.sigma.matrix)
                .is_identity(),
            None,
        );
        let s123 = check_statement_1_2_3(&setup);
        report.check(
            format!("sdp/{name}/kernel_is_tau_image"),
            s123.kernel_is_tau_image,
            None,
        );
        report.check(
            format!("sdp/{name}/statements_1_2_3"),
            s123.all_pass(),
            Some(format!(
                "decomposition={} injective={} kernel_split={}",
                s123.internal_semidirect, s123.sigma_injective, s123.kernel_decomposition
            )),
        );
        report.check(
            format!("sdp/{name}/action_symmetric"),
            setup.symmetric,
            None,
        );
        let s45 = check_statement_4_5(&setup).map_err(|e| anyhow!(e))?;
        report.check(format!("sdp/{name}/statements_4_5"), s45.all_pass(), None);
        let thm = check_theorem_equivalences(&setup).map_err(|e| anyhow!(e))?;
        report.check(format!("sdp/{name}/equivalences_agree"), thm.agree(), None);
        report.check(
            format!("sdp/{name}/product_comparison_holds"),
            thm.all_true(),
            None,
        );
        if name == "dp" {
            let act = induced_action_uceq_on_ucem(&setup).map_err(|e| anyhow!(e))?;
            let trivial = act
                .lambda()
                .iter()
                .flatten()
                .flatten()
                .chain(act.rho().iter().flatten().flatten())
                .all(|s| s.is_zero());
            let product = setup
                .uce_m
                .alg
                .direct_product(&setup.uce_q.alg)
                .map_err(|e| anyhow!(e))?;
            let ts = setup.tau.matrix.hstack(&setup.sigma.matrix);
            let ts_ok = check_morphism(&ts, &product, &setup.uce_g.alg).valid()
                && ts.rank() == setup.uce_g.alg.dim()
                && product.dim() == setup.uce_g.alg.dim();
            report.check(
                "sdp/dp/direct_product_corollary",
                trivial && ts_ok,
                Some(format!(
                    "induced action trivial: {trivial}; product comparison: {ts_ok}"
                )),
            );
        }
    }
    Ok(())
}

pub fn cmd_corpus(seed: u64, emit: Option<&Path>) -> Result<Outcome> {
    if let Some(dir) = emit {
        let mut report = Report::new(format!("corpus --emit {}", dir.display()));
        emit_corpus(&mut report, dir)?;
        return Ok(Outcome::report_only(report));
    }
    let mut report = Report::new("corpus".to_string());
    report.info("seed", seed);
    for (name, alg) in [
        ("ab2", corpus::ab2()),
        ("nl2", corpus::nl2()),
        ("sl2", corpus::sl2()),
        ("tw2", corpus::tw2()),
        ("heis", corpus::heis()),
    ] {
        let rep = alg.report();
        report.check(format!("validate/{name}/axioms"), rep.valid(), None);
    }
    yau_twist_battery(&mut report, seed);
    for (name, sd) in [("sd1", corpus::sd1()), ("dp", corpus::dp())] {
        semidirect_battery(&mut report, name, &sd)?;
    }
    derivation_battery(&mut report)?;
    annihilation_battery(&mut report);
    uce_battery(&mut report)?;
    lift_battery(&mut report)?;
    sdp_battery(&mut report)?;
    Ok(Outcome::report_only(report))
}
