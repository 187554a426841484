//! `homleib` — command-line front end for the exact-arithmetic engine for
//! finite-dimensional multiplicative Hom-Leibniz algebras.
//!
//! Input objects are described in versioned plain-text definition files (see
//! `docs/file-format.md` and the `corpus/` directory of this crate). Every
//! command prints a deterministic report of named checks and exits 0 when
//! all of them pass, 1 when any fails, and 2 on malformed input or usage
//! errors.

mod commands;
mod format;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use commands::Outcome;
use report::RenderFormat;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// Aligned plain text.
    Human,
    /// Pretty-printed JSON.
    Machine,
}

#[derive(Parser)]
#[command(
    name = "homleib",
    version,
    about = "Exact computations with finite-dimensional multiplicative Hom-Leibniz algebras",
    long_about = "Exact computations with finite-dimensional multiplicative Hom-Leibniz \
algebras: axiom checking, semidirect products, universal (twisted-)central \
extensions, lifting of automorphisms and derivations along covers, and the \
comparison suite for split extensions.\n\nAll arithmetic is exact (rationals \
or GF(p)); every check is tolerance-zero. Reports are deterministic: \
identical inputs produce byte-identical output."
)]
struct Cli {
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    /// Write the produced definition file here (uce, semidirect, lift-aut,
    /// lift-der); for the other commands, write the report here instead of
    /// stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Seed for the randomized spot checks of `corpus`; the default is
    /// fixed, so runs are reproducible unless you choose your own.
    #[arg(long, global = true, default_value_t = commands::DEFAULT_SEED, value_name = "N")]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and report the structural invariants of a definition file.
    Validate {
        /// Any definition file (algebra, action, split_extension, cover, map).
        file: PathBuf,
    },
    /// Build the universal central extension of a perfect algebra.
    ///
    /// With --out, the extension carrier is written as an algebra file.
    Uce {
        /// Algebra file.
        file: PathBuf,
        /// Build the twisted-central variant (requires the algebra to be
        /// perfect with respect to its twist).
        #[arg(long)]
        alpha: bool,
    },
    /// Build and verify the semidirect product of an action.
    ///
    /// With --out, the product is written as an algebra file.
    Semidirect {
        /// Algebra file for the acted-on (kernel) algebra.
        target: PathBuf,
        /// Algebra file for the acting algebra.
        actor: PathBuf,
        /// Action file with the two coefficient tensors.
        action: PathBuf,
    },
    /// Verify that a split extension is equivalent to the semidirect product
    /// of its induced action.
    CheckSplit {
        /// split_extension file.
        file: PathBuf,
    },
    /// Lift an automorphism of the base of a cover, or report the obstruction.
    ///
    /// With --out, the lifted map is written as a map file.
    LiftAut {
        /// Cover file (source algebra, base algebra, covering map).
        cover: PathBuf,
        /// Map file with the automorphism of the base.
        map: PathBuf,
    },
    /// Lift a derivation of the base of a cover, or report the obstruction.
    ///
    /// With --out, the lifted map is written as a map file.
    LiftDer {
        /// Cover file (source algebra, base algebra, covering map).
        cover: PathBuf,
        /// Map file with the derivation of the base.
        map: PathBuf,
    },
    /// Run the full split-extension comparison suite: kernel identities,
    /// decomposition statements, and the four-way equivalence.
    CheckS5 {
        /// split_extension file.
        file: PathBuf,
    },
    /// Run the built-in example checks, or emit the example files.
    Corpus {
        /// Write the shipped definition files into this directory instead of
        /// running the checks.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Validate { file } => commands::cmd_validate(file),
        Command::Uce { file, alpha } => commands::cmd_uce(file, *alpha),
        Command::Semidirect {
            target,
            actor,
            action,
        } => commands::cmd_semidirect(target, actor, action),
        Command::CheckSplit { file } => commands::cmd_check_split(file),
        Command::LiftAut { cover, map } => commands::cmd_lift_aut(cover, map),
        Command::LiftDer { cover, map } => commands::cmd_lift_der(cover, map),
        Command::CheckS5 { file } => commands::cmd_check_s5(file),
        Command::Corpus { emit } => commands::cmd_corpus(cli.seed, emit.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let render = match cli.format {
        FormatArg::Human => RenderFormat::Human,
        FormatArg::Machine => RenderFormat::Machine,
    };
    match run(&cli) {
        Ok(outcome) => {
            let rendered = outcome.report.render(render);
            match (&cli.out, &outcome.artifact) {
                (Some(path), Some(artifact)) => {
                    if let Err(e) = std::fs::write(path, format::serialize(artifact)) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    print!("{rendered}");
                }
                (Some(path), None) => {
                    if let Err(e) = std::fs::write(path, &rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                (None, _) => print!("{rendered}"),
            }
            ExitCode::from(u8::try_from(outcome.report.exit_code()).unwrap_or(1))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
