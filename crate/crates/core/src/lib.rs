//! Exact-arithmetic engine for finite-dimensional multiplicative Hom-Leibniz
//! algebras: structure-constant algebras with a compatible twist map, their
//! actions and semidirect products, universal (α-)central extensions, and
//! lifting of automorphisms and derivations along α-covers.
//!
//! Everything runs over exact fields (arbitrary-precision rationals or
//! GF(p)); every check is tolerance-zero. Validity of user-supplied data is
//! reported, not assumed: constructors check shapes, and the `check_*`
//! routines return pass/fail together with a concrete witness tuple on
//! failure.

pub mod action;
pub mod algebra;
pub mod centext;
pub mod corpus;
pub mod error;
pub mod lifting;
pub mod matrix;
pub mod par;
pub mod quotient;
pub mod scalar;
pub mod sdpuce;
pub mod subspace;

pub use action::{
    action_from_embedding, check_derivation, check_split_equivalence, derivation_to_hom,
    hom_to_derivation, induced_action_from_split, semidirect, ActionReport, Derivation,
    DerivationReport, HomAction, SemidirectProduct, SplitExtension,
};
pub use algebra::{check_morphism, AlgebraReport, HomAlgebra, HomMorphism, MorphismReport};
pub use centext::{
    cover_report, hl1_dim, hl2_of, induced_to_central, is_alpha_central, is_central,
    is_centrally_closed, is_simply_connected, is_superperfect, quotient_cover, relation_generators,
    uce, uce_alpha, uce_alpha_derivation, uce_alpha_functor, uce_functor, CoverReport, Extension,
    UceMode, UceResult,
};
pub use error::{Error, Result};
pub use lifting::{
    check_lift_bijections, induced_base_automorphism, lift_automorphism, lift_derivation,
    make_alpha_cover, AlphaCover, AutLift, DerLift, LiftSampleReport,
};
pub use matrix::Matrix;
pub use quotient::{QuotientSpace, TensorIndex};
pub use scalar::{Field, Scalar};
pub use sdpuce::{
    check_statement_1_2_3, check_statement_4_5, check_theorem_equivalences,
    induced_action_on_ker_pi, induced_action_uceq_on_ucem, make_setup, SdpSetup,
    Statement123Report, Statement45Report, TheoremReport,
};
pub use subspace::Subspace;
