//! Combinatorial codes on the Boolean lattice.
//!
//! The crate works with *codes* (sets of binary words), their *motifs*
//! (patterns over {0, 1, *} whose varieties sit inside a code), the
//! pseudo-monomial ideal attached to a code together with its canonical form
//! and minimal primes, and the squarefree *polarization* of all of these into
//! a doubled variable space. Deactivated (partial) codes extend the picture
//! with inactive coordinates.
//!
//! Everything is exact and deterministic; enumerations carry explicit
//! desk-scale caps and fail loudly beyond them. The [`oracle`] module holds
//! deliberately naive reference implementations used to cross-check the fast
//! paths, and [`verify`] bundles the property suites built on both.

pub mod code;
pub mod error;
pub mod ideal;
pub mod motif;
pub mod oracle;
pub mod partial;
pub mod polar;
pub mod verify;

pub use code::{all_motifs, max_mot_complement, Code, Word};
pub use error::{Error, Result};
pub use ideal::{
    cf_of_pm_ideal, lagrange, min_primes, motivic_prime, neural_ideal_cf,
    prime_contains_neural_ideal, primary_decomposition, variety_of_neural_ideal, CanonicalForm,
    MotivicPrime, PseudoMonomial, VariableSpace,
};
pub use motif::{Motif, Trit};
pub use partial::{PartialCode, PartialMotif, PartialSym};
pub use polar::{
    bar_polarize_motif, cf_formal_polarized, cf_of_polarized_code, cf_polarized_ideal,
    depolarize_motif, depolarize_partial_motif, formal_polarize, gjs_check, gjs_prime_test,
    max_mot_complement_polarized, max_mot_formal_complement, max_mot_formal_polarized,
    max_mot_polarized, min_primes_formal_polarized, min_primes_polarized, polarize_code,
    polarize_motif, polarize_partial_motif, polarize_pm, GjsCheck,
};
pub use verify::{
    all_ok, code_suite, full_suite, gjs_suite, motif_suite, oracle_suite, pair_suite, Check,
};
