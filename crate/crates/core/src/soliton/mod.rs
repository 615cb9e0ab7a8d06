//! Algebraic Ricci solitons: the generic linear test, the closed-form
//! criteria of the catalog, and sweeps comparing the two.

pub mod sample;
pub mod solve;
pub mod theorem;

pub use sample::{
    cross_validate, cross_validate_with, soundness_sweep, CrossValidationReport, Discrepancy, SampleConfig,
    SampleKind, SoundnessReport,
};
pub use solve::{soliton_solve, SolitonResult, SolitonSolver};
pub use theorem::{
    predicted_derivation_is_derivation, theorem, theorem_predicate, LinExpr, PredicateOutcome, Reading, Source,
    TheoremPredicate,
};
