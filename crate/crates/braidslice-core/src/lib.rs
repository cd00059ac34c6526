//! Alternating 3-braid closures: string calculus, classical invariants and
//! a twisted-Alexander sliceness obstruction.

pub mod braid;
pub mod branched_cover;
pub mod error;
pub mod exact_algebra;
pub mod known;
pub mod metabolisers;
pub mod seifert;
pub mod string_calculus;
pub mod twisted_alexander;

pub use error::{AlgebraError, PipelineError, StringError};
