//! Exact arithmetic: integers and rationals, Laurent polynomials, the
//! quotient ring M, cyclotomic fields, Smith normal form, polynomial-matrix
//! determinants, factorisation and the norm test.

pub mod coeff;
pub mod cyclo;
pub mod det;
pub mod factor;
pub mod galois;
pub mod laurent;
pub mod matrix;
pub mod modp;
pub mod norm;
pub mod quot;
pub mod snf;

pub use coeff::{Coeff, Field};
pub use cyclo::CycNum;
pub use factor::{factor, CPoly, Factorization};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use norm::{is_norm, NormVerdict};
pub use quot::QuotRingElem;
pub use snf::{snf, SnfResult};
