//! Hypergeometric functions over finite fields: exact character sums,
//! period functions, point counts, zeta factors and an identity checker.

pub mod chars;
pub mod config;
pub mod cyclo;
pub mod error;
pub mod field;
pub mod hyper;
pub mod identities;
pub mod sums;
pub mod varieties;
pub mod zeta;

pub use chars::{MultChar, RationalParam};
pub use cyclo::CycloNum;
pub use error::{Error, Result};
pub use field::{Extension, FieldElement, FiniteField};
