//! Ideal calculus in `A(q, s, n) = k[t]/t^q ⊗ k[x_1, …, x_n]/𝔪^s`.
//!
//! Ideals are linear subspaces stable under the monomials; every comparison
//! is made on reduced echelon bases. The colon by `x_1` is a linear preimage
//! and serves as the reference for the dechargeable closed forms.

mod dechargeable;
mod ideal;
mod ring;

use thiserror::Error;

pub use dechargeable::{
    dechargeable_colon, dechargeable_restrict_colon, shifted_quotient, DechargeableIdeal,
};
pub use ideal::{
    assemble_graded, colon_x1, graded_decomposition, is_staircase_ideal, monomial_ideal, restrict,
    translated_ideal, StaircaseIdealChecker, TruncIdeal,
};
pub use ring::{TruncElement, TruncRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot restrict A(q={q}, s={s}) to (p={p}, u={u})")]
    BadTruncation { p: u32, u: u32, q: u32, s: u32 },
    #[error("x_1^{beta} does not divide {detail}")]
    NotDivisible { beta: u32, detail: String },
    #[error("not a dechargeable presentation: {0}")]
    InvalidDechargeable(String),
}
