//! Dimensions of linear systems of hypersurfaces in `ℙ^n` with monomial base
//! schemes, and differential Horace certificates for their generic values.
//!
//! The crate is organised bottom-up:
//!
//! * [`staircase`]: finite staircases, slices `T(E, k)` and slice removal
//!   `S(E, n_1, …, n_r)`;
//! * [`trunc_algebra`]: ideals of `k[t]/t^q ⊗ k[x]/𝔪^s`, colon by `x_1`,
//!   restrictions, staircase ideals and dechargeable ideals;
//! * [`geometry`]: conditions matrices and exact dimensions over `F_p`;
//! * [`horace_engine`]: hypothesis checks, residual systems and certificates;
//! * [`oracle`]: independent brute-force recomputations used in tests;
//! * [`cli`]: the JSON front end behind the `horace` binary.

pub mod cli;
pub mod field;
pub mod geometry;
pub mod horace_engine;
pub mod linalg;
pub mod monomials;
pub mod oracle;
pub mod staircase;
pub mod trunc_algebra;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use staircase::{Staircase, StaircaseError};
