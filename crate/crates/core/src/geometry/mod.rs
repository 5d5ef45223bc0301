//! Linear systems of degree-`d` forms on `ℙ^n` with monomial base schemes.
//!
//! Dimensions are ranks of exact conditions matrices over `F_p`. The divisor
//! `D` is always the hyperplane `{X_1 = 0}`, and containment of `rD` is
//! imposed by restricting the columns to monomials divisible by `X_1^r`.

mod conditions;
mod expansion;
mod presets;
mod spec;

use thiserror::Error;

pub use conditions::{
    column_count, column_monomials, conditions_matrix, dimension, virtual_dimension,
    ConditionsMatrix, DimensionReport, RowLabel,
};
pub use expansion::{local_expansion, Form, LocalChart};
pub use presets::Preset;
pub use spec::{specialize_onto_divisor, Position, RealizedPlacement, SchemePlacement, SystemSpec};

use crate::field::FieldError;
use crate::staircase::StaircaseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("scheme {scheme} lies on the hyperplane X_0 = 0")]
    ChartViolation { scheme: usize },
    #[error("scheme {scheme}: expected n or n + 1 coordinates, got {len}")]
    BadCoordinates { scheme: usize, len: usize },
    #[error("scheme {scheme}: bad frame: {reason}")]
    BadFrame { scheme: usize, reason: String },
    #[error("scheme {scheme} lies on D but its frame's first coordinate does not cut out D")]
    FrameNotAligned { scheme: usize },
    #[error("scheme {scheme}: offset {offset} exceeds the divisor multiplicity {r}")]
    BadOffset { scheme: usize, offset: u32, r: u32 },
    #[error("scheme {scheme} has a positive offset but does not lie on D")]
    OffsetOffDivisor { scheme: usize },
    #[error("scheme {scheme}: staircase lives in ℕ^{found}, expected ℕ^{expected}")]
    StaircaseDimension {
        scheme: usize,
        found: usize,
        expected: usize,
    },
    #[error("scheme {index} is not in generic position")]
    AlreadySpecial { index: usize },
    #[error("no scheme with index {index}")]
    NoSuchScheme { index: usize },
    #[error("projective dimension must be at least 1")]
    ZeroDimension,
    #[error("form is not homogeneous of a single degree")]
    NotHomogeneous,
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
