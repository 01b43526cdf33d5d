//! Monotone self-maps of a finite chain `C_n = {0 < 1 < ... < n-1}` under
//! pointwise maximum and composition.
//!
//! Products read left to right: `(a · b)(x) = b(a(x))`.

pub mod chain;
pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod idempotent;
pub mod report;
pub mod roots;
pub mod segment;
pub mod tables;
pub mod verify;

pub use chain::{
    parse_endo, Endo, EndoError, FixedPointSet, JumpPointSet, LiteralForm, OmegaPower, PointSet,
};
pub use enumeration::{
    all_endos, count_endos, partition_by_omega, EndoFilter, EndoStream, DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use report::{ClaimId, Status, VerificationReport, Witness};
pub use roots::{ClassReport, TypeDescriptor};
