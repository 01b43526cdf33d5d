use thiserror::Error;

use crate::chain::{Endo, EndoError, PointSet};
use crate::enumeration::EnumError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Endo(#[from] EndoError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error("invalid fixed set {set} on a chain of size {n}: {reason}")]
    InvalidFixedSet {
        set: PointSet,
        n: usize,
        reason: &'static str,
    },
    #[error("{endo} is not idempotent")]
    NotIdempotent { endo: Endo },
    #[error("{lo} and {hi} are not adjacent, non-consecutive jump points of {endo}")]
    NotAdjacentJumps { endo: Endo, lo: usize, hi: usize },
    #[error("gap index {index} out of range ({gaps} gaps between fixed points)")]
    GapOutOfRange { index: usize, gaps: usize },
    #[error("fixed points {lo} and {hi} are consecutive; there is no gap")]
    ConsecutiveFixedPoints { lo: usize, hi: usize },
    #[error("invalid type descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("out of bounds: {0}")]
    Bounds(String),
    #[error("members must be pairwise distinct; {0} repeats")]
    DuplicateMember(Endo),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
