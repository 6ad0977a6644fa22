//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by group construction, linear algebra and the complexes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("multiplication table is not square")]
    NotSquare,
    #[error("multiplication table entry {0} out of range")]
    EntryOutOfRange(usize),
    #[error("multiplication table has no identity element")]
    NoIdentity,
    #[error("multiplication table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse")]
    MissingInverse(usize),
    #[error("group labels are not distinct")]
    DuplicateLabels,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeds the size cap of {0} elements")]
    SizeCap(usize),
    #[error("unsupported preset: {0}")]
    UnsupportedPreset(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("degree {degree} outside the window {lo}..{hi}")]
    Window { degree: i32, lo: i32, hi: i32 },
    #[error("estimated size {estimate} exceeds the cost cap {cap}")]
    CostCap { estimate: u128, cap: u128 },
    #[error("image is not contained in the kernel (the differential does not square to zero)")]
    ImageNotInKernel,
    #[error("element is not a cocycle")]
    NotACocycle,
    #[error("element is not supported on class {0}")]
    ClassMismatch(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
