use crate::ratio::Ratio;
use thiserror::Error;

/// Everything that can go wrong when building rules, refining partitions
/// or analysing point sets.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("splitting ratios sum to {sum}, expected exactly 1")]
    SumNotOne { sum: Ratio },
    #[error("splitting ratio {value} lies outside (0,1)")]
    NonPositivePart { value: Ratio },
    #[error("a splitting rule needs at least two parts")]
    TrivialRule,
    #[error("refinement would exceed the cap of {cap} intervals")]
    ResourceLimit { cap: usize },
    #[error("interval index {index} out of range 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("empty point set")]
    EmptySet,
    #[error("checkpoint {checkpoint} exceeds sequence length {len}")]
    CheckpointOutOfRange { checkpoint: usize, len: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
