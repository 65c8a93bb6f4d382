use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word string")]
    EmptyWord,
    #[error("illegal character {ch:?} at position {pos}; only '+' and '-' are allowed")]
    IllegalCharacter { ch: char, pos: usize },
    #[error("word length {0} is outside 1..=64")]
    InvalidLength(usize),
    #[error("mask {mask:#x} has bits set at or above position {n}")]
    MaskOutOfRange { n: usize, mask: u64 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{a} is not a unit modulo {n}")]
    NotUnit { a: i64, n: usize },
    #[error("{d} does not divide {n}")]
    NotDivisor { d: usize, n: usize },
    #[error("{what} is {value}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("the identity word cannot be a codeword")]
    IdentityInCode,
    #[error("duplicate codeword {0}")]
    DuplicateWord(String),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("code supports overlap at position {0}")]
    OverlappingSupports(usize),
    #[error("codes in a disjoint-union product must be P(T)-codes; code {0} is not")]
    NotPtCode(usize),
    #[error("decimation groups need n >= 2")]
    DecimationNeedsTwo,
    #[error("index {value} out of range 0..={max}")]
    OutOfRange { value: usize, max: usize },
    #[error("{0} is not a word of weight n-1")]
    NotBaseWord(String),
    #[error("empty set")]
    EmptySet,
    #[error("structure constant depends on the witness word: {0}")]
    WitnessDependent(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("two constructions disagree: {0}")]
    ConstructionMismatch(String),
}
