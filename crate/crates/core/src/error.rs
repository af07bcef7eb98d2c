use core::fmt;

use crate::freegroup::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Letters from both alphabets were mixed in one word.
    AlphabetMismatch { expected: Alphabet, found: Alphabet },
    /// A reduced word grew past the configured maximum length.
    ResourceCap { limit: usize },
    /// Braid generators are indexed from 1.
    InvalidBraidIndex,
    /// A braid letter touched a position the sequence does not have.
    PositionOutOfRange { index: u32, len: usize },
    /// The inverse step of the partial action on term sequences cannot
    /// be taken at this (1-based) position.
    InverseNotApplicable { position: u32 },
    EmptySequence,
    InvalidConfig,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlphabetMismatch { expected, found } => {
                write!(f, "alphabet mismatch: expected {expected}, found {found}")
            }
            Error::ResourceCap { limit } => {
                write!(f, "reduced word length exceeds cap of {limit} letters")
            }
            Error::InvalidBraidIndex => f.write_str("braid generator index must be at least 1"),
            Error::PositionOutOfRange { index, len } => write!(
                f,
                "braid letter with index {index} needs positions {index} and {} but sequence has {len}",
                index + 1
            ),
            Error::InverseNotApplicable { position } => write!(
                f,
                "inverse step not applicable at position {position}: no left factor matches"
            ),
            Error::EmptySequence => f.write_str("expected a nonempty sequence"),
            Error::InvalidConfig => f.write_str("max_word_length must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}
