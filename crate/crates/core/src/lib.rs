//! Braid-group and free-group machinery for deciding word problems.
//!
//! * [`freegroup`]: freely reduced words over the `g` and `x` alphabets.
//! * [`braid`]: braid words, shift, reversal and the Dehornoy bracket.
//! * [`action`]: the Artin action on free groups, the `g`/`x` change of
//!   coordinates, and the triviality / equality deciders built on it.
//! * [`ldterm`]: terms of the free monogenic left-distributive algebra,
//!   their evaluation into braids and the resulting equality decider.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod action;
pub mod braid;
mod error;
pub mod freegroup;
pub mod ldterm;
mod quotient;

pub use action::ActionConfig;
pub use braid::{BraidLetter, BraidWord, PositiveDecomposition};
pub use error::Error;
pub use freegroup::{Alphabet, FreeWord, Letter, Sign};
pub use ldterm::{LdSequence, LdTerm};

pub type Result<T, E = Error> = core::result::Result<T, E>;
