//! Freely reduced words over an indexed alphabet.
//!
//! Two alphabets are in play: `g0, g1, ...` (the free group the braid
//! group acts on) and `x0, x1, ...` (the same group in the coordinates
//! where the leans-right invariant is easy to state). A [`FreeWord`] is
//! always stored in reduced form, so structural equality is group equality.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    G,
    X,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::G => "g",
            Alphabet::X => "x",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    #[inline]
    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }

    /// `+1` or `-1`.
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub alphabet: Alphabet,
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub const fn new(alphabet: Alphabet, index: u32, sign: Sign) -> Self {
        Letter { alphabet, index, sign }
    }

    pub const fn g(index: u32) -> Self {
        Letter::new(Alphabet::G, index, Sign::Pos)
    }

    pub const fn g_inv(index: u32) -> Self {
        Letter::new(Alphabet::G, index, Sign::Neg)
    }

    pub const fn x(index: u32) -> Self {
        Letter::new(Alphabet::X, index, Sign::Pos)
    }

    pub const fn x_inv(index: u32) -> Self {
        Letter::new(Alphabet::X, index, Sign::Neg)
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter { sign: self.sign.flip(), ..self }
    }

    /// True when `self` followed by `other` freely cancels.
    #[inline]
    pub fn cancels(self, other: Letter) -> bool {
        self.alphabet == other.alphabet && self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.sign.is_pos() {
            f.write_str("-")?;
        }
        write!(f, "{}{}", self.alphabet, self.index)
    }
}

/// Stack-based free reduction with a length cap.
///
/// Pushing a letter either cancels the top of the stack or grows it; the
/// stack is reduced at every point, so the cap bounds live memory.
pub(crate) struct Reducer {
    alphabet: Alphabet,
    stack: Vec<Letter>,
    cap: usize,
}

impl Reducer {
    pub(crate) fn new(alphabet: Alphabet, cap: usize) -> Self {
        Reducer { alphabet, stack: Vec::new(), cap }
    }

    pub(crate) fn with_capacity(alphabet: Alphabet, cap: usize, capacity: usize) -> Self {
        Reducer { alphabet, stack: Vec::with_capacity(capacity.min(cap)), cap }
    }

    #[inline]
    pub(crate) fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.alphabet != self.alphabet {
            return Err(Error::AlphabetMismatch { expected: self.alphabet, found: letter.alphabet });
        }
        match self.stack.last() {
            Some(&top) if top.cancels(letter) => {
                self.stack.pop();
            }
            _ => {
                if self.stack.len() >= self.cap {
                    return Err(Error::ResourceCap { limit: self.cap });
                }
                self.stack.push(letter);
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> FreeWord {
        FreeWord { alphabet: self.alphabet, letters: self.stack }
    }
}

/// A freely reduced word; the empty word is the identity `ε`.
///
/// The alphabet is carried explicitly so that `ε` over `g` and `ε` over
/// `x` stay distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty(alphabet: Alphabet) -> Self {
        FreeWord { alphabet, letters: Vec::new() }
    }

    pub fn generator(alphabet: Alphabet, index: u32) -> Self {
        FreeWord { alphabet, letters: alloc::vec![Letter::new(alphabet, index, Sign::Pos)] }
    }

    /// Freely reduces `letters` into normal form.
    ///
    /// Fails with [`Error::AlphabetMismatch`] if any letter is not over
    /// `alphabet`.
    pub fn reduce<I>(alphabet: Alphabet, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = Letter>,
    {
        Self::reduce_capped(alphabet, letters, usize::MAX)
    }

    /// As [`FreeWord::reduce`], failing with [`Error::ResourceCap`] as soon
    /// as the partially reduced word would exceed `cap` letters.
    pub fn reduce_capped<I>(alphabet: Alphabet, letters: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Letter>,
    {
        let iter = letters.into_iter();
        let mut reducer = Reducer::with_capacity(alphabet, cap, iter.size_hint().0);
        for letter in iter {
            reducer.push(letter)?;
        }
        Ok(reducer.finish())
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    /// The first one or two letters, or `None` for `ε`.
    pub fn leading(&self) -> Option<(Letter, Option<Letter>)> {
        let (&first, rest) = self.letters.split_first()?;
        Some((first, rest.first().copied()))
    }

    /// The reduced product `self · other`.
    pub fn concat(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { expected: self.alphabet, found: other.alphabet });
        }
        // Only the seam between two reduced words can cancel.
        let overlap = self
            .letters
            .iter()
            .rev()
            .zip(&other.letters)
            .take_while(|(a, b)| a.cancels(**b))
            .count();
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * overlap);
        letters.extend_from_slice(&self.letters[..self.len() - overlap]);
        letters.extend_from_slice(&other.letters[overlap..]);
        Ok(FreeWord { alphabet: self.alphabet, letters })
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            alphabet: self.alphabet,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }
}

impl fmt::Display for FreeWord {
    /// Whitespace-separated letters (`g1 -g2`), or `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}
