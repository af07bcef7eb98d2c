//! Braid words over the generators `σ1, σ2, ...`.
//!
//! A [`BraidWord`] is a written word, not a group element. Nothing here
//! applies braid relations or even free cancellation implicitly, because
//! σₙ-positivity is a property of the word as written. Group-level
//! equality lives in [`crate::action`].

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::freegroup::Sign;
use crate::Result;

/// `σᵢ` or `σᵢ⁻¹`, with `i >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidLetter {
    index: u32,
    sign: Sign,
}

impl BraidLetter {
    pub fn new(index: u32, sign: Sign) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidBraidIndex);
        }
        Ok(BraidLetter { index, sign })
    }

    /// `σᵢ`. Panics if `index == 0`.
    pub fn pos(index: u32) -> Self {
        Self::new(index, Sign::Pos).expect("braid generators are indexed from 1")
    }

    /// `σᵢ⁻¹`. Panics if `index == 0`.
    pub fn neg(index: u32) -> Self {
        Self::new(index, Sign::Neg).expect("braid generators are indexed from 1")
    }

    /// From the signed-integer notation: `k` is `σₖ`, `-k` is `σₖ⁻¹`.
    pub fn from_signed(value: i64) -> Result<Self> {
        let index = u32::try_from(value.unsigned_abs()).map_err(|_| Error::InvalidBraidIndex)?;
        let sign = if value < 0 { Sign::Neg } else { Sign::Pos };
        Self::new(index, sign)
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Self {
        BraidLetter { index: self.index, sign: self.sign.flip() }
    }

    pub fn shifted(self, k: u32) -> Self {
        BraidLetter { index: self.index + k, sign: self.sign }
    }

    pub fn to_signed(self) -> i64 {
        i64::from(self.index) * i64::from(self.sign.as_i32())
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl FromIterator<BraidLetter> for BraidWord {
    fn from_iter<I: IntoIterator<Item = BraidLetter>>(iter: I) -> Self {
        BraidWord { letters: iter.into_iter().collect() }
    }
}

impl From<Vec<BraidLetter>> for BraidWord {
    fn from(letters: Vec<BraidLetter>) -> Self {
        BraidWord { letters }
    }
}

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord::default()
    }

    /// Builds a word from signed integers (`[1, -2]` is `σ1·σ2⁻¹`).
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        values.iter().map(|&v| BraidLetter::from_signed(v)).collect()
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    /// Word concatenation; no cancellation.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// The `k`-fold shift `σᵢ ↦ σᵢ₊ₖ`.
    pub fn shift(&self, k: u32) -> BraidWord {
        self.letters.iter().map(|l| l.shifted(k)).collect()
    }

    /// Reverses the letters, keeping signs (an anti-automorphism).
    pub fn reverse(&self) -> BraidWord {
        self.letters.iter().rev().copied().collect()
    }

    /// The inverse word: reversed with every sign flipped.
    pub fn invert(&self) -> BraidWord {
        self.letters.iter().rev().map(|l| l.inverse()).collect()
    }

    /// Explicit free cancellation of adjacent `σᵢσᵢ⁻¹` pairs. Never called
    /// implicitly by anything else in this crate.
    pub fn free_cancel(&self) -> BraidWord {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top == l.inverse() => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord { letters: stack }
    }

    /// The Dehornoy bracket `p[q] = p · s(q) · σ1 · s(p)⁻¹`.
    pub fn bracket(&self, q: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(2 * self.len() + q.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.extend(q.letters.iter().map(|l| l.shifted(1)));
        letters.push(BraidLetter::pos(1));
        letters.extend(self.letters.iter().rev().map(|l| l.shifted(1).inverse()));
        BraidWord { letters }
    }

    /// Largest generator index used, `0` for `ε`.
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }

    /// True if the word contains some `σₙ` and no `σₙ⁻¹`.
    pub fn is_sigma_positive(&self, n: u32) -> bool {
        let mut seen = false;
        for l in &self.letters {
            if l.index == n {
                if !l.sign.is_pos() {
                    return false;
                }
                seen = true;
            }
        }
        seen
    }

    /// Splits a σₙ-positive word at its first `σₙ`.
    ///
    /// Returns `None` if the word has no `σₙ` or has a `σₙ⁻¹`.
    pub fn sigma_decompose(&self, n: u32) -> Option<PositiveDecomposition> {
        if !self.is_sigma_positive(n) {
            return None;
        }
        let at = self.letters.iter().position(|l| l.index == n)?;
        Some(PositiveDecomposition {
            p1: self.letters[..at].iter().copied().collect(),
            n,
            p2: self.letters[at + 1..].iter().copied().collect(),
        })
    }
}

impl fmt::Display for BraidWord {
    /// Signed integers separated by spaces, or `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A witness `p = p1 · σₙ · p2` where `p1` avoids `σₙ^{±1}` and `p2`
/// avoids `σₙ⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveDecomposition {
    pub p1: BraidWord,
    pub n: u32,
    pub p2: BraidWord,
}

impl PositiveDecomposition {
    pub fn reassemble(&self) -> BraidWord {
        let mut letters = Vec::with_capacity(self.p1.len() + 1 + self.p2.len());
        letters.extend_from_slice(self.p1.letters());
        letters.push(BraidLetter::pos(self.n));
        letters.extend_from_slice(self.p2.letters());
        BraidWord { letters }
    }
}

/// The defining relations between generators of index at most
/// `max_index`, as pairs of words naming the same braid: `σᵢσⱼ = σⱼσᵢ`
/// for `|i-j| > 1` and `σᵢσⱼσᵢ = σⱼσᵢσⱼ` for `|i-j| = 1`.
pub fn defining_relations(max_index: u32) -> Vec<(BraidWord, BraidWord)> {
    let mut out = Vec::new();
    for i in 1..=max_index {
        for j in i + 1..=max_index {
            let (a, b) = (BraidLetter::pos(i), BraidLetter::pos(j));
            if j - i > 1 {
                out.push((BraidWord::from(alloc::vec![a, b]), BraidWord::from(alloc::vec![b, a])));
            } else {
                out.push((
                    BraidWord::from(alloc::vec![a, b, a]),
                    BraidWord::from(alloc::vec![b, a, b]),
                ));
            }
        }
    }
    out
}
