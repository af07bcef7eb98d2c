//! The Artin action of braid words on free groups.
//!
//! Braids act on the right: `(f)p₁p₂ = ((f)p₁)p₂`, so the letters of a
//! braid word are applied left to right. On the `g` alphabet `σᵢ` sends
//!
//! ```text
//! gᵢ   ↦ gᵢ · gᵢ₊₁ · gᵢ⁻¹        gᵢ   ↦ gᵢ₊₁                  (σᵢ⁻¹)
//! gᵢ₊₁ ↦ gᵢ                      gᵢ₊₁ ↦ gᵢ₊₁⁻¹ · gᵢ · gᵢ₊₁
//! ```
//!
//! and fixes every other generator, `g0` included. The `x` alphabet is
//! related to `g` by `xᵢ ↦ g0·g1·…·gᵢ`; in those coordinates
//! `xᵢ ↦ xᵢ₊₁·xᵢ⁻¹·xᵢ₋₁` under `σᵢ` and `xᵢ ↦ xᵢ₋₁·xᵢ⁻¹·xᵢ₊₁` under `σᵢ⁻¹`.
//!
//! The action is faithful, which turns it into a decider: a braid word
//! of maximal index `M` only moves `g1 … g_{M+1}`, so it is trivial
//! exactly when it fixes those.

use alloc::vec::Vec;

use crate::braid::{BraidLetter, BraidWord};
use crate::error::Error;
use crate::freegroup::{Alphabet, FreeWord, Letter, Reducer, Sign};
use crate::quotient;
use crate::Result;

pub const DEFAULT_MAX_WORD_LENGTH: usize = 1_000_000;

/// Limits for computations whose intermediate words can grow
/// exponentially in the braid length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActionConfig {
    max_word_length: usize,
}

impl Default for ActionConfig {
    fn default() -> Self {
        ActionConfig { max_word_length: DEFAULT_MAX_WORD_LENGTH }
    }
}

impl ActionConfig {
    pub fn new(max_word_length: usize) -> Result<Self> {
        if max_word_length == 0 {
            return Err(Error::InvalidConfig);
        }
        Ok(ActionConfig { max_word_length })
    }

    pub fn max_word_length(&self) -> usize {
        self.max_word_length
    }
}

/// Image of a single free-group letter, at most three letters long.
#[derive(Clone, Copy)]
struct Image {
    buf: [Letter; 3],
    len: usize,
}

impl Image {
    fn one(l: Letter) -> Self {
        Image { buf: [l; 3], len: 1 }
    }

    fn three(a: Letter, b: Letter, c: Letter) -> Self {
        Image { buf: [a, b, c], len: 3 }
    }

    fn as_slice(&self) -> &[Letter] {
        &self.buf[..self.len]
    }

    fn inverse(self) -> Self {
        let mut buf = self.buf;
        buf[..self.len].reverse();
        for l in &mut buf[..self.len] {
            *l = l.inverse();
        }
        Image { buf, len: self.len }
    }
}

fn g_image_of_generator(j: u32, b: BraidLetter) -> Image {
    let i = b.index();
    match (b.sign(), j) {
        (Sign::Pos, j) if j == i => Image::three(Letter::g(i), Letter::g(i + 1), Letter::g_inv(i)),
        (Sign::Pos, j) if j == i + 1 => Image::one(Letter::g(i)),
        (Sign::Neg, j) if j == i => Image::one(Letter::g(i + 1)),
        (Sign::Neg, j) if j == i + 1 => {
            Image::three(Letter::g_inv(i + 1), Letter::g(i), Letter::g(i + 1))
        }
        _ => Image::one(Letter::g(j)),
    }
}

fn x_image_of_generator(j: u32, b: BraidLetter) -> Image {
    let i = b.index();
    if j != i {
        return Image::one(Letter::x(j));
    }
    match b.sign() {
        Sign::Pos => Image::three(Letter::x(i + 1), Letter::x_inv(i), Letter::x(i - 1)),
        Sign::Neg => Image::three(Letter::x(i - 1), Letter::x_inv(i), Letter::x(i + 1)),
    }
}

/// The image of one free-group letter under one braid letter.
///
/// Inverse letters map to the inverse of their generator's image.
fn letter_image(l: Letter, b: BraidLetter) -> Image {
    let i = b.index();
    if l.index != i && !(l.alphabet == Alphabet::G && l.index == i + 1) {
        return Image::one(l);
    }
    let img = match l.alphabet {
        Alphabet::G => g_image_of_generator(l.index, b),
        Alphabet::X => x_image_of_generator(l.index, b),
    };
    if l.sign.is_pos() {
        img
    } else {
        img.inverse()
    }
}

fn act(f: &FreeWord, p: &BraidWord, alphabet: Alphabet, cfg: &ActionConfig) -> Result<FreeWord> {
    if f.alphabet() != alphabet {
        return Err(Error::AlphabetMismatch { expected: alphabet, found: f.alphabet() });
    }
    let mut current = f.clone();
    for &b in p.letters() {
        // Reduce after every braid letter to keep the cap meaningful.
        let mut out = Reducer::with_capacity(alphabet, cfg.max_word_length, current.len() + 8);
        for &l in current.letters() {
            for &m in letter_image(l, b).as_slice() {
                out.push(m)?;
            }
        }
        current = out.finish();
    }
    Ok(current)
}

/// `(f)p` for `f` over the `g` alphabet.
pub fn act_g(f: &FreeWord, p: &BraidWord, cfg: &ActionConfig) -> Result<FreeWord> {
    act(f, p, Alphabet::G, cfg)
}

/// `(f)p` for `f` over the `x` alphabet, by direct substitution.
///
/// Agrees with `phi_inv(act_g(phi(f), p))`.
pub fn act_x(f: &FreeWord, p: &BraidWord, cfg: &ActionConfig) -> Result<FreeWord> {
    act(f, p, Alphabet::X, cfg)
}

/// The isomorphism `xᵢ ↦ g0·g1·…·gᵢ` from the `x` to the `g` coordinates.
pub fn phi(f: &FreeWord) -> Result<FreeWord> {
    if f.alphabet() != Alphabet::X {
        return Err(Error::AlphabetMismatch { expected: Alphabet::X, found: f.alphabet() });
    }
    let mut out = Reducer::new(Alphabet::G, usize::MAX);
    for &l in f.letters() {
        if l.sign.is_pos() {
            for k in 0..=l.index {
                out.push(Letter::g(k))?;
            }
        } else {
            for k in (0..=l.index).rev() {
                out.push(Letter::g_inv(k))?;
            }
        }
    }
    Ok(out.finish())
}

/// Inverse of [`phi`]: `g0 ↦ x0`, `gᵢ₊₁ ↦ xᵢ⁻¹·xᵢ₊₁`.
pub fn phi_inv(f: &FreeWord) -> Result<FreeWord> {
    if f.alphabet() != Alphabet::G {
        return Err(Error::AlphabetMismatch { expected: Alphabet::G, found: f.alphabet() });
    }
    let mut out = Reducer::new(Alphabet::X, usize::MAX);
    for &l in f.letters() {
        let (a, b) = match l.index {
            0 => (None, Letter::x(0)),
            i => (Some(Letter::x_inv(i - 1)), Letter::x(i)),
        };
        if l.sign.is_pos() {
            if let Some(a) = a {
                out.push(a)?;
            }
            out.push(b)?;
        } else {
            out.push(b.inverse())?;
            if let Some(a) = a {
                out.push(a.inverse())?;
            }
        }
    }
    Ok(out.finish())
}

/// Decides whether `p` is the identity braid.
///
/// Checks that `p` fixes `g1 … g_{M+1}` where `M = max_index(p)`; every
/// other generator is fixed letter by letter.
pub fn braid_is_identity(p: &BraidWord, cfg: &ActionConfig) -> Result<bool> {
    if quotient::separated(p, &BraidWord::empty()) {
        return Ok(false);
    }
    for j in 1..=p.max_index() + 1 {
        let gj = FreeWord::generator(Alphabet::G, j);
        if act_g(&gj, p, cfg)? != gj {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether `p` and `q` are the same braid.
///
/// Equivalent to `braid_is_identity(p · q⁻¹)`: since the action is by
/// bijections, `(gⱼ)p·q⁻¹ = gⱼ` iff `(gⱼ)p = (gⱼ)q`. Comparing the two
/// images directly avoids running the (often much longer) intermediate
/// words of the product.
///
/// Both deciders first compare the action in a finite quotient of the
/// free group, which costs time linear in the braid length. A mismatch
/// there already proves inequality, so the exact (and possibly capped)
/// computation only runs for braids that look equal.
pub fn braid_equal(p: &BraidWord, q: &BraidWord, cfg: &ActionConfig) -> Result<bool> {
    if quotient::separated(p, q) {
        return Ok(false);
    }
    let top = p.max_index().max(q.max_index()) + 1;
    for j in 1..=top {
        let gj = FreeWord::generator(Alphabet::G, j);
        if act_g(&gj, p, cfg)? != act_g(&gj, q, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True if `f` (over `x`) begins with `xₘ`, or with `xₙ·xₘ⁻¹`, for some
/// `m > n`.
pub fn leans_right_at(f: &FreeWord, n: u32) -> bool {
    if f.alphabet() != Alphabet::X {
        return false;
    }
    match f.leading() {
        Some((first, _)) if first.sign.is_pos() && first.index > n => true,
        Some((first, Some(second))) => {
            first.sign.is_pos() && first.index == n && !second.sign.is_pos() && second.index > n
        }
        _ => false,
    }
}

/// The action of `p` on a finite sequence of free-group words equipped
/// with the conjugation operation `a ⋆ b = a·b·a⁻¹`.
///
/// `σᵢ` maps the pair at 1-based positions `(i, i+1)` to `(a·b·a⁻¹, a)`
/// and `σᵢ⁻¹` maps it to `(b, b⁻¹·a·b)`.
pub fn act_conj_sequence(
    fs: &[FreeWord],
    p: &BraidWord,
    cfg: &ActionConfig,
) -> Result<Vec<FreeWord>> {
    let mut seq: Vec<FreeWord> = fs.to_vec();
    let cap = cfg.max_word_length;
    for &b in p.letters() {
        let i = b.index();
        if i as usize + 1 > seq.len() {
            return Err(Error::PositionOutOfRange { index: i, len: seq.len() });
        }
        let (lo, hi) = (i as usize - 1, i as usize);
        let (a, c) = (&seq[lo], &seq[hi]);
        let (new_lo, new_hi) = match b.sign() {
            Sign::Pos => (a.concat(c)?.concat(&a.invert())?, a.clone()),
            Sign::Neg => (c.clone(), c.invert().concat(a)?.concat(c)?),
        };
        if new_lo.len() > cap || new_hi.len() > cap {
            return Err(Error::ResourceCap { limit: cap });
        }
        seq[lo] = new_lo;
        seq[hi] = new_hi;
    }
    Ok(seq)
}
