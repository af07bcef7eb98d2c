//! The Artin action evaluated in a finite quotient of the free group.
//!
//! Fix a homomorphism `h` from the free group on `g0, g1, …` to
//! `SL(2, 𝔽_p)`, `p = 2⁶¹ − 1`. The tuple `(h((gⱼ)p))ⱼ` is computed from
//! the right end of `p` with the conjugation (Hurwitz) moves
//! `(A, B) ↦ (A·B·A⁻¹, A)` for `σᵢ` and `(A, B) ↦ (B, B⁻¹·A·B)` for
//! `σᵢ⁻¹`, so its cost is linear in the length of `p` no matter how long
//! the free-group images get.
//!
//! Equal braids always give equal tuples. Different tuples therefore
//! certify different braids; equal tuples prove nothing and callers fall
//! back to the exact free-group computation.

use alloc::vec::Vec;

use crate::braid::BraidWord;
#[cfg(test)]
use crate::freegroup::{Alphabet, FreeWord};

const P: u64 = (1 << 61) - 1;

#[inline]
fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let s = lo + (hi & P) + (hi >> 61);
    let s = (s & P) + (s >> 61);
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    reduce(u128::from(a) * u128::from(b))
}

#[inline]
fn neg(a: u64) -> u64 {
    if a == 0 {
        0
    } else {
        P - a
    }
}

/// A 2×2 matrix of determinant one over `𝔽_p`, row major.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Mat([u64; 4]);

impl Mat {
    #[cfg(test)]
    const IDENTITY: Mat = Mat([1, 0, 0, 1]);

    fn mul(self, o: Mat) -> Mat {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Mat([
            add(mul(a, e), mul(b, g)),
            add(mul(a, f), mul(b, h)),
            add(mul(c, e), mul(d, g)),
            add(mul(c, f), mul(d, h)),
        ])
    }

    /// Inverse of a determinant-one matrix.
    fn inv(self) -> Mat {
        let [a, b, c, d] = self.0;
        Mat([d, neg(b), neg(c), a])
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `h(gⱼ)`: a fixed pseudo-random product of two elementary matrices.
pub(crate) fn generator_image(j: u32) -> Mat {
    let a = splitmix(2 * u64::from(j)) % (P - 1) + 1;
    let b = splitmix(2 * u64::from(j) + 1) % (P - 1) + 1;
    Mat([1, a, 0, 1]).mul(Mat([1, 0, b, 1]))
}

/// `h` applied to a word over `g`.
#[cfg(test)]
pub(crate) fn eval(f: &FreeWord) -> Mat {
    debug_assert_eq!(f.alphabet(), Alphabet::G);
    f.letters().iter().fold(Mat::IDENTITY, |acc, l| {
        let m = generator_image(l.index);
        acc.mul(if l.sign.is_pos() { m } else { m.inv() })
    })
}

/// `(h((gⱼ)p))` for `j` in `0..=top`.
pub(crate) fn images(p: &BraidWord, top: u32) -> Vec<Mat> {
    let top = top.max(p.max_index() + 1);
    let mut t: Vec<Mat> = (0..=top).map(generator_image).collect();
    for b in p.letters().iter().rev() {
        let i = b.index() as usize;
        let (a, c) = (t[i], t[i + 1]);
        if b.sign().is_pos() {
            t[i] = a.mul(c).mul(a.inv());
            t[i + 1] = a;
        } else {
            t[i] = c;
            t[i + 1] = c.inv().mul(a).mul(c);
        }
    }
    t
}

/// True when `p` and `q` act differently on the quotient, which proves
/// they are different braids.
pub(crate) fn separated(p: &BraidWord, q: &BraidWord) -> bool {
    let top = p.max_index().max(q.max_index()) + 1;
    images(p, top) != images(q, top)
}
