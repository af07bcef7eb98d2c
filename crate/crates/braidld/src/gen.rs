//! Random samplers for words, braids and terms.
//!
//! Every sampler takes the RNG explicitly, so a suite seeded per case is
//! reproducible case by case.

use braid_ld_core::{Alphabet, BraidLetter, BraidWord, FreeWord, LdTerm, Letter, Sign};
use rand::Rng;

/// Size limits for sampled inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub braid_len: usize,
    pub braid_index: u32,
    pub word_len: usize,
    pub word_index: u32,
    pub term_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { braid_len: 12, braid_index: 6, word_len: 12, word_index: 6, term_size: 7 }
    }
}

pub fn sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

pub fn braid_letter<R: Rng + ?Sized>(rng: &mut R, max_index: u32) -> BraidLetter {
    let index = rng.gen_range(1..=max_index);
    BraidLetter::new(index, sign(rng)).expect("index >= 1")
}

/// A braid word of length `0..=max_len`.
pub fn braid<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_index: u32) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| braid_letter(rng, max_index)).collect()
}

/// A σₙ-positive word of length `1..=max_len` with indices in
/// `1..=max_index`: every `σₙ^{±1}` is forced positive and at least one
/// is planted.
pub fn sigma_positive<R: Rng + ?Sized>(rng: &mut R, n: u32, max_len: usize, max_index: u32) -> BraidWord {
    assert!(n >= 1 && n <= max_index && max_len >= 1);
    let len = rng.gen_range(1..=max_len);
    let planted = rng.gen_range(0..len);
    (0..len)
        .map(|k| {
            if k == planted {
                return BraidLetter::pos(n);
            }
            let l = braid_letter(rng, max_index);
            if l.index() == n {
                BraidLetter::pos(n)
            } else {
                l
            }
        })
        .collect()
}

pub fn letter<R: Rng + ?Sized>(rng: &mut R, alphabet: Alphabet, max_index: u32) -> Letter {
    Letter::new(alphabet, rng.gen_range(0..=max_index), sign(rng))
}

/// Extends `prefix` (assumed reduced) with random letters, never
/// appending a letter that would cancel, up to `len` letters total.
pub fn extend_reduced<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: Alphabet,
    mut prefix: Vec<Letter>,
    len: usize,
    max_index: u32,
) -> FreeWord {
    while prefix.len() < len {
        let l = letter(rng, alphabet, max_index);
        if prefix.last().is_some_and(|last| last.cancels(l)) {
            continue;
        }
        prefix.push(l);
    }
    FreeWord::reduce(alphabet, prefix).expect("single alphabet")
}

/// A reduced word of length `0..=max_len`.
pub fn reduced_word<R: Rng + ?Sized>(rng: &mut R, alphabet: Alphabet, max_len: usize, max_index: u32) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    extend_reduced(rng, alphabet, Vec::new(), len, max_index)
}

/// A reduced word of length `1..=max_len` whose first letter is `first`.
pub fn word_starting_with<R: Rng + ?Sized>(rng: &mut R, first: Letter, max_len: usize, max_index: u32) -> FreeWord {
    let len = rng.gen_range(1..=max_len.max(1));
    extend_reduced(rng, first.alphabet, vec![first], len, max_index)
}

/// A reduced `x`-word that leans right at `n`: it starts with `xₘ`, or
/// with `xₙ·xₘ⁻¹`, for some `n < m <= max_index`.
pub fn leaning_right<R: Rng + ?Sized>(rng: &mut R, n: u32, max_len: usize, max_index: u32) -> FreeWord {
    assert!(n < max_index && max_len >= 2);
    let m = rng.gen_range(n + 1..=max_index);
    let prefix = if rng.gen_bool(0.5) { vec![Letter::x(m)] } else { vec![Letter::x(n), Letter::x_inv(m)] };
    let len = rng.gen_range(prefix.len()..=max_len);
    extend_reduced(rng, Alphabet::X, prefix, len, max_index)
}

/// A uniformly shaped random binary tree with exactly `leaves` leaves.
pub fn term_with_leaves<R: Rng + ?Sized>(rng: &mut R, leaves: usize) -> LdTerm {
    assert!(leaves >= 1);
    if leaves == 1 {
        return LdTerm::leaf();
    }
    let left = rng.gen_range(1..leaves);
    LdTerm::apply(term_with_leaves(rng, left), term_with_leaves(rng, leaves - left))
}

/// A random term with `1..=max_size` leaves.
pub fn term<R: Rng + ?Sized>(rng: &mut R, max_size: usize) -> LdTerm {
    let leaves = rng.gen_range(1..=max_size.max(1));
    term_with_leaves(rng, leaves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use braid_ld_core::action::leans_right_at;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samplers_respect_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let n = rng.gen_range(1..=4);
            let p = sigma_positive(&mut rng, n, 20, 8);
            assert!(p.is_sigma_positive(n) && p.len() <= 20 && p.max_index() <= 8);

            let f = leaning_right(&mut rng, n, 12, 8);
            assert!(leans_right_at(&f, n), "{f} at {n}");

            let w = word_starting_with(&mut rng, Letter::g(1), 12, 6);
            assert_eq!(w.first(), Some(Letter::g(1)));
            assert!(w.len() <= 12);

            let t = term(&mut rng, 7);
            assert!((1..=7).contains(&t.size()));
        }
    }

    #[test]
    fn same_seed_same_samples() {
        let a = braid(&mut ChaCha8Rng::seed_from_u64(9), 12, 6);
        let b = braid(&mut ChaCha8Rng::seed_from_u64(9), 12, 6);
        assert_eq!(a, b);
    }
}
