//! Terms of the free left-distributive algebra on one generator `x`.
//!
//! A term is a binary tree of applications; `(P Q)` is written `PQ` in
//! the algebra and satisfies `a(bc) = (ab)(ac)` up to LD equality. Two
//! notions of equality coexist: `==` is tree identity, [`ld_equal`] is
//! equality in the algebra, decided by evaluating both sides into the
//! braid group with [`LdTerm::chi`].

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::action::{braid_equal, ActionConfig};
use crate::braid::BraidWord;
use crate::error::Error;
use crate::freegroup::Sign;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LdTerm {
    /// The generator `x`.
    Leaf,
    Apply(Arc<LdTerm>, Arc<LdTerm>),
}

impl LdTerm {
    pub fn leaf() -> Self {
        LdTerm::Leaf
    }

    pub fn apply(left: LdTerm, right: LdTerm) -> Self {
        LdTerm::Apply(Arc::new(left), Arc::new(right))
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            LdTerm::Leaf => 1,
            LdTerm::Apply(l, r) => l.size() + r.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LdTerm::Leaf => 0,
            LdTerm::Apply(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// The bracket homomorphism with base `r`: `x ↦ r`, `PQ ↦ χ(P)[χ(Q)]`.
    pub fn chi(&self, r: &BraidWord) -> BraidWord {
        match self {
            LdTerm::Leaf => r.clone(),
            LdTerm::Apply(p, q) => p.chi(r).bracket(&q.chi(r)),
        }
    }
}

impl fmt::Display for LdTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LdTerm::Leaf => f.write_str("x"),
            LdTerm::Apply(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// Decides `s = t` in the free LD algebra by comparing `χ(s)` and `χ(t)`
/// in the braid group. Any base `r` gives the same answer; `ε` keeps the
/// braid words shortest.
pub fn ld_equal(s: &LdTerm, t: &LdTerm, r: &BraidWord, cfg: &ActionConfig) -> Result<bool> {
    if s == t {
        return Ok(true);
    }
    braid_equal(&s.chi(r), &t.chi(r), cfg)
}

/// `((P·Q₁)·…)·Qₖ`, the shape of a left-division witness `P <_L Q`.
pub fn left_prefix(p: &LdTerm, qs: &[LdTerm]) -> Result<LdTerm> {
    if qs.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(qs.iter().fold(p.clone(), |acc, q| LdTerm::apply(acc, q.clone())))
}

/// Tests `P = ((P·Q₁)·…)·Qₖ` in the free LD algebra.
///
/// Irreflexivity of left division says this is never true, so a `true`
/// here is a counterexample.
pub fn irreflexivity_witness(p: &LdTerm, qs: &[LdTerm], cfg: &ActionConfig) -> Result<bool> {
    let q = left_prefix(p, qs)?;
    ld_equal(p, &q, &BraidWord::empty(), cfg)
}

/// An eventually constant sequence `(t₁, …, t_N, tail, tail, …)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdSequence {
    terms: Vec<LdTerm>,
    tail: LdTerm,
}

impl LdSequence {
    pub fn new(terms: Vec<LdTerm>, tail: LdTerm) -> Self {
        LdSequence { terms, tail }
    }

    /// `(tail, tail, …)`.
    pub fn constant(tail: LdTerm) -> Self {
        LdSequence { terms: Vec::new(), tail }
    }

    pub fn terms(&self) -> &[LdTerm] {
        &self.terms
    }

    pub fn tail(&self) -> &LdTerm {
        &self.tail
    }

    /// The term at 1-based `position`.
    pub fn get(&self, position: usize) -> &LdTerm {
        position
            .checked_sub(1)
            .and_then(|i| self.terms.get(i))
            .unwrap_or(&self.tail)
    }

    fn ensure_len(&mut self, len: usize) {
        while self.terms.len() < len {
            self.terms.push(self.tail.clone());
        }
    }

    /// Componentwise LD equality, including the tails.
    pub fn ld_equivalent(&self, other: &LdSequence, cfg: &ActionConfig) -> Result<bool> {
        let eps = BraidWord::empty();
        if !ld_equal(&self.tail, &other.tail, &eps, cfg)? {
            return Ok(false);
        }
        let len = self.terms.len().max(other.terms.len());
        for pos in 1..=len {
            if !ld_equal(self.get(pos), other.get(pos), &eps, cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The partial action of a braid word.
    ///
    /// `σᵢ` sends the pair at positions `(i, i+1)` to `(bᵢbᵢ₊₁, bᵢ)`.
    /// `σᵢ⁻¹` needs the pair `(c, d)` to have `c = (L R)` with `L` LD-equal
    /// to `d`, and produces `(d, R)`; otherwise it fails with
    /// [`Error::InverseNotApplicable`].
    pub fn act(&self, p: &BraidWord, cfg: &ActionConfig) -> Result<LdSequence> {
        let mut out = self.clone();
        let eps = BraidWord::empty();
        for &b in p.letters() {
            let i = b.index() as usize;
            out.ensure_len(i + 1);
            let (lo, hi) = (i - 1, i);
            match b.sign() {
                Sign::Pos => {
                    let bi = out.terms[lo].clone();
                    let bj = core::mem::replace(&mut out.terms[hi], bi.clone());
                    out.terms[lo] = LdTerm::apply(bi, bj);
                }
                Sign::Neg => {
                    let (c, d) = (&out.terms[lo], &out.terms[hi]);
                    let right = match c {
                        LdTerm::Apply(left, right) if ld_equal(left, d, &eps, cfg)? => {
                            LdTerm::clone(right)
                        }
                        _ => return Err(Error::InverseNotApplicable { position: b.index() }),
                    };
                    out.terms[lo] = d.clone();
                    out.terms[hi] = right;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LdSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            write!(f, "{t}, ")?;
        }
        write!(f, "{}, …", self.tail)
    }
}

/// Free function form of [`LdSequence::act`].
pub fn sequence_act(seq: &LdSequence, p: &BraidWord, cfg: &ActionConfig) -> Result<LdSequence> {
    seq.act(p, cfg)
}
