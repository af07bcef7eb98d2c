//! Randomised and exhaustive checks of the braid and LD-algebra theorems.
//!
//! Each suite draws its cases from a ChaCha stream keyed by `(seed, case
//! index)`, so a report is reproducible from its seed alone and cases can
//! run in parallel without changing the outcome.

use std::fmt;
use std::str::FromStr;

use braid_ld_core::action::{
    act_conj_sequence, act_g, act_x, braid_equal, braid_is_identity, leans_right_at, phi, phi_inv,
};
use braid_ld_core::braid::defining_relations;
use braid_ld_core::ldterm::irreflexivity_witness;
use braid_ld_core::{ActionConfig, Alphabet, BraidLetter, BraidWord, Error, FreeWord, LdTerm, Letter, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error as ThisError;

use crate::gen;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    BracketLd,
    BracketNormalForm,
    Tech1,
    ThatLemma,
    LeansRight,
    DualLemma,
    SigmaN,
    Irreflexivity,
    PhiSquare,
    PhiIso,
    Xi,
    Relations,
}

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::BracketLd,
        Suite::BracketNormalForm,
        Suite::Tech1,
        Suite::ThatLemma,
        Suite::LeansRight,
        Suite::DualLemma,
        Suite::SigmaN,
        Suite::Irreflexivity,
        Suite::PhiSquare,
        Suite::PhiIso,
        Suite::Xi,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BracketLd => "bracket-ld",
            Suite::BracketNormalForm => "bracket-normal-form",
            Suite::Tech1 => "tech1",
            Suite::ThatLemma => "thatlemma",
            Suite::LeansRight => "leansright",
            Suite::DualLemma => "dual-lemma",
            Suite::SigmaN => "sigma-n",
            Suite::Irreflexivity => "irreflexivity",
            Suite::PhiSquare => "phi-square",
            Suite::PhiIso => "phi-iso",
            Suite::Xi => "xi",
            Suite::Relations => "relations",
        }
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub cases: usize,
    pub failures: usize,
    /// Cases abandoned because a word hit the length cap.
    pub inconclusive: usize,
    pub seed: u64,
    pub first_failure: Option<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "cases: {}", self.cases)?;
        writeln!(f, "failures: {}", self.failures)?;
        write!(f, "inconclusive: {}", self.inconclusive)?;
        if let Some(first) = &self.first_failure {
            write!(f, "\nfirst failure: {first}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The cap was hit before the case could be decided.
    Inconclusive,
}

impl Outcome {
    fn check(ok: bool, describe: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(describe())
        }
    }
}

/// Folds `?`-style errors into an outcome: cap hits are inconclusive,
/// anything else is a failure.
fn settle(result: Result<Outcome, Error>) -> Outcome {
    match result {
        Ok(outcome) => outcome,
        Err(Error::ResourceCap { .. }) => Outcome::Inconclusive,
        Err(e) => Outcome::Fail(format!("unexpected error: {e}")),
    }
}

/// The per-case RNG: stream `case` of the ChaCha generator seeded by `seed`.
pub fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

pub fn run(suite: Suite, cases: usize, seed: u64, cfg: &ActionConfig) -> RunReport {
    let outcomes: Vec<Outcome> = match suite {
        Suite::Relations => relations(cfg),
        _ => (0..cases)
            .into_par_iter()
            .map(|case| settle(run_case(suite, &mut case_rng(seed, case), cfg)))
            .collect(),
    };
    let failures = outcomes.iter().filter(|o| matches!(o, Outcome::Fail(_))).count();
    let inconclusive = outcomes.iter().filter(|o| **o == Outcome::Inconclusive).count();
    let first_failure = outcomes.iter().enumerate().find_map(|(i, o)| match o {
        Outcome::Fail(msg) => Some(format!("case {i}: {msg}")),
        _ => None,
    });
    RunReport { suite: suite.name().to_string(), cases: outcomes.len(), failures, inconclusive, seed, first_failure }
}

/// Runs a single randomised case.
pub fn run_case<R: Rng>(suite: Suite, rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    match suite {
        Suite::BracketLd => bracket_ld(rng, cfg),
        Suite::BracketNormalForm => bracket_normal_form(rng, cfg),
        Suite::Tech1 => tech1(rng, cfg),
        Suite::ThatLemma => that_lemma(rng, cfg),
        Suite::LeansRight => leans_right(rng, cfg),
        Suite::DualLemma => dual_lemma(rng, cfg),
        Suite::SigmaN => sigma_n(rng, cfg),
        Suite::Irreflexivity => irreflexivity(rng, cfg),
        Suite::PhiSquare => phi_square(rng, cfg),
        Suite::PhiIso => phi_iso(rng),
        Suite::Xi => xi(rng, cfg),
        Suite::Relations => Ok(Outcome::Pass),
    }
}

const BRACKET_LEN: usize = 8;
const BRACKET_INDEX: u32 = 4;

fn bracket_ld<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let p = gen::braid(rng, BRACKET_LEN, BRACKET_INDEX);
    let q = gen::braid(rng, BRACKET_LEN, BRACKET_INDEX);
    let r = gen::braid(rng, BRACKET_LEN, BRACKET_INDEX);
    let lhs = p.bracket(&q.bracket(&r));
    let rhs = p.bracket(&q).bracket(&p.bracket(&r));
    Ok(Outcome::check(braid_equal(&lhs, &rhs, cfg)?, || {
        format!("p = {p}; q = {q}; r = {r}: p[q[r]] != p[q][p[r]]")
    }))
}

/// `p · s(q) · s²(r) · σ2 · σ1 · s²(q)⁻¹ · s(p)⁻¹`.
pub fn bracket_triple_form(p: &BraidWord, q: &BraidWord, r: &BraidWord) -> BraidWord {
    let sigmas = BraidWord::from(vec![BraidLetter::pos(2), BraidLetter::pos(1)]);
    p.concat(&q.shift(1))
        .concat(&r.shift(2))
        .concat(&sigmas)
        .concat(&q.shift(2).invert())
        .concat(&p.shift(1).invert())
}

fn bracket_normal_form<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let p = gen::braid(rng, BRACKET_LEN, BRACKET_INDEX);
    let q = gen::braid(rng, BRACKET_LEN, BRACKET_INDEX);
    let r = gen::braid(rng, BRACKET_LEN, BRACKET_INDEX);
    let lhs = p.bracket(&q.bracket(&r));
    let rhs = bracket_triple_form(&p, &q, &r);
    Ok(Outcome::check(braid_equal(&lhs, &rhs, cfg)?, || {
        format!("p = {p}; q = {q}; r = {r}: p[q[r]] differs from its expanded form")
    }))
}

fn single_letters(max_index: u32) -> impl Iterator<Item = BraidLetter> {
    (1..=max_index).flat_map(|i| [BraidLetter::pos(i), BraidLetter::neg(i)])
}

fn one(b: BraidLetter) -> BraidWord {
    BraidWord::from(vec![b])
}

const LEMMA_WORD_LEN: usize = 12;
const LEMMA_INDEX: u32 = 6;

fn tech1<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let f = gen::word_starting_with(rng, Letter::g(1), LEMMA_WORD_LEN, LEMMA_INDEX);
    for b in single_letters(LEMMA_INDEX).filter(|&b| b != BraidLetter::neg(1)) {
        let image = act_g(&f, &one(b), cfg)?;
        if image.first() != Some(Letter::g(1)) {
            return Ok(Outcome::Fail(format!("f = {f}; σ = {b}: image {image} does not begin with g1")));
        }
    }
    Ok(Outcome::Pass)
}

/// The leading letter(s) a single braid letter may leave on a reduced
/// `x`-word that starts with a positive letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadingChange {
    /// The leading letter is kept.
    Unchanged(Letter),
    /// `xₘ·xₘ₊ₑ⁻¹·…` under `σₘ₊ₑ^e`: the word now starts with `xₘ₊ₑ`.
    Neighbour(Letter),
    /// `σₘ^{±1}` on `xₘ·…`: the word now starts with `xₘ₊₁·xₘ⁻¹` (resp.
    /// `xₘ₋₁·xₘ⁻¹`).
    Pair(Letter, Letter),
}

/// What the leading-letter lemma predicts for `(f)b`.
pub fn predicted_leading(f: &FreeWord, b: BraidLetter) -> Option<LeadingChange> {
    let (first, second) = f.leading()?;
    if first.alphabet != Alphabet::X || !first.sign.is_pos() {
        return None;
    }
    let m = first.index;
    let k = b.index();
    if k == m {
        let shifted = match b.sign() {
            Sign::Pos => m + 1,
            Sign::Neg => m - 1,
        };
        return Some(LeadingChange::Pair(Letter::x(shifted), Letter::x_inv(m)));
    }
    if let Some(second) = second {
        let up = second == Letter::x_inv(m + 1) && b == BraidLetter::pos(m + 1);
        let down = m >= 1 && second == Letter::x_inv(m - 1) && b.index() == m - 1 && b.sign() == Sign::Neg;
        if up || down {
            return Some(LeadingChange::Neighbour(Letter::x(second.index)));
        }
    }
    Some(LeadingChange::Unchanged(first))
}

fn matches_prediction(image: &FreeWord, predicted: LeadingChange) -> bool {
    match (predicted, image.leading()) {
        (LeadingChange::Unchanged(l) | LeadingChange::Neighbour(l), Some((first, _))) => first == l,
        (LeadingChange::Pair(a, b), Some((first, second))) => first == a && second == Some(b),
        (_, None) => false,
    }
}

fn that_lemma<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let m = rng.gen_range(0..=LEMMA_INDEX);
    let f = gen::word_starting_with(rng, Letter::x(m), LEMMA_WORD_LEN, LEMMA_INDEX);
    for b in single_letters(LEMMA_INDEX + 1) {
        let image = act_x(&f, &one(b), cfg)?;
        let predicted = predicted_leading(&f, b).expect("f starts with a positive x letter");
        if !matches_prediction(&image, predicted) {
            return Ok(Outcome::Fail(format!(
                "f = {f}; σ = {b}: image {image} contradicts predicted {predicted:?}"
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn dual_lemma<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let m = rng.gen_range(0..=LEMMA_INDEX);
    let f = gen::word_starting_with(rng, Letter::x_inv(m), LEMMA_WORD_LEN, LEMMA_INDEX);
    for b in single_letters(LEMMA_INDEX + 1) {
        let image = act_x(&f, &one(b), cfg)?;
        let ok = image
            .first()
            .is_some_and(|l| !l.sign.is_pos() && l.index.abs_diff(m) <= 1);
        if !ok {
            return Ok(Outcome::Fail(format!(
                "f = {f}; σ = {b}: image {image} does not start with x{m}⁻¹ or a neighbour's inverse"
            )));
        }
    }
    Ok(Outcome::Pass)
}

const LEAN_MAX_N: u32 = 5;

fn leans_right<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let n = rng.gen_range(1..=LEAN_MAX_N);
    let top = LEMMA_INDEX + 1;
    let f = gen::leaning_right(rng, n, LEMMA_WORD_LEN, top);
    for b in single_letters(top + 1).filter(|&b| b != BraidLetter::neg(n)) {
        let image = act_x(&f, &one(b), cfg)?;
        if !leans_right_at(&image, n) {
            return Ok(Outcome::Fail(format!("f = {f}; n = {n}; σ = {b}: image {image} does not lean right")));
        }
    }
    Ok(Outcome::Pass)
}

pub const SIGMA_MAX_N: u32 = 4;
pub const SIGMA_LEN: usize = 20;
pub const SIGMA_INDEX: u32 = 8;

/// Checks one σₙ-positive word: it must be non-trivial, and `(xₙ)p` must
/// lean right at `n`.
pub fn check_sigma_positive(p: &BraidWord, n: u32, cfg: &ActionConfig) -> Result<Outcome, Error> {
    if p.sigma_decompose(n).is_none() {
        return Ok(Outcome::Fail(format!("p = {p} is not σ{n}-positive")));
    }
    let image = act_x(&FreeWord::generator(Alphabet::X, n), p, cfg)?;
    if !leans_right_at(&image, n) {
        return Ok(Outcome::Fail(format!("p = {p}; n = {n}: (x{n})p = {image} does not lean right")));
    }
    Ok(Outcome::check(!braid_is_identity(p, cfg)?, || format!("p = {p} is σ{n}-positive but trivial")))
}

fn sigma_n<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let n = rng.gen_range(1..=SIGMA_MAX_N);
    let p = gen::sigma_positive(rng, n, SIGMA_LEN, SIGMA_INDEX);
    check_sigma_positive(&p, n, cfg)
}

pub const IRREFLEXIVITY_SIZE: usize = 10;
pub const IRREFLEXIVITY_K: usize = 3;

/// Samples `P, Q₁ … Q_k` with `k <= 3` and at most 10 leaves in total.
pub fn irreflexivity_sample<R: Rng>(rng: &mut R) -> (LdTerm, Vec<LdTerm>) {
    let k = rng.gen_range(1..=IRREFLEXIVITY_K);
    let total = rng.gen_range(k + 1..=IRREFLEXIVITY_SIZE);
    // Split `total` leaves into k + 1 positive parts.
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, total - 1, k).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(k + 1);
    let mut prev = 0;
    for c in cuts.into_iter().chain([total]) {
        sizes.push(c - prev);
        prev = c;
    }
    let p = gen::term_with_leaves(rng, sizes[0]);
    let qs = sizes[1..].iter().map(|&s| gen::term_with_leaves(rng, s)).collect();
    (p, qs)
}

fn irreflexivity<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let (p, qs) = irreflexivity_sample(rng);
    Ok(Outcome::check(!irreflexivity_witness(&p, &qs, cfg)?, || {
        let qs: Vec<String> = qs.iter().map(|q| q.to_string()).collect();
        format!("P = {p}; Qs = [{}]: P equals ((P Q1) ...) Qk", qs.join(", "))
    }))
}

fn phi_square<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let bounds = gen::Bounds::default();
    let f = gen::reduced_word(rng, Alphabet::X, bounds.word_len, bounds.word_index);
    let p = gen::braid(rng, bounds.braid_len, bounds.braid_index);
    let direct = act_x(&f, &p, cfg)?;
    let via_g = phi_inv(&act_g(&phi(&f)?, &p, cfg)?)?;
    Ok(Outcome::check(direct == via_g, || format!("f = {f}; p = {p}: {direct} != {via_g}")))
}

pub const PHI_ISO_LEN: usize = 12;
pub const PHI_ISO_INDEX: u32 = 8;

fn phi_iso<R: Rng>(rng: &mut R) -> Result<Outcome, Error> {
    let x = gen::reduced_word(rng, Alphabet::X, PHI_ISO_LEN, PHI_ISO_INDEX);
    let g = gen::reduced_word(rng, Alphabet::G, PHI_ISO_LEN, PHI_ISO_INDEX);
    let x_back = phi_inv(&phi(&x)?)?;
    let g_back = phi(&phi_inv(&g)?)?;
    Ok(Outcome::check(x_back == x && g_back == g, || format!("x-word {x} -> {x_back}; g-word {g} -> {g_back}")))
}

pub const XI_STRANDS: u32 = 8;

fn xi<R: Rng>(rng: &mut R, cfg: &ActionConfig) -> Result<Outcome, Error> {
    let p = gen::braid(rng, gen::Bounds::default().braid_len, XI_STRANDS - 1);
    let gens: Vec<FreeWord> = (1..=XI_STRANDS).map(|j| FreeWord::generator(Alphabet::G, j)).collect();
    let conj = act_conj_sequence(&gens, &p.reverse(), cfg)?;
    for (g, lhs) in gens.iter().zip(&conj) {
        let rhs = act_g(g, &p, cfg)?;
        if *lhs != rhs {
            return Ok(Outcome::Fail(format!("p = {p}: conjugation gives {lhs}, action on {g} gives {rhs}")));
        }
    }
    Ok(Outcome::Pass)
}

pub const RELATION_INDEX: u32 = 6;
pub const RELATION_GENERATORS: u32 = 8;

/// Every defining relation with indices `<= 6` against `g0 … g8`.
fn relations(cfg: &ActionConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (u, v) in defining_relations(RELATION_INDEX) {
        for j in 0..=RELATION_GENERATORS {
            let g = FreeWord::generator(Alphabet::G, j);
            out.push(settle((|| {
                let (a, b) = (act_g(&g, &u, cfg)?, act_g(&g, &v, cfg)?);
                Ok(Outcome::check(a == b, || format!("{u} = {v} fails on {g}: {a} vs {b}")))
            })()));
        }
    }
    out
}
