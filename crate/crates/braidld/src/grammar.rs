//! Text forms of words, braids and terms.
//!
//! * free words: `g3 -g1 x0`-style tokens, `-` marks an inverse letter;
//! * braids: signed integers, `2 -1` is `σ2·σ1⁻¹`;
//! * terms: `x` or `(T T)`, whitespace-insensitive, fully parenthesised.
//!
//! Empty input is `ε` for words and braids. The literal `ε` is accepted
//! too, so printed output parses back.

use braid_ld_core::{Alphabet, BraidLetter, BraidWord, FreeWord, LdTerm, Letter, Sign};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown alphabet {0:?} (expected g or x)")]
    Alphabet(String),
    #[error("malformed letter {token:?} (expected {alphabet}<k> or -{alphabet}<k>)")]
    Letter { token: String, alphabet: Alphabet },
    #[error("malformed braid letter {0:?} (expected a nonzero integer)")]
    BraidLetter(String),
    #[error("malformed number {0:?}")]
    Number(String),
    #[error("malformed term: {0}")]
    Term(String),
}

pub fn parse_alphabet(token: &str) -> Result<Alphabet, ParseError> {
    match token {
        "g" | "G" => Ok(Alphabet::G),
        "x" | "X" => Ok(Alphabet::X),
        _ => Err(ParseError::Alphabet(token.to_string())),
    }
}

fn is_epsilon(tokens: &[&str]) -> bool {
    matches!(tokens, ["ε"])
}

fn split<S: AsRef<str>>(tokens: &[S]) -> Vec<&str> {
    tokens.iter().flat_map(|t| t.as_ref().split_whitespace()).collect()
}

pub fn parse_letter(token: &str, alphabet: Alphabet) -> Result<Letter, ParseError> {
    let bad = || ParseError::Letter { token: token.to_string(), alphabet };
    let (sign, rest) = match token.strip_prefix('-') {
        Some(rest) => (Sign::Neg, rest),
        None => (Sign::Pos, token),
    };
    let prefix = alphabet.to_string();
    let digits = rest.strip_prefix(prefix.as_str()).ok_or_else(bad)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let index = digits.parse::<u32>().map_err(|_| bad())?;
    Ok(Letter::new(alphabet, index, sign))
}

/// Parses and freely reduces a word. Each element of `tokens` may itself
/// hold several whitespace-separated letters.
pub fn parse_free_word<S: AsRef<str>>(alphabet: Alphabet, tokens: &[S]) -> Result<FreeWord, ParseError> {
    let tokens = split(tokens);
    if is_epsilon(&tokens) {
        return Ok(FreeWord::empty(alphabet));
    }
    let letters = tokens
        .iter()
        .map(|t| parse_letter(t, alphabet))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FreeWord::reduce(alphabet, letters).expect("letters parsed over one alphabet"))
}

pub fn parse_braid<S: AsRef<str>>(tokens: &[S]) -> Result<BraidWord, ParseError> {
    let tokens = split(tokens);
    if is_epsilon(&tokens) {
        return Ok(BraidWord::empty());
    }
    tokens
        .iter()
        .map(|t| {
            let v: i64 = t.parse().map_err(|_| ParseError::BraidLetter(t.to_string()))?;
            BraidLetter::from_signed(v).map_err(|_| ParseError::BraidLetter(t.to_string()))
        })
        .collect()
}

pub fn parse_number<T: std::str::FromStr>(token: &str) -> Result<T, ParseError> {
    token.parse().map_err(|_| ParseError::Number(token.to_string()))
}

struct TermParser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.chars.peek().is_none()
    }

    fn term(&mut self) -> Result<LdTerm, ParseError> {
        self.skip_ws();
        match self.chars.next() {
            Some((_, 'x')) => Ok(LdTerm::leaf()),
            Some((_, '(')) => {
                let left = self.term()?;
                let right = self.term()?;
                self.skip_ws();
                match self.chars.next() {
                    Some((_, ')')) => Ok(LdTerm::apply(left, right)),
                    Some((at, c)) => Err(ParseError::Term(format!(
                        "expected ')' at offset {at}, found {c:?} (applications take exactly two terms)"
                    ))),
                    None => Err(ParseError::Term("unclosed '('".into())),
                }
            }
            Some((at, c)) => Err(ParseError::Term(format!("unexpected {c:?} at offset {at}"))),
            None => Err(ParseError::Term("unexpected end of input".into())),
        }
    }
}

/// Parses a whitespace-separated list of terms, e.g. `x (x x) ((x x) x)`.
pub fn parse_terms(input: &str) -> Result<Vec<LdTerm>, ParseError> {
    let mut parser = TermParser { chars: input.char_indices().peekable() };
    let mut out = Vec::new();
    while !parser.at_end() {
        out.push(parser.term()?);
    }
    Ok(out)
}

pub fn parse_term(input: &str) -> Result<LdTerm, ParseError> {
    match parse_terms(input)?.as_slice() {
        [t] => Ok(t.clone()),
        [] => Err(ParseError::Term("empty input".into())),
        ts => Err(ParseError::Term(format!("expected one term, found {}", ts.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_words() {
        let w = parse_free_word(Alphabet::G, &["g1", "-g1"]).unwrap();
        assert!(w.is_empty());
        let w = parse_free_word(Alphabet::X, &["x2 -x10", "x0"]).unwrap();
        assert_eq!(w.letters(), &[Letter::x(2), Letter::x_inv(10), Letter::x(0)]);
        assert!(parse_free_word::<&str>(Alphabet::G, &[]).unwrap().is_empty());
        assert!(parse_free_word(Alphabet::G, &["ε"]).unwrap().is_empty());
        for bad in ["x1", "g", "g-1", "--g1", "g1a", "g+1"] {
            assert!(parse_free_word(Alphabet::G, &[bad]).is_err(), "{bad}");
        }
    }

    #[test]
    fn braids() {
        assert_eq!(parse_braid(&["1", "2", "-1"]).unwrap(), BraidWord::from_signed(&[1, 2, -1]).unwrap());
        assert!(parse_braid::<&str>(&[]).unwrap().is_empty());
        assert!(parse_braid(&["ε"]).unwrap().is_empty());
        assert!(parse_braid(&["0"]).is_err());
        assert!(parse_braid(&["s1"]).is_err());
        assert!(parse_braid(&["1.5"]).is_err());
    }

    #[test]
    fn terms() {
        let t = parse_term(" ( x(x  x) )").unwrap();
        assert_eq!(t, LdTerm::apply(LdTerm::leaf(), LdTerm::apply(LdTerm::leaf(), LdTerm::leaf())));
        assert_eq!(parse_term("x").unwrap(), LdTerm::leaf());
        assert_eq!(parse_terms("x (x x) x").unwrap().len(), 3);
        for bad in ["", "(x)", "(x x x)", "(x x", "y", "x x", ")"] {
            assert!(parse_term(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        let t = parse_term("((x x) (x (x x)))").unwrap();
        assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        let w = parse_free_word(Alphabet::G, &["g1 -g2 g0"]).unwrap();
        assert_eq!(parse_free_word(Alphabet::G, &[w.to_string()]).unwrap(), w);
        let p = parse_braid(&["3 -1 2"]).unwrap();
        assert_eq!(parse_braid(&[p.to_string()]).unwrap(), p);
    }
}
