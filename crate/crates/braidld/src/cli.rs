//! Argument dispatch for the `braidld` binary.
//!
//! Arguments are parsed by hand rather than with a flag parser: braid
//! letters such as `-1` and word letters such as `-g2` look like flags, so
//! two-operand commands separate their operands with a literal `--`.
//!
//! Exit codes: `0` success / yes, `1` no (or a property suite found a
//! failure), `2` malformed input, `3` word-length cap exceeded, `4` usage
//! error (unknown command or suite, missing operand), `5` operation not
//! applicable to its input.

use braid_ld_core::action::{act_g, act_x, braid_equal, braid_is_identity, leans_right_at};
use braid_ld_core::ldterm::{ld_equal, LdSequence};
use braid_ld_core::{ActionConfig, Alphabet, BraidWord, Error, FreeWord, LdTerm};
use serde_json::{json, Map, Value};
use thiserror::Error as ThisError;

use crate::grammar::{self, ParseError};
use crate::props::{self, Suite};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_USAGE: i32 = 4;
pub const EXIT_DOMAIN: i32 = 5;

/// Environment variable holding the default word-length cap.
pub const CAP_ENV: &str = "BRAIDLD_MAX_WORD_LENGTH";

pub const DEFAULT_CASES: usize = 200;
pub const DEFAULT_SEED: u64 = 0;

pub const USAGE: &str = "\
usage: braidld [--json] [--max-word-length N] <command> ...

commands:
  reduce <g|x> <word>              freely reduce a word
  act <g|x> <word> -- <braid>      act on a word by a braid
  braid-id <braid>                 is the braid trivial?
  braid-eq <braid> -- <braid>      are the braids equal?
  bracket <braid> -- <braid>       p[q] = p s(q) σ1 s(p)⁻¹
  shift <k> <braid>                σi ↦ σ(i+k)
  reverse <braid>                  reverse the letters
  sigma-check <n> <braid>          σn-positivity witness and checks
  lean <n> <x-word>                does the word lean right at n?
  chi <term> [--base <braid>]      evaluate a term into the braid group
  ld-eq <term> -- <term>           equal in the free LD algebra?
  seq-act <terms> -- <braid>       act on (t1, ..., tk, x, x, ...)
  prop <suite> [--cases N] [--seed S]

words: g1 -g2 ... or x0 -x3 ...; braids: 1 -2 3 (σ1 σ2⁻¹ σ3); terms: x, (T T)
";

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Core(Error::ResourceCap { .. }) => EXIT_CAP,
            CliError::Core(_) => EXIT_DOMAIN,
        }
    }
}

impl From<props::UnknownSuite> for CliError {
    fn from(e: props::UnknownSuite) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// What a command produced, before rendering.
struct Response {
    inputs: Map<String, Value>,
    result: Value,
    text: String,
    exit: i32,
}

impl Response {
    fn new(text: impl Into<String>, result: Value) -> Self {
        Response { inputs: Map::new(), result, text: text.into(), exit: EXIT_YES }
    }

    fn input(mut self, name: &str, value: impl ToString) -> Self {
        self.inputs.insert(name.to_string(), Value::String(value.to_string()));
        self
    }

    fn exit(mut self, code: i32) -> Self {
        self.exit = code;
        self
    }
}

/// Rendered outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Removes `--json` and `--max-word-length N` from `args`, returning the
/// JSON flag and the action limits.
fn extract_options(args: &mut Vec<String>, env_cap: Option<&str>) -> (bool, Result<ActionConfig, CliError>) {
    let mut json = false;
    let mut cap: Result<Option<usize>, CliError> = match env_cap {
        Some(v) => grammar::parse_number::<usize>(v.trim()).map(Some).map_err(Into::into),
        None => Ok(None),
    };
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "--json" => {
                args.remove(i);
                json = true;
            }
            "--max-word-length" => {
                args.remove(i);
                cap = if i < args.len() {
                    let value = args.remove(i);
                    cap.and(grammar::parse_number(&value).map(Some).map_err(Into::into))
                } else {
                    Err(usage("--max-word-length needs a value"))
                };
            }
            _ => i += 1,
        }
    }
    let cfg = cap.and_then(|cap| match cap {
        Some(n) => ActionConfig::new(n).map_err(Into::into),
        None => Ok(ActionConfig::default()),
    });
    (json, cfg)
}

/// Splits `a ... -- b ...` at its single `--`.
fn split_operands(args: &[String]) -> Result<(&[String], &[String]), CliError> {
    let at = args
        .iter()
        .position(|a| a == "--")
        .ok_or_else(|| usage("expected two operands separated by `--`"))?;
    let (left, right) = (&args[..at], &args[at + 1..]);
    if right.iter().any(|a| a == "--") {
        return Err(usage("more than one `--` separator"));
    }
    Ok((left, right))
}

fn first<'a>(args: &'a [String], what: &str) -> Result<(&'a str, &'a [String]), CliError> {
    args.split_first()
        .map(|(h, t)| (h.as_str(), t))
        .ok_or_else(|| usage(format!("missing {what}")))
}

fn yes_no(answer: bool, yes: &str, no: &str) -> Response {
    let text = if answer { yes } else { no };
    Response::new(text, Value::Bool(answer)).exit(if answer { EXIT_YES } else { EXIT_NO })
}

fn joined(args: &[String]) -> String {
    args.join(" ")
}

fn dispatch(command: &str, args: &[String], cfg: &ActionConfig) -> Result<Response, CliError> {
    match command {
        "reduce" => {
            let (alphabet, word) = first(args, "alphabet")?;
            let w = grammar::parse_free_word(grammar::parse_alphabet(alphabet)?, word)?;
            Ok(Response::new(w.to_string(), json!(w.to_string()))
                .input("alphabet", alphabet)
                .input("word", joined(word)))
        }
        "act" => {
            let (left, braid) = split_operands(args)?;
            let (alphabet, word) = first(left, "alphabet")?;
            let alphabet = grammar::parse_alphabet(alphabet)?;
            let f = grammar::parse_free_word(alphabet, word)?;
            let p = grammar::parse_braid(braid)?;
            let image = match alphabet {
                Alphabet::G => act_g(&f, &p, cfg)?,
                Alphabet::X => act_x(&f, &p, cfg)?,
            };
            Ok(Response::new(image.to_string(), json!(image.to_string()))
                .input("alphabet", alphabet)
                .input("word", f)
                .input("braid", p))
        }
        "braid-id" => {
            let p = grammar::parse_braid(args)?;
            Ok(yes_no(braid_is_identity(&p, cfg)?, "identity", "not identity").input("braid", p))
        }
        "braid-eq" => {
            let (l, r) = split_operands(args)?;
            let (p, q) = (grammar::parse_braid(l)?, grammar::parse_braid(r)?);
            Ok(yes_no(braid_equal(&p, &q, cfg)?, "equal", "not equal").input("left", p).input("right", q))
        }
        "bracket" => {
            let (l, r) = split_operands(args)?;
            let (p, q) = (grammar::parse_braid(l)?, grammar::parse_braid(r)?);
            let pq = p.bracket(&q);
            Ok(Response::new(pq.to_string(), json!(pq.to_string())).input("left", p).input("right", q))
        }
        "shift" => {
            let (k, braid) = first(args, "shift amount")?;
            let k: u32 = grammar::parse_number(k)?;
            let p = grammar::parse_braid(braid)?;
            let s = p.shift(k);
            Ok(Response::new(s.to_string(), json!(s.to_string())).input("k", k).input("braid", p))
        }
        "reverse" => {
            let p = grammar::parse_braid(args)?;
            let r = p.reverse();
            Ok(Response::new(r.to_string(), json!(r.to_string())).input("braid", p))
        }
        "sigma-check" => {
            let (n, braid) = first(args, "generator index")?;
            let n: u32 = grammar::parse_number(n)?;
            let p = grammar::parse_braid(braid)?;
            sigma_check(n, &p, cfg).map(|r| r.input("n", n).input("braid", p))
        }
        "lean" => {
            let (n, word) = first(args, "index")?;
            let n: u32 = grammar::parse_number(n)?;
            let f = grammar::parse_free_word(Alphabet::X, word)?;
            let text_yes = format!("leans right at {n}");
            let text_no = format!("does not lean right at {n}");
            Ok(yes_no(leans_right_at(&f, n), &text_yes, &text_no).input("n", n).input("word", f))
        }
        "chi" => {
            let (term_args, base) = match args.iter().position(|a| a == "--base") {
                Some(at) => (&args[..at], grammar::parse_braid(&args[at + 1..])?),
                None => (args, BraidWord::empty()),
            };
            let t = grammar::parse_term(&joined(term_args))?;
            let image = t.chi(&base);
            Ok(Response::new(image.to_string(), json!(image.to_string())).input("term", t).input("base", base))
        }
        "ld-eq" => {
            let (l, r) = split_operands(args)?;
            let (s, t) = (grammar::parse_term(&joined(l))?, grammar::parse_term(&joined(r))?);
            let eq = ld_equal(&s, &t, &BraidWord::empty(), cfg)?;
            Ok(yes_no(eq, "equal", "not equal").input("left", s).input("right", t))
        }
        "seq-act" => {
            let (l, r) = split_operands(args)?;
            let terms = grammar::parse_terms(&joined(l))?;
            let p = grammar::parse_braid(r)?;
            let seq = LdSequence::new(terms, LdTerm::leaf());
            let out = seq.act(&p, cfg)?;
            let items: Vec<String> = out.terms().iter().map(|t| t.to_string()).collect();
            Ok(Response::new(out.to_string(), json!({ "terms": items, "tail": out.tail().to_string() }))
                .input("terms", seq)
                .input("braid", p))
        }
        "prop" => prop(args, cfg),
        other => Err(usage(format!("unknown command {other:?}"))),
    }
}

fn sigma_check(n: u32, p: &BraidWord, cfg: &ActionConfig) -> Result<Response, CliError> {
    if n == 0 {
        return Err(ParseError::Number("0".into()).into());
    }
    let Some(d) = p.sigma_decompose(n) else {
        return Ok(Response::new(format!("not σ{n}-positive"), json!({ "positive": false })).exit(EXIT_NO));
    };
    let image = act_x(&FreeWord::generator(Alphabet::X, n), p, cfg)?;
    let leans = leans_right_at(&image, n);
    let nontrivial = !braid_is_identity(p, cfg)?;
    let text = [
        format!("decomposition: p1 = {}, n = {n}, p2 = {}", d.p1, d.p2),
        format!("image of x{n}: {image}"),
        if nontrivial { "non-trivial".to_string() } else { "trivial".to_string() },
        if leans { format!("leans right at {n}") } else { format!("does not lean right at {n}") },
    ]
    .join("\n");
    let result = json!({
        "positive": true,
        "p1": d.p1.to_string(),
        "n": n,
        "p2": d.p2.to_string(),
        "image": image.to_string(),
        "nontrivial": nontrivial,
        "leans_right": leans,
    });
    let ok = nontrivial && leans;
    Ok(Response::new(text, result).exit(if ok { EXIT_YES } else { EXIT_NO }))
}

fn prop(args: &[String], cfg: &ActionConfig) -> Result<Response, CliError> {
    let (name, mut rest) = first(args, "suite name")?;
    let suite: Suite = name.parse()?;
    let (mut cases, mut seed) = (DEFAULT_CASES, DEFAULT_SEED);
    while let Some((flag, tail)) = rest.split_first() {
        let (value, tail) = first(tail, &format!("value for {flag}"))?;
        match flag.as_str() {
            "--cases" => cases = grammar::parse_number(value)?,
            "--seed" => seed = grammar::parse_number(value)?,
            other => return Err(usage(format!("unknown prop option {other:?}"))),
        }
        rest = tail;
    }
    let report = props::run(suite, cases, seed, cfg);
    let exit = if report.passed() { EXIT_YES } else { EXIT_NO };
    let result = serde_json::to_value(&report).expect("report serialises");
    Ok(Response::new(report.to_string(), result)
        .input("suite", suite)
        .input("cases", cases)
        .input("seed", seed)
        .exit(exit))
}

/// Runs one invocation. `env_cap` is the value of [`CAP_ENV`], if set.
pub fn run<S: AsRef<str>>(argv: &[S], env_cap: Option<&str>) -> Output {
    let mut args: Vec<String> = argv.iter().map(|a| a.as_ref().to_string()).collect();
    let (json, cfg) = extract_options(&mut args, env_cap);
    let command = args.first().cloned().unwrap_or_default();

    let outcome = cfg.and_then(|cfg| {
        let Some((command, rest)) = args.split_first() else {
            return Err(usage("missing command"));
        };
        match command.as_str() {
            "help" | "--help" | "-h" => Ok(Response::new(USAGE.trim_end(), Value::String(USAGE.into()))),
            _ => dispatch(command, rest, &cfg),
        }
    });

    match outcome {
        Ok(r) if json => Output {
            code: r.exit,
            stdout: render_json(&command, Value::Object(r.inputs), r.result, r.exit),
            stderr: String::new(),
        },
        Ok(r) => Output { code: r.exit, stdout: format!("{}\n", r.text), stderr: String::new() },
        Err(e) => {
            let code = e.exit_code();
            let hint = if code == EXIT_USAGE { format!("\n{USAGE}") } else { String::new() };
            let stdout = if json {
                render_json(&command, Value::Object(Map::new()), json!({ "error": e.to_string() }), code)
            } else {
                String::new()
            };
            Output { code, stdout, stderr: format!("error: {e}\n{hint}") }
        }
    }
}

fn render_json(command: &str, inputs: Value, result: Value, exit: i32) -> String {
    let doc = json!({ "command": command, "inputs": inputs, "result": result, "exit": exit });
    format!("{}\n", serde_json::to_string(&doc).expect("json serialises"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Output {
        run(args, None)
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["braid-id", "1", "-1"]).code, EXIT_YES);
        assert_eq!(call(&["braid-id", "1"]).code, EXIT_NO);
        assert_eq!(call(&["braid-id", "1", "x"]).code, EXIT_PARSE);
        assert_eq!(call(&["--max-word-length", "4", "braid-id", "1", "2", "1", "2", "1", "2", "-2", "-1", "-2", "-1", "-2", "-1"]).code, EXIT_CAP);
        assert_eq!(call(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(call(&[]).code, EXIT_USAGE);
        assert_eq!(call(&["braid-eq", "1", "2"]).code, EXIT_USAGE);
        assert_eq!(call(&["seq-act", "x", "--", "-1"]).code, EXIT_DOMAIN);
        assert_eq!(call(&["prop", "no-such-suite"]).code, EXIT_USAGE);
    }

    #[test]
    fn env_cap_applies_and_flag_overrides() {
        let args = ["braid-id", "1", "2", "1", "2", "1", "2", "-2", "-1", "-2", "-1", "-2", "-1"];
        assert_eq!(run(&args, Some("4")).code, EXIT_CAP);
        assert_eq!(run(&args, Some("junk")).code, EXIT_PARSE);
        assert_eq!(run(&args, Some("0")).code, EXIT_DOMAIN);
        let mut with_flag = vec!["--max-word-length", "1000"];
        with_flag.extend(args);
        assert_eq!(run(&with_flag, Some("4")).code, EXIT_YES);
    }

    #[test]
    fn simple_commands() {
        assert_eq!(call(&["reduce", "x", "x1", "-x1", "x1"]).stdout, "x1\n");
        assert_eq!(call(&["act", "g", "g2", "--", "1"]).stdout, "g1\n");
        assert_eq!(call(&["act", "x", "x1", "--", "1"]).stdout, "x2 -x1 x0\n");
        assert_eq!(call(&["bracket", "1", "--"]).stdout, "1 1 -2\n");
        assert_eq!(call(&["shift", "2", "1", "-3"]).stdout, "3 -5\n");
        assert_eq!(call(&["reverse", "1", "-2"]).stdout, "-2 1\n");
        assert_eq!(call(&["chi", "(x (x x))"]).stdout, "2 1\n");
        assert_eq!(call(&["chi", "x", "--base", "2"]).stdout, "2\n");
        assert_eq!(call(&["lean", "1", "x2"]).code, EXIT_YES);
        assert_eq!(call(&["lean", "1", "x1"]).code, EXIT_NO);
        let eq = call(&["ld-eq", "(x", "(x", "x))", "--", "((x x) (x x))"]);
        assert_eq!((eq.code, eq.stdout.as_str()), (EXIT_YES, "equal\n"));
        assert_eq!(call(&["seq-act", "x (x x) x x", "--", "2"]).stdout, "x, ((x x) x), (x x), x, x, …\n");
    }

    #[test]
    fn json_output() {
        let out = call(&["--json", "braid-eq", "1", "--", "2"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["command"], "braid-eq");
        assert_eq!(v["inputs"]["left"], "1");
        assert_eq!(v["result"], false);
        assert_eq!(v["exit"], 1);
        assert_eq!(out.code, 1);

        let err = call(&["reduce", "g", "q1", "--json"]);
        let v: Value = serde_json::from_str(&err.stdout).unwrap();
        assert_eq!(v["exit"], EXIT_PARSE);
        assert!(v["result"]["error"].as_str().unwrap().contains("q1"));
    }

    #[test]
    fn sigma_check_rejects_non_positive_words() {
        let out = call(&["sigma-check", "1", "1", "-1"]);
        assert_eq!((out.code, out.stdout.as_str()), (EXIT_NO, "not σ1-positive\n"));
        assert_eq!(call(&["sigma-check", "0", "1"]).code, EXIT_PARSE);
    }
}
