//! Text formats.
//!
//! * OV: a header `n m d`, then `n` vectors of `a` and `m` of `b`, one per
//!   line, as `0101` or `0 1 0 1`.
//! * Strings: a single token of `0`/`1` characters is a binary string,
//!   anything else is whitespace-separated non-negative integers.
//! * Curves: whitespace-separated non-negative integers.
//! * DIMACS CNF.
//! * Transcripts: `key=value` lines, rationals as `p/q` or a bare integer.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use seqhard_core::measures::Symbol;
use seqhard_core::ov::{BitVector, CnfFormula, OvInstance};
use seqhard_core::Rational;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_bits(line: usize, s: &str) -> Result<Vec<bool>, ParseError> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => err(line, format!("expected 0 or 1, found {c:?}")),
        })
        .collect()
}

pub fn parse_ov(text: &str) -> Result<OvInstance, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(ParseError { line: 0, message: "empty OV file".into() })?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().or_else(|_| err(hl, format!("bad header value {t:?}"))))
        .collect::<Result<_, _>>()?;
    let [n, m, d] = dims[..] else {
        return err(hl, "header must be `n m d`");
    };
    let mut vectors = Vec::with_capacity(n + m);
    for (ln, l) in lines.by_ref().take(n + m) {
        let bits = parse_bits(ln, l)?;
        if bits.len() != d {
            return err(ln, format!("expected {d} entries, found {}", bits.len()));
        }
        vectors.push(BitVector::from_bits(&bits));
    }
    if vectors.len() != n + m {
        return err(0, format!("expected {} vectors, found {}", n + m, vectors.len()));
    }
    if let Some((ln, _)) = lines.next() {
        return err(ln, "trailing content after the last vector");
    }
    let b = vectors.split_off(n);
    OvInstance::new(vectors, b).map_err(|e| ParseError { line: 0, message: e.to_string() })
}

pub fn write_ov(inst: &OvInstance) -> String {
    let mut out = format!("{} {} {}\n", inst.n(), inst.m(), inst.d());
    for v in inst.a().iter().chain(inst.b()) {
        out.extend(v.iter().map(|b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

fn parse_integers(text: &str) -> Result<Vec<Symbol>, ParseError> {
    let mut out = Vec::new();
    for (ln, l) in content_lines(text) {
        for t in l.split_whitespace() {
            out.push(t.parse().or_else(|_| err(ln, format!("bad value {t:?}")))?);
        }
    }
    Ok(out)
}

pub fn parse_sequence(text: &str) -> Result<Vec<Symbol>, ParseError> {
    let tokens: Vec<&str> = content_lines(text).flat_map(|(_, l)| l.split_whitespace()).collect();
    match tokens[..] {
        [t] if t.chars().all(|c| c == '0' || c == '1') => Ok(t.bytes().map(|b| (b - b'0') as Symbol).collect()),
        _ => parse_integers(text),
    }
}

pub fn parse_curve(text: &str) -> Result<Vec<Symbol>, ParseError> {
    parse_integers(text)
}

/// Binary sequences as one `0`/`1` token, everything else space-separated.
pub fn write_sequence(s: &[Symbol]) -> String {
    let mut out = if s.iter().all(|&v| v <= 1) {
        s.iter().map(|&v| if v == 1 { '1' } else { '0' }).collect()
    } else {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    };
    out.push('\n');
    out
}

pub fn write_curve(s: &[Symbol]) -> String {
    let mut out = s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if let Some(rest) = l.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let ["cnf", v, c] = parts[..] else {
                return err(ln, "problem line must be `p cnf VARS CLAUSES`");
            };
            let parse = |t: &str| t.parse::<usize>().or_else(|_| err(ln, format!("bad count {t:?}")));
            header = Some((parse(v)?, parse(c)?));
            continue;
        }
        if header.is_none() {
            return err(ln, "clause before the problem line");
        }
        for t in l.split_whitespace() {
            let lit: i32 = t.parse().or_else(|_| err(ln, format!("bad literal {t:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let (vars, count) = header.ok_or(ParseError { line: 0, message: "missing problem line".into() })?;
    if count != clauses.len() {
        return err(0, format!("header declares {count} clauses, found {}", clauses.len()));
    }
    CnfFormula::new(vars, clauses).map_err(|e| ParseError { line: 0, message: e.to_string() })
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.variable_count(), f.clauses().len());
    for c in f.clauses() {
        for l in c {
            write!(out, "{l} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}

/// `p/q`, or the bare numerator when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i128 = q.trim().parse().ok()?;
            let p: i128 = p.trim().parse().ok()?;
            (q != 0).then(|| Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Ordered `key=value` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KeyValues {
    entries: BTreeMap<String, String>,
}

impl KeyValues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: &str, value: impl ToString) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn rational(&self, key: &str) -> Option<Rational> {
        self.get(key).and_then(parse_rational)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut kv = Self::new();
        for (ln, l) in content_lines(text) {
            let Some((k, v)) = l.split_once('=') else {
                return err(ln, "expected key=value");
            };
            kv.insert(k.trim(), v.trim());
        }
        Ok(kv)
    }

    pub fn render(&self) -> String {
        self.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}
