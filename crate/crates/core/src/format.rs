//! Plain-text algebra documents.
//!
//! ```text
//! superalgebra L9
//! even x1 x2
//! odd x3 x4
//! [x3,x3] = x1
//! [x4,x4] = x2
//! [x3,x4] = 1/2 x1 + 1/2 x2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Unlisted brackets are
//! zero and each listed `[a,b]` also fixes `[b,a]` by graded skew-symmetry.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::Scalar;
use crate::superalg::{format_vector, koszul, Axiom, SuperAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `{0}`")]
    MissingHeader(&'static str),
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("basis name `{0}` is used twice")]
    DuplicateName(String),
    #[error("invalid basis name `{0}`")]
    InvalidName(String),
    #[error("bracket [{0},{1}] is given twice")]
    DuplicateBracket(String, String),
    #[error("grading violation in [{0},{1}]")]
    GradingViolation(String, String),
    #[error("skew inconsistency in [{0},{1}]")]
    SkewInconsistency(String, String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("Jacobi identity fails on ({0})")]
    Jacobi(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

fn parse_rational(tok: &str) -> Option<Scalar> {
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (tok, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || !den.is_none_or(digits) {
        return None;
    }
    let n: num_bigint::BigInt = num.parse().ok()?;
    let d: num_bigint::BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => 1.into(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Scalar::new(n, d))
}

fn looks_numeric(tok: &str) -> bool {
    tok.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '/')
}

fn valid_name(tok: &str) -> bool {
    !tok.is_empty()
        && !looks_numeric(tok)
        && !tok.contains(|c: char| c.is_whitespace() || "[],=+;#".contains(c))
}

/// Parses `c1 n1 + c2 n2 - n3 ...` over the named basis.
pub fn parse_combination(
    text: &str,
    index: &HashMap<&str, usize>,
    n: usize,
    line: usize,
) -> Result<Vec<Scalar>, ParseError> {
    let mut tokens: Vec<String> = Vec::new();
    for raw in text.split_whitespace() {
        let mut rest = raw;
        while let Some(c) = rest.chars().next().filter(|c| *c == '+' || *c == '-') {
            let after = &rest[1..];
            // keep `-1/2` together as a coefficient
            if c == '-' && after.starts_with(|d: char| d.is_ascii_digit()) {
                break;
            }
            tokens.push(c.to_string());
            rest = after;
        }
        if !rest.is_empty() {
            tokens.push(rest.to_string());
        }
    }
    if tokens.is_empty() {
        return err(line, ParseErrorKind::Syntax("empty right-hand side".into()));
    }
    let mut out = vec![Scalar::zero(); n];
    if tokens == ["0"] {
        return Ok(out);
    }
    let mut i = 0;
    let mut first = true;
    while i < tokens.len() {
        let mut sign = Scalar::from_integer(1.into());
        match tokens[i].as_str() {
            "+" | "-" => {
                if tokens[i] == "-" {
                    sign = -sign;
                }
                i += 1;
            }
            _ if !first => return err(line, ParseErrorKind::Syntax(format!("expected + or - before `{}`", tokens[i]))),
            _ => {}
        }
        first = false;
        let Some(tok) = tokens.get(i) else {
            return err(line, ParseErrorKind::Syntax("dangling sign".into()));
        };
        let mut coeff = Scalar::from_integer(1.into());
        if looks_numeric(tok) {
            coeff = parse_rational(tok).ok_or_else(|| ParseError {
                line,
                kind: ParseErrorKind::MalformedRational(tok.clone()),
            })?;
            i += 1;
        }
        let Some(name) = tokens.get(i) else {
            return err(line, ParseErrorKind::Syntax("coefficient without basis name".into()));
        };
        if name == "+" || name == "-" {
            return err(line, ParseErrorKind::Syntax("coefficient without basis name".into()));
        }
        let Some(&k) = index.get(name.as_str()) else {
            return err(line, ParseErrorKind::UnknownName(name.clone()));
        };
        out[k] += sign * coeff;
        i += 1;
    }
    Ok(out)
}

/// Strict parse: the result passes [`SuperAlgebra::validate`].
pub fn parse(doc: &str) -> Result<SuperAlgebra, ParseError> {
    parse_with(doc, true)
}

/// Like [`parse`] but keeps brackets that violate grading or the Jacobi
/// identity, so such tables can still be loaded and inspected.
pub fn parse_lenient(doc: &str) -> Result<SuperAlgebra, ParseError> {
    parse_with(doc, false)
}

fn parse_with(doc: &str, strict: bool) -> Result<SuperAlgebra, ParseError> {
    let mut lines = doc
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut header = |key: &'static str| -> Result<(usize, Vec<String>), ParseError> {
        let Some((no, l)) = lines.next() else {
            return err(doc.lines().count() + 1, ParseErrorKind::MissingHeader(key));
        };
        let mut toks = l.split_whitespace();
        if toks.next() != Some(key) {
            return err(no, ParseErrorKind::MissingHeader(key));
        }
        Ok((no, toks.map(str::to_string).collect()))
    };
    let (no, name) = header("superalgebra")?;
    if name.len() != 1 {
        return err(no, ParseErrorKind::Syntax("expected exactly one algebra name".into()));
    }
    let (even_line, even) = header("even")?;
    let (odd_line, odd) = header("odd")?;
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (k, (nm, line)) in even
        .iter()
        .map(|n| (n, even_line))
        .chain(odd.iter().map(|n| (n, odd_line)))
        .enumerate()
    {
        if !valid_name(nm) {
            return err(line, ParseErrorKind::InvalidName(nm.clone()));
        }
        if index.insert(nm.as_str(), k).is_some() {
            return err(line, ParseErrorKind::DuplicateName(nm.clone()));
        }
    }
    let mut a = SuperAlgebra::abelian(name[0].clone(), even.clone(), odd.clone());
    let n = a.n();
    let names = a.basis_names().to_vec();
    let mut given: HashMap<(usize, usize), Vec<Scalar>> = HashMap::new();
    let mut last = odd_line;
    for (no, l) in lines {
        last = no;
        let Some((lhs, rhs)) = l.split_once('=') else {
            return err(no, ParseErrorKind::Syntax("expected `[a,b] = ...`".into()));
        };
        let lhs = lhs.trim();
        let Some(inner) = lhs.strip_prefix('[').and_then(|s| s.strip_suffix(']')) else {
            return err(no, ParseErrorKind::Syntax(format!("expected a bracket, found `{lhs}`")));
        };
        let Some((x, y)) = inner.split_once(',') else {
            return err(no, ParseErrorKind::Syntax(format!("expected two names in `{lhs}`")));
        };
        let (x, y) = (x.trim(), y.trim());
        let i = *index.get(x).ok_or_else(|| ParseError { line: no, kind: ParseErrorKind::UnknownName(x.into()) })?;
        let j = *index.get(y).ok_or_else(|| ParseError { line: no, kind: ParseErrorKind::UnknownName(y.into()) })?;
        let value = parse_combination(rhs, &index, n, no)?;
        let pair = || (names[i].clone(), names[j].clone());
        if given.contains_key(&(i, j)) {
            return err(no, ParseErrorKind::DuplicateBracket(pair().0, pair().1));
        }
        let target = a.parity(i) + a.parity(j);
        if strict && value.iter().enumerate().any(|(k, c)| !c.is_zero() && a.parity(k) != target) {
            return err(no, ParseErrorKind::GradingViolation(pair().0, pair().1));
        }
        let s = -koszul(a.parity(i), a.parity(j));
        let mirror: Vec<Scalar> = value.iter().map(|c| c * &s).collect();
        let consistent = if i == j { mirror == value } else { given.get(&(j, i)).is_none_or(|g| *g == mirror) };
        if !consistent {
            return err(no, ParseErrorKind::SkewInconsistency(pair().0, pair().1));
        }
        given.insert((i, j), value.clone());
        a = a.with_bracket(i, j, value);
    }
    if strict {
        if let Some(v) = a.validate().into_iter().find(|v| v.axiom == Axiom::Jacobi) {
            return err(last, ParseErrorKind::Jacobi(v.names.join(",")));
        }
    }
    Ok(a)
}

/// Canonical document: brackets `[x_i, x_j]` with `i <= j` in
/// lexicographic order, zero brackets omitted.
pub fn print(a: &SuperAlgebra) -> String {
    Printed(a).to_string()
}

struct Printed<'a>(&'a SuperAlgebra);

impl fmt::Display for Printed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0;
        let names = a.basis_names();
        let e = a.dim().even;
        writeln!(f, "superalgebra {}", a.name())?;
        let line = |key: &str, part: &[String]| {
            if part.is_empty() {
                key.to_string()
            } else {
                format!("{key} {}", part.join(" "))
            }
        };
        writeln!(f, "{}", line("even", &names[..e]))?;
        writeln!(f, "{}", line("odd", &names[e..]))?;
        for i in 0..a.n() {
            for j in i..a.n() {
                let v = a.bracket_basis(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    writeln!(f, "[{},{}] = {}", names[i], names[j], format_vector(names, v))?;
                }
            }
        }
        Ok(())
    }
}
