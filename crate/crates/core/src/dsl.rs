//! Line-oriented text format for effect algebras.
//!
//! ```text
//! algebra NAME
//! elements 0 a b 1
//! zero 0
//! one 1
//! sum a b = 1        # one orientation per unordered pair
//! complement a = b   # optional, cross-checked on validation
//! ```
//!
//! Sums are mirrored automatically and the zero row and column are filled in,
//! so only entries between nonzero elements need to be written.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::algebra::{EffectAlgebra, PartialTable, RawAlgebra};
use crate::error::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("label `{0}` declared twice")]
    DuplicateLabel(String),
    #[error("`{0}` given more than once")]
    DuplicateDirective(&'static str),
    #[error("{x} + {y} already given on line {first_line}")]
    DuplicateSum {
        x: String,
        y: String,
        first_line: usize,
    },
    #[error("{x} + {y} = {value} conflicts with {existing} from line {first_line}")]
    ConflictingSum {
        x: String,
        y: String,
        value: String,
        existing: String,
        first_line: usize,
    },
    #[error("complement of {x} declared twice")]
    ConflictingComplement { x: String },
    #[error("missing `{0}` directive")]
    MissingDirective(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{pos}: {kind}")]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumEntry {
    pub x: String,
    pub y: String,
    pub z: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementEntry {
    pub x: String,
    pub y: String,
    pub pos: Pos,
}

/// A parsed, not yet validated, algebra description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub labels: Vec<String>,
    pub zero: String,
    pub one: String,
    pub sums: Vec<SumEntry>,
    pub complements: Vec<ComplementEntry>,
}

impl AlgebraSpec {
    fn index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    /// Full tables: sums mirrored, zero row and column filled where absent.
    pub fn to_raw(&self) -> RawAlgebra {
        let ix = self.index();
        let n = self.labels.len();
        let (zero, one) = (ix[self.zero.as_str()], ix[self.one.as_str()]);
        let mut sum = PartialTable::undefined(n);
        for s in &self.sums {
            let (x, y, z) = (ix[s.x.as_str()], ix[s.y.as_str()], ix[s.z.as_str()]);
            sum.set(x, y, Some(z));
            sum.set(y, x, Some(z));
        }
        for x in 0..n {
            if !sum.is_defined(zero, x) {
                sum.set(zero, x, Some(x));
                sum.set(x, zero, Some(x));
            }
        }
        RawAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            zero,
            one,
            sum,
            declared_complements: self
                .complements
                .iter()
                .map(|c| (ix[c.x.as_str()], ix[c.y.as_str()]))
                .collect(),
        }
    }

    pub fn build(&self) -> Result<EffectAlgebra, Error> {
        Ok(EffectAlgebra::new(&self.to_raw())?)
    }
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in code
        .char_indices()
        .chain(std::iter::once((code.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &code[s..i],
                    col: code[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError {
        pos: Pos { line, col },
        kind,
    }
}

struct Builder {
    name: String,
    start: Pos,
    labels: Option<Vec<String>>,
    index: HashMap<String, usize>,
    zero: Option<String>,
    one: Option<String>,
    sums: Vec<SumEntry>,
    seen_sums: HashMap<(usize, usize), usize>,
    complements: Vec<ComplementEntry>,
}

impl Builder {
    fn new(name: String, start: Pos) -> Self {
        Builder {
            name,
            start,
            labels: None,
            index: HashMap::new(),
            zero: None,
            one: None,
            sums: Vec::new(),
            seen_sums: HashMap::new(),
            complements: Vec::new(),
        }
    }

    fn label(&self, line: usize, t: &Token<'_>) -> Result<usize, ParseError> {
        if self.labels.is_none() {
            return Err(err(
                line,
                t.col,
                ParseErrorKind::Syntax("`elements` must come before any label is used".into()),
            ));
        }
        self.index
            .get(t.text)
            .copied()
            .ok_or_else(|| err(line, t.col, ParseErrorKind::UnknownLabel(t.text.into())))
    }

    fn directive(&mut self, line: usize, toks: &[Token<'_>]) -> Result<(), ParseError> {
        let head = &toks[0];
        let arity = |want: usize, shape: &str| {
            if toks.len() == want {
                Ok(())
            } else {
                let col = toks.get(want).map_or(head.col, |t| t.col);
                Err(err(
                    line,
                    col,
                    ParseErrorKind::Syntax(format!("expected `{shape}`")),
                ))
            }
        };
        match head.text {
            "elements" => {
                if self.labels.is_some() {
                    return Err(err(
                        line,
                        head.col,
                        ParseErrorKind::DuplicateDirective("elements"),
                    ));
                }
                if toks.len() < 2 {
                    return Err(err(
                        line,
                        head.col,
                        ParseErrorKind::Syntax("`elements` needs at least one label".into()),
                    ));
                }
                let mut labels = Vec::new();
                for t in &toks[1..] {
                    if t.text.contains(['=', ',', '{', '}']) {
                        return Err(err(
                            line,
                            t.col,
                            ParseErrorKind::Syntax(format!("`{}` is not a valid label", t.text)),
                        ));
                    }
                    if self
                        .index
                        .insert(t.text.to_string(), labels.len())
                        .is_some()
                    {
                        return Err(err(
                            line,
                            t.col,
                            ParseErrorKind::DuplicateLabel(t.text.into()),
                        ));
                    }
                    labels.push(t.text.to_string());
                }
                self.labels = Some(labels);
            }
            "zero" | "one" => {
                arity(2, &format!("{} LABEL", head.text))?;
                self.label(line, &toks[1])?;
                let (slot, name) = if head.text == "zero" {
                    (&mut self.zero, "zero")
                } else {
                    (&mut self.one, "one")
                };
                if slot.is_some() {
                    return Err(err(
                        line,
                        head.col,
                        ParseErrorKind::DuplicateDirective(name),
                    ));
                }
                *slot = Some(toks[1].text.to_string());
            }
            "sum" => {
                arity(5, "sum X Y = Z")?;
                if toks[3].text != "=" {
                    return Err(err(
                        line,
                        toks[3].col,
                        ParseErrorKind::Syntax("expected `=`".into()),
                    ));
                }
                let x = self.label(line, &toks[1])?;
                let y = self.label(line, &toks[2])?;
                let z = self.label(line, &toks[4])?;
                let key = (x.min(y), x.max(y));
                if let Some(&i) = self.seen_sums.get(&key) {
                    let prev = &self.sums[i];
                    let kind = if self.index[&prev.z] == z {
                        ParseErrorKind::DuplicateSum {
                            x: toks[1].text.into(),
                            y: toks[2].text.into(),
                            first_line: prev.pos.line,
                        }
                    } else {
                        ParseErrorKind::ConflictingSum {
                            x: toks[1].text.into(),
                            y: toks[2].text.into(),
                            value: toks[4].text.into(),
                            existing: prev.z.clone(),
                            first_line: prev.pos.line,
                        }
                    };
                    return Err(err(line, head.col, kind));
                }
                self.seen_sums.insert(key, self.sums.len());
                self.sums.push(SumEntry {
                    x: toks[1].text.into(),
                    y: toks[2].text.into(),
                    z: toks[4].text.into(),
                    pos: Pos {
                        line,
                        col: head.col,
                    },
                });
            }
            "complement" => {
                arity(4, "complement X = Y")?;
                if toks[2].text != "=" {
                    return Err(err(
                        line,
                        toks[2].col,
                        ParseErrorKind::Syntax("expected `=`".into()),
                    ));
                }
                self.label(line, &toks[1])?;
                self.label(line, &toks[3])?;
                if self.complements.iter().any(|c| c.x == toks[1].text) {
                    return Err(err(
                        line,
                        head.col,
                        ParseErrorKind::ConflictingComplement {
                            x: toks[1].text.into(),
                        },
                    ));
                }
                self.complements.push(ComplementEntry {
                    x: toks[1].text.into(),
                    y: toks[3].text.into(),
                    pos: Pos {
                        line,
                        col: head.col,
                    },
                });
            }
            other => {
                return Err(err(
                    line,
                    head.col,
                    ParseErrorKind::Syntax(format!("unknown directive `{other}`")),
                ))
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<AlgebraSpec, ParseError> {
        let missing = |what| {
            err(
                self.start.line,
                self.start.col,
                ParseErrorKind::MissingDirective(what),
            )
        };
        let labels = self.labels.clone().ok_or_else(|| missing("elements"))?;
        let zero = self.zero.clone().ok_or_else(|| missing("zero"))?;
        let one = self.one.clone().ok_or_else(|| missing("one"))?;
        Ok(AlgebraSpec {
            name: self.name,
            labels,
            zero,
            one,
            sums: self.sums,
            complements: self.complements,
        })
    }
}

/// Parses a stream of one or more documents, each opened by `algebra NAME`.
pub fn parse_specs(text: &str) -> Result<Vec<AlgebraSpec>, ParseError> {
    Ok(parse_documents(text)?.into_iter().map(|(_, s)| s).collect())
}

fn parse_documents(text: &str) -> Result<Vec<(Pos, AlgebraSpec)>, ParseError> {
    let mut done = Vec::new();
    let mut current: Option<Builder> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokenize(raw);
        let Some(head) = toks.first() else { continue };
        if head.text == "algebra" {
            if toks.len() != 2 {
                let col = toks.get(2).map_or(head.col, |t| t.col);
                return Err(err(
                    line,
                    col,
                    ParseErrorKind::Syntax("expected `algebra NAME`".into()),
                ));
            }
            if let Some(b) = current.take() {
                done.push((b.start, b.finish()?));
            }
            current = Some(Builder::new(
                toks[1].text.into(),
                Pos {
                    line,
                    col: head.col,
                },
            ));
            continue;
        }
        match current.as_mut() {
            Some(b) => b.directive(line, &toks)?,
            None => {
                return Err(err(
                    line,
                    head.col,
                    ParseErrorKind::MissingDirective("algebra"),
                ))
            }
        }
    }
    match current {
        Some(b) => done.push((b.start, b.finish()?)),
        None if done.is_empty() => {
            return Err(err(1, 1, ParseErrorKind::MissingDirective("algebra")));
        }
        None => {}
    }
    Ok(done)
}

/// Parses exactly one document.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec, ParseError> {
    let mut docs = parse_documents(text)?;
    if let Some((pos, second)) = docs.get(1) {
        return Err(ParseError {
            pos: *pos,
            kind: ParseErrorKind::Syntax(format!(
                "second document `{}` in single-algebra input",
                second.name
            )),
        });
    }
    Ok(docs.pop().expect("at least one document").1)
}

/// Parses and validates one document.
pub fn parse_algebra(text: &str) -> Result<EffectAlgebra, Error> {
    parse_spec(text)?.build()
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {}", self.name)?;
        writeln!(f, "elements {}", self.labels.join(" "))?;
        writeln!(f, "zero {}", self.zero)?;
        writeln!(f, "one {}", self.one)?;
        for s in &self.sums {
            writeln!(f, "sum {} {} = {}", s.x, s.y, s.z)?;
        }
        for c in &self.complements {
            writeln!(f, "complement {} = {}", c.x, c.y)?;
        }
        Ok(())
    }
}

pub fn emit_spec(spec: &AlgebraSpec) -> String {
    spec.to_string()
}

/// Serializes an algebra: sums between nonzero elements with `x <= y` by
/// index, then every complement.
pub fn emit_algebra(e: &EffectAlgebra) -> String {
    let l = e.labels();
    let mut out = String::new();
    writeln!(out, "algebra {}", e.name()).unwrap();
    writeln!(out, "elements {}", l.join(" ")).unwrap();
    writeln!(out, "zero {}", l[e.zero()]).unwrap();
    writeln!(out, "one {}", l[e.one()]).unwrap();
    for x in 0..e.len() {
        for y in x..e.len() {
            if x == e.zero() || y == e.zero() {
                continue;
            }
            if let Some(z) = e.sum(x, y) {
                writeln!(out, "sum {} {} = {}", l[x], l[y], l[z]).unwrap();
            }
        }
    }
    for x in 0..e.len() {
        writeln!(out, "complement {} = {}", l[x], l[e.comp(x)]).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_fills_zero_row() {
        let e = parse_algebra("algebra T\nelements 0 1\nzero 0\none 1\n").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.sum(0, 1), Some(1));
        assert_eq!(e.sum(1, 1), None);
        assert_eq!(e.comp(0), 1);
    }

    #[test]
    fn conflicting_orientation_rejected_at_second_line() {
        let text = "algebra T\nelements 0 a b e f 1\nzero 0\none 1\nsum a b = e\nsum b a = f\n";
        let e = parse_spec(text).unwrap_err();
        assert_eq!(e.pos.line, 6);
        assert!(matches!(e.kind, ParseErrorKind::ConflictingSum { .. }));
    }

    #[test]
    fn duplicate_sum_rejected() {
        let text = "algebra T\nelements 0 a 1\nzero 0\none 1\nsum a a = 1\nsum a a = 1\n";
        assert!(matches!(
            parse_spec(text).unwrap_err().kind,
            ParseErrorKind::DuplicateSum { first_line: 5, .. }
        ));
    }

    #[test]
    fn diagnostics_carry_columns() {
        let e = parse_spec("algebra T\nelements 0 1\nzero 0\none 1\nsum 0 q = 1\n").unwrap_err();
        assert_eq!(e.pos, Pos { line: 5, col: 7 });
        assert_eq!(e.kind, ParseErrorKind::UnknownLabel("q".into()));

        let e = parse_spec("algebra T\nelements 0 1\nzero 0\none 1\nsum 0 1 1\n").unwrap_err();
        assert_eq!(e.pos.line, 5);
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));

        let e = parse_spec("algebra T\nelements 0 0 1\n").unwrap_err();
        assert_eq!(e.pos, Pos { line: 2, col: 12 });
    }

    #[test]
    fn missing_directives() {
        let e = parse_spec("algebra T\nelements 0 1\none 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingDirective("zero"));
        let e = parse_spec("elements 0 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingDirective("algebra"));
        assert!(parse_spec("# nothing\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\nalgebra T # two chain\nelements 0 1\nzero 0\n\none 1 # top\n";
        let s = parse_spec(text).unwrap();
        assert_eq!(s.name, "T");
        assert_eq!(s.one, "1");
    }

    #[test]
    fn multi_document_stream() {
        let text = "algebra A\nelements 0 1\nzero 0\none 1\nalgebra B\nelements 0 x 1\nzero 0\none 1\nsum x x = 1\n";
        let specs = parse_specs(text).unwrap();
        assert_eq!(specs.len(), 2);
        assert_eq!(specs[1].labels, ["0", "x", "1"]);
        assert!(parse_spec(text).is_err());
    }

    #[test]
    fn document_text_roundtrip() {
        let text = "algebra T\nelements 0 a b 1\nzero 0\none 1\nsum a b = 1\ncomplement a = b\n";
        let s = parse_spec(text).unwrap();
        assert_eq!(emit_spec(&s), text);
    }

    #[test]
    fn declared_complement_mismatch_is_a_validation_error() {
        let text = "algebra T\nelements 0 a b 1\nzero 0\none 1\nsum a b = 1\ncomplement a = a\n";
        assert!(matches!(parse_algebra(text), Err(Error::Invalid(_))));
    }
}
