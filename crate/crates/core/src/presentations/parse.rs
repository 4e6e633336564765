//! Line-oriented presentation files.
//!
//! ```text
//! operad ass
//! mode nonsymmetric
//! order path-lex
//! gen m 2
//! rel m(m(1,2),3) - m(1,m(2,3))
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{OrderChoice, Presentation};
use crate::error::{Error, Result};
use crate::poly::{Coeff, TreePolynomial};
use crate::tree::{validate_shuffle, Generator, Label, Mode, Signature, Symmetry, TreeMonomial};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn tokenize(text: &str, line: usize, offset: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                col,
            });
        } else if is_name_char(c) {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Name(chars[start..i].iter().collect()),
                col,
            });
        } else if "()+-*/,".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                col,
            });
            i += 1;
        } else {
            return Err(Error::SyntaxError {
                line,
                col,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

/// A term before it is resolved against a signature: leaves are either
/// numeric labels or variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum RawTerm {
    Label(Label, usize),
    Var(String, usize),
    Op(String, usize, Vec<RawTerm>),
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|t| t.col)
            .unwrap_or(self.end_col)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::SyntaxError {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let label: Label = n.try_into().map_err(|_| Error::SyntaxError {
                    line: self.line,
                    col,
                    msg: "label too large".into(),
                })?;
                if label == 0 {
                    return Err(Error::SyntaxError {
                        line: self.line,
                        col,
                        msg: "leaf labels start at 1".into(),
                    });
                }
                Ok(RawTerm::Label(label, col))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                if !self.eat('(') {
                    return Ok(RawTerm::Var(name, col));
                }
                let mut args = vec![self.term()?];
                while self.eat(',') {
                    args.push(self.term()?);
                }
                self.expect(')')?;
                Ok(RawTerm::Op(name, col, args))
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn coefficient(&mut self) -> Result<Option<Coeff>> {
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Ok(None);
        };
        // a bare integer is a leaf, not a coefficient, unless followed by `*` or `/`
        match self.toks.get(self.pos + 1).map(|t| &t.tok) {
            Some(Tok::Sym('*')) | Some(Tok::Sym('/')) => {}
            _ => return Ok(None),
        }
        self.pos += 1;
        let mut c = Coeff::from_integer(n);
        if self.eat('/') {
            let col = self.col();
            match self.peek().cloned() {
                Some(Tok::Int(d)) if d.is_positive() => {
                    self.pos += 1;
                    c /= Coeff::from_integer(d);
                }
                _ => {
                    return Err(Error::SyntaxError {
                        line: self.line,
                        col,
                        msg: "expected a positive denominator".into(),
                    })
                }
            }
        }
        self.expect('*')?;
        Ok(Some(c))
    }

    /// `[-] [c*] term { (+|-) [c*] term }`
    fn signed_sum(&mut self) -> Result<Vec<(Coeff, RawTerm)>> {
        let mut out = Vec::new();
        let mut sign = Coeff::one();
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        loop {
            let c = self.coefficient()?.unwrap_or_else(Coeff::one);
            out.push((sign * c, self.term()?));
            if self.eat('+') {
                sign = Coeff::one();
            } else if self.eat('-') {
                sign = -Coeff::one();
            } else if self.pos == self.toks.len() {
                return Ok(out);
            } else {
                return Err(self.error("expected `+`, `-` or end of line"));
            }
        }
    }
}

pub(crate) fn parse_signed_sum(
    text: &str,
    line: usize,
    offset: usize,
) -> Result<Vec<(Coeff, RawTerm)>> {
    let toks = tokenize(text, line, offset)?;
    let mut cur = Cursor {
        toks: &toks,
        pos: 0,
        line,
        end_col: offset + text.chars().count() + 1,
    };
    cur.signed_sum()
}

/// Resolves a raw term with numeric leaves against a signature.
pub(crate) fn resolve(raw: &RawTerm, sig: &Signature, line: usize) -> Result<TreeMonomial> {
    match raw {
        RawTerm::Label(l, _) => Ok(TreeMonomial::Leaf(*l)),
        RawTerm::Var(name, col) => Err(Error::SyntaxError {
            line,
            col: *col,
            msg: format!("expected a leaf number or `{name}(...)`"),
        }),
        RawTerm::Op(name, col, args) => {
            let op = sig.lookup(name).ok_or_else(|| Error::UnknownGenerator {
                name: name.clone(),
                line,
                col: *col,
            })?;
            let arity = sig.get(op).arity;
            if args.len() != arity {
                return Err(Error::ArityError {
                    line,
                    col: *col,
                    msg: format!("`{name}` takes {arity} inputs, got {}", args.len()),
                });
            }
            let ch = args
                .iter()
                .map(|a| resolve(a, sig, line))
                .collect::<Result<Vec<_>>>()?;
            Ok(TreeMonomial::Node(op, ch))
        }
    }
}

fn raw_col(raw: &RawTerm) -> usize {
    match raw {
        RawTerm::Label(_, c) | RawTerm::Var(_, c) | RawTerm::Op(_, c, _) => *c,
    }
}

/// Builds a relation from `text`, checking labels against `mode`.
pub(crate) fn relation_from_text(
    text: &str,
    sig: &Signature,
    mode: Mode,
    line: usize,
    offset: usize,
) -> Result<TreePolynomial> {
    let terms = parse_signed_sum(text, line, offset)?;
    let mut poly = TreePolynomial::zero(0);
    let mut arity = None;
    for (c, raw) in &terms {
        let t = resolve(raw, sig, line)?;
        let col = raw_col(raw);
        let leaves = t.leaves();
        let set: BTreeSet<Label> = leaves.iter().copied().collect();
        let n = leaves.len();
        if set.len() != n || set.iter().copied().ne(1..=n as Label) {
            return Err(Error::ArityError {
                line,
                col,
                msg: format!("leaves must be 1..{n}, each once"),
            });
        }
        match mode {
            Mode::Nonsymmetric if !t.is_nonsymmetric() => {
                return Err(Error::ArityError {
                    line,
                    col,
                    msg: "nonsymmetric terms read their leaves 1..n from left to right".into(),
                })
            }
            Mode::Shuffle if !validate_shuffle(&t) => {
                return Err(Error::ArityError {
                    line,
                    col,
                    msg: "children must be ordered by their smallest leaf".into(),
                })
            }
            _ => {}
        }
        match arity {
            None => arity = Some(n),
            Some(a) if a != n => {
                return Err(Error::NonHomogeneousRelation {
                    line,
                    first: a,
                    second: n,
                })
            }
            _ => {}
        }
        poly.add_term(t, c.clone());
    }
    Ok(poly)
}

/// Parses a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut name = String::from("unnamed");
    let mut mode = Mode::Nonsymmetric;
    let mut order = OrderChoice::PathLex;
    let mut sig = Signature::new();
    let mut relations = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = trimmed
            .split_once(char::is_whitespace)
            .unwrap_or((trimmed, ""));
        let rest_offset = indent + keyword.len() + 1;
        let words: Vec<&str> = rest.split_whitespace().collect();
        let bad = |msg: &str| Error::SyntaxError {
            line,
            col: rest_offset,
            msg: msg.into(),
        };
        match keyword {
            "operad" => {
                name = words
                    .first()
                    .ok_or_else(|| bad("missing operad name"))?
                    .to_string()
            }
            "mode" => {
                mode = match words.as_slice() {
                    ["nonsymmetric"] => Mode::Nonsymmetric,
                    ["shuffle"] => Mode::Shuffle,
                    _ => return Err(bad("mode is `nonsymmetric` or `shuffle`")),
                }
            }
            "order" => {
                order = match words.as_slice() {
                    ["path-lex"] => OrderChoice::PathLex,
                    ["forest-lex"] => OrderChoice::ForestLex,
                    ["clie"] => OrderChoice::Clie,
                    _ => return Err(bad("order is `path-lex`, `forest-lex` or `clie`")),
                }
            }
            "gen" => {
                let (gname, arity) = match words.as_slice() {
                    [g, a, ..] => (
                        g,
                        a.parse::<usize>()
                            .map_err(|_| bad("arity must be a positive integer"))?,
                    ),
                    _ => return Err(bad("expected `gen <name> <arity>`")),
                };
                if arity == 0 || !gname.chars().all(is_name_char) {
                    return Err(bad("expected `gen <name> <arity>` with a positive arity"));
                }
                let mut g = Generator::new(*gname, arity);
                let mut extra = words[2..].iter();
                while let Some(w) = extra.next() {
                    match *w {
                        "antisymmetric" => g.symmetry = Symmetry::Antisymmetric,
                        "symmetric" => g.symmetry = Symmetry::Symmetric,
                        "key" => {
                            let key = extra
                                .by_ref()
                                .map(|k| k.parse::<i64>())
                                .collect::<std::result::Result<Vec<_>, _>>()
                                .map_err(|_| bad("key entries must be integers"))?;
                            g = Generator {
                                kind: crate::tree::GeneratorKind::IndexedFamily,
                                symbol_key: key,
                                ..g
                            };
                            break;
                        }
                        other => {
                            return Err(bad(&format!("unknown generator attribute `{other}`")))
                        }
                    }
                }
                if g.symmetry != Symmetry::None && arity > 2 {
                    return Err(Error::UnsupportedArity(arity));
                }
                sig.add(g).map_err(|_| bad("generator declared twice"))?;
            }
            "rel" => relations.push(relation_from_text(rest, &sig, mode, line, rest_offset)?),
            other => {
                return Err(Error::SyntaxError {
                    line,
                    col: indent + 1,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let order_spec = order.spec(&sig);
    Ok(Presentation {
        name,
        mode,
        signature: sig,
        relations,
        order,
        order_spec,
        family_params: None,
        warnings: Vec::new(),
    })
}

/// Renders a presentation in the file format accepted by [`parse_presentation`].
pub fn render(p: &Presentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "operad {}", p.name);
    let _ = writeln!(
        out,
        "mode {}",
        match p.mode {
            Mode::Nonsymmetric => "nonsymmetric",
            Mode::Shuffle => "shuffle",
        }
    );
    let _ = writeln!(out, "order {}", p.order.name());
    for g in p.signature.generators() {
        let _ = write!(out, "gen {} {}", g.name, g.arity);
        match g.symmetry {
            Symmetry::None => {}
            Symmetry::Antisymmetric => out.push_str(" antisymmetric"),
            Symmetry::Symmetric => out.push_str(" symmetric"),
        }
        if !g.symbol_key.is_empty() {
            out.push_str(" key");
            for k in &g.symbol_key {
                let _ = write!(out, " {k}");
            }
        }
        out.push('\n');
    }
    for r in &p.relations {
        let _ = writeln!(out, "rel {}", r.display_sorted(&p.signature, &p.order_spec));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_and_signs() {
        let terms = parse_signed_sum("-1/2*m(1,2) + 3*m(2,1) - x", 1, 0).unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].0, Coeff::new((-1).into(), 2.into()));
        assert_eq!(terms[1].0, Coeff::from_integer(3.into()));
        assert_eq!(terms[2].0, -Coeff::one());
        assert!(matches!(terms[2].1, RawTerm::Var(ref v, 26) if v == "x"));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        let err = parse_presentation("gen m 2\nrel m(1,2 - m(1,2)").unwrap_err();
        assert!(
            matches!(
                err,
                Error::SyntaxError {
                    line: 2,
                    col: 11,
                    ..
                }
            ),
            "{err:?}"
        );
        let err = parse_presentation("gen m 2\nrel m(1,2) ? m(1,2)").unwrap_err();
        assert!(
            matches!(
                err,
                Error::SyntaxError {
                    line: 2,
                    col: 12,
                    ..
                }
            ),
            "{err:?}"
        );
    }

    #[test]
    fn semantic_errors() {
        let err = parse_presentation("gen m 2\nrel m(1,2) - n(1,2)").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownGenerator {
                name: "n".into(),
                line: 2,
                col: 14
            }
        );
        let err = parse_presentation("gen m 2\nrel m(1,2,3)").unwrap_err();
        assert!(matches!(
            err,
            Error::ArityError {
                line: 2,
                col: 5,
                ..
            }
        ));
        let err = parse_presentation("gen m 2\nrel m(1,2) - m(m(1,2),3)").unwrap_err();
        assert_eq!(
            err,
            Error::NonHomogeneousRelation {
                line: 2,
                first: 2,
                second: 3
            }
        );
        let err = parse_presentation("mode shuffle\ngen m 2\nrel m(2,1)").unwrap_err();
        assert!(matches!(err, Error::ArityError { .. }));
        let err = parse_presentation("gen t 3 antisymmetric").unwrap_err();
        assert_eq!(err, Error::UnsupportedArity(3));
    }
}
