//! Plain-text formats for conformal modules and finite algebras.
//!
//! ```text
//! conformal
//! basis a b c
//! k 1
//! product b a 0 = D c
//! product b a 1 = c
//! ```
//!
//! ```text
//! algebra
//! basis e f
//! circ e e = f
//! bracket e f = -1/2 e + f
//! alpha e = 2 e
//! ```
//!
//! Values are sums of `[coefficient] [D | D^k] name`; `D` is reserved for
//! the derivation and only allowed in modules. Blank lines and `#` comments
//! are ignored.

use num_traits::{One, Signed, Zero};

use super::algebra::{FiniteAlgebra, Matrix, Vector};
use super::{ConformalModule, Element, PolyD};
use crate::error::{Error, Result};
use crate::poly::Coeff;

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::SyntaxError {
        line,
        col,
        msg: msg.into(),
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Sign(bool),
    Num(Coeff),
    D(usize),
    Name(String),
}

fn tokenize(s: &str, line: usize, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let int = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };
    while i < chars.len() {
        let col = offset + i + 1;
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch == '+' || ch == '-' {
            out.push((Tok::Sign(ch == '-'), col));
            i += 1;
        } else if ch.is_ascii_digit() {
            let n = int(&mut i);
            let mut c: Coeff =
                Coeff::from_integer(n.parse().map_err(|_| syntax(line, col, "bad number"))?);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let d = int(&mut i);
                let d: num_bigint::BigInt = d
                    .parse()
                    .map_err(|_| syntax(line, col, "bad denominator"))?;
                if d.is_zero() {
                    return Err(syntax(line, col, "zero denominator"));
                }
                c /= Coeff::from_integer(d);
            }
            out.push((Tok::Num(c), col));
        } else if ch.is_alphanumeric() || ch == '_' || ch == '\'' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word == "D" {
                let mut k = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    k = int(&mut i)
                        .parse()
                        .map_err(|_| syntax(line, col, "bad exponent after D^"))?;
                }
                out.push((Tok::D(k), col));
            } else {
                out.push((Tok::Name(word), col));
            }
        } else {
            return Err(syntax(line, col, format!("unexpected character '{ch}'")));
        }
    }
    Ok(out)
}

/// Parses a value into `(basis index, D-power, coefficient)` triples.
fn parse_value(
    s: &str,
    basis: &[String],
    allow_d: bool,
    line: usize,
    offset: usize,
) -> Result<Vec<(usize, usize, Coeff)>> {
    let toks = tokenize(s, line, offset)?;
    let mut out = Vec::new();
    let mut it = toks.into_iter().peekable();
    if it.peek().is_none() {
        return Err(syntax(line, offset + 1, "empty value"));
    }
    if let Some((Tok::Num(c), _)) = it.peek() {
        if c.is_zero() {
            it.next();
            return match it.next() {
                None => Ok(out),
                Some((_, col)) => Err(syntax(line, col, "trailing input after 0")),
            };
        }
    }
    let mut first = true;
    while let Some((tok, col)) = it.next() {
        let mut coeff = Coeff::one();
        let mut tok = (tok, col);
        match tok.0 {
            Tok::Sign(neg) => {
                if neg {
                    coeff = -coeff;
                }
                tok = it
                    .next()
                    .ok_or_else(|| syntax(line, col, "dangling sign"))?;
            }
            _ if !first => return Err(syntax(line, col, "expected '+' or '-'")),
            _ => {}
        }
        first = false;
        if let Tok::Num(c) = tok.0 {
            coeff *= c;
            tok = it
                .next()
                .ok_or_else(|| syntax(line, tok.1, "coefficient without element"))?;
        }
        let mut power = 0;
        if let Tok::D(k) = tok.0 {
            if !allow_d {
                return Err(syntax(
                    line,
                    tok.1,
                    "D is only allowed in conformal modules",
                ));
            }
            power = k;
            tok = it
                .next()
                .ok_or_else(|| syntax(line, tok.1, "D without element"))?;
        }
        match tok.0 {
            Tok::Name(n) => {
                let idx = basis
                    .iter()
                    .position(|b| *b == n)
                    .ok_or_else(|| syntax(line, tok.1, format!("unknown basis element '{n}'")))?;
                out.push((idx, power, coeff));
            }
            _ => return Err(syntax(line, tok.1, "expected a basis element")),
        }
    }
    Ok(out)
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Lines { lines }
    }
}

/// Splits `lhs = rhs`, returning the rhs column offset.
fn split_eq(line: usize, body: &str) -> Result<(&str, &str, usize)> {
    let pos = body
        .find('=')
        .ok_or_else(|| syntax(line, 1, "expected '='"))?;
    Ok((&body[..pos], &body[pos + 1..], pos + 1))
}

fn lookup(basis: &[String], name: &str, line: usize) -> Result<usize> {
    basis
        .iter()
        .position(|b| b == name)
        .ok_or_else(|| syntax(line, 1, format!("unknown basis element '{name}'")))
}

type Body<'a> = &'a [(usize, &'a str)];

fn header_and_basis<'a>(lines: &'a Lines<'a>, keyword: &str) -> Result<(Vec<String>, Body<'a>)> {
    let rest = match lines.lines.first() {
        Some((_, l)) if l.split_whitespace().next() == Some(keyword) => &lines.lines[1..],
        Some((n, _)) => return Err(syntax(*n, 1, format!("expected '{keyword}' header"))),
        None => return Err(syntax(1, 1, "empty input")),
    };
    match rest.first() {
        Some((n, l)) => {
            let mut words = l.split_whitespace();
            if words.next() != Some("basis") {
                return Err(syntax(*n, 1, "expected 'basis' line"));
            }
            let basis: Vec<String> = words.map(String::from).collect();
            if basis.is_empty() || basis.iter().any(|b| b == "D") {
                return Err(syntax(
                    *n,
                    1,
                    "basis must be nonempty and cannot use the name D",
                ));
            }
            Ok((basis, &rest[1..]))
        }
        None => Err(syntax(lines.lines[0].0 + 1, 1, "missing 'basis' line")),
    }
}

pub fn parse_module(text: &str) -> Result<ConformalModule> {
    let lines = Lines::new(text);
    let (basis, rest) = header_and_basis(&lines, "conformal")?;
    let mut k = None;
    let mut module: Option<ConformalModule> = None;
    for &(line, body) in rest {
        let mut words = body.split_whitespace();
        match words.next() {
            Some("k") if k.is_none() => {
                let v: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(line, 1, "expected 'k <nonnegative integer>'"))?;
                k = Some(v);
                module = Some(ConformalModule::new(basis.clone(), v));
            }
            Some("product") => {
                let m = module
                    .as_mut()
                    .ok_or_else(|| syntax(line, 1, "'k' must precede products"))?;
                let (lhs, rhs, off) = split_eq(line, body)?;
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                if parts.len() != 4 {
                    return Err(syntax(line, 1, "expected 'product <x> <y> <n> = <value>'"));
                }
                let (i, j) = (
                    lookup(&basis, parts[1], line)?,
                    lookup(&basis, parts[2], line)?,
                );
                let n: usize = parts[3]
                    .parse()
                    .map_err(|_| syntax(line, 1, "bad product order"))?;
                let mut value = Element::zero();
                for (idx, p, c) in parse_value(rhs, &basis, true, line, off)? {
                    value.add_term(idx, PolyD::d_power(p).scale(&c));
                }
                m.set_product(i, j, n, value)
                    .map_err(|_| syntax(line, 1, format!("product order {n} exceeds k")))?;
            }
            Some(other) => return Err(syntax(line, 1, format!("unexpected directive '{other}'"))),
            None => {}
        }
    }
    module.ok_or_else(|| syntax(rest.first().map_or(1, |l| l.0), 1, "missing 'k' line"))
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra> {
    let lines = Lines::new(text);
    let (basis, rest) = header_and_basis(&lines, "algebra")?;
    let d = basis.len();
    let mut alg = FiniteAlgebra::zero(basis.clone());
    let mut alpha: Option<Matrix> = None;
    let vector = |rhs: &str, line, off| -> Result<Vector> {
        let mut v = vec![Coeff::zero(); d];
        for (idx, _, c) in parse_value(rhs, &basis, false, line, off)? {
            v[idx] += c;
        }
        Ok(v)
    };
    for &(line, body) in rest {
        let (lhs, rhs, off) = split_eq(line, body)?;
        let parts: Vec<&str> = lhs.split_whitespace().collect();
        match parts.as_slice() {
            [op @ ("circ" | "bracket"), x, y] => {
                let (i, j) = (lookup(&basis, x, line)?, lookup(&basis, y, line)?);
                let v = vector(rhs, line, off)?;
                if *op == "circ" {
                    alg.set_circ(i, j, v)?;
                } else {
                    alg.set_bracket(i, j, v)?;
                }
            }
            ["alpha", x] => {
                let i = lookup(&basis, x, line)?;
                let m = alpha.get_or_insert_with(|| vec![vec![Coeff::zero(); d]; d]);
                m[i] = vector(rhs, line, off)?;
            }
            _ => {
                return Err(syntax(
                    line,
                    1,
                    "expected 'circ x y = ...', 'bracket x y = ...' or 'alpha x = ...'",
                ))
            }
        }
    }
    match alpha {
        Some(m) => alg.with_alpha(m),
        None => Ok(alg),
    }
}

fn render_terms(terms: impl Iterator<Item = (usize, usize, Coeff)>, names: &[String]) -> String {
    let mut out = String::new();
    for (i, p, c) in terms {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format!("{a} "));
        }
        match p {
            0 => {}
            1 => out.push_str("D "),
            _ => out.push_str(&format!("D^{p} ")),
        }
        out.push_str(&names[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_module(m: &ConformalModule) -> String {
    let mut out = format!("conformal\nbasis {}\nk {}\n", m.basis.join(" "), m.k);
    for ((i, j, n), e) in m.products() {
        let terms = e.terms().flat_map(|(idx, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .map(move |(k, c)| (idx, k, c.clone()))
        });
        out.push_str(&format!(
            "product {} {} {} = {}\n",
            m.basis[i],
            m.basis[j],
            n,
            render_terms(terms, &m.basis)
        ));
    }
    out
}

pub fn render_algebra(a: &FiniteAlgebra) -> String {
    let vec_text = |v: &Vector| {
        render_terms(
            v.iter().cloned().enumerate().map(|(i, c)| (i, 0, c)),
            &a.names,
        )
    };
    let mut out = format!("algebra\nbasis {}\n", a.names.join(" "));
    for (is_circ, i, j, v) in a.structure() {
        let op = if is_circ { "circ" } else { "bracket" };
        out.push_str(&format!(
            "{op} {} {} = {}\n",
            a.names[i],
            a.names[j],
            vec_text(&v)
        ));
    }
    if let Some(alpha) = &a.alpha {
        for (i, row) in alpha.iter().enumerate() {
            if row.iter().any(|c| !c.is_zero()) {
                out.push_str(&format!("alpha {} = {}\n", a.names[i], vec_text(row)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::build_mn;
    use crate::poly::{q, q_frac};

    #[test]
    fn module_round_trip() {
        for n in 0..4 {
            let m = build_mn(n).unwrap();
            let text = render_module(&m);
            assert_eq!(parse_module(&text).unwrap(), m, "{text}");
        }
    }

    #[test]
    fn algebra_round_trip() {
        let text = "algebra\nbasis e f\ncirc e e = f\nbracket e f = -1/2 e + f\nalpha e = 2 e\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.bracket_basis(0, 1), vec![q_frac(-1, 2), q(1)]);
        assert_eq!(a.alpha.as_ref().unwrap()[1], vec![q(0), q(0)]);
        assert_eq!(render_algebra(&a), text);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_module("conformal\nbasis a\nk 0\nproduct a a 0 = 2 D x\n").unwrap_err();
        assert_eq!(err, syntax(4, 21, "unknown basis element 'x'"));
        let err = parse_algebra("algebra\nbasis e\ncirc e e = D e\n").unwrap_err();
        assert!(matches!(
            err,
            Error::SyntaxError {
                line: 3,
                col: 12,
                ..
            }
        ));
        assert!(parse_module("conformal\nbasis a\nk 0\nproduct a a 1 = a\n").is_err());
    }
}
