//! Polynomial expressions and ring files.
//!
//! Expression grammar (whitespace insensitive):
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*      -- or a leading rational juxtaposed
//!                                       -- with the next factor ("3a0")
//! factor   := rational | var ['^' nat] | '(' expr ')'
//! rational := int ['/' posint]
//! ```
//!
//! Two variables or groups may not be juxtaposed, and a parenthesized group
//! takes no exponent.
//!
//! Ring file:
//!
//! ```text
//! ring <name>
//! vars <v1> <v2> ...
//! weights <w1> <w2> ...        # optional; default all 1
//! order grevlex|lex            # optional; default grevlex
//! ideal
//!   <polynomial expression>    # one per line
//! end
//! ```

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::groebner::Ideal;
use crate::poly::{is_identifier, Monomial, MonomialOrder, Polynomial, Rational, RingContext};

/// A parse failure with its position. Columns are 1-based character
/// offsets within the line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl ParseError {
    fn at(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            line: None,
            column: Some(column),
        }
    }

    fn on_line(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            line: Some(line),
            column: None,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        f.write_str(&self.message)?;
        if let Some(col) = self.column {
            write!(f, " at column {col}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().unwrap()), col));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => {
                return Err(ParseError::at(
                    col,
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    ctx: &'a Arc<RingContext>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::at(self.col(), format!("unexpected {t}")),
            None => ParseError::at(self.col(), "unexpected end of input"),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero(self.ctx);
        let mut negate = match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let leading_number = matches!(self.peek(), Some(Tok::Int(_)));
        let mut acc = self.factor()?;
        let mut first = true;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                Some(Tok::Ident(_)) | Some(Tok::LParen) if first && leading_number => {}
                Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::Int(_)) => {
                    return Err(ParseError::at(self.col(), "expected '*' between factors"));
                }
                _ => return Ok(acc),
            }
            first = false;
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let col = self.col();
        match self.bump() {
            Some((Tok::Int(n), _)) => {
                let value = if self.peek() == Some(&Tok::Slash) {
                    let slash_col = self.col();
                    self.bump();
                    match self.bump() {
                        Some((Tok::Int(d), dcol)) => {
                            if d.is_zero() {
                                return Err(ParseError::at(
                                    dcol,
                                    "malformed rational: zero denominator",
                                ));
                            }
                            Rational::new(n, d)
                        }
                        _ => return Err(ParseError::at(
                            slash_col,
                            "malformed rational: expected positive integer denominator after '/'",
                        )),
                    }
                } else {
                    Rational::from_integer(n)
                };
                if self.peek() == Some(&Tok::Slash) {
                    return Err(ParseError::at(
                        self.col(),
                        "malformed rational: repeated '/'",
                    ));
                }
                Ok(Polynomial::constant(self.ctx, value))
            }
            Some((Tok::Ident(name), _)) => {
                let Some(i) = self.ctx.index_of(&name) else {
                    return Err(ParseError::at(col, format!("unknown variable {name}")));
                };
                let mut e = 1u32;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    match self.bump() {
                        Some((Tok::Int(n), ncol)) => {
                            e = n
                                .to_u32()
                                .ok_or_else(|| ParseError::at(ncol, "exponent too large"))?;
                        }
                        _ => {
                            let c = self
                                .toks
                                .get(self.pos - 1)
                                .map_or(self.end_col, |(_, c)| *c);
                            return Err(ParseError::at(
                                c,
                                "expected non-negative integer exponent",
                            ));
                        }
                    }
                }
                let mut exps = vec![0; self.ctx.num_vars()];
                exps[i] = e;
                Ok(Polynomial::term(
                    self.ctx,
                    Monomial::new(exps),
                    Rational::from_integer(1.into()),
                ))
            }
            Some((Tok::LParen, _)) => {
                if self.peek() == Some(&Tok::RParen) {
                    return Err(ParseError::at(self.col(), "empty parentheses"));
                }
                let inner = self.expr()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => {}
                    Some((t, c)) => {
                        return Err(ParseError::at(c, format!("expected ')' but found {t}")))
                    }
                    None => {
                        return Err(ParseError::at(
                            col,
                            "unbalanced parentheses: '(' is never closed",
                        ))
                    }
                }
                if self.peek() == Some(&Tok::Caret) {
                    return Err(ParseError::at(
                        self.col(),
                        "exponent on a parenthesized group is not allowed",
                    ));
                }
                Ok(inner)
            }
            Some((Tok::RParen, c)) => {
                Err(ParseError::at(c, "unbalanced parentheses: unexpected ')'"))
            }
            Some((t, c)) => Err(ParseError::at(c, format!("unexpected {t}"))),
            None => Err(ParseError::at(col, "unexpected end of input")),
        }
    }
}

/// Parses a polynomial expression in `ctx`.
pub fn parse_polynomial(text: &str, ctx: &Arc<RingContext>) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::at(1, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
        ctx,
    };
    let poly = p.expr()?;
    if p.pos < p.toks.len() {
        if p.peek() == Some(&Tok::RParen) {
            return Err(ParseError::at(
                p.col(),
                "unbalanced parentheses: unexpected ')'",
            ));
        }
        return Err(p.unexpected());
    }
    Ok(poly)
}

/// A parsed ring file.
#[derive(Clone, Debug, PartialEq)]
pub struct RingFile {
    pub name: String,
    pub context: Arc<RingContext>,
    pub generators: Vec<Polynomial>,
}

impl RingFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut name: Option<String> = None;
        let mut vars: Option<(Vec<String>, usize)> = None;
        let mut weights: Option<(Vec<u32>, usize)> = None;
        let mut order = MonomialOrder::Grevlex;
        let mut ctx: Option<Arc<RingContext>> = None;
        let mut generators = Vec::new();
        let mut in_ideal = false;
        let mut ended = false;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            if ended {
                return Err(ParseError::on_line(lineno, "content after 'end'"));
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap();
            if in_ideal {
                if keyword == "end" && words.next().is_none() {
                    ended = true;
                    continue;
                }
                let ctx = ctx.as_ref().unwrap();
                // report the column relative to the raw line
                let offset = raw.chars().count() - raw.trim_start().chars().count();
                let poly = parse_polynomial(line.trim(), ctx).map_err(|mut e| {
                    e.line = Some(lineno);
                    e.column = e.column.map(|c| c + offset);
                    e.message = format!("generator: {}", e.message);
                    e
                })?;
                generators.push(poly);
                continue;
            }
            let rest: Vec<&str> = words.collect();
            match keyword {
                "ring" => {
                    if name.is_some() {
                        return Err(ParseError::on_line(lineno, "duplicate 'ring' line"));
                    }
                    if rest.len() != 1 {
                        return Err(ParseError::on_line(lineno, "expected 'ring <name>'"));
                    }
                    name = Some(rest[0].to_string());
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(ParseError::on_line(lineno, "duplicate 'vars' line"));
                    }
                    if rest.is_empty() {
                        return Err(ParseError::on_line(
                            lineno,
                            "'vars' needs at least one variable",
                        ));
                    }
                    let mut names: Vec<String> = Vec::new();
                    for v in &rest {
                        if !is_identifier(v) {
                            return Err(ParseError::on_line(
                                lineno,
                                format!("invalid variable name {v:?}"),
                            ));
                        }
                        if names.iter().any(|n| n == v) {
                            return Err(ParseError::on_line(
                                lineno,
                                format!("duplicate variable {v}"),
                            ));
                        }
                        names.push(v.to_string());
                    }
                    vars = Some((names, lineno));
                }
                "weights" => {
                    if weights.is_some() {
                        return Err(ParseError::on_line(lineno, "duplicate 'weights' line"));
                    }
                    let ws = rest
                        .iter()
                        .map(|w| match w.parse::<u32>() {
                            Ok(x) if x >= 1 => Ok(x),
                            _ => Err(ParseError::on_line(
                                lineno,
                                format!("invalid weight {w:?} (need integer >= 1)"),
                            )),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    weights = Some((ws, lineno));
                }
                "order" => {
                    if rest.len() != 1 {
                        return Err(ParseError::on_line(lineno, "expected 'order grevlex|lex'"));
                    }
                    order = MonomialOrder::from_keyword(rest[0]).ok_or_else(|| {
                        ParseError::on_line(
                            lineno,
                            format!("unknown order {:?} (expected grevlex or lex)", rest[0]),
                        )
                    })?;
                }
                "ideal" => {
                    if !rest.is_empty() {
                        return Err(ParseError::on_line(lineno, "'ideal' takes no arguments"));
                    }
                    if name.is_none() {
                        return Err(ParseError::on_line(
                            lineno,
                            "missing 'ring <name>' before 'ideal'",
                        ));
                    }
                    let Some((names, _)) = vars.clone() else {
                        return Err(ParseError::on_line(lineno, "missing 'vars' before 'ideal'"));
                    };
                    let ws = match &weights {
                        Some((ws, wline)) => {
                            if ws.len() != names.len() {
                                return Err(ParseError::on_line(
                                    *wline,
                                    format!(
                                        "{} weights given for {} variables",
                                        ws.len(),
                                        names.len()
                                    ),
                                ));
                            }
                            Some(ws.clone())
                        }
                        None => None,
                    };
                    ctx = Some(
                        RingContext::new(names, ws, order)
                            .map_err(|e| ParseError::on_line(lineno, e.to_string()))?,
                    );
                    in_ideal = true;
                }
                "end" => return Err(ParseError::on_line(lineno, "'end' without 'ideal'")),
                other => {
                    return Err(ParseError::on_line(
                        lineno,
                        format!("unknown keyword {other:?}"),
                    ))
                }
            }
        }
        if !in_ideal {
            return Err(ParseError::on_line(
                text.lines().count().max(1),
                "missing 'ideal' block",
            ));
        }
        if !ended {
            return Err(ParseError::on_line(
                text.lines().count().max(1),
                "missing 'end'",
            ));
        }
        Ok(RingFile {
            name: name.unwrap(),
            context: ctx.unwrap(),
            generators,
        })
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.context, self.generators.clone())
            .expect("generators share the file's ring")
    }

    /// Canonical text form; parsing it back yields an equal `RingFile`.
    pub fn to_text(&self) -> String {
        let ctx = &self.context;
        let mut s = format!("ring {}\nvars {}\n", self.name, ctx.names().join(" "));
        let ws: Vec<String> = ctx.weights().iter().map(u32::to_string).collect();
        s.push_str(&format!(
            "weights {}\norder {}\nideal\n",
            ws.join(" "),
            ctx.order()
        ));
        for g in &self.generators {
            s.push_str(&format!("  {g}\n"));
        }
        s.push_str("end\n");
        s
    }
}

/// Parses a ring file into its ring and ideal.
pub fn parse_ring_file(text: &str) -> Result<(Arc<RingContext>, Ideal), ParseError> {
    let file = RingFile::parse(text)?;
    let ideal = file.ideal();
    Ok((file.context, ideal))
}
