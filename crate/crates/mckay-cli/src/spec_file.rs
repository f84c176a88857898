//! Parser for group specification files.
//!
//! The format is line oriented:
//!
//! ```text
//! # quaternion group inside Sp(2)
//! conductor 4
//! dim 2
//!
//! omega {              # optional; defaults to 2x2 blocks [[0,1],[-1,0]]
//!   0, 1
//!   -1, 0
//! }
//!
//! generator {
//!   z, 0
//!   0, z^3
//! }
//!
//! generator {
//!   0, 1
//!   -1, 0
//! }
//!
//! caps closure=20000 order=10000    # optional
//! ```
//!
//! Matrix rows are comma-separated entry expressions. An entry is built from
//! integers, rationals `p/q`, the root of unity `z` (short for
//! zeta_conductor) with powers `z^k`, unary minus, sums, products,
//! parentheses, and explicit coordinate lists `[c0, c1, ...]` of length
//! phi(conductor) whose items are integers, `p/q`, or `[p, q]` pairs.
//! `#` starts a comment anywhere on a line.

use std::fmt;
use std::str::FromStr;

use num::BigInt;

use mckay_core::cyclotomic::{euler_phi, CycNum, Rational};
use mckay_core::group::Caps;
use mckay_core::linalg::{validate_symplectic_form, CycMatrix};

/// A parse failure with its 1-based line number.
#[derive(Debug, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// A validated group specification.
#[derive(Debug)]
pub struct GroupSpecFile {
    pub conductor: u64,
    pub dim: usize,
    pub omega: CycMatrix,
    pub generators: Vec<CycMatrix>,
    pub closure_cap: Option<usize>,
    pub order_cap: Option<u64>,
}

impl GroupSpecFile {
    /// Effective caps: command-line overrides win over file values, file
    /// values win over the defaults.
    pub fn caps(&self, cli_closure: Option<usize>, cli_order: Option<u64>) -> Caps {
        let defaults = Caps::default();
        Caps {
            closure: cli_closure.or(self.closure_cap).unwrap_or(defaults.closure),
            element_order: cli_order.or(self.order_cap).unwrap_or(defaults.element_order),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(v) => write!(f, "{v}"),
            Token::Z => write!(f, "z"),
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Slash => write!(f, "/"),
            Token::Caret => write!(f, "^"),
            Token::LBracket => write!(f, "["),
            Token::RBracket => write!(f, "]"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
            Token::Comma => write!(f, ","),
        }
    }
}

fn tokenize(line: usize, text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut end = start;
                while let Some(&(i, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        end = i + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let digits = &text[start..end];
                let value = BigInt::from_str(digits)
                    .map_err(|_| ParseError {
                        line,
                        message: format!("bad integer `{digits}`"),
                    })?;
                tokens.push(Token::Int(value));
            }
            'z' => {
                chars.next();
                tokens.push(Token::Z);
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '[' => {
                chars.next();
                tokens.push(Token::LBracket);
            }
            ']' => {
                chars.next();
                tokens.push(Token::RBracket);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            other => {
                return err(line, format!("unexpected character `{other}`"));
            }
        }
    }
    Ok(tokens)
}

/// Recursive-descent parser over one row's token stream.
struct EntryParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    conductor: u64,
}

impl<'a> EntryParser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, token: Token) -> Result<(), ParseError> {
        let line = self.line;
        match self.next() {
            Some(t) if *t == token => Ok(()),
            Some(t) => {
                let found = t.to_string();
                err(line, format!("expected `{token}`, found `{found}`"))
            }
            None => err(line, format!("expected `{token}`, found end of row")),
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt, ParseError> {
        let line = self.line;
        let negative = matches!(self.peek(), Some(Token::Minus));
        if negative {
            self.next();
        }
        match self.next() {
            Some(Token::Int(v)) => Ok(if negative { -v.clone() } else { v.clone() }),
            Some(t) => {
                let found = t.to_string();
                err(line, format!("expected an integer, found `{found}`"))
            }
            None => err(line, "expected an integer, found end of row"),
        }
    }

    /// `p`, `p/q`, or `[p, q]`: one coordinate of an explicit list.
    fn parse_coordinate(&mut self) -> Result<Rational, ParseError> {
        if matches!(self.peek(), Some(Token::LBracket)) {
            self.next();
            let p = self.parse_integer()?;
            self.expect(Token::Comma)?;
            let q = self.parse_integer()?;
            self.expect(Token::RBracket)?;
            return self.make_rational(p, q);
        }
        let p = self.parse_integer()?;
        if matches!(self.peek(), Some(Token::Slash)) {
            self.next();
            let q = self.parse_integer()?;
            return self.make_rational(p, q);
        }
        Ok(Rational::from_integer(p))
    }

    fn make_rational(&self, p: BigInt, q: BigInt) -> Result<Rational, ParseError> {
        if q == BigInt::from(0) {
            return err(self.line, "zero denominator");
        }
        Ok(Rational::new(p, q))
    }

    fn parse_factor(&mut self) -> Result<CycNum, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.next();
                Ok(-&self.parse_factor()?)
            }
            Some(Token::LParen) => {
                self.next();
                let inner = self.parse_expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(Token::LBracket) => {
                self.next();
                let mut coords = vec![self.parse_coordinate()?];
                while matches!(self.peek(), Some(Token::Comma)) {
                    self.next();
                    coords.push(self.parse_coordinate()?);
                }
                self.expect(Token::RBracket)?;
                let phi = euler_phi(self.conductor) as usize;
                if coords.len() != phi {
                    return err(
                        self.line,
                        format!(
                            "coordinate list has {} entries, conductor {} needs {phi}",
                            coords.len(),
                            self.conductor
                        ),
                    );
                }
                Ok(CycNum::from_coeffs(self.conductor, coords)
                    .expect("length checked above"))
            }
            Some(Token::Z) => {
                self.next();
                let exponent = if matches!(self.peek(), Some(Token::Caret)) {
                    self.next();
                    let e = self.parse_integer()?;
                    if e < BigInt::from(0) {
                        return err(self.line, "negative exponents are not supported");
                    }
                    // only the residue modulo the conductor matters
                    let (_, rem) = num::Integer::div_rem(&e, &BigInt::from(self.conductor));
                    num::ToPrimitive::to_u64(&rem).expect("residue fits")
                } else {
                    1
                };
                Ok(CycNum::root_of_unity(self.conductor, exponent))
            }
            Some(Token::Int(_)) => {
                let q = self.parse_coordinate()?;
                Ok(CycNum::from_rational(self.conductor, q))
            }
            Some(t) => err(self.line, format!("unexpected `{t}` in entry")),
            None => err(self.line, "unexpected end of row in entry"),
        }
    }

    fn parse_term(&mut self) -> Result<CycNum, ParseError> {
        let mut acc = self.parse_factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.next();
            let rhs = self.parse_factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn parse_expr(&mut self) -> Result<CycNum, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let rhs = self.parse_term()?;
                    acc = &acc + &rhs;
                }
                Some(Token::Minus) => {
                    self.next();
                    let rhs = self.parse_term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }
}

/// Parses one matrix row: comma-separated entry expressions.
fn parse_row(line: usize, text: &str, conductor: u64) -> Result<Vec<CycNum>, ParseError> {
    let tokens = tokenize(line, text)?;
    if tokens.is_empty() {
        return err(line, "empty matrix row");
    }
    let mut parser = EntryParser {
        tokens: &tokens,
        pos: 0,
        line,
        conductor,
    };
    let mut entries = vec![parser.parse_expr()?];
    loop {
        match parser.peek() {
            Some(Token::Comma) => {
                parser.next();
                entries.push(parser.parse_expr()?);
            }
            None => return Ok(entries),
            Some(t) => return err(line, format!("unexpected `{t}` after entry")),
        }
    }
}

enum Block {
    Omega,
    Generator,
}

/// Parses and validates a complete group specification.
pub fn parse_group_spec(text: &str) -> Result<GroupSpecFile, ParseError> {
    let mut conductor: Option<u64> = None;
    let mut dim: Option<usize> = None;
    let mut omega: Option<(usize, Vec<Vec<CycNum>>)> = None;
    let mut generators: Vec<(usize, Vec<Vec<CycNum>>)> = Vec::new();
    let mut closure_cap: Option<usize> = None;
    let mut order_cap: Option<u64> = None;
    let mut open_block: Option<(Block, usize, Vec<Vec<CycNum>>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some((kind, start, mut rows)) = open_block.take() {
            if content == "}" {
                if rows.is_empty() {
                    return err(start, "empty matrix block");
                }
                match kind {
                    Block::Omega => omega = Some((start, rows)),
                    Block::Generator => generators.push((start, rows)),
                }
            } else {
                let c = conductor.expect("conductor precedes blocks");
                rows.push(parse_row(line, content, c)?);
                open_block = Some((kind, start, rows));
            }
            continue;
        }
        let mut words = content.split_whitespace();
        match words.next() {
            Some("conductor") => {
                let value = words
                    .next()
                    .and_then(|w| w.parse::<u64>().ok())
                    .filter(|&m| m >= 1);
                match value {
                    Some(m) if words.next().is_none() => conductor = Some(m),
                    _ => return err(line, "usage: conductor <positive integer>"),
                }
            }
            Some("dim") => {
                let value = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|&n| n >= 1);
                match value {
                    Some(n) if words.next().is_none() => dim = Some(n),
                    _ => return err(line, "usage: dim <positive integer>"),
                }
            }
            Some(name @ ("omega" | "generator")) => {
                if words.next() != Some("{") || words.next().is_some() {
                    return err(line, format!("usage: {name} {{"));
                }
                if conductor.is_none() {
                    return err(line, "conductor must be declared before matrix blocks");
                }
                if matches!(name, "omega") && omega.is_some() {
                    return err(line, "omega declared twice");
                }
                let kind = if name == "omega" {
                    Block::Omega
                } else {
                    Block::Generator
                };
                open_block = Some((kind, line, Vec::new()));
            }
            Some("caps") => {
                for word in words {
                    if let Some(v) = word.strip_prefix("closure=") {
                        closure_cap = Some(v.parse().map_err(|_| ParseError {
                            line,
                            message: format!("bad closure cap `{v}`"),
                        })?);
                    } else if let Some(v) = word.strip_prefix("order=") {
                        order_cap = Some(v.parse().map_err(|_| ParseError {
                            line,
                            message: format!("bad order cap `{v}`"),
                        })?);
                    } else {
                        return err(line, format!("unknown caps field `{word}`"));
                    }
                }
            }
            Some(other) => {
                return err(line, format!("unknown directive `{other}`"));
            }
            None => unreachable!("blank lines were skipped"),
        }
    }
    if let Some((_, start, _)) = open_block {
        return err(start, "matrix block never closed");
    }

    let conductor = conductor.ok_or(ParseError {
        line: 1,
        message: "missing `conductor` directive".into(),
    })?;
    let dim = dim.ok_or(ParseError {
        line: 1,
        message: "missing `dim` directive".into(),
    })?;

    let build_matrix =
        |start: usize, rows: Vec<Vec<CycNum>>, what: String| -> Result<CycMatrix, ParseError> {
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                let found_rows = rows.len();
                let found_cols = rows.first().map(|r| r.len()).unwrap_or(0);
                return err(
                    start,
                    format!("{what} is {found_rows}x{found_cols}, expected {dim}x{dim}"),
                );
            }
            CycMatrix::from_rows(rows).map_err(|e| ParseError {
                line: start,
                message: format!("{what}: {e}"),
            })
        };

    let omega = match omega {
        Some((start, rows)) => {
            let m = build_matrix(start, rows, "omega".into())?;
            validate_symplectic_form(&m).map_err(|e| ParseError {
                line: start,
                message: e.to_string(),
            })?;
            m
        }
        None => {
            if dim % 2 != 0 {
                return err(
                    1,
                    format!("dim {dim} is odd: the default omega needs an even dimension"),
                );
            }
            mckay_core::families::omega_blocks(dim / 2)
        }
    };

    let generators = generators
        .into_iter()
        .enumerate()
        .map(|(i, (start, rows))| build_matrix(start, rows, format!("generator {}", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(GroupSpecFile {
        conductor,
        dim,
        omega,
        generators,
        closure_cap,
        order_cap,
    })
}
