//! The polynomial system file format.
//!
//! ```text
//! # comment
//! ring: x, y
//! method: hilbert
//! polys:
//! x^2 + y^2 - 1
//! 2*x*y - 1/2
//! ```
//!
//! Header lines are `key: value`; `ring` is required. Every non-blank line
//! after `polys:` is one polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use sagbi_gb::{Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub variables: Vec<String>,
    pub polynomials: Vec<String>,
    pub options: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a system file into its header data and polynomials over the
/// declared ring.
pub fn parse_system(text: &str) -> Result<(SystemFile, Vec<Polynomial>), ParseError> {
    let mut variables: Option<(Vec<String>, usize)> = None;
    let mut options = BTreeMap::new();
    let mut sources: Vec<(usize, usize, String)> = Vec::new();
    let mut in_polys = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        if in_polys {
            sources.push((lineno, indent + 1, trimmed.to_string()));
            continue;
        }
        let Some((key, value)) = trimmed.split_once(':') else {
            return Err(error(
                lineno,
                indent + 1,
                "expected 'key: value' or 'polys:'",
            ));
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "polys" => {
                if !value.is_empty() {
                    sources.push((
                        lineno,
                        content.find(value).unwrap_or(0) + 1,
                        value.to_string(),
                    ));
                }
                in_polys = true;
            }
            "ring" => {
                if variables.is_some() {
                    return Err(error(lineno, indent + 1, "duplicate 'ring' line"));
                }
                let names: Vec<String> = value.split(',').map(|s| s.trim().to_string()).collect();
                variables = Some((names, lineno));
            }
            _ => {
                if options.insert(key.to_string(), value.to_string()).is_some() {
                    return Err(error(
                        lineno,
                        indent + 1,
                        format!("duplicate option '{key}'"),
                    ));
                }
            }
        }
    }

    let Some((variables, ring_line)) = variables else {
        return Err(error(1, 1, "missing 'ring:' line"));
    };
    let ring =
        Ring::new(variables.iter().cloned()).map_err(|e| error(ring_line, 1, e.to_string()))?;
    if sources.is_empty() {
        let line = text.lines().count().max(1);
        return Err(error(
            line,
            1,
            "expected at least one polynomial after 'polys:'",
        ));
    }
    let polys = sources
        .iter()
        .map(|(line, col, src)| {
            parse_polynomial(src, &ring).map_err(|(c, m)| error(*line, col + c - 1, m))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let file = SystemFile {
        variables,
        polynomials: sources.into_iter().map(|(_, _, s)| s).collect(),
        options,
    };
    Ok((file, polys))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("'{s}'"),
            Token::Int(n) => format!("'{n}'"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
        }
    }
}

/// Column (1-based) and message.
type ExprError = (usize, String);

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((col, Token::Int(digits.parse().expect("ascii digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Token::Ident(chars[start..i].iter().collect())));
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            _ => return Err((col, format!("unexpected character '{c}'"))),
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_col: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self) -> ExprError {
        match self.peek() {
            Some(t) => (self.col(), format!("unexpected {}", t.describe())),
            None => (self.col(), "unexpected end of expression".into()),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Ident(_) | Token::Int(_) | Token::LParen) => {
                    return Err((
                        self.col(),
                        "implicit multiplication is not allowed; use '*'".into(),
                    ));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ExprError> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ExprError> {
        let base = self.primary()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        match self.bump() {
            Some(Token::Int(n)) => {
                let k: u32 = n
                    .try_into()
                    .map_err(|_| (col, "exponent is too large".to_string()))?;
                Ok(base.pow(k))
            }
            Some(Token::Minus) => Err((col, "negative exponent".into())),
            _ => {
                self.pos -= 1;
                Err((col, "expected a nonnegative integer exponent".into()))
            }
        }
    }

    fn primary(&mut self) -> Result<Polynomial, ExprError> {
        let col = self.col();
        match self.bump() {
            Some(Token::Int(n)) => {
                let mut value = Rational::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    let dcol = self.col();
                    match self.bump() {
                        Some(Token::Int(d)) if !d.is_zero() => value /= Rational::from_integer(d),
                        Some(Token::Int(_)) => return Err((dcol, "zero denominator".into())),
                        _ => return Err((dcol, "expected an integer denominator".into())),
                    }
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(Token::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err((col, format!("undeclared variable '{name}'"))),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(match self.peek() {
                        None => (self.col(), "missing ')'".to_string()),
                        Some(_) => self.unexpected(),
                    });
                }
                self.bump();
                Ok(inner)
            }
            Some(Token::Slash) => {
                Err((col, "'/' is only allowed inside a rational literal".into()))
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected())
            }
        }
    }
}

/// Parses one expression; errors carry a 1-based column within `src`.
pub fn parse_polynomial(src: &str, ring: &Arc<Ring>) -> Result<Polynomial, (usize, String)> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_col: src.chars().count() + 1,
        ring,
    };
    let p = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected());
    }
    Ok(p)
}
