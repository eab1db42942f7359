//! Tokenizer and recursive-descent parser for the polynomial text form, shared with
//! the grammar rule format.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ['^' ['-'] INT]
//! atom   := INT | IDENT | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{monomial::ALPHA, MultiPoly, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Arrow,
    Semi,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(i) => format!("number `{i}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let push = |out: &mut Vec<Spanned>, tok| {
            out.push(Spanned {
                tok,
                line: l0,
                column: c0,
            })
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '+' => push(&mut out, Tok::Plus),
            '*' => push(&mut out, Tok::Star),
            '/' => push(&mut out, Tok::Slash),
            '^' => push(&mut out, Tok::Caret),
            '(' => push(&mut out, Tok::LParen),
            ')' => push(&mut out, Tok::RParen),
            ';' => push(&mut out, Tok::Semi),
            '-' | '−' => {
                if chars.get(i + 1) == Some(&'>') {
                    push(&mut out, Tok::Arrow);
                    i += 2;
                    col += 2;
                    continue;
                }
                push(&mut out, Tok::Minus);
            }
            'α' => push(&mut out, Tok::Ident(ALPHA.to_string())),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                col += i - start;
                push(&mut out, Tok::Int(digits.parse().expect("ascii digits")));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let ident: String = chars[start..i].iter().collect();
                col += i - start;
                push(&mut out, Tok::Ident(ident));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
        col += 1;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

pub(crate) struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    pub fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    pub fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    pub fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    pub fn error_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    pub fn expect(&mut self, want: Tok) -> Result<Spanned> {
        if self.peek().tok == want {
            Ok(self.next())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().tok.describe()
            )))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, Spanned)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => Ok((s, self.next())),
            other => Err(self.error_here(format!("expected identifier, found {}", other.describe()))),
        }
    }

    pub fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.peek().tok == Tok::Minus {
            self.next();
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc += self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.next();
                    let at = self.peek().clone();
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(Error::Syntax {
                            line: at.line,
                            column: at.column,
                            message: "division by zero".into(),
                        });
                    }
                    acc = &acc * &d.pow(-1)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let negative = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let k = match self.peek().tok.clone() {
            Tok::Int(k) => {
                self.next();
                i64::try_from(k).map_err(|_| self.error_here("exponent too large"))?
            }
            Tok::LParen => {
                // also accept `^(-2)`
                self.next();
                let neg = if self.peek().tok == Tok::Minus {
                    self.next();
                    true
                } else {
                    false
                };
                let k = match self.next().tok {
                    Tok::Int(k) => i64::try_from(k).map_err(|_| self.error_here("exponent too large"))?,
                    _ => return Err(self.error_here("expected integer exponent")),
                };
                self.expect(Tok::RParen)?;
                if neg {
                    -k
                } else {
                    k
                }
            }
            other => return Err(self.error_here(format!("expected integer exponent, found {}", other.describe()))),
        };
        base.pow(if negative { -k } else { k })
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().tok.clone() {
            Tok::Int(i) => {
                self.next();
                Ok(MultiPoly::constant(Rational::from_integer(i)))
            }
            Tok::Ident(s) => {
                self.next();
                Ok(MultiPoly::var(&s))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(self.error_here(format!("expected a term, found {}", other.describe()))),
        }
    }
}

pub(crate) fn parse_poly(src: &str) -> Result<MultiPoly> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    if !p.at_eof() {
        return Err(p.error_here(format!("unexpected {}", p.peek().tok.describe())));
    }
    Ok(e)
}
