//! Parser for the scalar-expression grammar.
//!
//! ```text
//! expr    := term  (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | primary
//! primary := integer | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```
//!
//! ASCII, whitespace-insensitive, byte positions in errors.

use crate::poly::{Int, Rational};
use crate::real::{AlgebraicReal, RealError};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    Expected(&'static str),
    TrailingInput,
    DivisionByZero,
    NegativeSqrt,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{}'", c),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::Expected(what) => write!(f, "expected {}", what),
            ParseErrorKind::TrailingInput => write!(f, "trailing input"),
            ParseErrorKind::DivisionByZero => write!(f, "division by zero"),
            ParseErrorKind::NegativeSqrt => write!(f, "sqrt of a negative value"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(Int),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Sqrt,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        loop {
            while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_whitespace() {
                lx.pos += 1;
            }
            if lx.pos >= lx.src.len() {
                return Ok(out);
            }
            let start = lx.pos;
            let c = lx.src[lx.pos];
            let tok = match c {
                b'+' => {
                    lx.pos += 1;
                    Tok::Plus
                }
                b'-' => {
                    lx.pos += 1;
                    Tok::Minus
                }
                b'*' => {
                    lx.pos += 1;
                    Tok::Star
                }
                b'/' => {
                    lx.pos += 1;
                    Tok::Slash
                }
                b'(' => {
                    lx.pos += 1;
                    Tok::LParen
                }
                b')' => {
                    lx.pos += 1;
                    Tok::RParen
                }
                b'0'..=b'9' => {
                    let mut end = lx.pos;
                    while end < lx.src.len() && lx.src[end].is_ascii_digit() {
                        end += 1;
                    }
                    let digits = std::str::from_utf8(&lx.src[lx.pos..end]).unwrap();
                    lx.pos = end;
                    Tok::Int(digits.parse::<Int>().unwrap())
                }
                b's' if lx.src[lx.pos..].starts_with(b"sqrt") => {
                    lx.pos += 4;
                    Tok::Sqrt
                }
                other => {
                    return Err(ParseError {
                        pos: start,
                        kind: ParseErrorKind::UnexpectedChar(other as char),
                    })
                }
            };
            out.push((tok, start));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.idx)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.idx).cloned();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn end_pos(&self) -> usize {
        self.len
    }

    fn expr(&mut self) -> Result<AlgebraicReal, ParseError> {
        let mut acc = self.term()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                Tok::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgebraicReal, ParseError> {
        let mut acc = self.unary()?;
        while let Some((tok, pos)) = self.peek().cloned() {
            match tok {
                Tok::Star => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc.mul(&rhs);
                }
                Tok::Slash => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs).map_err(|e| ParseError {
                        pos,
                        kind: match e {
                            RealError::DivisionByZero => ParseErrorKind::DivisionByZero,
                            _ => ParseErrorKind::Expected("valid divisor"),
                        },
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<AlgebraicReal, ParseError> {
        if let Some((Tok::Minus, _)) = self.peek() {
            self.next();
            let v = self.unary()?;
            return Ok(v.neg());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<AlgebraicReal, ParseError> {
        match self.next() {
            None => Err(ParseError {
                pos: self.end_pos(),
                kind: ParseErrorKind::UnexpectedEnd,
            }),
            Some((Tok::Int(n), _)) => Ok(AlgebraicReal::from_rational(Rational::from(n))),
            Some((Tok::LParen, _)) => {
                let v = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _)) => Ok(v),
                    Some((_, pos)) => Err(ParseError {
                        pos,
                        kind: ParseErrorKind::Expected("')'"),
                    }),
                    None => Err(ParseError {
                        pos: self.end_pos(),
                        kind: ParseErrorKind::Expected("')'"),
                    }),
                }
            }
            Some((Tok::Sqrt, spos)) => {
                match self.next() {
                    Some((Tok::LParen, _)) => {}
                    Some((_, pos)) => {
                        return Err(ParseError {
                            pos,
                            kind: ParseErrorKind::Expected("'(' after sqrt"),
                        })
                    }
                    None => {
                        return Err(ParseError {
                            pos: self.end_pos(),
                            kind: ParseErrorKind::Expected("'(' after sqrt"),
                        })
                    }
                }
                let v = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _)) => {}
                    Some((_, pos)) => {
                        return Err(ParseError {
                            pos,
                            kind: ParseErrorKind::Expected("')'"),
                        })
                    }
                    None => {
                        return Err(ParseError {
                            pos: self.end_pos(),
                            kind: ParseErrorKind::Expected("')'"),
                        })
                    }
                }
                v.sqrt().map_err(|_| ParseError {
                    pos: spos,
                    kind: ParseErrorKind::NegativeSqrt,
                })
            }
            Some((tok, pos)) => {
                let _ = tok;
                Err(ParseError {
                    pos,
                    kind: ParseErrorKind::Expected("integer, '(', 'sqrt', or '-'"),
                })
            }
        }
    }
}

/// Parse a scalar expression into an exact value.
pub fn parse_scalar(text: &str) -> Result<AlgebraicReal, ParseError> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        len: text.len(),
    };
    let v = p.expr()?;
    if let Some((_, pos)) = p.peek() {
        return Err(ParseError {
            pos: *pos,
            kind: ParseErrorKind::TrailingInput,
        });
    }
    Ok(v)
}
