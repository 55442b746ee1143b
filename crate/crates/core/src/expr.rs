//! Parser for polynomial expressions such as `3*(t1-1)*(t2-1)^3`.
//!
//! ```text
//! expr   := "-"? term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" int)?
//! atom   := uint | var | "(" expr ")"
//! var    := "t" uint?
//! int    := "-"? uint
//! ```
//!
//! Whitespace between tokens is ignored. The bare `t` is only accepted when
//! there is a single variable; otherwise variables are `t1, ..., tr`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::MultiLaurent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("variable at byte {offset} is out of range for {arity} variables")]
    Arity { offset: usize, arity: usize },
    #[error("at byte {offset}: {source}")]
    Arithmetic {
        offset: usize,
        #[source]
        source: crate::Error,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::Arity { offset, .. }
            | ParseError::Arithmetic { offset, .. } => *offset,
        }
    }
}

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(Option<u64>),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> PResult<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_from = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let end = digits_from(i);
                i = end;
                out.push((Tok::Num(src[start..end].parse().unwrap()), start));
                continue;
            }
            b't' => {
                let end = digits_from(i + 1);
                i = end;
                let index = if end == start + 1 {
                    None
                } else {
                    Some(src[start + 1..end].parse::<u64>().map_err(|_| ParseError::Syntax {
                        offset: start,
                        message: "variable index too large".into(),
                    })?)
                };
                out.push((Tok::Var(index), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    arity: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn math<T>(offset: usize, r: crate::Result<T>) -> PResult<T> {
        r.map_err(|source| ParseError::Arithmetic { offset, source })
    }

    fn expr(&mut self) -> PResult<MultiLaurent> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            let (op, at) = match self.peek() {
                Tok::Plus | Tok::Minus => self.bump(),
                _ => return Ok(acc),
            };
            let rhs = self.term()?;
            acc = Self::math(at, if op == Tok::Plus { acc.add(&rhs) } else { acc.sub(&rhs) })?;
        }
    }

    fn term(&mut self) -> PResult<MultiLaurent> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            let (_, at) = self.bump();
            let rhs = self.factor()?;
            acc = Self::math(at, acc.mul(&rhs))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<MultiLaurent> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, at) = self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Num(n) = self.peek().clone() else {
            return self.syntax("expected an integer exponent");
        };
        let e: i64 = match i64::try_from(n) {
            Ok(e) => e,
            Err(_) => return self.syntax("exponent too large"),
        };
        self.bump();
        Self::math(at, base.pow(if negative { -e } else { e }))
    }

    fn atom(&mut self) -> PResult<MultiLaurent> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(MultiLaurent::constant(self.arity, n))
            }
            Tok::Var(index) => {
                self.bump();
                let i = match index {
                    None if self.arity == 1 => 0,
                    Some(k) if k >= 1 && k as usize <= self.arity => k as usize - 1,
                    _ => {
                        return Err(ParseError::Arity {
                            offset: at,
                            arity: self.arity,
                        })
                    }
                };
                Ok(MultiLaurent::var(self.arity, i))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.syntax("unexpected end of input"),
            _ => self.syntax("expected a number, a variable or '('"),
        }
    }
}

/// Parses `src` as a Laurent polynomial in `arity` variables.
pub fn parse_poly(src: &str, arity: usize) -> PResult<MultiLaurent> {
    if arity == 0 {
        return Err(ParseError::Arity { offset: 0, arity });
    }
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        arity,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax("unexpected trailing input");
    }
    Ok(out)
}
