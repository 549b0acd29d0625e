//! Parser and evaluator for Steenrod operation expressions.
//!
//! Grammar (whitespace-insensitive): identifiers `u1..uk`, `v1..vk`;
//! operators `+`, `-`, `*` and integer scalars; operation heads `beta`,
//! `P<i>`, `q<i>`, `Q<i>`; parentheses. `^` with a non-negative integer
//! exponent is accepted as repeated multiplication so canonical output can be
//! fed back in. Diagnostics carry 1-based byte offsets and the expected
//! token.

use crate::error::{Error, Result};
use crate::steenrod::{MotClass, MotRing};

/// Expression tree. Each node keeps the 1-based byte offset it started at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpExpr {
    U(u32, usize),
    V(u32, usize),
    Int(i64, usize),
    Neg(Box<OpExpr>, usize),
    Add(Box<OpExpr>, Box<OpExpr>, usize),
    Sub(Box<OpExpr>, Box<OpExpr>, usize),
    Mul(Box<OpExpr>, Box<OpExpr>, usize),
    Pow(Box<OpExpr>, u32, usize),
    Beta(Box<OpExpr>, usize),
    Power(u32, Box<OpExpr>, usize),
    QComp(u32, Box<OpExpr>, usize),
    Milnor(u32, Box<OpExpr>, usize),
}

impl OpExpr {
    pub fn offset(&self) -> usize {
        match self {
            OpExpr::U(_, at)
            | OpExpr::V(_, at)
            | OpExpr::Int(_, at)
            | OpExpr::Neg(_, at)
            | OpExpr::Add(_, _, at)
            | OpExpr::Sub(_, _, at)
            | OpExpr::Mul(_, _, at)
            | OpExpr::Pow(_, _, at)
            | OpExpr::Beta(_, at)
            | OpExpr::Power(_, _, at)
            | OpExpr::QComp(_, _, at)
            | OpExpr::Milnor(_, _, at) => *at,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn next_tok(&mut self) -> Result<(Tok, usize)> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let at = self.pos + 1;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, at));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: i64 = s.parse().map_err(|_| Error::Parse {
                    offset: at,
                    expected: "a smaller integer".to_string(),
                })?;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && self.src[self.pos].is_ascii_alphanumeric()
                {
                    self.pos += 1;
                }
                Tok::Ident(
                    String::from_utf8(self.src[start..self.pos].to_vec()).unwrap(),
                )
            }
            other => {
                return Err(Error::Parse {
                    offset: at,
                    expected: format!("a token, found `{}`", other as char),
                })
            }
        };
        Ok((tok, at))
    }

    fn peek(&mut self) -> Result<(Tok, usize)> {
        let save = self.pos;
        let out = self.next_tok()?;
        self.pos = save;
        Ok(out)
    }

    fn expect(&mut self, want: Tok) -> Result<usize> {
        let (tok, at) = self.next_tok()?;
        if tok == want {
            Ok(at)
        } else {
            Err(Error::Parse {
                offset: at,
                expected: format!("{}, found {}", want.describe(), tok.describe()),
            })
        }
    }

    fn expr(&mut self) -> Result<OpExpr> {
        let mut lhs = self.term()?;
        loop {
            let (tok, at) = self.peek()?;
            match tok {
                Tok::Plus => {
                    self.next_tok()?;
                    let rhs = self.term()?;
                    lhs = OpExpr::Add(Box::new(lhs), Box::new(rhs), at);
                }
                Tok::Minus => {
                    self.next_tok()?;
                    let rhs = self.term()?;
                    lhs = OpExpr::Sub(Box::new(lhs), Box::new(rhs), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<OpExpr> {
        let mut lhs = self.unary()?;
        loop {
            let (tok, at) = self.peek()?;
            match tok {
                Tok::Star => {
                    self.next_tok()?;
                    let rhs = self.unary()?;
                    lhs = OpExpr::Mul(Box::new(lhs), Box::new(rhs), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<OpExpr> {
        let (tok, at) = self.peek()?;
        if tok == Tok::Minus {
            self.next_tok()?;
            let inner = self.unary()?;
            return Ok(OpExpr::Neg(Box::new(inner), at));
        }
        self.power()
    }

    fn power(&mut self) -> Result<OpExpr> {
        let base = self.atom()?;
        let (tok, _) = self.peek()?;
        if tok == Tok::Caret {
            self.next_tok()?;
            let (tok, at) = self.next_tok()?;
            match tok {
                Tok::Int(n) if n >= 0 => {
                    return Ok(OpExpr::Pow(Box::new(base), n as u32, at))
                }
                other => {
                    return Err(Error::Parse {
                        offset: at,
                        expected: format!(
                            "a non-negative exponent, found {}",
                            other.describe()
                        ),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<OpExpr> {
        let (tok, at) = self.next_tok()?;
        match tok {
            Tok::Int(n) => Ok(OpExpr::Int(n, at)),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) => self.ident(name, at),
            other => Err(Error::Parse {
                offset: at,
                expected: format!(
                    "an integer, generator, operation, or `(`, found {}",
                    other.describe()
                ),
            }),
        }
    }

    fn ident(&mut self, name: String, at: usize) -> Result<OpExpr> {
        if name == "beta" {
            self.expect(Tok::LParen)?;
            let inner = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(OpExpr::Beta(Box::new(inner), at));
        }
        if let Some(idx) = parse_indexed(&name, 'u') {
            return Ok(OpExpr::U(idx, at));
        }
        if let Some(idx) = parse_indexed(&name, 'v') {
            return Ok(OpExpr::V(idx, at));
        }
        for (head, build) in [
            ('P', OpExpr::Power as fn(u32, Box<OpExpr>, usize) -> OpExpr),
            ('q', OpExpr::QComp as fn(u32, Box<OpExpr>, usize) -> OpExpr),
            ('Q', OpExpr::Milnor as fn(u32, Box<OpExpr>, usize) -> OpExpr),
        ] {
            if let Some(idx) = parse_indexed(&name, head) {
                self.expect(Tok::LParen)?;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(build(idx, Box::new(inner), at));
            }
        }
        Err(Error::Parse {
            offset: at,
            expected: format!(
                "`beta`, `P<i>`, `q<i>`, `Q<i>`, `u<i>`, or `v<i>`, found `{name}`"
            ),
        })
    }
}

fn parse_indexed(name: &str, head: char) -> Option<u32> {
    let rest = name.strip_prefix(head)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

/// Parse an expression; on failure the diagnostic carries the 1-based byte
/// offset and the expected-token description, and no partial tree is
/// produced.
pub fn parse_expression(src: &str) -> Result<OpExpr> {
    let mut p = Parser::new(src);
    let e = p.expr()?;
    let (tok, at) = p.next_tok()?;
    if tok != Tok::End {
        return Err(Error::Parse {
            offset: at,
            expected: format!("end of input, found {}", tok.describe()),
        });
    }
    Ok(e)
}

/// Evaluate an expression bottom-up in the given ring. Violations (generator
/// index out of range, `q0`/`Q0`) are reported with the node position.
pub fn evaluate(ring: &MotRing, expr: &OpExpr) -> Result<MotClass> {
    match expr {
        OpExpr::U(i, at) => ring.u(*i).map_err(|_| Error::Eval {
            offset: *at,
            message: format!(
                "u{i} is out of range for {} generators",
                ring.generator_count()
            ),
        }),
        OpExpr::V(i, at) => ring.v(*i).map_err(|_| Error::Eval {
            offset: *at,
            message: format!(
                "v{i} is out of range for {} generators",
                ring.generator_count()
            ),
        }),
        OpExpr::Int(n, _) => Ok(ring.scalar(*n)),
        OpExpr::Neg(inner, _) => Ok(evaluate(ring, inner)?.neg()),
        OpExpr::Add(a, b, _) => {
            evaluate(ring, a)?.add(&evaluate(ring, b)?)
        }
        OpExpr::Sub(a, b, _) => {
            evaluate(ring, a)?.sub(&evaluate(ring, b)?)
        }
        OpExpr::Mul(a, b, _) => {
            evaluate(ring, a)?.mul(&evaluate(ring, b)?)
        }
        OpExpr::Pow(a, k, _) => Ok(evaluate(ring, a)?.pow(*k)),
        OpExpr::Beta(inner, _) => Ok(ring.bockstein(&evaluate(ring, inner)?)),
        OpExpr::Power(i, inner, _) => Ok(ring.power_op(*i, &evaluate(ring, inner)?)),
        OpExpr::QComp(i, inner, at) => {
            if *i == 0 {
                return Err(Error::Eval {
                    offset: *at,
                    message: "q0 is not defined; indices start at 1".to_string(),
                });
            }
            Ok(ring.q_composite(*i, &evaluate(ring, inner)?))
        }
        OpExpr::Milnor(i, inner, at) => {
            if *i == 0 {
                return Err(Error::Eval {
                    offset: *at,
                    message: "Q0 is not defined; indices start at 1".to_string(),
                });
            }
            Ok(ring.milnor_q(*i, &evaluate(ring, inner)?))
        }
    }
}
