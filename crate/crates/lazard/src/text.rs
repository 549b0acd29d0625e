//! Canonical text form of polynomials and its parser.
//!
//! Terms are printed in descending canonical monomial order, joined by
//! ` + ` / ` - `, with explicit exponents (`^e` only for e >= 2) and the
//! coefficient magnitude omitted when it is 1: `2*b1^2 - 3*b2`. Mod-l
//! coefficients are canonical residues, so `-` separators only occur over the
//! integers. `serialize(parse(s)) == s` holds bytewise for canonical `s`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::ring::{GradedPoly, Monomial, Table};

/// Render a polynomial in canonical form.
pub fn to_canonical(p: &GradedPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let table = p.table();
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (k, (m, c)) in terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || m.is_unit() {
            factors.push(mag.to_string());
        }
        for &(id, e) in m.pairs() {
            let name = &table.generator(id).name;
            if e == 1 {
                factors.push(name.clone());
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
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
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(s.parse().unwrap())
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(String::from_utf8(self.src[start..self.pos].to_vec()).unwrap())
            }
            other => {
                return Err(Error::Parse {
                    offset: at,
                    expected: format!("term, found `{}`", other as char),
                })
            }
        };
        Ok((tok, at))
    }

    fn peek(&mut self) -> Result<Tok> {
        let save = self.pos;
        let (tok, _) = self.next()?;
        self.pos = save;
        Ok(tok)
    }
}

/// Parse the canonical polynomial form over a given table.
pub fn parse(src: &str, table: &Table) -> Result<GradedPoly> {
    let mut lex = Lexer::new(src);
    let mut out = GradedPoly::zero(table);
    let mut sign = BigInt::from(1);
    match lex.peek()? {
        Tok::Minus => {
            lex.next()?;
            sign = -sign;
        }
        Tok::Plus => {
            lex.next()?;
        }
        _ => {}
    }
    loop {
        let (m, c) = parse_term(&mut lex, table)?;
        out.add_term(m, c * &sign);
        let (tok, at) = lex.next()?;
        match tok {
            Tok::End => break,
            Tok::Plus => sign = BigInt::from(1),
            Tok::Minus => sign = BigInt::from(-1),
            _ => {
                return Err(Error::Parse {
                    offset: at,
                    expected: "`+`, `-`, or end of input".to_string(),
                })
            }
        }
    }
    Ok(out)
}

fn parse_term(lex: &mut Lexer<'_>, table: &Table) -> Result<(Monomial, BigInt)> {
    let mut coeff = BigInt::from(1);
    let mut pairs: Vec<(u16, u16)> = Vec::new();
    loop {
        let (tok, at) = lex.next()?;
        match tok {
            Tok::Int(n) => {
                coeff *= n;
            }
            Tok::Ident(name) => {
                let id = table.id_of(&name).ok_or(Error::Parse {
                    offset: at,
                    expected: format!("generator name, found `{name}`"),
                })?;
                let mut exp = 1u16;
                if let Tok::Caret = lex.peek()? {
                    lex.next()?;
                    let (tok, at) = lex.next()?;
                    match tok {
                        Tok::Int(n) => {
                            exp = u16::try_from(&n).map_err(|_| Error::Parse {
                                offset: at,
                                expected: "small exponent".to_string(),
                            })?;
                        }
                        _ => {
                            return Err(Error::Parse {
                                offset: at,
                                expected: "exponent".to_string(),
                            })
                        }
                    }
                }
                pairs.push((id, exp));
            }
            _ => {
                return Err(Error::Parse {
                    offset: at,
                    expected: "integer or generator".to_string(),
                })
            }
        }
        match lex.peek()? {
            Tok::Star => {
                lex.next()?;
            }
            _ => break,
        }
    }
    let mut merged: std::collections::BTreeMap<u16, u32> = std::collections::BTreeMap::new();
    for (id, e) in pairs {
        *merged.entry(id).or_insert(0) += e as u32;
    }
    let m = Monomial::from_pairs(
        merged
            .into_iter()
            .map(|(id, e)| (id, u16::try_from(e).expect("exponent overflow"))),
    );
    Ok((m, coeff))
}
