//! Parser for element and relation expressions.
//!
//! Grammar (whitespace separated, `*` optional):
//!   expr   := ['-'] term (('+'|'-') term)*
//!   term   := factor+                       products multiply left-to-right
//!   factor := (number | name | '(' expr ')') ['^' integer]
//!   number := integer ['/' integer]
//!
//! Names resolve through a caller-supplied table, so the same parser reads both
//! basis-level expressions (`X9^2 - 3 X3 X13`) and relation entries over named
//! generators (`Q4 Q9 + 3 Q5 Q10 - 2 Q2 Q12`).

use crate::scalar::{rat, Rat};
use crate::uea::{AlgebraCtx, Element};
use crate::{Error, Result};
use num::bigint::BigInt;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' | '*' | ',' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let st = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = bytes[st..i].iter().collect::<String>().parse().unwrap();
                out.push(Tok::Num(n));
            }
            'a'..='z' | 'A'..='Z' => {
                let st = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Name(bytes[st..i].iter().collect()));
            }
            '/' => {
                out.push(Tok::Name("/".into()));
                i += 1;
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    alg: &'a Arc<AlgebraCtx>,
    names: &'a HashMap<String, Element>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Element> {
        let mut neg = false;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            neg = true;
        } else if matches!(self.peek(), Some(Tok::Plus)) {
            self.next();
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.scale(&rat(-1));
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            return Ok(self.factor()?.scale(&rat(-1)));
        }
        let base = match self.next() {
            Some(Tok::Num(n)) => {
                // optional /d
                let mut c = Rat::from_integer(n);
                if matches!(self.peek(), Some(Tok::Name(s)) if s == "/") {
                    self.next();
                    match self.next() {
                        Some(Tok::Num(d)) => c /= Rat::from_integer(d),
                        _ => return Err(Error::Parse("expected denominator".into())),
                    }
                }
                Element::constant(self.alg, c)
            }
            Some(Tok::Name(s)) if s != "/" => match self.names.get(&s) {
                Some(e) => e.clone(),
                None => return Err(Error::UnresolvedName(s)),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => e,
                    _ => return Err(Error::Parse("unbalanced parenthesis".into())),
                }
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("bad exponent".into()))?;
                    let mut acc = Element::one(self.alg);
                    for _ in 0..e {
                        acc = acc.mul(&base)?;
                    }
                    Ok(acc)
                }
                _ => Err(Error::Parse("expected exponent".into())),
            }
        } else {
            Ok(base)
        }
    }
}

/// Parse an expression over the given named elements; products associate left.
pub fn parse_with_names(
    alg: &Arc<AlgebraCtx>,
    names: &HashMap<String, Element>,
    input: &str,
) -> Result<Element> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0, alg, names };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing tokens at {}", p.pos)));
    }
    Ok(e)
}

/// Parse an expression over the algebra's basis labels.
pub fn parse_element(alg: &Arc<AlgebraCtx>, input: &str) -> Result<Element> {
    let names: HashMap<String, Element> = alg
        .sc
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), Element::generator(alg, i)))
        .collect();
    parse_with_names(alg, &names, input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::builtin_algebra;

    #[test]
    fn parses_text_format() {
        let alg = AlgebraCtx::new(builtin_algebra("g2").unwrap());
        let e = parse_element(&alg, "3/2 * X1^2 X4 + -1 * X13").unwrap();
        assert_eq!(format!("{e}"), "3/2 * X1^2 X4 + -1 * X13");
        // round trip through the printer
        let e2 = parse_element(&alg, &format!("{e}")).unwrap();
        assert_eq!(e.to_schema().terms, e2.to_schema().terms);
    }

    #[test]
    fn left_to_right_products_and_parens() {
        let alg = AlgebraCtx::new(builtin_algebra("a2").unwrap());
        let lhs = parse_element(&alg, "E21 E12").unwrap();
        let e12 = Element::generator(&alg, 2);
        let e21 = Element::generator(&alg, 5);
        assert_eq!(lhs.to_schema().terms, e21.mul(&e12).unwrap().to_schema().terms);
        let p = parse_element(&alg, "(H1 - H2) E13").unwrap();
        assert_eq!(p.degree(), 2);
        assert!(parse_element(&alg, "E99").is_err());
        assert!(parse_element(&alg, "H1 +").is_err());
    }
}
