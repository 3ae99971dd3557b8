//! Text form of polynomials.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := coeff ("*" factor)* | factor ("*" factor)*
//! factor := var ("^" nat)?
//! coeff  := integer | integer "/" positive-integer
//! ```
//!
//! Whitespace is insignificant. Printing lists terms in descending order,
//! folds the sign of each coefficient into the joining operator and elides
//! unit coefficients.

use std::fmt::Write;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::Rational;
use crate::error::{Error, Result};
use crate::poly::context::RingContext;
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::{Polynomial, Term};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'/' => out.push((start, Tok::Slash)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::parse(start, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Arc<RingContext>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms: Vec<Term> = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, mut c) = self.term()?;
            if negate {
                c = -&c;
            }
            terms.push((m, c));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => {
                    return Err(Error::parse(self.offset(), "expected `+`, `-` or end of input"))
                }
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ctx, terms))
    }

    fn term(&mut self) -> Result<Term> {
        let field = self.ctx.field();
        let mut exps = vec![0u32; self.ctx.nvars()];
        let coeff = match self.peek() {
            Some(Tok::Int(_)) => {
                let at = self.offset();
                let Some(Tok::Int(n)) = self.next() else {
                    unreachable!()
                };
                let q = if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let dat = self.offset();
                    match self.next() {
                        Some(Tok::Int(d)) if !d.is_zero() => Rational::new(n, d)?,
                        Some(Tok::Int(_)) => return Err(Error::parse(dat, "zero denominator")),
                        _ => return Err(Error::parse(dat, "expected a positive denominator")),
                    }
                } else {
                    Rational::from_integer(n)
                };
                let c = field
                    .from_rational(&q)
                    .map_err(|_| Error::parse(at, format!("coefficient {q} is not in {field}")))?;
                if self.peek() == Some(&Tok::Star) {
                    self.pos += 1;
                    self.factor(&mut exps)?;
                }
                c
            }
            _ => {
                self.factor(&mut exps)?;
                field.one()
            }
        };
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::from_exponents(&exps), coeff))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let at = self.offset();
        let name = match self.next() {
            Some(Tok::Ident(n)) => n,
            Some(_) => return Err(Error::parse(at, "expected a variable")),
            None => return Err(Error::parse(at, "unexpected end of input")),
        };
        let i = self
            .ctx
            .index_of(&name)
            .ok_or_else(|| Error::parse(at, format!("unknown variable `{name}`")))?;
        let mut e = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let eat = self.offset();
            e = match self.next() {
                Some(Tok::Int(n)) => u32::try_from(n)
                    .map_err(|_| Error::parse(eat, "exponent out of range"))?,
                _ => return Err(Error::parse(eat, "malformed exponent")),
            };
        }
        exps[i] = exps[i]
            .checked_add(e)
            .ok_or_else(|| Error::parse(at, "exponent out of range"))?;
        Ok(())
    }
}

/// Parses a polynomial in the given ring.
pub fn parse_poly(text: &str, ctx: &Arc<RingContext>) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ctx,
    };
    p.poly()
}

fn write_monomial(out: &mut String, ctx: &RingContext, m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(ctx.name(i));
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

pub(crate) fn format_terms(ctx: &RingContext, terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            write!(out, "{a}").unwrap();
        } else {
            if !a.is_one() {
                write!(out, "{a}*").unwrap();
            }
            write_monomial(&mut out, ctx, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffField;
    use proptest::prelude::*;

    fn ring(field: CoeffField) -> Arc<RingContext> {
        RingContext::new(&["x", "y", "z"], field).unwrap()
    }

    #[test]
    fn parses_and_prints() {
        let r = ring(CoeffField::Rationals);
        let f = parse_poly("x^3 - y*z", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x^3 - y*z");
        let g = parse_poly(" -3/6 * x*x + 2 - y^2 ", &r).unwrap();
        assert_eq!(g.to_string(), "-1/2*x^2 - y^2 + 2");
        assert_eq!(parse_poly("0", &r).unwrap().to_string(), "0");
        assert_eq!(parse_poly("x - x", &r).unwrap().to_string(), "0");
    }

    #[test]
    fn prime_field_coefficients() {
        let r = ring(CoeffField::prime(7).unwrap());
        assert_eq!(parse_poly("x^2 - y*z", &r).unwrap().to_string(), "x^2 + 6*y*z");
        assert!(matches!(parse_poly("1/7*x", &r), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let r = ring(CoeffField::Rationals);
        assert!(matches!(parse_poly("", &r), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("   ", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x + q", &r), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x^", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x^y", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x + 1/0", &r), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse_poly("x y", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x + $", &r), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x +", &r), Err(Error::Parse { pos: 3, .. })));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::collection::vec(0u32..4, 3), -9i64..9, 1i64..5),
            0..6,
        )
        .prop_map(|ts| {
            let r = ring(CoeffField::Rationals);
            let terms = ts
                .into_iter()
                .map(|(e, n, d)| {
                    let q = Rational::new(n.into(), d.into()).unwrap();
                    (Monomial::from_exponents(&e), r.field().from_rational(&q).unwrap())
                })
                .collect();
            Polynomial::from_terms(&r, terms)
        })
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(f in arb_poly()) {
            let text = f.to_string();
            let g = parse_poly(&text, f.ctx()).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), text);
        }
    }
}
