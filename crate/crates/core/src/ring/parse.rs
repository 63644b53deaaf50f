//! Parser for polynomial literals such as `x^2 + 3*x*y - 1`.

use std::sync::Arc;

use super::monomial::Monomial;
use super::poly::{Poly, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("integer {text} out of range")))?;
                out.push(Tok::Num(n));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

/// Parse a polynomial in the given ring. Supports integer and `a/b` coefficients,
/// `^` powers, implicit `*` between a coefficient and a variable is not accepted.
pub fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Poly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let field = ring.field();
    let mut pos = 0;
    let mut acc = ring.zero();
    let mut first = true;
    while pos < toks.len() {
        let mut negative = false;
        match toks.get(pos) {
            Some(Tok::Plus) if !first => pos += 1,
            Some(Tok::Minus) => {
                negative = true;
                pos += 1
            }
            Some(_) if first => {}
            t => return Err(Error::Parse(format!("expected + or - before term, found {t:?}"))),
        }
        first = false;
        let mut coeff = field.one();
        let mut mono = Monomial::one(ring.nvars());
        let mut expect_factor = true;
        while expect_factor {
            match toks.get(pos) {
                Some(Tok::Num(n)) => {
                    pos += 1;
                    let mut c = field.from_i64(*n);
                    if toks.get(pos) == Some(&Tok::Slash) {
                        pos += 1;
                        match toks.get(pos) {
                            Some(Tok::Num(d)) => {
                                c = field.from_ratio(*n, *d)?;
                                pos += 1;
                            }
                            t => return Err(Error::Parse(format!("expected denominator, found {t:?}"))),
                        }
                    }
                    if toks.get(pos) == Some(&Tok::Caret) {
                        pos += 1;
                        let e = parse_exponent(&toks, &mut pos)?;
                        c = c.pow(e);
                    }
                    coeff = &coeff * &c;
                }
                Some(Tok::Ident(name)) => {
                    pos += 1;
                    let idx = ring
                        .vars()
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                    let mut e = 1;
                    if toks.get(pos) == Some(&Tok::Caret) {
                        pos += 1;
                        e = parse_exponent(&toks, &mut pos)?;
                    }
                    let mut exps = mono.exps().to_vec();
                    exps[idx] += e as u16;
                    mono = Monomial::new(&exps);
                }
                t => return Err(Error::Parse(format!("expected factor, found {t:?}"))),
            }
            expect_factor = toks.get(pos) == Some(&Tok::Star);
            if expect_factor {
                pos += 1;
            }
        }
        if negative {
            coeff = -&coeff;
        }
        acc = acc.add(&Poly::monomial(ring, mono, coeff));
    }
    Ok(acc)
}

fn parse_exponent(toks: &[Tok], pos: &mut usize) -> Result<u32> {
    match toks.get(*pos) {
        Some(Tok::Num(e)) if *e >= 0 && *e < 1 << 15 => {
            *pos += 1;
            Ok(*e as u32)
        }
        t => Err(Error::Parse(format!("bad exponent {t:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder};

    #[test]
    fn parses_mixed_terms() {
        let r = Ring::plane(97);
        let p = parse_poly(&r, "x^2 + 3*x*y - 1").unwrap();
        let x = r.var(0);
        let y = r.var(1);
        let expect = x.mul(&x).add(&x.mul(&y).scale(&r.field().from_i64(3))).sub(&r.one());
        assert_eq!(p, expect);
    }

    #[test]
    fn parses_leading_minus_and_fractions() {
        let r = Ring::new(Field::Rationals, vec!["x".into()], MonomialOrder::Degrevlex).unwrap();
        let p = parse_poly(&r, "-1/2*x + 2").unwrap();
        assert_eq!(p.to_string(), "-1/2*x + 2");
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::plane(97);
        assert!(parse_poly(&r, "z").is_err());
        assert!(parse_poly(&r, "x +").is_err());
        assert!(parse_poly(&r, "").is_err());
        assert!(parse_poly(&r, "x $ y").is_err());
    }
}
