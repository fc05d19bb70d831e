//! Parser for field elements written as arithmetic expressions,
//! e.g. `6*z^3-6*z^2-6*z+6`, `-16188/319831*z^3`, `(z+m)^2/3`.
//! Juxtaposition multiplies (`6z^3`), `^` takes nonnegative or negative
//! integer exponents, and division by any nonzero element is allowed.

use brauer_core::funcfield::RationalFunctions;
use exact::{Field, NfElem, NumberField, Poly};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of expression")]
    Eof,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {0} is out of range")]
    Exponent(String),
    #[error("{0:?} is not a polynomial")]
    NotPolynomial(String),
}

pub struct Parser<'a, F: Field> {
    field: &'a F,
    vars: &'a [(&'a str, F::Elem)],
    chars: Vec<char>,
    pos: usize,
}

/// Evaluate `text` in `field`, with `vars` naming generators.
pub fn parse_element<F: Field>(field: &F, text: &str, vars: &[(&str, F::Elem)]) -> Result<F::Elem, ParseError> {
    let mut p = Parser { field, vars, chars: text.chars().collect(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(v),
        Some(c) => Err(ParseError::Unexpected(c, p.pos)),
    }
}

/// A polynomial in `var` over `field`, where `z` names the field generator.
pub fn parse_polynomial(field: &NumberField, text: &str, var: &str) -> Result<Poly<NfElem>, ParseError> {
    let rat = RationalFunctions::new(field);
    let vars = [("z", rat.constant(field.gen())), (var, rat.x())];
    let f = parse_element(&rat, text, &vars)?;
    if !f.is_polynomial() {
        return Err(ParseError::NotPolynomial(text.to_string()));
    }
    let inv = field.inv(&f.den().coeffs()[0]).expect("nonzero denominator");
    Ok(rat.ring().scale(f.num(), &inv))
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<F::Elem, ParseError> {
        let f = self.field;
        self.skip_ws();
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                f.neg(&self.term()?)
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = f.add(&acc, &self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = f.sub(&acc, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<F::Elem, ParseError> {
        let f = self.field;
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = f.mul(&acc, &self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = f.div(&acc, &d).ok_or(ParseError::DivisionByZero)?;
                }
                Some(c) if c.is_alphanumeric() || c == '(' => {
                    acc = f.mul(&acc, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<F::Elem, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.digits()?;
        let e: i64 = digits.parse().map_err(|_| ParseError::Exponent(digits.clone()))?;
        let e = if neg { -e } else { e };
        self.field.pow_signed(&base, e).ok_or(ParseError::DivisionByZero)
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => Err(ParseError::Unexpected(c, self.pos)),
                None => Err(ParseError::Eof),
            };
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<F::Elem, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(ParseError::Eof),
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(v)
                    }
                    Some(c) => Err(ParseError::Unexpected(c, self.pos)),
                    None => Err(ParseError::Eof),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().expect("digits");
                Ok(self.field.from_int(&n))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.vars
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, v)| v.clone())
                    .ok_or(ParseError::UnknownVariable(name))
            }
            Some(c) => Err(ParseError::Unexpected(c, self.pos)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact::numfield::rat;

    #[test]
    fn cyclotomic_expressions() {
        let k = exact::cyclotomic_field(5).unwrap();
        let z = k.gen();
        let vars = [("z", z.clone())];
        let v = parse_element(&k, "6*z^3-6*z^2-6*z+6", &vars).unwrap();
        let expect = k.add(
            &k.mul(&k.from_i64(6), &k.sub(&k.pow(&z, 3), &k.pow(&z, 2))),
            &k.sub(&k.from_i64(6), &k.mul(&k.from_i64(6), &z)),
        );
        assert_eq!(v, expect);
        assert_eq!(parse_element(&k, "6z^3 - 6z^2 - 6z + 6", &vars).unwrap(), expect);
        let q = parse_element(&k, "-16188/319831*z^3", &vars).unwrap();
        assert_eq!(q, k.scale_rational(&k.pow(&z, 3), &rat(-16188, 319831)));
        // z^5 = 1
        assert_eq!(parse_element(&k, "z^5", &vars).unwrap(), k.one());
        assert_eq!(parse_element(&k, "z^-1 * z", &vars).unwrap(), k.one());
        assert_eq!(parse_element(&k, "10", &vars).unwrap(), k.from_i64(10));
        assert_eq!(parse_element(&k, "(1+z)/(1+z)", &vars).unwrap(), k.one());
    }

    #[test]
    fn errors() {
        let k = exact::cyclotomic_field(3).unwrap();
        let vars = [("z", k.gen())];
        assert_eq!(parse_element(&k, "1/0", &vars), Err(ParseError::DivisionByZero));
        assert_eq!(parse_element(&k, "w", &vars), Err(ParseError::UnknownVariable("w".into())));
        assert!(matches!(parse_element(&k, "1+", &vars), Err(ParseError::Eof)));
        assert!(matches!(parse_element(&k, "1 ) 2", &vars), Err(ParseError::Unexpected(')', 2))));
        assert!(parse_element(&k, "z^x", &vars).is_err());
        assert!(matches!(parse_polynomial(&k, "1/x", "x"), Err(ParseError::NotPolynomial(_))));
    }

    #[test]
    fn polynomials() {
        let k = exact::cyclotomic_field(5).unwrap();
        let p = parse_polynomial(&k, "x^4 + (6*z^3-6*z^2-6*z+6)*x^2 + 24*z^3-12*z-12", "x").unwrap();
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.coeffs()[1], k.zero());
        assert_eq!(p.coeffs()[0], parse_element(&k, "24*z^3-12*z-12", &[("z", k.gen())]).unwrap());
        let q = parse_polynomial(&k, "(x - z)(x + z)", "x").unwrap();
        assert_eq!(q.coeffs(), &[k.neg(&k.pow(&k.gen(), 2)), k.zero(), k.one()]);
    }
}
