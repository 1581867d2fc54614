//! Recursive-descent parser for the polynomial input language.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := coeff ('*'? factor)* | factor ('*'? factor)*
//! factor := ('x' | 'y' | 'z' | '(' poly ')' | uint) ('^' uint)?
//! coeff  := uint
//! ```
//!
//! Coefficients are unsigned integers of arbitrary size; signs come from
//! the additive operators. `*` between factors is optional, so
//! `z(x^2+yz)^3` and `z*(x^2+y*z)^3` parse identically.

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

const MAX_EXPONENT: u32 = 4096;

pub fn parse_polynomial<K: Field>(text: &str, field: &K) -> Result<Poly<K>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, field };
    let poly = p.parse_poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    field: &'a K,
}

impl<'a, K: Field> Parser<'a, K> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_poly(&mut self) -> Result<Poly<K>> {
        let mut negate = false;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.parse_term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Poly<K>> {
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.parse_factor()?,
            Some(b'x' | b'y' | b'z' | b'(') => self.parse_factor()?,
            Some(c) if c.is_ascii_alphabetic() => {
                return Err(Error::UnknownVariable { var: c as char, pos: self.pos });
            }
            _ => return Err(self.err("expected a term")),
        };
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.parse_factor()?);
                }
                // implicit multiplication before a variable or parenthesis
                Some(b'x' | b'y' | b'z' | b'(') => {
                    acc = acc.mul(&self.parse_factor()?);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    return Err(Error::UnknownVariable { var: c as char, pos: self.pos });
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Poly<K>> {
        let base = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Poly::variable(self.field, 0)
            }
            Some(b'y') => {
                self.pos += 1;
                Poly::variable(self.field, 1)
            }
            Some(b'z') => {
                self.pos += 1;
                Poly::variable(self.field, 2)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_uint_big()?;
                Poly::constant(self.field, self.field.from_bigint(&n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                return Err(Error::UnknownVariable { var: c as char, pos: self.pos });
            }
            Some(b'.') => return Err(self.err("non-integer coefficients are not allowed")),
            _ => return Err(self.err("expected a variable, '(' or a number")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {}
                _ => return Err(self.err("expected an exponent after '^'")),
            }
            let e = self.parse_uint_small()?;
            return Ok(base.pow(e));
        }
        if self.peek() == Some(b'.') {
            return Err(self.err("non-integer coefficients are not allowed"));
        }
        Ok(base)
    }

    fn parse_uint_big(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn parse_uint_small(&mut self) -> Result<u32> {
        self.skip_ws();
        let at = self.pos;
        let n = self.parse_uint_big()?;
        let e: u32 = n
            .try_into()
            .map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
        if e > MAX_EXPONENT {
            return Err(Error::Parse { pos: at, msg: "exponent too large".into() });
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qp(s: &str) -> Poly<Rationals> {
        parse_polynomial(s, &Rationals).unwrap()
    }

    #[test]
    fn parses_the_septic_example() {
        let f = qp("x^7+y^7+z*(x^2+y*z)^3");
        assert_eq!(f.homogeneous_degree().unwrap(), Some(7));
        // z*(x^2+yz)^3 = x^6 z + 3 x^4 y z^2 + 3 x^2 y^2 z^3 + y^3 z^4
        let expanded = qp("x^7 + y^7 + x^6*z + 3*x^4*y*z^2 + 3*x^2*y^2*z^3 + y^3*z^4");
        assert_eq!(f, expanded);
    }

    #[test]
    fn zero_and_binomial_identity() {
        assert!(qp("0").is_zero());
        assert_eq!(qp("(x+y)^2 - x^2 - 2*x*y"), qp("y^2"));
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(qp("3x^2y"), qp("3*x^2*y"));
        assert_eq!(qp("z(x+y)"), qp("x*z + y*z"));
        assert_eq!(qp("(x+y)(x-y)"), qp("x^2-y^2"));
    }

    #[test]
    fn error_positions_and_unknown_variables() {
        match parse_polynomial("x + w^2", &Rationals) {
            Err(Error::UnknownVariable { var: 'w', pos: 4 }) => {}
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
        assert!(parse_polynomial("x +", &Rationals).is_err());
        assert!(parse_polynomial("x ^", &Rationals).is_err());
        assert!(parse_polynomial("(x+y", &Rationals).is_err());
        assert!(parse_polynomial("x2", &Rationals).is_err());
        assert!(parse_polynomial("1.5*x", &Rationals).is_err());
    }

    #[test]
    fn big_coefficients_reduce_mod_p() {
        let fp = PrimeField::new(101).unwrap();
        let f = parse_polynomial("123456789012345678901234567890*x", &fp).unwrap();
        // 123456789012345678901234567890 mod 101 = 46
        assert_eq!(f, parse_polynomial("46*x", &fp).unwrap());
    }

    #[test]
    fn leading_sign() {
        assert_eq!(qp("-x+y"), qp("y-x"));
        assert_eq!(qp("+x"), qp("x"));
    }
}
