//! Text input for algebra elements.
//!
//! Accepts sums of products of rationals, `x`, `y` and parenthesized
//! subexpressions, with `^` for nonnegative powers and optional `*`
//! (`1-xy`, `2*x^2*y`, `(x - 1/2)^3`). Products are reduced with `yx = 1`.
//! Input starting with `[` is read as the JSON term list instead.

use num_bigint::BigInt;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn parse_element(src: &str) -> Result<AlgebraElement> {
    let trimmed = src.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            pos: src.len() - trimmed.len() + e.column().saturating_sub(1),
            msg: e.to_string(),
        });
    }
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c == b'x' || c == b'y' || c == b'(' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let n: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(AlgebraElement::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(AlgebraElement::y())
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Scalar::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    value /= Scalar::from_integer(den);
                }
                Ok(AlgebraElement::scalar(value))
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_unit;
    use crate::scalar::frac;

    #[test]
    fn reduces_with_relation() {
        assert_eq!(parse_element("y*x").unwrap(), AlgebraElement::one());
        assert_eq!(parse_element("x*y - x*y").unwrap(), AlgebraElement::zero());
        assert_eq!(parse_element("1-xy").unwrap(), matrix_unit(0, 0));
        assert_eq!(parse_element("x^2 (1 - x y) y").unwrap(), matrix_unit(2, 1));
    }

    #[test]
    fn canonical_text_round_trips() {
        let e = parse_element("-1/2 + 3/4*x^2*y - y^3").unwrap();
        assert_eq!(e.coeff(crate::algebra::Monomial::new(2, 1)), frac(3, 4));
        assert_eq!(parse_element(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn json_input() {
        let e = parse_element(r#"[{"i":1,"j":1,"c":"-1"},{"i":0,"j":0,"c":"1"}]"#).unwrap();
        assert_eq!(e, matrix_unit(0, 0));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_element("x + * y"),
            Err(Error::Parse {
                pos: 4,
                msg: "unexpected `*`".into()
            })
        );
        assert!(matches!(
            parse_element("(x"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(parse_element("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_element("x z"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }
}
