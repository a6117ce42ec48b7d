//! Recursive-descent parser for polynomials and fractions in u1..um.
//!
//! Grammar (whitespace-insensitive):
//!   expr   := term (('+'|'-') term)*
//!   term   := factor (('*'|'/') factor)*
//!   factor := atom ('^' uint)?
//!   atom   := uint | 'u' uint | '(' expr ')' | '-' atom
//!
//! Division is exact division in Q(u); the divisor must be a rational scalar
//! times a product of linear forms (e.g. `(u1 - u2)^2 * u3 / (u1 + 2*u2)`).

use super::{AlgebraError, LinFrac, SparsePoly};
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    UnexpectedChar(char, usize),
    UnexpectedEnd,
    VariableOutOfRange(usize),
    NotPolynomial,
    BadDivision(AlgebraError),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::UnexpectedChar(c, pos) => {
                write!(f, "unexpected character '{}' at offset {}", c, pos)
            }
            ParseError::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseError::VariableOutOfRange(i) => {
                write!(f, "variable u{} exceeds the declared torus rank", i)
            }
            ParseError::NotPolynomial => write!(f, "expression is not a polynomial"),
            ParseError::BadDivision(e) => write!(f, "division failed: {}", e),
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return match self.input.get(self.pos) {
                Some(&c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
                None => Err(ParseError::UnexpectedEnd),
            };
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn parse_expr(&mut self) -> Result<LinFrac, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<LinFrac, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    let t = self.parse_factor()?;
                    acc = acc.mul(&t);
                }
                Some(b'/') => {
                    self.bump();
                    let t = self.parse_factor()?;
                    let inv = t.inv_linear_product().map_err(ParseError::BadDivision)?;
                    acc = acc.mul(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<LinFrac, ParseError> {
        let base = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.parse_uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ParseError::VariableOutOfRange(u32::MAX as usize))?;
            let mut out = LinFrac::one(self.nvars);
            for _ in 0..e {
                out = out.mul(&base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<LinFrac, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                Ok(self.parse_atom()?.neg())
            }
            Some(b'(') => {
                self.bump();
                let inner = self.parse_expr()?;
                match self.bump() {
                    Some(b')') => Ok(inner),
                    Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos - 1)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(b'u') => {
                self.bump();
                let idx = self.parse_uint()?;
                let idx: usize = idx
                    .try_into()
                    .map_err(|_| ParseError::VariableOutOfRange(usize::MAX))?;
                if idx == 0 || idx > self.nvars {
                    return Err(ParseError::VariableOutOfRange(idx));
                }
                Ok(LinFrac::from_poly(SparsePoly::var(self.nvars, idx - 1)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_uint()?;
                Ok(LinFrac::constant(
                    self.nvars,
                    super::Rat::new(n, BigInt::one()),
                ))
            }
            Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parse a fraction in u1..u`nvars`.
pub fn parse_frac(input: &str, nvars: usize) -> Result<LinFrac, ParseError> {
    let mut p = Parser {
        input: input.as_bytes(),
        pos: 0,
        nvars,
    };
    let out = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(ParseError::UnexpectedChar(
            p.input[p.pos] as char,
            p.pos,
        ));
    }
    Ok(out)
}

/// Parse a polynomial; fails with `NotPolynomial` if the value has a
/// nontrivial denominator after normalization.
pub fn parse_poly(input: &str, nvars: usize) -> Result<SparsePoly, ParseError> {
    let f = parse_frac(input, nvars)?;
    f.as_polynomial().ok_or(ParseError::NotPolynomial)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, LinearForm};
    use super::*;

    #[test]
    fn round_trips_canonical() {
        let f = parse_frac("(u1 - u2)^2 * u3 / (u1 + 2*u2)", 3).unwrap();
        let s = f.to_string();
        let g = parse_frac(&s, 3).unwrap();
        assert!(f.eq_value(&g));
        assert_eq!(s, g.to_string());
    }

    #[test]
    fn rational_coefficients() {
        let f = parse_frac("3/4", 2).unwrap();
        assert_eq!(f, LinFrac::constant(2, rat(3, 4)));
        let g = parse_poly("1/2 * u1 + u2", 2).unwrap();
        assert_eq!(
            g,
            SparsePoly::from_linear(&LinearForm::new(vec![rat(1, 2), rat(1, 1)]))
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_frac("u1 +", 2).is_err());
        assert!(parse_frac("u3", 2).is_err());
        assert!(parse_frac("x1", 2).is_err());
        assert!(parse_poly("1/u1", 2).is_err());
    }

    #[test]
    fn division_by_split_denominator() {
        let f = parse_frac("(u1^2 - u2^2) / (u1 - u2)", 2).unwrap();
        let g = parse_poly("u1 + u2", 2).unwrap();
        assert_eq!(f.as_polynomial().unwrap(), g);
    }
}
