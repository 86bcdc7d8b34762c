//! Parser for plane-curve equations written as polynomial expressions in two
//! named variables with rational coefficients.
//!
//! # Conventions
//! - Grammar (whitespace between tokens is insignificant):
//!   ```text
//!   expr     := sign? term (('+' | '-') term)*
//!   term     := factor ('*' factor)*
//!   factor   := base ('^' uint)?
//!   base     := rational | var | '(' expr ')'
//!   rational := uint ('/' posint)?
//!   var      := identifier
//!   ```
//!   The optional leading sign negates the first term; signs elsewhere are
//!   the binary operators. Multiplication is always explicit: `2x` is a
//!   syntax error, `2*x` is not.
//! - Errors carry a 1-based character position into the input.
//!
//! # Invariants
//! - Only the two declared variable names are accepted; anything else is an
//!   error naming the offending identifier.
//! - The output of [`BivarPoly::display`] with rational coefficients parses
//!   back to the same polynomial.

use std::fmt;

use num_bigint::BigInt;

use crate::field::CoeffField;
use crate::poly::BivarPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character position of the offending token.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }

    fn starts_base(&self) -> bool {
        matches!(self, Tok::Number(_) | Tok::Ident(_) | Tok::LParen)
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse::<BigInt>().expect("digit run parses");
            toks.push((pos, Tok::Number(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
            {
                i += 1;
            }
            toks.push((pos, Tok::Ident(chars[start..i].iter().collect())));
        } else {
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError {
                        position: pos,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            };
            toks.push((pos, tok));
            i += 1;
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    cursor: usize,
    end_position: usize,
    field: CoeffField,
    vx: &'a str,
    vy: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cursor).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.toks
            .get(self.cursor)
            .map(|&(p, _)| p)
            .unwrap_or(self.end_position)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cursor).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.position(), message: message.into() }
    }

    fn expr(&mut self) -> Result<BivarPoly, ParseError> {
        let mut negate_first = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.advance();
            }
            Some(Tok::Minus) => {
                self.advance();
                negate_first = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate_first { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BivarPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.advance();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(t) if t.starts_base() => {
                    return Err(self.error(format!(
                        "unexpected {}; multiplication must be written with `*`",
                        t.describe()
                    )));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<BivarPoly, ParseError> {
        let b = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.advance();
            let pos = self.position();
            match self.advance() {
                Some(Tok::Number(n)) => {
                    let e = u32::try_from(&n).map_err(|_| ParseError {
                        position: pos,
                        message: format!("exponent `{n}` is too large"),
                    })?;
                    Ok(b.pow(e))
                }
                Some(t) => Err(ParseError {
                    position: pos,
                    message: format!(
                        "expected a nonnegative integer exponent, found {}",
                        t.describe()
                    ),
                }),
                None => Err(ParseError {
                    position: pos,
                    message: "expected a nonnegative integer exponent".into(),
                }),
            }
        } else {
            Ok(b)
        }
    }

    fn base(&mut self) -> Result<BivarPoly, ParseError> {
        let pos = self.position();
        match self.advance() {
            Some(Tok::Number(numer)) => {
                let mut denom = BigInt::from(1);
                if self.peek() == Some(&Tok::Slash) {
                    self.advance();
                    let dpos = self.position();
                    match self.advance() {
                        Some(Tok::Number(d)) => {
                            if d == BigInt::from(0) {
                                return Err(ParseError {
                                    position: dpos,
                                    message: "denominator must be positive".into(),
                                });
                            }
                            denom = d;
                        }
                        Some(t) => {
                            return Err(ParseError {
                                position: dpos,
                                message: format!(
                                    "expected a positive integer denominator, found {}",
                                    t.describe()
                                ),
                            })
                        }
                        None => {
                            return Err(ParseError {
                                position: dpos,
                                message: "expected a positive integer denominator"
                                    .into(),
                            })
                        }
                    }
                }
                let r = Rational::from_big(numer, denom)
                    .expect("nonzero denominator checked");
                Ok(BivarPoly::constant(self.field.clone(), self.field.from_rational(r)))
            }
            Some(Tok::Ident(name)) => {
                if name == self.vx {
                    Ok(BivarPoly::var_x(self.field.clone()))
                } else if name == self.vy {
                    Ok(BivarPoly::var_y(self.field.clone()))
                } else {
                    Err(ParseError {
                        position: pos,
                        message: format!(
                            "unknown variable `{name}` (expected `{}` or `{}`)",
                            self.vx, self.vy
                        ),
                    })
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.advance() {
                    Some(Tok::RParen) => Ok(inner),
                    Some(t) => Err(ParseError {
                        position: pos,
                        message: format!("expected `)`, found {}", t.describe()),
                    }),
                    None => Err(ParseError {
                        position: self.end_position,
                        message: "unclosed `(`".into(),
                    }),
                }
            }
            Some(t) => Err(ParseError {
                position: pos,
                message: format!(
                    "expected a number, variable, or `(`, found {}",
                    t.describe()
                ),
            }),
            None => Err(ParseError {
                position: pos,
                message: "expected a number, variable, or `(`".into(),
            }),
        }
    }
}

/// Parses an expression over the rationals with the given variable names.
pub fn parse_poly(input: &str, vx: &str, vy: &str) -> Result<BivarPoly, ParseError> {
    let toks = tokenize(input)?;
    let end_position = input.chars().count() + 1;
    let mut parser = Parser {
        toks,
        cursor: 0,
        end_position,
        field: CoeffField::rationals(),
        vx,
        vy,
    };
    if parser.peek().is_none() {
        return Err(ParseError { position: 1, message: "empty expression".into() });
    }
    let poly = parser.expr()?;
    if let Some(t) = parser.peek() {
        return Err(parser.error(format!("unexpected {} after expression", t.describe())));
    }
    Ok(poly)
}

/// Parses with the default variable names `x` and `y`.
pub fn parse_poly_xy(input: &str) -> Result<BivarPoly, ParseError> {
    parse_poly(input, "x", "y")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(pairs: &[(u32, u32, i64)]) -> BivarPoly {
        BivarPoly::from_rational_terms(
            CoeffField::rationals(),
            pairs.iter().map(|&(i, j, c)| ((i, j), Rational::from_int(c))),
        )
    }

    #[test]
    fn products_of_binomials_expand() {
        let p = parse_poly_xy("(y - x)*(y + x)").unwrap();
        assert_eq!(p, pt(&[(0, 2, 1), (2, 0, -1)]));
    }

    #[test]
    fn standard_germs_parse() {
        assert_eq!(parse_poly_xy("y^2 - x^3").unwrap(), pt(&[(0, 2, 1), (3, 0, -1)]));
        assert_eq!(parse_poly_xy("y - x^4").unwrap(), pt(&[(0, 1, 1), (4, 0, -1)]));
        assert_eq!(parse_poly_xy("x*y").unwrap(), pt(&[(1, 1, 1)]));
        assert_eq!(
            parse_poly_xy("y^2 - 2*x^4").unwrap(),
            pt(&[(0, 2, 1), (4, 0, -2)])
        );
    }

    #[test]
    fn rational_coefficients_and_leading_sign() {
        let p = parse_poly_xy("-3/4*x + 1/2*y").unwrap();
        assert_eq!(
            p,
            BivarPoly::from_rational_terms(
                CoeffField::rationals(),
                [((1, 0), Rational::ratio(-3, 4)), ((0, 1), Rational::ratio(1, 2))],
            )
        );
        assert_eq!(parse_poly_xy("-x").unwrap(), pt(&[(1, 0, -1)]));
        assert_eq!(parse_poly_xy("(-3)").unwrap(), pt(&[(0, 0, -3)]));
        assert_eq!(parse_poly_xy("x - x").unwrap(), BivarPoly::zero(CoeffField::rationals()));
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        let err = parse_poly_xy("2x").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(err.message.contains('*'));
        assert!(parse_poly_xy("x y").is_err());
        assert!(parse_poly_xy("2(x + y)").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly_xy("").unwrap_err().position, 1);
        assert_eq!(parse_poly_xy("x + ").unwrap_err().position, 5);
        assert_eq!(parse_poly_xy("x + z").unwrap_err().position, 5);
        assert_eq!(parse_poly_xy("1/0").unwrap_err().position, 3);
        assert_eq!(parse_poly_xy("3/-4 * x").unwrap_err().position, 3);
        assert_eq!(parse_poly_xy("x^-2").unwrap_err().position, 3);
        assert_eq!(parse_poly_xy("(x + y").unwrap_err().position, 7);
        assert_eq!(parse_poly_xy("x @ y").unwrap_err().position, 3);
        let msg = parse_poly_xy("x + z").unwrap_err().to_string();
        assert!(msg.contains("position 5") && msg.contains('z'));
    }

    #[test]
    fn custom_variable_names() {
        let p = parse_poly("v^2 - u^3", "u", "v").unwrap();
        assert_eq!(p, pt(&[(0, 2, 1), (3, 0, -1)]));
        assert!(parse_poly("x + y", "u", "v").is_err());
    }

    #[test]
    fn whitespace_and_nesting_are_tolerated() {
        assert_eq!(
            parse_poly_xy("  y ^ 2   -   x ^ 3 ").unwrap(),
            pt(&[(0, 2, 1), (3, 0, -1)])
        );
        assert_eq!(parse_poly_xy("((x))^2").unwrap(), pt(&[(2, 0, 1)]));
        assert_eq!(parse_poly_xy("x^0").unwrap(), pt(&[(0, 0, 1)]));
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "y^2 - x^3",
            "y - x^4",
            "x*y",
            "-2 + x*y",
            "1/2*x + 3/4*y^2 - x^2*y^3",
            "y^2 - 2*x^4",
        ] {
            let p = parse_poly_xy(src).unwrap();
            let shown = p.display("x", "y");
            let again = parse_poly_xy(&shown).unwrap();
            assert_eq!(p, again, "round trip failed for `{src}` -> `{shown}`");
        }
    }
}
