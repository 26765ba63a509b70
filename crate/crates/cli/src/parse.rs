//! Recursive-descent parser for the expression surface syntax.
//!
//! ```text
//!   expr      := term (('+'|'-') term)*
//!   term      := factor ('*'? factor)*
//!   factor    := rational | generator | '(' expr ')' | factor '^' uint
//!   generator := 's(' uint ')' | 's(' uint ',' uint ')'
//!   rational  := '-'? uint ('/' uint)?
//! ```
//!
//! Indices are validated against `1..=2n`. Errors carry the byte offset
//! of the offending token.

use std::fmt;

use num_bigint::BigInt;
use scasimir_core::{Element, Generator, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Parses `text` into a free element of `U(osp(1|2n))`.
pub fn parse(text: &str, n: u32) -> Result<Element, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: u32,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                // Implicit multiplication; '-' always belongs to expr.
                Some(c) if c == b's' || c == b'(' || c.is_ascii_digit() => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Element, ParseError> {
        let mut base = self.primary()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.uint()?;
            if e > 64 {
                self.pos = start;
                return Err(self.error("exponent too large"));
            }
            base = base.pow(e as u32);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Element, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b's') => self.generator(),
            Some(b'-') => self.rational(),
            Some(c) if c.is_ascii_digit() => self.rational(),
            _ => Err(self.error("expected a rational, generator, or '('")),
        }
    }

    fn generator(&mut self) -> Result<Element, ParseError> {
        self.expect(b's')?;
        self.expect(b'(')?;
        let a_pos = self.pos;
        let a = self.uint()?;
        let g = if self.eat(b',') {
            let b_pos = self.pos;
            let b = self.uint()?;
            self.check_index(b, b_pos)?;
            self.check_index(a, a_pos)?;
            Generator::even(a as u32, b as u32)
        } else {
            self.check_index(a, a_pos)?;
            Generator::odd(a as u32)
        };
        self.expect(b')')?;
        Ok(Element::generator(self.n, g).expect("indices validated"))
    }

    fn check_index(&mut self, v: u64, at: usize) -> Result<(), ParseError> {
        if v == 0 || v > u64::from(2 * self.n) {
            return Err(ParseError {
                pos: at,
                msg: format!("index {} out of range 1..={} (n = {})", v, 2 * self.n, self.n),
            });
        }
        Ok(())
    }

    fn rational(&mut self) -> Result<Element, ParseError> {
        self.skip_ws();
        let negative = self.eat(b'-');
        self.skip_ws();
        let numer = self.uint_big()?;
        let denom = if self.eat(b'/') {
            let at = self.pos;
            let d = self.uint_big()?;
            if d == BigInt::from(0) {
                return Err(ParseError {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::from(1)
        };
        let sign = if negative { -1 } else { 1 };
        let value = Rat::new(numer * BigInt::from(sign), denom);
        Ok(Element::scalar(self.n, value))
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| ParseError {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn uint_big(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        Ok(BigInt::parse_bytes(&self.src[start..self.pos], 10).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use scasimir_core::rat;

    fn o(a: u32) -> Generator {
        Generator::odd(a)
    }

    fn e(a: u32, b: u32) -> Generator {
        Generator::even(a, b)
    }

    fn word(n: u32, c: Rat, gens: &[Generator]) -> Element {
        let mut el = Element::zero(n);
        el.add_term(scasimir_core::Word(gens.to_vec()), c);
        el
    }

    #[test]
    fn denotation_examples() {
        let got = parse("s(1)*s(3) - s(1,3)", 2).unwrap();
        let expected = &word(2, rat(1, 1), &[o(1), o(3)]) - &word(2, rat(1, 1), &[e(1, 3)]);
        assert_eq!(got, expected);

        let got = parse("2/3 * s(1)^2", 2).unwrap();
        assert_eq!(got, word(2, rat(2, 3), &[o(1), o(1)]));
    }

    #[test]
    fn range_errors_carry_position() {
        let err = parse("s(5)", 2).unwrap_err();
        assert!(err.msg.contains("index 5 out of range 1..=4"));
        assert_eq!(err.pos, 2);

        assert!(parse("s(0)", 2).is_err());
        assert!(parse("s(1,9)", 2).is_err());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse("s(1) +", 1).unwrap_err();
        assert_eq!(err.pos, 6);
        assert!(parse("s(1", 1).is_err());
        assert!(parse("()", 1).is_err());
        assert!(parse("1/0", 1).is_err());
        assert!(parse("s(1) s", 1).is_err());
    }

    #[test]
    fn implicit_multiplication_and_parens() {
        assert_eq!(
            parse("s(1)s(2)", 1).unwrap(),
            parse("s(1) * s(2)", 1).unwrap()
        );
        assert_eq!(
            parse("2(s(1) + s(2))", 1).unwrap(),
            &parse("2s(1)", 1).unwrap() + &parse("2 s(2)", 1).unwrap()
        );
        // '-' binds to the expression level, not implicit products.
        assert_eq!(
            parse("s(1) - 2", 1).unwrap(),
            &parse("s(1)", 1).unwrap() - &parse("2", 1).unwrap()
        );
    }

    #[test]
    fn negative_rationals_and_powers() {
        assert_eq!(
            parse("-1/2 * s(1,1)", 1).unwrap(),
            word(1, rat(-1, 2), &[e(1, 1)])
        );
        assert_eq!(parse("(s(1) + s(2))^2", 1).unwrap(), {
            let s = &parse("s(1)", 1).unwrap() + &parse("s(2)", 1).unwrap();
            s.pow(2)
        });
        assert!(parse("s(1)^99999", 1).is_err());
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "s(1)*s(3) - s(1,3)",
            "2/3 * s(1)^2 + s(2,4)*s(2)",
            "-5/7 * s(1)*s(2)*s(3) + 1",
            "s(2,2) - 1/2",
        ] {
            let x = parse(src, 2).unwrap();
            let rendered = x.to_string();
            let reparsed = parse(&rendered, 2).unwrap();
            assert_eq!(reparsed, x, "round trip failed for {src} -> {rendered}");
        }
    }
}
