//! Polynomial expressions: integer and `a/b` literals, identifiers, `+`,
//! `-`, `*`, `^` with a nonnegative integer exponent, and parentheses.
//! `^` binds tightest; there is no implicit multiplication.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::field::{Field, Rational};
use crate::poly::Poly;

/// A parse failure at a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {message}")]
pub struct ExprError {
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(q) => format!("number {q}"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let err = |column: usize, message: String| ExprError { column, message };
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let digits = |i: &mut usize| {
                let start = *i;
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
                chars[start..*i].iter().collect::<String>()
            };
            let num: BigInt = digits(&mut i).parse().expect("digits");
            let mut value = Rational::from_integer(num);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                if i >= chars.len() || !chars[i].is_ascii_digit() {
                    return Err(err(i + 1, "expected a denominator after `/`".into()));
                }
                let den: BigInt = digits(&mut i).parse().expect("digits");
                if den.is_zero() {
                    return Err(err(col, "zero denominator".into()));
                }
                value = Rational::new(value.to_integer(), den);
            }
            if i < chars.len() && (chars[i] == '.' || chars[i].is_alphabetic()) {
                return Err(err(col, "malformed number".into()));
            }
            out.push((Tok::Num(value), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '/' => return Err(err(col, "`/` is only allowed inside a literal a/b".into())),
            _ => return Err(err(col, format!("unexpected character `{c}`"))),
        };
        out.push((t, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    resolve: &'a dyn Fn(&str) -> Option<Poly<F>>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: String) -> Result<T, ExprError> {
        Err(ExprError {
            column: self.col(),
            message,
        })
    }

    fn expr(&mut self) -> Result<Poly<F>, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>, ExprError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<F>, ExprError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<F>, ExprError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        match self.bump() {
            Tok::Num(q) if q.is_integer() => match q.to_integer().to_u32() {
                Some(e) => Ok(base.pow(e)),
                None => Err(ExprError {
                    column: col,
                    message: "malformed exponent: too large".into(),
                }),
            },
            t => Err(ExprError {
                column: col,
                message: format!(
                    "malformed exponent: expected a nonnegative integer, found {}",
                    describe(&t)
                ),
            }),
        }
    }

    fn atom(&mut self) -> Result<Poly<F>, ExprError> {
        let col = self.col();
        let p = match self.bump() {
            Tok::Num(q) => Poly::constant(F::from_rational(&q)),
            Tok::Ident(name) => match (self.resolve)(&name) {
                Some(p) => p,
                None => {
                    return Err(ExprError {
                        column: col,
                        message: format!("unknown variable `{name}`"),
                    })
                }
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail(format!("expected `)`, found {}", describe(self.peek())));
                }
                self.bump();
                inner
            }
            t => {
                return Err(ExprError {
                    column: col,
                    message: format!("expected a number, variable or `(`, found {}", describe(&t)),
                })
            }
        };
        if matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::LParen) {
            return self.fail(format!(
                "expected an operator before {} (no implicit multiplication)",
                describe(self.peek())
            ));
        }
        Ok(p)
    }
}

/// Parses `text`, mapping identifiers through `resolve`.
pub fn parse_expr<F: Field>(
    text: &str,
    resolve: &dyn Fn(&str) -> Option<Poly<F>>,
) -> Result<Poly<F>, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        resolve,
    };
    if *p.peek() == Tok::End {
        return p.fail("empty expression".into());
    }
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(format!("unexpected {}", describe(p.peek())));
    }
    Ok(out)
}

/// Parses `text` with `names[i]` standing for variable `i`.
pub fn parse_poly<F: Field>(text: &str, names: &[String]) -> Result<Poly<F>, ExprError> {
    parse_expr(text, &|s| names.iter().position(|n| n == s).map(Poly::var))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat_frac;
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        ["x1", "x2", "y"].iter().map(|s| s.to_string()).collect()
    }

    fn v(i: usize) -> Poly<Rational> {
        Poly::var(i)
    }

    #[test]
    fn expressions() {
        let p: Poly<Rational> = parse_poly("x1^2 + 2*x1*x2", &names()).unwrap();
        assert_eq!(p, v(0).pow(2).add(&v(0).mul(&v(1)).scale(&rat_frac(2, 1))));
        let p: Poly<Rational> = parse_poly("3/2*x1", &names()).unwrap();
        assert_eq!(p, v(0).scale(&rat_frac(3, 2)));
        let p: Poly<Rational> = parse_poly("-x1^2", &names()).unwrap();
        assert_eq!(p, v(0).pow(2).neg());
        let p: Poly<Rational> = parse_poly("(x1 + x2)^3 - y^3", &names()).unwrap();
        assert_eq!(p, v(0).add(&v(1)).pow(3).sub(&v(2).pow(3)));
        let p: Poly<Rational> = parse_poly("x1^0 - - 1", &names()).unwrap();
        assert_eq!(p, Poly::from_int(2));
    }

    #[test]
    fn errors() {
        let e = parse_poly::<Rational>("x1 + z", &names()).unwrap_err();
        assert_eq!(e.column, 6);
        assert!(e.message.contains("`z`"));
        let e = parse_poly::<Rational>("x1^-2", &names()).unwrap_err();
        assert!(e.message.contains("malformed exponent"));
        assert_eq!(e.column, 4);
        assert!(parse_poly::<Rational>("2 x1", &names()).is_err());
        assert!(parse_poly::<Rational>("x1^1.5", &names()).is_err());
        assert!(parse_poly::<Rational>("x1 / x2", &names()).is_err());
        assert!(parse_poly::<Rational>("(x1", &names()).is_err());
        assert!(parse_poly::<Rational>("", &names()).is_err());
        assert!(parse_poly::<Rational>("1/0", &names()).is_err());
    }

    fn small_poly() -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -20i64..20, 1i64..5), 0..6).prop_map(
            |ts| {
                ts.into_iter().fold(Poly::zero(), |acc, ((a, b, c), n, d)| {
                    acc.add(
                        &v(0)
                            .pow(a)
                            .mul(&v(1).pow(b))
                            .mul(&v(2).pow(c))
                            .scale(&rat_frac(n, d)),
                    )
                })
            },
        )
    }

    proptest! {
        #[test]
        fn print_then_parse(p in small_poly()) {
            let text = p.render(&names());
            prop_assert_eq!(parse_poly::<Rational>(&text, &names()).unwrap(), p);
        }
    }
}
