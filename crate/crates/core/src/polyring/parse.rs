//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" INTEGER)?
//! atom   := INTEGER | IDENT | "(" expr ")"
//! ```
//!
//! Division is only allowed by a nonzero constant, which is how rational
//! coefficients such as `1/2` are written.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Polynomial, VarSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    text: String,
    line: usize,
    column: usize,
}

/// Parse `text` over `vars`.
pub fn parse_polynomial(text: &str, vars: &VarSet) -> Result<Polynomial> {
    parse_polynomial_at(text, vars, 1, 1)
}

/// Parse with positions reported relative to `(line, column)`, for text
/// embedded in a larger document.
pub fn parse_polynomial_at(
    text: &str,
    vars: &VarSet,
    line: usize,
    column: usize,
) -> Result<Polynomial> {
    let tokens = tokenize(text, line, column)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        vars,
    };
    let p = parser.expr()?;
    let t = parser.peek();
    match t.tok {
        Tok::End => Ok(p),
        Tok::Int(_) | Tok::Ident(_) | Tok::LParen => Err(err_at(
            t,
            format!("implicit multiplication is not allowed before `{}`", t.text),
        )),
        _ => Err(err_at(t, format!("unexpected `{}`", t.text))),
    }
}

fn err_at(t: &Token, message: String) -> Error {
    Error::Parse {
        line: t.line,
        column: t.column,
        message,
    }
}

fn tokenize(text: &str, line0: usize, col0: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(Error::Parse {
                        line,
                        column: col,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            }
        };
        out.push(Token {
            tok,
            text: chars[start..i].iter().collect(),
            line,
            column: col,
        });
        col += i - start;
    }
    out.push(Token {
        tok: Tok::End,
        text: "end of input".into(),
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let slash = self.next();
                    let d = self.unary()?;
                    match d.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => return Err(err_at(&slash, "division by zero".into())),
                        None => {
                            return Err(err_at(
                                &slash,
                                "division is only allowed by a nonzero constant".into(),
                            ))
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => {
                let e: u32 = n.try_into().map_err(|_| {
                    err_at(&t, format!("exponent `{}` is too large", t.text))
                })?;
                Ok(base.pow(e))
            }
            _ => Err(err_at(
                &t,
                format!(
                    "exponent must be a nonnegative integer literal, found `{}`",
                    t.text
                ),
            )),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => Ok(Polynomial::constant(
                self.vars,
                BigRational::from_integer(n.clone()),
            )),
            Tok::Ident(name) => match self.vars.index_of(name) {
                Some(i) => Ok(Polynomial::var(self.vars, i)),
                None => Err(err_at(&t, format!("unknown variable `{name}`"))),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(err_at(&close, format!("expected `)`, found `{}`", close.text)));
                }
                Ok(inner)
            }
            _ => Err(err_at(&t, format!("expected a number, variable or `(`, found `{}`", t.text))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    fn vs() -> VarSet {
        VarSet::new(["x", "y"]).unwrap()
    }

    fn parse_err(s: &str) -> (usize, usize, String) {
        match parse_polynomial(s, &vs()) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        }
    }

    #[test]
    fn rational_constant_term() {
        let p = parse_polynomial("x^2 - 1/2", &vs()).unwrap();
        let expect = &Polynomial::var(&vs(), 0).pow(2) - &Polynomial::constant(&vs(), rational(1, 2));
        assert_eq!(p, expect);
    }

    #[test]
    fn precedence_and_parentheses() {
        let a = parse_polynomial("-x^2 + 2*(x - y)*y", &vs()).unwrap();
        let b = parse_polynomial("2*x*y - 2*y^2 - x*x", &vs()).unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial("  ( x+ y ) ^ 2", &vs()).unwrap();
        assert_eq!(c, parse_polynomial("x^2 + 2*x*y + y^2", &vs()).unwrap());
    }

    #[test]
    fn negative_exponent_names_token() {
        let (line, col, msg) = parse_err("x^-1");
        assert_eq!((line, col), (1, 3));
        assert!(msg.contains("exponent") && msg.contains("`-`"), "{msg}");
    }

    #[test]
    fn implicit_multiplication_rejected() {
        let (_, col, msg) = parse_err("2x");
        assert_eq!(col, 2);
        assert!(msg.contains("implicit multiplication"));
        assert!(parse_polynomial("x y", &vs()).is_err());
        assert!(parse_polynomial("(x)(y)", &vs()).is_err());
    }

    #[test]
    fn other_errors() {
        assert!(parse_err("z + 1").2.contains("unknown variable `z`"));
        assert!(parse_err("x / y").2.contains("nonzero constant"));
        assert!(parse_err("x / 0").2.contains("division by zero"));
        assert!(parse_err("(x + 1").2.contains("expected `)`"));
        assert!(parse_err("x + ").2.contains("end of input"));
        assert!(parse_err("x ^ y").2.contains("`y`"));
        assert!(parse_err("x $ 1").2.contains("`$`"));
    }

    #[test]
    fn embedded_positions() {
        match parse_polynomial_at("x + $", &vs(), 7, 10) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (7, 14)),
            other => panic!("{other:?}"),
        }
    }
}
