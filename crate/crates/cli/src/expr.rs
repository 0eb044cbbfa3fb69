//! Expressions for elements of the algebra.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' '-'? integer)?
//! base   := 'x' | 'y' | 'q' | '[' '-'? integer ']' '!'? | integer
//!         | '(' expr ')' | '-' factor
//! ```
//!
//! `·` is accepted for `*` and `−` for `-`, so printed normal forms parse
//! back. A division's right operand must evaluate to a nonzero scalar.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qserre::qarith::{Field, Rational, Scalar};
use qserre::words::{NCPolynomial, Word};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Terms with a flag marking subtraction; the first flag is `false`.
    Sum(Vec<(bool, Expr)>),
    /// Factors with a flag marking division; the first flag is `false`.
    Product(Vec<(bool, Expr)>),
    Power(Box<Expr>, i64),
    Neg(Box<Expr>),
    X,
    Y,
    Q,
    QInt(BigInt),
    QFactorial(BigInt),
    Integer(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by {0}, which is not a nonzero scalar")]
    Division(String),
    #[error("negative power of {0}, which is not a nonzero scalar")]
    NegativePower(String),
    #[error("{0} is out of range")]
    Range(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    X,
    Y,
    Q,
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Bang,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::X => write!(f, "'x'"),
            Tok::Y => write!(f, "'y'"),
            Tok::Q => write!(f, "'q'"),
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBracket => write!(f, "'['"),
            Tok::RBracket => write!(f, "']'"),
            Tok::Bang => write!(f, "'!'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        chars.next();
        if c == '\n' {
            line += 1;
            column = 1;
            continue;
        }
        column += 1;
        if c.is_whitespace() {
            continue;
        }
        let tok = match c {
            'x' => Tok::X,
            'y' => Tok::Y,
            'q' => Tok::Q,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '!' => Tok::Bang,
            d if d.is_ascii_digit() => {
                let mut s = d.to_string();
                while let Some(&e) = chars.peek().filter(|e| e.is_ascii_digit()) {
                    s.push(e);
                    chars.next();
                    column += 1;
                }
                Tok::Int(s.parse().expect("digits"))
            }
            other => {
                return Err(ParseError {
                    line: l,
                    column: col,
                    expected: vec!["a token".into()],
                    found: format!("character {other:?}"),
                })
            }
        };
        out.push(Spanned { tok, line: l, column: col });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const BASE_START: [&str; 7] = ["'x'", "'y'", "'q'", "'['", "integer", "'('", "'-'"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![(false, self.term()?)];
        loop {
            let neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            terms.push((neg, self.term()?));
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term").1
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![(false, self.factor()?)];
        loop {
            let div = match self.peek() {
                Tok::Star => false,
                Tok::Slash => true,
                _ => break,
            };
            self.bump();
            factors.push((div, self.factor()?));
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor").1
        } else {
            Expr::Product(factors)
        })
    }

    fn signed_integer(&mut self) -> Result<BigInt, ParseError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.error(if neg { &["integer"] } else { &["integer", "'-'"] })),
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.pos;
        let k = self.signed_integer()?;
        let Some(k) = k.to_i64() else {
            self.pos = at;
            return Err(self.error(&["an exponent that fits in 64 bits"]));
        };
        Ok(Expr::Power(Box::new(base), k))
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::X => {
                self.bump();
                Ok(Expr::X)
            }
            Tok::Y => {
                self.bump();
                Ok(Expr::Y)
            }
            Tok::Q => {
                self.bump();
                Ok(Expr::Q)
            }
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Integer(n))
            }
            Tok::LBracket => {
                self.bump();
                let n = self.signed_integer()?;
                self.expect(Tok::RBracket, "']'")?;
                if *self.peek() == Tok::Bang {
                    self.bump();
                    Ok(Expr::QFactorial(n))
                } else {
                    Ok(Expr::QInt(n))
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            _ => Err(self.error(&BASE_START)),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"]));
    }
    Ok(e)
}

impl Expr {
    fn is_atom(&self) -> bool {
        matches!(
            self,
            Expr::X | Expr::Y | Expr::Q | Expr::QInt(_) | Expr::QFactorial(_) | Expr::Integer(_)
        )
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(_) | Expr::Product(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }

    /// Value in `field`.
    pub fn eval(&self, field: &Field) -> Result<NCPolynomial, EvalError> {
        let scalar = NCPolynomial::constant;
        Ok(match self {
            Expr::X => NCPolynomial::from_word(field, Word::x()),
            Expr::Y => NCPolynomial::from_word(field, Word::y()),
            Expr::Q => scalar(field.q()),
            Expr::Integer(n) => scalar(field.rational(Rational::from_integer(n.clone()))),
            Expr::QInt(n) => {
                let k = n.to_i64().ok_or_else(|| EvalError::Range(format!("[{n}]")))?;
                scalar(field.q_int(k))
            }
            Expr::QFactorial(n) => {
                let k = n
                    .to_u32()
                    .filter(|&k| k <= 10_000)
                    .ok_or_else(|| EvalError::Range(format!("[{n}]!")))?;
                scalar(field.q_factorial(k))
            }
            Expr::Neg(e) => -e.eval(field)?,
            Expr::Power(b, k) => {
                let v = b.eval(field)?;
                if *k >= 0 {
                    let k = u32::try_from(*k).map_err(|_| EvalError::Range(format!("exponent {k}")))?;
                    v.pow(k)
                } else {
                    let inv = as_scalar(&v)
                        .and_then(|s| s.inv())
                        .ok_or_else(|| EvalError::NegativePower(b.to_string()))?;
                    let k = u32::try_from(-*k).map_err(|_| EvalError::Range(format!("exponent {k}")))?;
                    scalar(inv).pow(k)
                }
            }
            Expr::Sum(terms) => {
                let mut acc = NCPolynomial::zero(field);
                for (neg, t) in terms {
                    let v = t.eval(field)?;
                    acc = if *neg { &acc - &v } else { &acc + &v };
                }
                acc
            }
            Expr::Product(factors) => {
                let mut acc = NCPolynomial::one(field);
                for (div, e) in factors {
                    let v = e.eval(field)?;
                    acc = if *div {
                        let inv = as_scalar(&v)
                            .and_then(|s| s.inv())
                            .ok_or_else(|| EvalError::Division(e.to_string()))?;
                        acc.scale(&inv)
                    } else {
                        &acc * &v
                    };
                }
                acc
            }
        })
    }
}

/// The coefficient of the empty word when `p` has no other terms.
fn as_scalar(p: &NCPolynomial) -> Option<Scalar> {
    if p.is_zero() {
        return Some(p.field().zero());
    }
    let e = Word::empty();
    (p.len() == 1 && p.terms().next().is_some_and(|(w, _)| *w == e)).then(|| p.coeff(&e))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::X => write!(f, "x"),
            Expr::Y => write!(f, "y"),
            Expr::Q => write!(f, "q"),
            Expr::Integer(n) => write!(f, "{n}"),
            Expr::QInt(n) => write!(f, "[{n}]"),
            Expr::QFactorial(n) => write!(f, "[{n}]!"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_factor(f)
            }
            Expr::Power(b, k) => {
                if b.is_atom() {
                    write!(f, "{b}^{k}")
                } else {
                    write!(f, "({b})^{k}")
                }
            }
            Expr::Sum(terms) => {
                for (i, (neg, t)) in terms.iter().enumerate() {
                    match (i, neg) {
                        (0, _) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    match t {
                        Expr::Sum(_) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
            Expr::Product(factors) => {
                for (i, (div, e)) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "{}", if *div { "/" } else { "*" })?;
                    }
                    e.fmt_factor(f)?;
                }
                Ok(())
            }
        }
    }
}
