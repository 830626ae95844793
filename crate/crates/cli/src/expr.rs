//! Expression syntax.
//!
//! Binding strength, tightest first: `!x`, `d(x)`, `o(x, y)`, `[x]`, atoms;
//! juxtaposition (join); `^` (meet); `@` (geometric product); unary `-`;
//! `*`; binary `+` and `-`; `#` (tensor separator). Binary operators are
//! left-associative. A letter is a single ASCII letter; `d` and `o` name
//! functions only when immediately followed by `(`.

use std::fmt;

use gcalg::scalar::parse_scalar;
use gcalg::Scalar;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Letter(char),
    Number(Scalar),
    Join(Box<Expr>, Box<Expr>),
    Meet(Box<Expr>, Box<Expr>),
    Geometric(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>),
    Boundary(Box<Expr>),
    Star(Box<Expr>),
    Regressive(Box<Expr>, Box<Expr>),
}

const TENSOR: u8 = 1;
const SUM: u8 = 2;
const PRODUCT: u8 = 3;
const UNARY: u8 = 4;
const GEOMETRIC: u8 = 5;
const MEET: u8 = 6;
const JOIN: u8 = 7;
const ATOM: u8 = 8;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Tensor(..) => TENSOR,
            Expr::Add(..) | Expr::Sub(..) => SUM,
            Expr::Mul(..) => PRODUCT,
            Expr::Neg(_) => UNARY,
            Expr::Geometric(..) => GEOMETRIC,
            Expr::Meet(..) => MEET,
            Expr::Join(..) => JOIN,
            _ => ATOM,
        }
    }

    fn write(&self, out: &mut String, min: u8) {
        let wrap = self.precedence() < min;
        if wrap {
            out.push('(');
        }
        let binary = |out: &mut String, l: &Expr, op: &str, r: &Expr, p: u8| {
            l.write(out, p);
            out.push_str(op);
            r.write(out, p + 1);
        };
        match self {
            Expr::Letter(c) => out.push(*c),
            Expr::Number(q) => out.push_str(&q.to_string()),
            Expr::Join(l, r) => {
                l.write(out, JOIN);
                let mut right = String::new();
                r.write(&mut right, ATOM);
                let glued = out.ends_with(|c: char| c.is_ascii_alphabetic())
                    && right.starts_with(|c: char| c.is_ascii_alphabetic());
                if !glued {
                    out.push(' ');
                }
                out.push_str(&right);
            }
            Expr::Meet(l, r) => binary(out, l, " ^ ", r, MEET),
            Expr::Geometric(l, r) => binary(out, l, " @ ", r, GEOMETRIC),
            Expr::Neg(x) => {
                out.push('-');
                x.write(out, UNARY);
            }
            Expr::Mul(l, r) => binary(out, l, " * ", r, PRODUCT),
            Expr::Add(l, r) => binary(out, l, " + ", r, SUM),
            Expr::Sub(l, r) => binary(out, l, " - ", r, SUM),
            Expr::Tensor(l, r) => binary(out, l, " # ", r, TENSOR),
            Expr::Bracket(x) => {
                out.push('[');
                x.write(out, TENSOR);
                out.push(']');
            }
            Expr::Boundary(x) => {
                out.push_str("d(");
                x.write(out, TENSOR);
                out.push(')');
            }
            Expr::Star(x) => {
                out.push('!');
                x.write(out, ATOM);
            }
            Expr::Regressive(l, r) => {
                out.push_str("o(");
                l.write(out, TENSOR);
                out.push_str(", ");
                r.write(out, TENSOR);
                out.push(')');
            }
        }
        if wrap {
            out.push(')');
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s, TENSOR);
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Letter(char),
    Number(Scalar),
    Func(char),
    Open,
    Close,
    OpenBracket,
    CloseBracket,
    Plus,
    Minus,
    Times,
    Caret,
    At,
    Hash,
    Bang,
    Comma,
}

fn syntax(col: usize, msg: impl fmt::Display) -> CliError {
    CliError::Parse(format!("column {col}: {msg}"))
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            'd' | 'o' if chars.get(i + 1) == Some(&'(') => Tok::Func(c),
            c if c.is_ascii_alphabetic() => Tok::Letter(c),
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_digit() || chars[i + 1] == '/') {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                Tok::Number(parse_scalar(&s).ok_or_else(|| syntax(col, format!("malformed number `{s}`")))?)
            }
            '(' => Tok::Open,
            ')' => Tok::Close,
            '[' => Tok::OpenBracket,
            ']' => Tok::CloseBracket,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Times,
            '^' => Tok::Caret,
            '@' => Tok::At,
            '#' => Tok::Hash,
            '!' => Tok::Bang,
            ',' => Tok::Comma,
            other => return Err(syntax(col, format!("unexpected `{other}`"))),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

type Build = fn(Box<Expr>, Box<Expr>) -> Expr;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, open_col: usize, what: &str) -> Result<(), CliError> {
        if self.eat(&t) {
            Ok(())
        } else if self.peek().is_none() {
            Err(syntax(open_col, format!("unbalanced `{what}`")))
        } else {
            Err(syntax(self.col(), format!("expected closing for `{what}` opened at column {open_col}")))
        }
    }

    fn left_assoc(
        &mut self,
        ops: &[(Tok, Build)],
        next: fn(&mut Self) -> Result<Expr, CliError>,
    ) -> Result<Expr, CliError> {
        let mut acc = next(self)?;
        'outer: loop {
            for (t, build) in ops {
                if self.eat(t) {
                    let rhs = next(self)?;
                    acc = build(Box::new(acc), Box::new(rhs));
                    continue 'outer;
                }
            }
            return Ok(acc);
        }
    }

    fn tensor(&mut self) -> Result<Expr, CliError> {
        self.left_assoc(&[(Tok::Hash, Expr::Tensor)], Self::sum)
    }

    fn sum(&mut self) -> Result<Expr, CliError> {
        self.left_assoc(&[(Tok::Plus, Expr::Add), (Tok::Minus, Expr::Sub)], Self::product)
    }

    fn product(&mut self) -> Result<Expr, CliError> {
        self.left_assoc(&[(Tok::Times, Expr::Mul)], Self::unary)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.eat(&Tok::Minus) {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.geometric()
        }
    }

    fn geometric(&mut self) -> Result<Expr, CliError> {
        self.left_assoc(&[(Tok::At, Expr::Geometric)], Self::meet)
    }

    fn meet(&mut self) -> Result<Expr, CliError> {
        self.left_assoc(&[(Tok::Caret, Expr::Meet)], Self::join)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Letter(_) | Tok::Number(_) | Tok::Func(_) | Tok::Open | Tok::OpenBracket | Tok::Bang)
        )
    }

    fn join(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.prefix()?;
        while self.starts_atom() {
            let rhs = self.prefix()?;
            acc = Expr::Join(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn prefix(&mut self) -> Result<Expr, CliError> {
        if self.eat(&Tok::Bang) {
            return Ok(Expr::Star(Box::new(self.prefix()?)));
        }
        let col = self.col();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(syntax(col, "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Letter(c) => Ok(Expr::Letter(c)),
            Tok::Number(q) => Ok(Expr::Number(q)),
            Tok::Open => {
                let e = self.tensor()?;
                self.expect(Tok::Close, col, "(")?;
                Ok(e)
            }
            Tok::OpenBracket => {
                let e = self.tensor()?;
                self.expect(Tok::CloseBracket, col, "[")?;
                Ok(Expr::Bracket(Box::new(e)))
            }
            Tok::Func(f) => {
                self.expect(Tok::Open, col, "(")?;
                let a = self.tensor()?;
                if f == 'd' {
                    self.expect(Tok::Close, col + 1, "(")?;
                    return Ok(Expr::Boundary(Box::new(a)));
                }
                if !self.eat(&Tok::Comma) {
                    return Err(syntax(self.col(), "o(...) takes two arguments"));
                }
                let b = self.tensor()?;
                self.expect(Tok::Close, col + 1, "(")?;
                Ok(Expr::Regressive(Box::new(a), Box::new(b)))
            }
            _ => Err(syntax(col, "expected a letter, number, `(`, `[`, `!`, `d(` or `o(`")),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, CliError> {
    let toks = lex(text)?;
    let mut p = Parser {
        end: text.chars().count() + 1,
        toks,
        pos: 0,
    };
    let e = p.tensor()?;
    match p.peek() {
        None => Ok(e),
        Some(Tok::Close | Tok::CloseBracket) => Err(syntax(p.col(), "unbalanced closing bracket")),
        Some(_) => Err(syntax(p.col(), "unexpected token")),
    }
}
