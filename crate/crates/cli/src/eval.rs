//! Evaluation of expressions against a configuration, and value printing.

use std::fmt::Write;

use gcalg::affine::boundary;
use gcalg::exalg::meet;
use gcalg::flags::{flag_product, FlagValue, InsertionOrder};
use gcalg::whitney::{evaluate, geometric_product, Configuration, CoordTensor, Letter, WhitneyElement, Word};
use gcalg::{Extensor, Scalar};
use num::One;

use crate::error::CliError;
use crate::expr::Expr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Ext(Extensor),
    Tensor(CoordTensor),
    Flag(FlagValue),
}

fn undefined(msg: impl Into<String>) -> CliError {
    CliError::Undefined(msg.into())
}

/// Linear combination of words, when `e` is built from letters and numbers
/// by joins, sums and scalar multiples.
pub fn word_combination(e: &Expr) -> Option<Vec<(Scalar, Word)>> {
    let product = |l: &Expr, r: &Expr| -> Option<Vec<(Scalar, Word)>> {
        let (a, b) = (word_combination(l)?, word_combination(r)?);
        Some(
            a.iter()
                .flat_map(|(x, u)| b.iter().map(move |(y, v)| (x * y, u.concat(v))))
                .collect(),
        )
    };
    let negate = |v: Vec<(Scalar, Word)>| v.into_iter().map(|(c, w)| (-c, w)).collect::<Vec<_>>();
    match e {
        Expr::Letter(c) => Some(vec![(Scalar::one(), Word::new(vec![Letter::new(c.to_string())]))]),
        Expr::Number(q) => Some(vec![(q.clone(), Word::empty())]),
        Expr::Join(l, r) => product(l, r),
        Expr::Mul(l, r) => {
            let scalar_side = |x: &Expr| word_combination(x).is_some_and(|v| v.iter().all(|(_, w)| w.is_empty()));
            if scalar_side(l) || scalar_side(r) {
                product(l, r)
            } else {
                None
            }
        }
        Expr::Neg(x) => word_combination(x).map(negate),
        Expr::Add(l, r) => {
            let mut v = word_combination(l)?;
            v.extend(word_combination(r)?);
            Some(v)
        }
        Expr::Sub(l, r) => {
            let mut v = word_combination(l)?;
            v.extend(negate(word_combination(r)?));
            Some(v)
        }
        _ => None,
    }
}

fn words_of(e: &Expr, op: &str) -> Result<Vec<(Scalar, Word)>, CliError> {
    word_combination(e).ok_or_else(|| {
        CliError::Usage(format!("{op} takes a combination of products of letters, got `{e}`"))
    })
}

/// Symbolic geometric product of two combinations of words; terms whose
/// words repeat a letter vanish.
pub fn symbolic_geometric(l: &Expr, r: &Expr, c: &Configuration) -> Result<WhitneyElement, CliError> {
    let mut acc = WhitneyElement::zero();
    for (x, u) in words_of(l, "`@`")? {
        for (y, v) in words_of(r, "`@`")? {
            if u.has_repeat() || v.has_repeat() {
                continue;
            }
            acc = acc.add(&geometric_product(&u, &v, c)?.scale(&(&x * &y)));
        }
    }
    Ok(acc)
}

fn ext(v: Value, what: &str) -> Result<Extensor, CliError> {
    match v {
        Value::Ext(t) => Ok(t),
        Value::Tensor(_) => Err(undefined(format!("{what} is not defined on tensors"))),
        Value::Flag(_) => Err(undefined(format!("{what} is not defined on flags"))),
    }
}

fn as_tensor(v: Value) -> Result<CoordTensor, CliError> {
    match v {
        Value::Ext(t) => Ok(CoordTensor::outer(t.ambient(), &[t])),
        Value::Tensor(t) => Ok(t),
        Value::Flag(_) => Err(undefined("`#` is not defined on flags")),
    }
}

fn as_flag(v: Value) -> Result<FlagValue, CliError> {
    match v {
        Value::Ext(t) => Ok(FlagValue::single(&t)?),
        Value::Flag(f) => Ok(f),
        Value::Tensor(_) => Err(undefined("o(...) is not defined on tensors")),
    }
}

fn scale(v: Value, s: &Scalar) -> Result<Value, CliError> {
    match v {
        Value::Ext(t) => Ok(Value::Ext(t.scale(s))),
        Value::Tensor(t) => Ok(Value::Tensor(t.scale(s))),
        Value::Flag(_) => Err(undefined("scaling is not defined on flags")),
    }
}

fn add(a: Value, b: Value, sign: i64) -> Result<Value, CliError> {
    let s = Scalar::from_integer(sign.into());
    match (a, b) {
        (Value::Ext(x), Value::Ext(y)) => Ok(Value::Ext(x.add(&y.scale(&s))?)),
        (Value::Tensor(x), Value::Tensor(y)) => {
            let mut out = x;
            out.add_scaled(&y, &s);
            Ok(Value::Tensor(out))
        }
        (Value::Flag(_), _) | (_, Value::Flag(_)) => Err(undefined("sums of flags are not defined")),
        _ => Err(undefined("cannot add a tensor and an extensor")),
    }
}

pub fn eval(e: &Expr, c: &Configuration) -> Result<Value, CliError> {
    let n = c.ambient();
    Ok(match e {
        Expr::Letter(l) => Value::Ext(Extensor::point(c.get(&Letter::new(l.to_string()))?)?),
        Expr::Number(q) => Value::Ext(Extensor::scalar(n, q.clone())),
        Expr::Join(l, r) => Value::Ext(ext(eval(l, c)?, "join")?.join(&ext(eval(r, c)?, "join")?)?),
        Expr::Meet(l, r) => Value::Ext(meet(&ext(eval(l, c)?, "`^`")?, &ext(eval(r, c)?, "`^`")?)?),
        Expr::Geometric(l, r) => Value::Tensor(evaluate(&symbolic_geometric(l, r, c)?, c)?),
        Expr::Neg(x) => scale(eval(x, c)?, &-Scalar::one())?,
        Expr::Mul(l, r) => {
            let (a, b) = (eval(l, c)?, eval(r, c)?);
            let scalar = |v: &Value| match v {
                Value::Ext(t) => t.scalar_value(),
                _ => None,
            };
            match (scalar(&a), scalar(&b)) {
                (Some(s), _) => scale(b, &s)?,
                (_, Some(s)) => scale(a, &s)?,
                _ => return Err(undefined("`*` needs a scalar operand")),
            }
        }
        Expr::Add(l, r) => add(eval(l, c)?, eval(r, c)?, 1)?,
        Expr::Sub(l, r) => add(eval(l, c)?, eval(r, c)?, -1)?,
        Expr::Tensor(l, r) => Value::Tensor(as_tensor(eval(l, c)?)?.tensor(&as_tensor(eval(r, c)?)?)),
        Expr::Bracket(x) => Value::Ext(Extensor::scalar(n, ext(eval(x, c)?, "bracket")?.bracket()?)),
        Expr::Boundary(x) => {
            let mut acc: Option<Extensor> = None;
            for (q, w) in words_of(x, "d(...)")? {
                let term = if w.has_repeat() {
                    Extensor::zero(n, w.len() - 1)
                } else {
                    boundary(&c.rows_of(w.letters())?, n)?.scale(&q)
                };
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            Value::Ext(acc.expect("a combination has at least one term"))
        }
        Expr::Star(x) => Value::Ext(ext(eval(x, c)?, "`!`")?.hodge_star()),
        Expr::Regressive(l, r) => {
            let (a, b) = (as_flag(eval(l, c)?)?, as_flag(eval(r, c)?)?);
            Value::Flag(flag_product(&b, &a, InsertionOrder::TopDown)?)
        }
    })
}

/// One line per coordinate in colex order, zeros included; a step-0 value
/// prints bare.
pub fn format_extensor(t: &Extensor) -> String {
    if let Some(v) = t.scalar_value() {
        return format!("{v}\n");
    }
    let mut out = String::new();
    for (s, v) in t.all_coords() {
        writeln!(out, "{{{}}}: {v}", s.label(t.ambient())).unwrap();
    }
    out
}

/// Nonzero entries only, `0` for the zero tensor.
pub fn format_tensor(t: &CoordTensor) -> String {
    if t.is_zero() {
        return "0\n".into();
    }
    let mut out = String::new();
    for (key, v) in t.nonzero() {
        let labels: Vec<String> = key.iter().map(|s| format!("{{{}}}", s.label(t.ambient()))).collect();
        writeln!(out, "{}: {v}", labels.join("#")).unwrap();
    }
    out
}

/// Levels top-down.
pub fn format_flag(f: &FlagValue) -> String {
    let mut out = String::new();
    for (i, level) in f.levels().iter().enumerate() {
        writeln!(out, "level {}: step {}", i + 1, level.step()).unwrap();
        out.push_str(&format_extensor(level));
    }
    out
}

pub fn format_value(v: &Value) -> String {
    match v {
        Value::Ext(t) => format_extensor(t),
        Value::Tensor(t) => format_tensor(t),
        Value::Flag(f) => format_flag(f),
    }
}
