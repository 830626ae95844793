//! Commands and their text output.

use std::fmt::Write;

use gcalg::affine::{classify_screw, ReducedForm};
use gcalg::linalg;
use gcalg::matroids::{resolving_bracket, three_lines_concurrent, Matroid};
use gcalg::whitney::{coproduct_slice, evaluate, Configuration, Letter, Word};
use gcalg::{Extensor, Scalar};

use crate::error::CliError;
use crate::eval::{eval, format_extensor, format_flag, format_tensor, symbolic_geometric, Value};
use crate::expr::{parse_expression, Expr};

pub const HELP: &str = "\
commands:
  eval <expr>                     evaluate an expression
  circuits                        list circuits with coefficient vectors
  derive <k>                      k-th derived configuration and its rank
  resolve <cols> [<circuit>...]   resolving bracket on the given columns
  concurrent <pq> <rs> <uv>       whether three lines meet in a point
  screw <expr>                    line and couple parts of a rank-4 2-extensor
  flag <exprA> <exprB>            regressive product as a flag
  slice <word> <i> <j>            (i, j) coproduct slice, symbolic and evaluated
  gp <exprA> <exprB>              geometric product, symbolic and evaluated
  rank [<word>]                   rank of a set of letters
  help                            this list
";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Eval(String),
    Circuits,
    Derive(usize),
    Resolve { columns: String, circuits: Vec<String> },
    Concurrent([String; 3]),
    Screw(String),
    Flag(String, String),
    Slice(String, usize, usize),
    Gp(String, String),
    Rank(Option<String>),
    Help,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn number(s: &str, what: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| usage(format!("{what} must be a non-negative integer, got `{s}`")))
}

impl Command {
    /// A command line as typed in a script: the command word, then
    /// arguments. `eval` and `screw` take the rest of the line; the two
    /// arguments of `flag` and `gp` are separated by whitespace and may be
    /// quoted.
    pub fn parse_line(line: &str) -> Result<Command, CliError> {
        let line = line.trim();
        let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let args: Vec<String> = match word {
            "eval" | "screw" => vec![rest.to_string()],
            "flag" | "gp" => shlex::split(rest).ok_or_else(|| usage(format!("unbalanced quotes in `{rest}`")))?,
            _ => rest.split_whitespace().map(str::to_string).collect(),
        };
        Self::from_words(word, &args)
    }

    /// A command given as separate arguments, as on the process command line.
    pub fn from_args(args: &[String]) -> Result<Command, CliError> {
        match args.split_first() {
            None => Err(usage("missing command")),
            Some((word, rest)) => match word.as_str() {
                "eval" | "screw" => Self::from_words(word, &[rest.join(" ")]),
                _ => Self::from_words(word, rest),
            },
        }
    }

    fn from_words(word: &str, args: &[String]) -> Result<Command, CliError> {
        let arity = |n: usize, form: &str| {
            if args.len() == n {
                Ok(())
            } else {
                Err(usage(format!("expected `{form}`")))
            }
        };
        Ok(match word {
            "eval" | "screw" => {
                let e = args.first().filter(|s| !s.trim().is_empty()).cloned();
                let e = e.ok_or_else(|| usage(format!("expected `{word} <expr>`")))?;
                if word == "eval" {
                    Command::Eval(e)
                } else {
                    Command::Screw(e)
                }
            }
            "circuits" => {
                arity(0, "circuits")?;
                Command::Circuits
            }
            "derive" => {
                arity(1, "derive <k>")?;
                Command::Derive(number(&args[0], "k")?)
            }
            "resolve" => match args.split_first() {
                Some((columns, circuits)) => Command::Resolve {
                    columns: columns.clone(),
                    circuits: circuits.to_vec(),
                },
                None => return Err(usage("expected `resolve <cols> [<circuit>...]`")),
            },
            "concurrent" => {
                arity(3, "concurrent <pq> <rs> <uv>")?;
                Command::Concurrent([args[0].clone(), args[1].clone(), args[2].clone()])
            }
            "flag" => {
                arity(2, "flag <exprA> <exprB>")?;
                Command::Flag(args[0].clone(), args[1].clone())
            }
            "gp" => {
                arity(2, "gp <exprA> <exprB>")?;
                Command::Gp(args[0].clone(), args[1].clone())
            }
            "slice" => {
                arity(3, "slice <word> <i> <j>")?;
                Command::Slice(args[0].clone(), number(&args[1], "i")?, number(&args[2], "j")?)
            }
            "rank" => match args {
                [] => Command::Rank(None),
                [w] => Command::Rank(Some(w.clone())),
                _ => return Err(usage("expected `rank [<word>]`")),
            },
            "help" => Command::Help,
            other => return Err(usage(format!("unknown command `{other}` (try `help`)"))),
        })
    }
}

/// Letters of a word argument, one per character.
fn word_arg(s: &str) -> Result<Word, CliError> {
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_alphabetic()) {
        return Err(usage(format!("`{s}` is not a word of letters")));
    }
    Ok(Word::parse(s))
}

fn matrix_row(name: &str, row: &[Scalar]) -> String {
    let values: Vec<String> = row.iter().map(|v| v.to_string()).collect();
    format!("{name}: {}\n", values.join(" "))
}

fn derived_rows(config: &Configuration) -> String {
    let mut out = format!("ambient {}\n", config.ambient());
    for (l, row) in config.rows() {
        out.push_str(&matrix_row(l.name(), row));
    }
    let rows: Vec<Vec<Scalar>> = config.rows().map(|(_, r)| r.clone()).collect();
    writeln!(out, "rank {}", linalg::rank(&rows, config.ambient())).unwrap();
    out
}

fn expression(text: &str, config: &Configuration) -> Result<(Expr, Value), CliError> {
    let e = parse_expression(text)?;
    let v = eval(&e, config)?;
    Ok((e, v))
}

fn extensor_arg(text: &str, config: &Configuration, what: &str) -> Result<Extensor, CliError> {
    match expression(text, config)?.1 {
        Value::Ext(t) => Ok(t),
        _ => Err(CliError::Undefined(format!("{what} needs an extensor"))),
    }
}

/// Runs one command. `config` is required by every command except `help`.
pub fn run(cmd: &Command, config: Option<&Configuration>) -> Result<String, CliError> {
    if let Command::Help = cmd {
        return Ok(HELP.to_string());
    }
    let c = config.ok_or_else(|| usage("no configuration loaded (use --config <path>)"))?;
    let matroid = || Matroid::new(c.clone());
    match cmd {
        Command::Help => unreachable!(),
        Command::Eval(text) => Ok(crate::eval::format_value(&expression(text, c)?.1)),
        Command::Circuits => {
            let circuits = matroid().circuits()?;
            if circuits.is_empty() {
                return Ok("no circuits\n".into());
            }
            Ok(circuits.iter().map(|k| matrix_row(&k.name(), k.coefficients())).collect())
        }
        Command::Derive(k) => Ok(derived_rows(matroid().derive_iterate(*k)?.configuration())),
        Command::Resolve { columns, circuits } => {
            let m = matroid();
            let all = m.circuits()?;
            let rows: Vec<Vec<Scalar>> = if circuits.is_empty() {
                // greedy: circuits in listing order, skipping dependent ones
                let mut basis: Vec<Vec<Scalar>> = Vec::new();
                for k in &all {
                    basis.push(k.coefficients().to_vec());
                    if linalg::rank(&basis, c.len()) < basis.len() {
                        basis.pop();
                    }
                }
                basis
            } else {
                circuits
                    .iter()
                    .map(|name| {
                        all.iter()
                            .find(|k| k.name() == *name)
                            .map(|k| k.coefficients().to_vec())
                            .ok_or_else(|| CliError::Math(gcalg::Error::NotACircuit(name.clone())))
                    })
                    .collect::<Result<_, _>>()?
            };
            let x = word_arg(columns)?;
            Ok(format!("{}\n", resolving_bracket(&rows, c, x.letters())?))
        }
        Command::Concurrent(lines) => {
            let mut pairs: Vec<(Letter, Letter)> = Vec::new();
            for l in lines {
                let w = word_arg(l)?;
                if w.len() != 2 {
                    return Err(usage(format!("`{l}` does not name a line by two letters")));
                }
                pairs.push((w.letters()[0].clone(), w.letters()[1].clone()));
            }
            let pairs: [(Letter, Letter); 3] = pairs.try_into().expect("three lines");
            Ok(format!("{}\n", three_lines_concurrent(c, &pairs)?))
        }
        Command::Screw(text) => {
            let t = extensor_arg(text, c, "screw")?;
            let (kind, line, couple) = match classify_screw(&t)? {
                ReducedForm::Zero => ("zero", Extensor::zero(4, 2), Extensor::zero(4, 2)),
                ReducedForm::Segment(l) => ("line", l, Extensor::zero(4, 2)),
                ReducedForm::Couple(k) => ("couple", Extensor::zero(4, 2), k),
                ReducedForm::Screw { line, couple } => ("screw", line, couple),
                other => unreachable!("classify_screw returned {other:?}"),
            };
            Ok(format!("{kind}\nline part\n{}couple part\n{}", format_extensor(&line), format_extensor(&couple)))
        }
        Command::Flag(a, b) => {
            let (x, y) = (extensor_arg(a, c, "flag")?, extensor_arg(b, c, "flag")?);
            Ok(format_flag(&gcalg::flags::regressive_product(&x, &y)?))
        }
        Command::Slice(w, i, j) => {
            let s = coproduct_slice(&word_arg(w)?, *i, *j)?;
            Ok(format!("{s}\n{}", format_tensor(&evaluate(&s, c)?)))
        }
        Command::Gp(a, b) => {
            let (l, r) = (parse_expression(a)?, parse_expression(b)?);
            let g = symbolic_geometric(&l, &r, c)?;
            Ok(format!("{g}\n{}", format_tensor(&evaluate(&g, c)?)))
        }
        Command::Rank(w) => {
            let letters: Vec<Letter> = match w {
                Some(w) => word_arg(w)?.letters().to_vec(),
                None => c.letters().cloned().collect(),
            };
            let m = matroid();
            Ok(format!("{}\n", m.rank_of(&letters)?))
        }
    }
}

/// Runs newline-separated commands, echoing each as `> command` before its
/// output. Blank lines and lines starting with `#` are skipped. Stops at the
/// first failure, returning the output so far with the error.
pub fn run_script(script: &str, config: Option<&Configuration>) -> (String, Option<CliError>) {
    let mut out = String::new();
    for line in script.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        writeln!(out, "> {line}").unwrap();
        match Command::parse_line(line).and_then(|cmd| run(&cmd, config)) {
            Ok(s) => out.push_str(&s),
            Err(e) => return (out, Some(e)),
        }
    }
    (out, None)
}
