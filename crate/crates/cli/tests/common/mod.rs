#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gcalg::scalar::ratio;
use gcalg_cli::Expr;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn gcalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcalg"))
        .args(args)
        .output()
        .expect("run gcalg")
}

pub fn data(name: &str) -> String {
    tests_dir().join("data").join(name).to_string_lossy().into_owned()
}

/// Runs `golden/<name>.txt` against the configuration named in its first
/// line, returning (stdout, exit code, expected output).
pub fn run_golden(name: &str) -> (String, Option<i32>, String) {
    let dir = tests_dir().join("golden");
    let script = dir.join(format!("{name}.txt"));
    let text = std::fs::read_to_string(&script).unwrap();
    let config = text
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("# config: "))
        .expect("script names its configuration");
    let out = gcalg(&["--config", &data(config), "--batch", &script.to_string_lossy()]);
    let expected = std::fs::read_to_string(dir.join(format!("{name}.out"))).unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code(), expected)
}

pub const GOLDEN: [&str; 6] = ["tables", "couples", "dependency", "u36", "u36_concurrent", "misc"];

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

/// A random expression tree of bounded depth, over all node kinds.
pub fn random_expr(g: &mut ChaCha8Rng, depth: usize) -> Expr {
    if depth == 0 || g.gen_bool(0.2) {
        return if g.gen_bool(0.8) {
            let letters = b"abcdefoxyzABD";
            Expr::Letter(letters[g.gen_range(0..letters.len())] as char)
        } else {
            Expr::Number(ratio(g.gen_range(0..20), g.gen_range(1..5)))
        };
    }
    let mut sub = || b(random_expr(g, depth - 1));
    let (l, r) = (sub(), sub());
    match g.gen_range(0..14) {
        0 => Expr::Join(l, r),
        1 => Expr::Meet(l, r),
        2 => Expr::Geometric(l, r),
        3 => Expr::Neg(l),
        4 => Expr::Mul(l, r),
        5 => Expr::Add(l, r),
        6 => Expr::Sub(l, r),
        7 => Expr::Tensor(l, r),
        8 => Expr::Bracket(l),
        9 => Expr::Boundary(l),
        10 => Expr::Star(l),
        11 => Expr::Regressive(l, r),
        _ => Expr::Join(l, r),
    }
}
