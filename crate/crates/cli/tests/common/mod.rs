#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// `Σ_i (-1)^i [2r+1 choose i] x^i y^r x^(2r+1-i)` written with q-factorials,
/// or its letter swap when `dual`.
pub fn higher_relation_text(r: usize, dual: bool) -> String {
    let n = 2 * r + 1;
    let (a, b) = if dual { ('y', 'x') } else { ('x', 'y') };
    let mut out = String::new();
    for i in 0..=n {
        out.push_str(if i == 0 { "" } else if i % 2 == 1 { " - " } else { " + " });
        out.push_str(&format!("[{n}]!/([{i}]!*[{}]!)*{a}^{i}*{b}^{r}*{a}^{}", n - i, n - i));
    }
    out
}

/// Expressions that must normalize to zero: the defining relations, their
/// higher-order and bracket forms, and a few scalar identities.
pub fn vanishing_corpus() -> Vec<String> {
    let mut v: Vec<String> = [
        "x^3*y - [3]*x^2*y*x + [3]*x*y*x^2 - y*x^3",
        "y^3*x - [3]*y^2*x*y + [3]*y*x*y^2 - x*y^3",
        "y^2*x^5 - [5]*x*y^2*x^4 + [5]*[4]/[2]*x^2*y^2*x^3 - [5]*[4]/[2]*x^3*y^2*x^2 + [5]*x^4*y^2*x - x^5*y^2",
        "x^2*y^5 - [5]*y*x^2*y^4 + [5]*[4]/[2]*y^2*x^2*y^3 - [5]*[4]/[2]*y^3*x^2*y^2 + [5]*y^4*x^2*y - y^5*x^2",
        "x*(x^2*y - (q^2 + q^-2)*x*y*x + y*x^2) - (x^2*y - (q^2 + q^-2)*x*y*x + y*x^2)*x",
        "y*(y^2*x - (q^2 + q^-2)*y*x*y + x*y^2) - (y^2*x - (q^2 + q^-2)*y*x*y + x*y^2)*y",
        "x^2*y*x - (1/[3])*x^3*y - x*y*x^2 + (1/[3])*y*x^3",
        "x*y*x^2 + (1/[3])*x^3*y - x^2*y*x - (1/[3])*y*x^3",
        "y^2*x*y - (1/[3])*y^3*x - y*x*y^2 + (1/[3])*x*y^3",
        "(q^3 - q^-3)/(q - q^-1) - [3]",
        "[3] - (q^2 + q^-2) - 1",
        "[2]^2 - [1]*[3] - 1",
        "[4]! - [4]*[3]*[2]*[1]",
        "[0]! - 1",
        "x*y*x^2 - (-(1/[3])·x^3·y + x^2·y·x + (1/[3])·y·x^3)",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for r in 1..=4 {
        v.push(higher_relation_text(r, false));
        v.push(higher_relation_text(r, true));
    }
    v
}

/// Expressions that only need to parse, print and evaluate.
pub fn general_corpus() -> Vec<String> {
    [
        "1",
        "x",
        "y",
        "q",
        "(q - q^-1)*x*y",
        "x*y*x^2*y^2",
        "y*x*y^2*x^2",
        "y^2*x^2*y*x",
        "x^2*y^2*x*y",
        "-x",
        "--y",
        "x*-y",
        "(x + y)^3",
        "(x - y)*(x + y)",
        "x^2*y^2 - y^2*x^2",
        "3/4*x - 1/2*y",
        "q^-2*x + q^2*y",
        "[-3]*x",
        "(x*y)^2*x",
        "(q + 1)^2*x",
        "x^10",
        "[3]/[3]*y",
        "y*x*y^2*x^2 - y^2*x^2*y*x",
        "y^3*x^2*y*x",
        "[5]!/([2]!*[3]!)*x^2*y*x^3",
        "2*x*y - 3*(y*x - q*x*y)",
        "-(x + y)*-(x - y)",
        "x^2*(y + [2]*x)^2",
        "((x))",
        "0*x + 0",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

pub fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_qserre"))
}

pub fn run(args: &[&str]) -> Output {
    Command::new(binary()).args(args).output().expect("run qserre")
}

/// A scratch path unique to this process and `name`.
pub fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qserre-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}
