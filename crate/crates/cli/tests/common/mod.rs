#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use hclif::clifford::{AlgebraDim, CliffordElement};
use hclif::polyfun::{Monomial, PolyFunction, Var};
use serde_json::Value;

pub fn hclif(args: &[&str]) -> Output {
    hclif_env(args, &[])
}

pub fn hclif_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hclif"));
    cmd.args(args).env_remove("HCLIF_MAX_K");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

pub fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

pub fn write_json<T: serde::Serialize>(dir: &Path, name: &str, value: &T) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path.to_str().unwrap().to_owned()
}

/// `z̄₁ − z̄₀ f₀† f₁` over `C_4`, written out directly.
pub fn class1_example() -> PolyFunction {
    let dim = AlgebraDim::extended(1);
    let one = CliffordElement::one(dim);
    let f0d = CliffordElement::witt_dagger(dim, 0).unwrap();
    let f1 = CliffordElement::witt(dim, 1).unwrap();
    let zb1 = PolyFunction::monomial(dim, Monomial::var(Var::ZBar(1)), one).unwrap();
    let zb0 = PolyFunction::monomial(dim, Monomial::var(Var::ZBar(0)), &f0d * &f1).unwrap();
    &zb1 - &zb0
}
