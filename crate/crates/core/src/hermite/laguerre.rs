use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{self, factorial, Rational};

/// Generalized Laguerre polynomial `L_p^{(α)}(x) = Σ_i (−1)^i C(p+α, p−i) x^i / i!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerrePoly {
    pub p: u32,
    pub alpha: i64,
    /// Coefficients of `x⁰ … x^p`.
    pub coeffs: Vec<Rational>,
}

/// `C(p + α, p − i)` written as a product so that any integer `α` works.
fn binomial_shifted(p: u32, alpha: i64, i: u32) -> Rational {
    let mut acc = rational::int(1);
    for j in 1..=i64::from(p - i) {
        acc *= rational::frac(alpha + i64::from(i) + j, j);
    }
    acc
}

pub fn laguerre(p: u32, alpha: i64) -> LaguerrePoly {
    let coeffs = (0..=p)
        .map(|i| rational::sign(u64::from(i)) * binomial_shifted(p, alpha, i) / factorial(u64::from(i)))
        .collect();
    LaguerrePoly { p, alpha, coeffs }
}

impl LaguerrePoly {
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(rational::int(0), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rational::to_f64(c))
    }

    /// `x · L`, as a coefficient vector of length `p + 2`.
    pub fn shifted(&self) -> Vec<Rational> {
        std::iter::once(rational::int(0)).chain(self.coeffs.iter().cloned()).collect()
    }
}

impl fmt::Display for LaguerrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("({})x^{i}", rational::to_string(c)))
            .collect();
        write!(f, "L_{}^({}) = {}", self.p, self.alpha, parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct LaguerreWire {
    p: u32,
    alpha: i64,
    coeffs: Vec<String>,
}

impl Serialize for LaguerrePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaguerreWire { p: self.p, alpha: self.alpha, coeffs: self.coeffs.iter().map(rational::to_string).collect() }
            .serialize(s)
    }
}
