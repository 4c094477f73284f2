use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::beta::BetaPoly;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Finite sum `Σ c_e ν^e` with exact rational exponents `e` and `β`-polynomial
/// coefficients. Non-integer exponents stand for `ν^s` with symbolic `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuSeries {
    n: usize,
    terms: BTreeMap<Rational, BetaPoly>,
}

impl NuSeries {
    pub fn zero(n: usize) -> Self {
        NuSeries { n, terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Rational, coeff: BetaPoly) -> Self {
        let mut s = Self::zero(coeff.n());
        s.add_term(exp, coeff);
        s
    }

    /// `c ν^e` with a scalar coefficient.
    pub fn scalar_power(n: usize, c: Rational, exp: Rational) -> Self {
        Self::monomial(exp, BetaPoly::constant(n, c))
    }

    /// Polynomial `Σ c_i ν^i` from scalar coefficients.
    pub fn from_scalars(n: usize, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            s.add_term(rational::int(i as i64), BetaPoly::constant(n, c.clone()));
        }
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, BetaPoly)>>(n: usize, terms: I) -> Result<Self> {
        let mut s = Self::zero(n);
        for (e, c) in terms {
            if c.n() != n {
                return Err(Error::DimensionMismatch("series coefficients over different n".into()));
            }
            s.add_term(e, c);
        }
        Ok(s)
    }

    pub fn add_term(&mut self, exp: Rational, coeff: BetaPoly) {
        assert_eq!(coeff.n(), self.n, "β-polynomial over a different n");
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exp) {
            Some(old) => &old + &coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &BetaPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Rational) -> BetaPoly {
        self.terms.get(exp).cloned().unwrap_or_else(|| BetaPoly::zero(self.n))
    }

    pub fn max_exponent(&self) -> Option<&Rational> {
        self.terms.keys().next_back()
    }

    /// Every exponent is a nonnegative integer.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.is_integer() && !e.is_negative())
    }

    /// Left and right multiplication agree since `β`-polynomials commute.
    pub fn mul_beta(&self, p: &BetaPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * p);
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.scale(r));
        }
        out
    }

    /// Multiplication by `ν^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        NuSeries { n: self.n, terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect() }
    }

    /// `d/dν` by the power rule; constant terms drop out.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if !e.is_zero() {
                out.add_term(e - rational::int(1), c.scale(e));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Drops every term with exponent above `m`.
    pub fn truncate(&self, m: &Rational) -> Self {
        NuSeries {
            n: self.n,
            terms: self.terms.iter().filter(|(e, _)| *e <= m).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Value at `ν` on the eigenspace `β = ℓ`; requires integer exponents.
    pub fn eval(&self, nu: &Rational, l: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            if !e.is_integer() {
                return Err(Error::InvalidParameter("exact evaluation needs integer exponents".into()));
            }
            let k = e.to_integer();
            let k: i64 = k.try_into().map_err(|_| Error::InvalidParameter("exponent too large".into()))?;
            acc += c.eval(l) * rational::powi(nu, k);
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, nu: f64, l: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let cv = c.coeffs().iter().rev().fold(0.0, |acc, x| acc * l + rational::to_f64(x));
                cv * nu.powf(rational::to_f64(e))
            })
            .sum()
    }

    pub fn to_wire(&self) -> Vec<SeriesTermWire> {
        self.terms
            .iter()
            .map(|(e, c)| SeriesTermWire { exp: rational::to_string(e), coeff: c.to_wire() })
            .collect()
    }

    pub fn from_wire(n: usize, w: &[SeriesTermWire]) -> Result<Self> {
        let mut s = Self::zero(n);
        for t in w {
            s.add_term(rational::parse(&t.exp)?, BetaPoly::from_wire(n, &t.coeff)?);
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermWire {
    pub exp: String,
    pub coeff: Vec<String>,
}

impl Add for &NuSeries {
    type Output = NuSeries;
    fn add(self, rhs: &NuSeries) -> NuSeries {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &NuSeries {
    type Output = NuSeries;
    fn neg(self) -> NuSeries {
        NuSeries { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &NuSeries {
    type Output = NuSeries;
    fn sub(self, rhs: &NuSeries) -> NuSeries {
        self + &(-rhs)
    }
}

impl fmt::Display for NuSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(e, c)| format!("[{c}]ν^{}", rational::to_string(e))).collect();
        f.write_str(&parts.join(" + "))
    }
}
