use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::{AlgebraDim, CliffordElement, GaussianRational};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Element of `ℚ[β] / (β(β−1)⋯(β−n))`, stored by its coefficients of `β⁰ … βⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaPoly {
    n: usize,
    coeffs: Vec<Rational>,
}

/// Coefficients of `β(β−1)⋯(β−n)`, lowest degree first (monic, degree `n + 1`).
fn characteristic(n: usize) -> Vec<Rational> {
    let mut poly = vec![Rational::one()];
    for j in 0..=n {
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * rational::int(j as i64);
        }
        poly = next;
    }
    poly
}

/// Remainder of an arbitrary polynomial in `β` modulo the characteristic polynomial.
pub fn beta_reduce(poly: &[Rational], n: usize) -> BetaPoly {
    let chi = characteristic(n);
    let mut work: Vec<Rational> = poly.to_vec();
    while work.len() > n + 1 {
        let top = work.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        // β^d ≡ β^d − β^{d−n−1}χ, which has degree below d
        let shift = work.len() - n - 1;
        for (i, c) in chi.iter().take(n + 1).enumerate() {
            work[shift + i] -= &top * c;
        }
    }
    work.resize(n + 1, Rational::zero());
    BetaPoly { n, coeffs: work }
}

impl BetaPoly {
    pub fn zero(n: usize) -> Self {
        BetaPoly { n, coeffs: vec![Rational::zero(); n + 1] }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[0] = c;
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// `β` itself (for `n ≥ 1`).
    pub fn beta(n: usize) -> Self {
        beta_reduce(&[Rational::zero(), Rational::one()], n)
    }

    /// `a + bβ`
    pub fn linear(n: usize, a: Rational, b: Rational) -> Self {
        beta_reduce(&[a, b], n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        BetaPoly { n: self.n, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "β-polynomials over different n");
    }

    /// Value on the eigenspace `β = ℓ`.
    pub fn eval(&self, l: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * l + c)
    }

    /// Values at the eigenvalues `0, 1, …, n`; these determine the element.
    pub fn eigenvalues(&self) -> Vec<Rational> {
        (0..=self.n).map(|l| self.eval(&rational::int(l as i64))).collect()
    }

    /// `Σ c_i βⁱ` with `β = Σ f_j† f_j` in the given algebra.
    pub fn to_clifford(&self, dim: AlgebraDim) -> Result<CliffordElement> {
        if dim.n != self.n {
            return Err(Error::DimensionMismatch(format!(
                "β-polynomial for n = {} used in an algebra with n = {}",
                self.n, dim.n
            )));
        }
        let beta = CliffordElement::beta(dim);
        let mut acc = CliffordElement::zero(dim);
        let mut power = CliffordElement::one(dim);
        for c in &self.coeffs {
            acc = &acc + &power.scale(&GaussianRational::real(c.clone()));
            power = &power * &beta;
        }
        Ok(acc)
    }

    pub fn to_wire(&self) -> Vec<String> {
        self.coeffs.iter().map(rational::to_string).collect()
    }

    pub fn from_wire(n: usize, w: &[String]) -> Result<Self> {
        let coeffs = w.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(beta_reduce(&coeffs, n))
    }
}

impl Add for &BetaPoly {
    type Output = BetaPoly;
    fn add(self, rhs: &BetaPoly) -> BetaPoly {
        self.check(rhs);
        BetaPoly { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &BetaPoly {
    type Output = BetaPoly;
    fn sub(self, rhs: &BetaPoly) -> BetaPoly {
        self.check(rhs);
        BetaPoly { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        BetaPoly { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: &BetaPoly) -> BetaPoly {
        self.check(rhs);
        let mut prod = vec![Rational::zero(); 2 * self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        beta_reduce(&prod, self.n)
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => rational::to_string(c),
                1 => format!("({})β", rational::to_string(c)),
                _ => format!("({})β^{i}", rational::to_string(c)),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct BetaWire(Vec<String>);

impl Serialize for BetaPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BetaWire(self.to_wire()).serialize(s)
    }
}
