use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;
use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, Var};
use crate::clifford::{AlgebraDim, CliffordElement, GaussianRational, TermWire};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Whether the stored polynomial is implicitly multiplied by `exp(−|z̲|²/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Weight {
    #[default]
    None,
    Gaussian,
}

/// Clifford-valued polynomial in the formal variables `z_j, z̄_j` (and `z₀, z̄₀`
/// when the coefficient algebra is `C_{2n+2}`), optionally Gaussian-weighted.
/// Coefficients multiply from the left of the monomials.
#[derive(Debug, Clone)]
pub struct PolyFunction {
    dim: AlgebraDim,
    weight: Weight,
    terms: BTreeMap<Monomial, CliffordElement>,
}

impl PartialEq for PolyFunction {
    /// The zero function carries no weight, so zero compares equal to zero
    /// whatever the flag.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.terms == other.terms
            && (self.weight == other.weight || self.terms.is_empty())
    }
}

impl Eq for PolyFunction {}

impl PolyFunction {
    pub fn zero(dim: AlgebraDim) -> Self {
        Self { dim, weight: Weight::None, terms: BTreeMap::new() }
    }

    pub fn constant(c: CliffordElement) -> Self {
        let mut p = Self::zero(c.dim());
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(dim: AlgebraDim) -> Self {
        Self::constant(CliffordElement::one(dim))
    }

    pub fn scalar(dim: AlgebraDim, value: GaussianRational) -> Self {
        Self::constant(CliffordElement::scalar(dim, value))
    }

    /// The Gaussian `exp(−|z̲|²/2)` itself: weighted constant 1.
    pub fn gaussian(dim: AlgebraDim) -> Self {
        Self::one(dim).with_weight(Weight::Gaussian)
    }

    pub fn monomial(dim: AlgebraDim, m: Monomial, c: CliffordElement) -> Result<Self> {
        Self::from_terms(dim, [(m, c)])
    }

    /// The single variable `v` with coefficient 1.
    pub fn var(dim: AlgebraDim, v: Var) -> Result<Self> {
        check_var(dim, v)?;
        Self::monomial(dim, Monomial::var(v), CliffordElement::one(dim))
    }

    pub fn from_terms<I>(dim: AlgebraDim, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, CliffordElement)>,
    {
        let mut p = Self::zero(dim);
        for (m, c) in terms {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient in {} for a function over {dim}",
                    c.dim()
                )));
            }
            for (v, _) in m.exponents() {
                check_var(dim, *v)?;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// `Σ_{j=1}^n z_j z̄_j` as a scalar polynomial, i.e. `|z̲|²`.
    pub fn modulus_sq(dim: AlgebraDim) -> Self {
        let mut p = Self::zero(dim);
        for j in 1..=dim.n {
            p.add_term(
                Monomial::from_exponents([(Var::Z(j), 1), (Var::ZBar(j), 1)]),
                CliffordElement::one(dim),
            );
        }
        p
    }

    /// `z₀ z̄₀` (requires the `z₀` direction).
    pub fn z0_modulus_sq(dim: AlgebraDim) -> Result<Self> {
        Self::monomial(
            dim,
            Monomial::from_exponents([(Var::Z(0), 1), (Var::ZBar(0), 1)]),
            CliffordElement::one(dim),
        )
    }

    pub fn dim(&self) -> AlgebraDim {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.dim.n
    }

    pub fn has_z0(&self) -> bool {
        self.dim.with_z0
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn with_weight(mut self, weight: Weight) -> Self {
        self.weight = weight;
        self
    }

    /// Drops the Gaussian flag, leaving the polynomial factor.
    pub fn strip_weight(&self) -> Self {
        self.clone().with_weight(Weight::None)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CliffordElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> CliffordElement {
        self.terms.get(m).cloned().unwrap_or_else(|| CliffordElement::zero(self.dim))
    }

    /// Total degree of the polynomial factor, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has total degree exactly `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn is_free_of_z0_blades(&self) -> bool {
        self.terms.values().all(CliffordElement::is_free_of_z0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: CliffordElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn combined_weight(&self, other: &Self) -> Result<Weight> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "functions over {} (n = {}) and {} (n = {})",
                self.dim, self.dim.n, other.dim, other.dim.n
            )));
        }
        if self.is_zero() {
            return Ok(other.weight);
        }
        if other.is_zero() || self.weight == other.weight {
            return Ok(self.weight);
        }
        Err(Error::WeightConflict("cannot add weighted and unweighted functions".into()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let weight = self.combined_weight(other)?;
        let mut out = self.clone().with_weight(weight);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Pointwise product with Clifford multiplication of coefficients
    /// (`self` on the left). Two weighted factors are rejected.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "functions over {} and {}",
                self.dim, other.dim
            )));
        }
        let weight = match (self.weight, other.weight) {
            (Weight::Gaussian, Weight::Gaussian) if !self.is_zero() && !other.is_zero() => {
                return Err(Error::WeightConflict(
                    "product of two Gaussian-weighted functions".into(),
                ))
            }
            (Weight::None, Weight::None) => Weight::None,
            _ => Weight::Gaussian,
        };
        let mut out = Self::zero(self.dim).with_weight(weight);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &GaussianRational) -> Self {
        let mut out = Self::zero(self.dim).with_weight(self.weight);
        if factor.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.scale(factor));
        }
        out
    }

    pub fn scale_rational(&self, factor: &Rational) -> Self {
        self.scale(&GaussianRational::real(factor.clone()))
    }

    /// `c · self`, multiplying every coefficient on the left.
    pub fn left_mul(&self, c: &CliffordElement) -> Result<Self> {
        let mut out = Self::zero(self.dim).with_weight(self.weight);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), c.checked_mul(x)?);
        }
        Ok(out)
    }

    /// `self · c`, multiplying every coefficient on the right.
    pub fn right_mul(&self, c: &CliffordElement) -> Result<Self> {
        let mut out = Self::zero(self.dim).with_weight(self.weight);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.checked_mul(c)?);
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.dim).with_weight(self.weight);
        for (k, c) in &self.terms {
            out.terms.insert(k.mul(m), c.clone());
        }
        out
    }

    /// Formal partial derivative. For Gaussian-weighted functions the product
    /// rule adds `−½ z̄_j` (for `∂_{z_j}`) or `−½ z_j` (for `∂_{z̄_j}`); the `z₀`
    /// derivatives leave the weight alone.
    pub fn partial(&self, v: Var) -> Result<Self> {
        check_var(self.dim, v)?;
        let mut out = Self::zero(self.dim).with_weight(self.weight);
        for (m, c) in &self.terms {
            if let Some((k, dm)) = m.derivative(v) {
                out.add_term(dm, c.scale(&GaussianRational::from_int(i64::from(k))));
            }
        }
        if self.weight == Weight::Gaussian && v.index() != 0 {
            let factor = Monomial::var(v.conjugate());
            let minus_half = GaussianRational::frac(-1, 2);
            for (m, c) in &self.terms {
                out.add_term(m.mul(&factor), c.scale(&minus_half));
            }
        }
        Ok(out)
    }

    /// Keeps only terms free of `z₀`, `z̄₀`. When no coefficient involves `f₀`
    /// blades the result moves into `C_{2n}`.
    pub fn restrict_z0(&self) -> Self {
        let mut out = Self::zero(self.dim).with_weight(self.weight);
        for (m, c) in &self.terms {
            if m.z0_degree() == 0 {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        if self.dim.with_z0 && out.is_free_of_z0_blades() {
            out.into_plain().expect("checked free of f₀ blades")
        } else {
            out
        }
    }

    /// Moves a function of `C_{2n}` into `C_{2n+2}` (no `z₀` dependence added).
    pub fn embed(&self) -> Self {
        if self.dim.with_z0 {
            return self.clone();
        }
        let dim = AlgebraDim { n: self.dim.n, with_z0: true };
        Self {
            dim,
            weight: self.weight,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.embed())).collect(),
        }
    }

    /// Inverse of [`PolyFunction::embed`]; fails if `z₀` or `f₀` occur.
    pub fn into_plain(&self) -> Result<Self> {
        if !self.dim.with_z0 {
            return Ok(self.clone());
        }
        let dim = AlgebraDim { n: self.dim.n, with_z0: false };
        let mut out = Self::zero(dim).with_weight(self.weight);
        for (m, c) in &self.terms {
            if m.z0_degree() > 0 {
                return Err(Error::DimensionMismatch("function depends on z₀".into()));
            }
            out.terms.insert(m.clone(), c.restrict()?);
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&CliffordElement) -> Result<CliffordElement>,
    {
        let mut out = Self::zero(self.dim).with_weight(self.weight);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Lowest `max(deg z₀, deg z̄₀)` over the terms, `None` for zero.
    pub fn min_z0_order(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.exponent(Var::Z(0)).max(m.exponent(Var::ZBar(0))))
            .min()
    }

    pub fn to_wire(&self) -> PolyWire {
        PolyWire {
            n: self.dim.n,
            has_z0: self.dim.with_z0,
            weight: self.weight,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| PolyTermWire {
                    exponents: m.exponents().iter().map(|(v, k)| (v.name(), *k)).collect(),
                    coeff: c.to_wire().terms,
                })
                .collect(),
        }
    }

    pub fn from_wire(w: &PolyWire) -> Result<Self> {
        let dim = AlgebraDim::new(w.n, w.has_z0)?;
        let mut terms = Vec::with_capacity(w.terms.len());
        for t in &w.terms {
            let mut exps = Vec::new();
            for (name, k) in &t.exponents {
                exps.push((Var::parse(name)?, *k));
            }
            terms.push((Monomial::from_exponents(exps), CliffordElement::terms_from_wire(dim, &t.coeff)?));
        }
        Ok(Self::from_terms(dim, terms)?.with_weight(w.weight))
    }
}

pub(crate) fn check_var(dim: AlgebraDim, v: Var) -> Result<()> {
    let j = v.index();
    if (j == 0 && !dim.with_z0) || j > dim.n {
        return Err(Error::UnknownVariable(format!("{v} over {dim} with n = {}", dim.n)));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyTermWire {
    pub exponents: BTreeMap<String, u32>,
    pub coeff: Vec<TermWire>,
}

/// Header `{n, has_z0, weight}` plus the term list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyWire {
    pub n: usize,
    pub has_z0: bool,
    pub weight: Weight,
    pub terms: Vec<PolyTermWire>,
}

impl Serialize for PolyFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PolyWire::deserialize(d)?;
        Self::from_wire(&w).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a PolyFunction> for &'a PolyFunction {
    type Output = PolyFunction;
    /// Panics on dimension or weight mismatch; see [`PolyFunction::checked_add`].
    fn add(self, rhs: &PolyFunction) -> PolyFunction {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a PolyFunction> for &'a PolyFunction {
    type Output = PolyFunction;
    fn sub(self, rhs: &PolyFunction) -> PolyFunction {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a PolyFunction> for &'a PolyFunction {
    type Output = PolyFunction;
    fn mul(self, rhs: &PolyFunction) -> PolyFunction {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &PolyFunction {
    type Output = PolyFunction;
    fn neg(self) -> PolyFunction {
        PolyFunction {
            dim: self.dim,
            weight: self.weight,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for PolyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("[{c}]·{m}")).collect();
        write!(f, "{}", parts.join(" + "))?;
        if self.weight == Weight::Gaussian {
            write!(f, " ·exp(-|z|²/2)")?;
        }
        Ok(())
    }
}
