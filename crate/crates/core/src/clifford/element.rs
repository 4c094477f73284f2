//! Elements of the complex Clifford algebras `C_{2n}` and `C_{2n+2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::blade::{blade_product, Blade, MAX_GENERATORS};
use super::scalar::{GaussianRational, GaussianWire};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which algebra an element lives in: `C_{2n}`, or `C_{2n+2}` when the
/// extra direction `z₀` is present. In the latter the Witt pair `f₀, f₀†`
/// is built on the generators `e_{2n+1}, e_{2n+2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraDim {
    pub n: usize,
    pub with_z0: bool,
}

impl AlgebraDim {
    pub fn new(n: usize, with_z0: bool) -> Result<Self> {
        let dim = Self { n, with_z0 };
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if dim.m() > MAX_GENERATORS {
            return Err(Error::InvalidParameter(format!(
                "algebra with {} generators exceeds the supported {MAX_GENERATORS}",
                dim.m()
            )));
        }
        Ok(dim)
    }

    /// `C_{2n}`. Panics when `n` is 0 or too large.
    pub fn plain(n: usize) -> Self {
        Self::new(n, false).expect("invalid algebra dimension")
    }

    /// `C_{2n+2}`. Panics when `n` is 0 or too large.
    pub fn extended(n: usize) -> Self {
        Self::new(n, true).expect("invalid algebra dimension")
    }

    /// Number of generators `m`.
    pub fn m(&self) -> usize {
        if self.with_z0 {
            2 * self.n + 2
        } else {
            2 * self.n
        }
    }

    /// Generator pair `(e_p, e_q)` behind the Witt element with index `j`.
    fn witt_pair(&self, j: usize) -> Result<(usize, usize)> {
        if j == 0 {
            if !self.with_z0 {
                return Err(Error::IndexOutOfRange(
                    "f₀ only exists in C_{2n+2}".into(),
                ));
            }
            Ok((2 * self.n + 1, 2 * self.n + 2))
        } else if j <= self.n {
            Ok((j, self.n + j))
        } else {
            Err(Error::IndexOutOfRange(format!("Witt index {j} with n = {}", self.n)))
        }
    }

    fn z0_mask(&self) -> u32 {
        if self.with_z0 {
            0b11 << (2 * self.n)
        } else {
            0
        }
    }
}

impl fmt::Display for AlgebraDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}", self.m())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    dim: AlgebraDim,
    terms: BTreeMap<Blade, GaussianRational>,
}

impl CliffordElement {
    pub fn zero(dim: AlgebraDim) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: AlgebraDim) -> Self {
        Self::scalar(dim, GaussianRational::one())
    }

    pub fn scalar(dim: AlgebraDim, value: GaussianRational) -> Self {
        let mut x = Self::zero(dim);
        x.add_term(Blade::UNIT, value);
        x
    }

    pub fn from_blade(dim: AlgebraDim, blade: Blade, coeff: GaussianRational) -> Result<Self> {
        if blade.top_index() > dim.m() {
            return Err(Error::IndexOutOfRange(format!("{blade} not in {dim}")));
        }
        let mut x = Self::zero(dim);
        x.add_term(blade, coeff);
        Ok(x)
    }

    /// Builds an element from `(blade, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(dim: AlgebraDim, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, GaussianRational)>,
    {
        let mut x = Self::zero(dim);
        for (b, c) in terms {
            if b.top_index() > dim.m() {
                return Err(Error::IndexOutOfRange(format!("{b} not in {dim}")));
            }
            x.add_term(b, c);
        }
        Ok(x)
    }

    /// The generator `e_j`, `1 ≤ j ≤ m`.
    pub fn generator(dim: AlgebraDim, j: usize) -> Result<Self> {
        if j == 0 || j > dim.m() {
            return Err(Error::IndexOutOfRange(format!("e_{j} not in {dim}")));
        }
        Self::from_blade(dim, Blade::generator(j)?, GaussianRational::one())
    }

    /// `f_j = ½(e_p − i e_q)`; index 0 is the `z₀` direction.
    pub fn witt(dim: AlgebraDim, j: usize) -> Result<Self> {
        let (p, q) = dim.witt_pair(j)?;
        let half = GaussianRational::frac(1, 2);
        Self::from_terms(
            dim,
            [
                (Blade::generator(p)?, half.clone()),
                (Blade::generator(q)?, -(&half * &GaussianRational::i())),
            ],
        )
    }

    /// `f_j† = −½(e_p + i e_q)`.
    pub fn witt_dagger(dim: AlgebraDim, j: usize) -> Result<Self> {
        let (p, q) = dim.witt_pair(j)?;
        let half = GaussianRational::frac(-1, 2);
        Self::from_terms(
            dim,
            [
                (Blade::generator(p)?, half.clone()),
                (Blade::generator(q)?, &half * &GaussianRational::i()),
            ],
        )
    }

    /// Fermionic Euler element `β = Σ_{j=1}^n f_j† f_j` (the `z₀` pair is excluded).
    pub fn beta(dim: AlgebraDim) -> Self {
        let mut acc = Self::zero(dim);
        for j in 1..=dim.n {
            let fd = Self::witt_dagger(dim, j).expect("index in range");
            let f = Self::witt(dim, j).expect("index in range");
            acc = &acc + &(&fd * &f);
        }
        acc
    }

    /// Primitive idempotent `I = f₁f₁† ⋯ f_nf_n†`.
    pub fn idempotent(dim: AlgebraDim) -> Self {
        let mut acc = Self::one(dim);
        for j in 1..=dim.n {
            let f = Self::witt(dim, j).expect("index in range");
            let fd = Self::witt_dagger(dim, j).expect("index in range");
            acc = &(&acc * &f) * &fd;
        }
        acc
    }

    pub fn dim(&self) -> AlgebraDim {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> GaussianRational {
        self.terms.get(&blade).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, blade: Blade, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} (n = {}) vs {} (n = {})",
                self.dim, self.dim.n, other.dim, other.dim.n
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Geometric product, bilinear over the blade products.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (s, blade) = blade_product(*a, *b);
                let c = ca * cb;
                out.add_term(blade, if s > 0 { c } else { -c });
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &GaussianRational) -> Self {
        let mut out = Self::zero(self.dim);
        if factor.is_zero() {
            return out;
        }
        for (b, c) in &self.terms {
            out.terms.insert(*b, c * factor);
        }
        out
    }

    pub fn scale_rational(&self, factor: &Rational) -> Self {
        self.scale(&GaussianRational::real(factor.clone()))
    }

    /// Main anti-involution: `ē_j = −e_j`, identity on complex scalars.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            let flip = b.reversion_sign() * if b.grade() % 2 == 0 { 1 } else { -1 };
            out.terms.insert(*b, if flip > 0 { c.clone() } else { -c });
        }
        out
    }

    /// Hermitian conjugation `(a + ib)† = ā − i b̄`.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            let flip = b.reversion_sign() * if b.grade() % 2 == 0 { 1 } else { -1 };
            let cc = c.conj();
            out.terms.insert(*b, if flip > 0 { cc } else { -cc });
        }
        out
    }

    pub fn scalar_part(&self) -> GaussianRational {
        self.coeff(Blade::UNIT)
    }

    /// `(x, y) = [x† y]₀`.
    pub fn hermitian_inner(&self, other: &Self) -> Result<GaussianRational> {
        self.check_dim(other)?;
        // only blade pairs with a == b reach the scalar part
        let mut acc = GaussianRational::zero();
        for (b, c) in &self.terms {
            if let Some(d) = other.terms.get(b) {
                acc += &(&c.conj() * d);
            }
        }
        Ok(acc)
    }

    /// `[x† x]₀`: the sum of squared moduli of the blade coefficients.
    pub fn norm_sq(&self) -> Rational {
        self.terms.values().map(|c| c.norm_sq()).fold(Rational::zero(), |a, b| a + b)
    }

    /// Reinterprets an element of `C_{2n}` inside `C_{2n+2}`.
    pub fn embed(&self) -> Self {
        Self { dim: AlgebraDim { n: self.dim.n, with_z0: true }, terms: self.terms.clone() }
    }

    /// True when no blade involves the generators of `f₀`, `f₀†`.
    pub fn is_free_of_z0(&self) -> bool {
        let mask = self.dim.z0_mask();
        self.terms.keys().all(|b| b.bits() & mask == 0)
    }

    /// Moves an element of `C_{2n+2}` free of `f₀` blades back into `C_{2n}`.
    pub fn restrict(&self) -> Result<Self> {
        if !self.dim.with_z0 {
            return Ok(self.clone());
        }
        if !self.is_free_of_z0() {
            return Err(Error::DimensionMismatch(
                "element involves f₀ and cannot be restricted to C_{2n}".into(),
            ));
        }
        Ok(Self { dim: AlgebraDim { n: self.dim.n, with_z0: false }, terms: self.terms.clone() })
    }

    /// Splits an element of `C_{2n+2}` as `a + e b + e' c + e e' d` where
    /// `e = e_{2n+1}`, `e' = e_{2n+2}` and `a..d` avoid both generators.
    pub(crate) fn split_z0_generators(&self) -> [Self; 4] {
        let mut parts = [
            Self::zero(self.dim),
            Self::zero(self.dim),
            Self::zero(self.dim),
            Self::zero(self.dim),
        ];
        let low = 2 * self.dim.n;
        for (b, c) in &self.terms {
            let top = (b.bits() >> low) & 0b11;
            let rest = Blade::from_bits(b.bits() & !(0b11 << low));
            // e_S e_T = (-1)^{|S||T|} e_T e_S
            let hop = rest.grade() * (top.count_ones() as usize);
            let coeff = if hop.is_multiple_of(2) { c.clone() } else { -c };
            parts[top as usize].add_term(rest, coeff);
        }
        // index: 0 → a, 1 → e b, 2 → e' c, 3 → e e' d
        parts
    }

    pub fn grade_part(&self, grade: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            if b.grade() == grade {
                out.terms.insert(*b, c.clone());
            }
        }
        out
    }

    pub fn to_wire(&self) -> CliffordWire {
        CliffordWire {
            n: self.dim.n,
            with_z0: self.dim.with_z0,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| TermWire { blade: b.indices(), coeff: c.into() })
                .collect(),
        }
    }

    pub fn from_wire(w: &CliffordWire) -> Result<Self> {
        let dim = AlgebraDim::new(w.n, w.with_z0)?;
        Self::terms_from_wire(dim, &w.terms)
    }

    pub(crate) fn terms_from_wire(dim: AlgebraDim, terms: &[TermWire]) -> Result<Self> {
        let mut x = Self::zero(dim);
        for t in terms {
            let b = Blade::new(&t.blade)?;
            if b.top_index() > dim.m() {
                return Err(Error::IndexOutOfRange(format!("{b} not in {dim}")));
            }
            x.add_term(b, GaussianRational::try_from(&t.coeff)?);
        }
        Ok(x)
    }
}

/// One `{blade: [indices], re: "p/q", im: "p/q"}` record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermWire {
    pub blade: Vec<usize>,
    #[serde(flatten)]
    pub coeff: GaussianWire,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CliffordWire {
    pub n: usize,
    pub with_z0: bool,
    pub terms: Vec<TermWire>,
}

impl Serialize for CliffordElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CliffordElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CliffordWire::deserialize(d)?;
        Self::from_wire(&w).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;
    /// Panics on mismatched algebras; see [`CliffordElement::checked_add`].
    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        CliffordElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Neg for CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        -&self
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("{c}·{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
