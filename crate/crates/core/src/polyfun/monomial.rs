use std::fmt;

use crate::error::{Error, Result};

/// Formal variable: `z_j` or `z̄_j`, with `j = 0` the distinguished direction `z₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z(usize),
    ZBar(usize),
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::Z(j) | Var::ZBar(j) => j,
        }
    }

    pub fn is_conjugate(self) -> bool {
        matches!(self, Var::ZBar(_))
    }

    pub fn conjugate(self) -> Var {
        match self {
            Var::Z(j) => Var::ZBar(j),
            Var::ZBar(j) => Var::Z(j),
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::Z(j) => format!("z{j}"),
            Var::ZBar(j) => format!("zb{j}"),
        }
    }

    pub fn parse(s: &str) -> Result<Var> {
        let bad = || Error::UnknownVariable(s.to_string());
        if let Some(rest) = s.strip_prefix("zb") {
            rest.parse().map(Var::ZBar).map_err(|_| bad())
        } else if let Some(rest) = s.strip_prefix('z') {
            rest.parse().map(Var::Z).map_err(|_| bad())
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Product of variable powers, kept sorted by variable with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn power(v: Var, k: u32) -> Self {
        if k == 0 {
            Self::one()
        } else {
            Monomial(vec![(v, k)])
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = (Var, u32)>>(it: I) -> Self {
        let mut m = Self::one();
        for (v, k) in it {
            m = m.mul(&Self::power(v, k));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, k)| *k)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, k)| k).sum()
    }

    /// Degree in the `z₀`, `z̄₀` variables.
    pub fn z0_degree(&self) -> u32 {
        self.exponent(Var::Z(0)) + self.exponent(Var::ZBar(0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `∂_v` of the monomial as `(multiplicity, monomial)`, or `None` when it vanishes.
    pub fn derivative(&self, v: Var) -> Option<(u32, Self)> {
        let pos = self.0.iter().position(|(w, _)| *w == v)?;
        let mut out = self.0.clone();
        let k = out[pos].1;
        if k == 1 {
            out.remove(pos);
        } else {
            out[pos].1 -= 1;
        }
        Some((k, Monomial(out)))
    }

    /// Drops `z₀`, `z̄₀` factors; returns `None` if any were present.
    pub fn without_z0(&self) -> Option<Self> {
        if self.z0_degree() > 0 {
            None
        } else {
            Some(self.clone())
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, k)| if *k == 1 { v.name() } else { format!("{}^{k}", v.name()) })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}
