use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::decomposition::compose_parts;
use super::residuals::submonogenic;
use crate::clifford::AlgebraDim;
use crate::error::{Error, Result};
use crate::polyfun::{Monomial, PolyFunction, PolyWire, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CkClass {
    I,
    II,
    III,
    #[serde(rename = "double")]
    Double,
}

impl fmt::Display for CkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CkClass::I => "I",
            CkClass::II => "II",
            CkClass::III => "III",
            CkClass::Double => "double",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CkClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "1" => Ok(CkClass::I),
            "II" | "2" => Ok(CkClass::II),
            "III" | "3" => Ok(CkClass::III),
            "double" => Ok(CkClass::Double),
            other => Err(Error::Parse(format!("unknown class '{other}'"))),
        }
    }
}

/// The four coefficient functions sharing one index, all over `C_{2n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    pub a: PolyFunction,
    pub b: PolyFunction,
    pub c: PolyFunction,
    pub d: PolyFunction,
}

impl Quad {
    pub fn zero(dim: AlgebraDim) -> Self {
        let z = PolyFunction::zero(dim);
        Quad { a: z.clone(), b: z.clone(), c: z.clone(), d: z }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

/// Truncated power-series solution of the submonogenic system.
///
/// Single-index classes store their coefficients under `(k, 0)`; the double
/// series uses `(k, ℓ)` with both indices in `0..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CkTable {
    pub class: CkClass,
    pub s: u32,
    pub order: usize,
    pub n: usize,
    pub terminated: bool,
    pub coefficients: BTreeMap<(usize, usize), Quad>,
}

/// Residuals of an assembled table and the lowest `z₀`-order that survives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualReport {
    pub s1: PolyFunction,
    pub s2: PolyFunction,
    pub min_order: Option<u32>,
}

impl ResidualReport {
    pub fn is_exact(&self) -> bool {
        self.s1.is_zero() && self.s2.is_zero()
    }
}

fn z0_monomial(p: usize, q: usize) -> Monomial {
    Monomial::from_exponents([(Var::Z(0), p as u32), (Var::ZBar(0), q as u32)])
}

impl CkTable {
    pub fn dim(&self) -> AlgebraDim {
        AlgebraDim::plain(self.n)
    }

    /// Coefficients of a single-index class.
    pub fn coeff(&self, k: usize) -> Option<&Quad> {
        self.coefficients.get(&(k, 0))
    }

    pub fn coeff2(&self, k: usize, l: usize) -> Option<&Quad> {
        self.coefficients.get(&(k, l))
    }

    /// `z₀`, `z̄₀` exponents multiplying `A_k, B_k, C_k, D_k` in the assembled series.
    fn prefactors(&self, k: usize, l: usize) -> [(usize, usize); 4] {
        let s = self.s as usize;
        match self.class {
            CkClass::I => [(k, k), (k + 1, k), (k, k + 1), (k, k)],
            CkClass::II => [(s + k, k), (s + 1 + k, k), (s + k - 1, k), (s + k, k)],
            CkClass::III => [(k, s + k), (k, s + k - 1), (k, s + k + 1), (k, s + k)],
            CkClass::Double => [(k, l); 4],
        }
    }

    /// Parts `A, B, C, D` of the truncated series, embedded in `C_{2n+2}`.
    pub fn assemble_parts(&self) -> [PolyFunction; 4] {
        let ext = AlgebraDim::extended(self.n);
        let weight = self
            .coefficients
            .values()
            .flat_map(|q| [&q.a, &q.b, &q.c, &q.d])
            .find(|p| !p.is_zero())
            .map(|p| p.weight())
            .unwrap_or_default();
        let mut parts: [PolyFunction; 4] =
            std::array::from_fn(|_| PolyFunction::zero(ext).with_weight(weight));
        for (&(k, l), q) in &self.coefficients {
            let pre = self.prefactors(k, l);
            for (i, p) in [&q.a, &q.b, &q.c, &q.d].into_iter().enumerate() {
                let (zp, zq) = pre[i];
                let term = p.embed().mul_monomial(&z0_monomial(zp, zq));
                for (m, c) in term.terms() {
                    parts[i].add_term(m.clone(), c.clone());
                }
            }
        }
        parts
    }

    /// The truncated solution `f = A + f₀B + f₀†C + f₀†f₀D`.
    pub fn assemble(&self) -> PolyFunction {
        let [a, b, c, d] = self.assemble_parts();
        compose_parts(&a, &b, &c, &d).expect("parts share one algebra")
    }

    pub fn residual_report(&self) -> ResidualReport {
        let (s1, s2) = submonogenic(&self.assemble()).expect("assembled over C_{2n+2}");
        let min_order = [s1.min_z0_order(), s2.min_z0_order()].into_iter().flatten().min();
        ResidualReport { s1, s2, min_order }
    }

    /// Smallest index from which every stored coefficient vanishes
    /// (for the double series, the largest of both indices).
    pub fn vanishing_index(&self) -> usize {
        self.coefficients
            .iter()
            .filter(|(_, q)| !q.is_zero())
            .map(|(&(k, l), _)| k.max(l) + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn to_wire(&self) -> CkTableWire {
        CkTableWire {
            class: self.class,
            s: self.s,
            order: self.order,
            n: self.n,
            terminated: self.terminated,
            entries: self
                .coefficients
                .iter()
                .map(|(&(k, l), q)| EntryWire {
                    k,
                    l: (self.class == CkClass::Double).then_some(l),
                    a: q.a.to_wire(),
                    b: q.b.to_wire(),
                    c: q.c.to_wire(),
                    d: q.d.to_wire(),
                })
                .collect(),
        }
    }

    pub fn from_wire(w: &CkTableWire) -> Result<Self> {
        let dim = AlgebraDim::new(w.n, false)?;
        let mut coefficients = BTreeMap::new();
        for e in &w.entries {
            let l = match (w.class, e.l) {
                (CkClass::Double, Some(l)) => l,
                (CkClass::Double, None) => return Err(Error::Parse("double entries need 'l'".into())),
                (_, None) => 0,
                (_, Some(_)) => return Err(Error::Parse("only double tables carry 'l'".into())),
            };
            if e.k > w.order || l > w.order {
                return Err(Error::IndexOutOfRange(format!("entry ({}, {l}) beyond K = {}", e.k, w.order)));
            }
            let q = Quad {
                a: PolyFunction::from_wire(&e.a)?,
                b: PolyFunction::from_wire(&e.b)?,
                c: PolyFunction::from_wire(&e.c)?,
                d: PolyFunction::from_wire(&e.d)?,
            };
            if [&q.a, &q.b, &q.c, &q.d].iter().any(|p| p.dim() != dim) {
                return Err(Error::DimensionMismatch("coefficients must live over C_{2n}".into()));
            }
            coefficients.insert((e.k, l), q);
        }
        Ok(CkTable { class: w.class, s: w.s, order: w.order, n: w.n, terminated: w.terminated, coefficients })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryWire {
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(rename = "A")]
    pub a: PolyWire,
    #[serde(rename = "B")]
    pub b: PolyWire,
    #[serde(rename = "C")]
    pub c: PolyWire,
    #[serde(rename = "D")]
    pub d: PolyWire,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CkTableWire {
    pub class: CkClass,
    pub s: u32,
    #[serde(rename = "K")]
    pub order: usize,
    pub n: usize,
    pub terminated: bool,
    pub entries: Vec<EntryWire>,
}

impl Serialize for CkTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CkTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = CkTableWire::deserialize(deserializer)?;
        CkTable::from_wire(&w).map_err(serde::de::Error::custom)
    }
}
