use serde::{Deserialize, Serialize};

use super::{f0, f0_dagger};
use crate::clifford::{AlgebraDim, CliffordElement, GaussianRational};
use crate::error::{Error, Result};
use crate::polyfun::PolyFunction;

/// `f = A + f₀B + f₀†C + f₀†f₀D` with `A..D` free of the `f₀`, `f₀†` blades.
/// The parts keep their `z₀` dependence and therefore stay in `C_{2n+2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub a: PolyFunction,
    pub b: PolyFunction,
    pub c: PolyFunction,
    pub d: PolyFunction,
}

/// Coefficientwise split. With `e = e_{2n+1}`, `e' = e_{2n+2}` one has
/// `e = f₀ − f₀†`, `e' = i(f₀ + f₀†)` and `ee' = i(1 − 2f₀†f₀)`, so
/// `x = a + eb + e'c + ee'd` gives `A = a + id`, `B = b + ic`, `C = −b + ic`, `D = −2id`.
fn split(x: &CliffordElement) -> [CliffordElement; 4] {
    let [a, b, c, d] = x.split_z0_generators();
    let i = GaussianRational::i();
    let ci = c.scale(&i);
    let di = d.scale(&i);
    [
        &a + &di,
        &b + &ci,
        &ci - &b,
        di.scale(&GaussianRational::from_int(-2)),
    ]
}

pub fn decompose(f: &PolyFunction) -> Result<Decomposition> {
    if !f.has_z0() {
        return Err(Error::DimensionMismatch(
            "decomposition needs a function over C_{2n+2}".into(),
        ));
    }
    let dim = f.dim();
    let mut parts: [PolyFunction; 4] = std::array::from_fn(|_| PolyFunction::zero(dim).with_weight(f.weight()));
    for (m, x) in f.terms() {
        for (slot, piece) in parts.iter_mut().zip(split(x)) {
            slot.add_term(m.clone(), piece);
        }
    }
    let [a, b, c, d] = parts;
    Ok(Decomposition { a, b, c, d })
}

impl Decomposition {
    pub fn dim(&self) -> AlgebraDim {
        self.a.dim()
    }

    pub fn compose(&self) -> Result<PolyFunction> {
        compose_parts(&self.a, &self.b, &self.c, &self.d)
    }

    /// Checks that all four parts live over the same `C_{2n+2}` and avoid `f₀` blades.
    pub fn validate(&self) -> Result<()> {
        let dim = self.a.dim();
        for p in [&self.a, &self.b, &self.c, &self.d] {
            if p.dim() != dim || !dim.with_z0 {
                return Err(Error::DimensionMismatch("decomposition parts must share C_{2n+2}".into()));
            }
            if !p.is_free_of_z0_blades() {
                return Err(Error::InvalidParameter("decomposition parts must avoid f₀ blades".into()));
            }
        }
        Ok(())
    }
}

/// `A + f₀B + f₀†C + f₀†f₀D`.
pub fn compose_parts(
    a: &PolyFunction,
    b: &PolyFunction,
    c: &PolyFunction,
    d: &PolyFunction,
) -> Result<PolyFunction> {
    let dim = a.dim();
    let f0 = f0(dim)?;
    let f0d = f0_dagger(dim)?;
    let n0 = f0d.checked_mul(&f0)?;
    a.checked_add(&b.left_mul(&f0)?)?
        .checked_add(&c.left_mul(&f0d)?)?
        .checked_add(&d.left_mul(&n0)?)
}
