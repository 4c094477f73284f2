//! Residuals of the h-monogenic system, its four-equation form, the
//! h-submonogenic subsystem and the component systems for `A, B, C, D`.

use super::decomposition::Decomposition;
use super::{f0, f0_dagger};
use crate::error::{Error, Result};
use crate::polyfun::{dirac_z, dirac_zdagger, PolyFunction, Var};

fn require_z0(f: &PolyFunction) -> Result<()> {
    if f.has_z0() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch("residuals need a function over C_{2n+2}".into()))
    }
}

/// `(f₀†∂_{z₀} + f₀†f₀∂_z̲) f` and `(f₀∂_{z̄₀} + f₀f₀†∂_z̲†) f`.
pub fn submonogenic(f: &PolyFunction) -> Result<(PolyFunction, PolyFunction)> {
    require_z0(f)?;
    let dim = f.dim();
    let (f0, f0d) = (f0(dim)?, f0_dagger(dim)?);
    let s1 = f
        .partial(Var::Z(0))?
        .left_mul(&f0d)?
        .checked_add(&dirac_z(f).left_mul(&(&f0d * &f0))?)?;
    let s2 = f
        .partial(Var::ZBar(0))?
        .left_mul(&f0)?
        .checked_add(&dirac_zdagger(f).left_mul(&(&f0 * &f0d))?)?;
    Ok((s1, s2))
}

/// `(f₀†∂_{z₀} + ∂_z̲) f` and `(f₀∂_{z̄₀} + ∂_z̲†) f`.
pub fn hmonogenic(f: &PolyFunction) -> Result<(PolyFunction, PolyFunction)> {
    require_z0(f)?;
    let dim = f.dim();
    let (f0, f0d) = (f0(dim)?, f0_dagger(dim)?);
    let r1 = f.partial(Var::Z(0))?.left_mul(&f0d)?.checked_add(&dirac_z(f))?;
    let r2 = f.partial(Var::ZBar(0))?.left_mul(&f0)?.checked_add(&dirac_zdagger(f))?;
    Ok((r1, r2))
}

/// The four residuals of the split h-monogenic system, in order:
/// `(f₀†∂_{z₀} + f₀†f₀∂_z̲)f`, `f₀f₀†∂_z̲ f`, `(f₀∂_{z̄₀} + f₀f₀†∂_z̲†)f`, `f₀†f₀∂_z̲† f`.
pub fn hms_split(f: &PolyFunction) -> Result<[PolyFunction; 4]> {
    let (q1, q3) = submonogenic(f)?;
    let dim = f.dim();
    let (f0, f0d) = (f0(dim)?, f0_dagger(dim)?);
    let q2 = dirac_z(f).left_mul(&(&f0 * &f0d))?;
    let q4 = dirac_zdagger(f).left_mul(&(&f0d * &f0))?;
    Ok([q1, q2, q3, q4])
}

/// Right-hand sides `g = f₀†∂_z̲ f`, `h = f₀∂_z̲† f` of the inhomogeneous
/// h-monogenic system equivalent to the submonogenic one.
pub fn inhomogeneous_data(f: &PolyFunction) -> Result<(PolyFunction, PolyFunction)> {
    require_z0(f)?;
    let dim = f.dim();
    let (f0, f0d) = (f0(dim)?, f0_dagger(dim)?);
    Ok((dirac_z(f).left_mul(&f0d)?, dirac_zdagger(f).left_mul(&f0)?))
}

/// `∂_{z₀}A − ∂_z̲C`, `∂_z̲†A + ∂_{z̄₀}C`, `∂_{z₀}B + ∂_z̲(A+D)`, `∂_z̲†B − ∂_{z̄₀}(A+D)`.
pub fn components(d: &Decomposition) -> Result<[PolyFunction; 4]> {
    d.validate()?;
    let ad = d.a.checked_add(&d.d)?;
    Ok([
        d.a.partial(Var::Z(0))?.checked_sub(&dirac_z(&d.c))?,
        dirac_zdagger(&d.a).checked_add(&d.c.partial(Var::ZBar(0))?)?,
        d.b.partial(Var::Z(0))?.checked_add(&dirac_z(&ad))?,
        dirac_zdagger(&d.b).checked_sub(&ad.partial(Var::ZBar(0))?)?,
    ])
}
