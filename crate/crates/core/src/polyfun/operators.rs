//! Hermitian Dirac operators and the vector variables built on the Witt basis.

use super::function::PolyFunction;
use super::monomial::{Monomial, Var};
use crate::clifford::{AlgebraDim, CliffordElement, GaussianRational};
use crate::error::Result;

/// `∂_z̲ g = Σ_j f_j† ∂_{z_j} g`.
pub fn dirac_z(g: &PolyFunction) -> PolyFunction {
    let dim = g.dim();
    let mut acc = PolyFunction::zero(dim).with_weight(g.weight());
    for j in 1..=dim.n {
        let fd = CliffordElement::witt_dagger(dim, j).expect("index in range");
        let d = g.partial(Var::Z(j)).expect("variable in range");
        acc = &acc + &d.left_mul(&fd).expect("same algebra");
    }
    acc
}

/// `∂_z̲† g = Σ_j f_j ∂_{z̄_j} g`.
pub fn dirac_zdagger(g: &PolyFunction) -> PolyFunction {
    let dim = g.dim();
    let mut acc = PolyFunction::zero(dim).with_weight(g.weight());
    for j in 1..=dim.n {
        let f = CliffordElement::witt(dim, j).expect("index in range");
        let d = g.partial(Var::ZBar(j)).expect("variable in range");
        acc = &acc + &d.left_mul(&f).expect("same algebra");
    }
    acc
}

/// `Δ = 4(∂_z̲ ∂_z̲† + ∂_z̲† ∂_z̲)`.
pub fn laplacian(g: &PolyFunction) -> PolyFunction {
    let a = dirac_z(&dirac_zdagger(g));
    let b = dirac_zdagger(&dirac_z(g));
    (&a + &b).scale(&GaussianRational::from_int(4))
}

/// Real Dirac operator `∂_X̲ = 2(∂_z̲† − ∂_z̲)`.
pub fn dirac_x(g: &PolyFunction) -> PolyFunction {
    (&dirac_zdagger(g) - &dirac_z(g)).scale(&GaussianRational::from_int(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorKind {
    /// `z̲ = Σ f_j z_j`
    Z,
    /// `z̲† = Σ f_j† z̄_j`
    ZDagger,
    /// `X̲ = z̲ − z̲†`
    X,
}

pub fn vector_var(kind: VectorKind, n: usize, has_z0: bool) -> Result<PolyFunction> {
    let dim = AlgebraDim::new(n, has_z0)?;
    let z = || -> Result<PolyFunction> {
        let mut acc = PolyFunction::zero(dim);
        for j in 1..=n {
            acc = acc.checked_add(&PolyFunction::monomial(
                dim,
                Monomial::var(Var::Z(j)),
                CliffordElement::witt(dim, j)?,
            )?)?;
        }
        Ok(acc)
    };
    let zd = || -> Result<PolyFunction> {
        let mut acc = PolyFunction::zero(dim);
        for j in 1..=n {
            acc = acc.checked_add(&PolyFunction::monomial(
                dim,
                Monomial::var(Var::ZBar(j)),
                CliffordElement::witt_dagger(dim, j)?,
            )?)?;
        }
        Ok(acc)
    };
    match kind {
        VectorKind::Z => z(),
        VectorKind::ZDagger => zd(),
        VectorKind::X => z()?.checked_sub(&zd()?),
    }
}
