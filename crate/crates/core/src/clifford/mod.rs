//! Exact arithmetic in the complex Clifford algebras `C_{2n}` and `C_{2n+2}`:
//! blades, conjugations, the Witt basis and the fermionic Euler element β.
//!
//! Generators satisfy `e_j² = −1` and anticommute. The Witt basis is
//! `f_j = ½(e_j − i e_{n+j})`, `f_j† = −½(e_j + i e_{n+j})`; in `C_{2n+2}` the
//! extra pair `f₀, f₀†` sits on `e_{2n+1}, e_{2n+2}`.

mod blade;
mod element;
mod scalar;

pub use blade::{blade_mul, Blade, MAX_GENERATORS};
pub use element::{AlgebraDim, CliffordElement, CliffordWire, TermWire};
pub use scalar::{GaussianRational, GaussianWire};

/// `β(β − 1)⋯(β − n)`, which vanishes in `C_{2n}`.
pub fn beta_characteristic(dim: AlgebraDim) -> CliffordElement {
    let beta = CliffordElement::beta(dim);
    let mut acc = beta.clone();
    for l in 1..=dim.n as i64 {
        let shifted = &beta - &CliffordElement::scalar(dim, GaussianRational::from_int(l));
        acc = &acc * &shifted;
    }
    acc
}

/// `f†_{a1} ⋯ f†_{aℓ}` for increasing Witt indices in `1..=n`.
pub fn dagger_product(dim: AlgebraDim, indices: &[usize]) -> crate::Result<CliffordElement> {
    let mut acc = CliffordElement::one(dim);
    for &j in indices {
        if j == 0 {
            return Err(crate::Error::IndexOutOfRange("ℓ-vectors use indices 1..=n".into()));
        }
        acc = acc.checked_mul(&CliffordElement::witt_dagger(dim, j)?)?;
    }
    Ok(acc)
}
