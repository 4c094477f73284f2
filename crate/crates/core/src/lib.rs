//! Exact constructions for the Hermitian submonogenic system of complex
//! Clifford analysis.
//!
//! * [`clifford`]: Gaussian-rational Clifford algebras `C_{2n}`, `C_{2n+2}`, Witt basis, β.
//! * [`polyfun`]: Clifford-valued polynomials (optionally Gaussian-weighted) and
//!   the Hermitian Dirac operators.
//! * [`ck`]: decomposition `f = A + f₀B + f₀†C + f₀†f₀D`, residuals of the
//!   related systems, and Cauchy–Kowalevski extension solvers.
//! * [`hermite`]: Laguerre polynomials and Hermitian Clifford–Hermite polynomials.
//! * [`vekua`]: axial solutions, generalized powers and the β quotient ring.
//! * [`besselexp`]: exponential-type solutions built on Bessel series.

pub mod besselexp;
pub mod ck;
pub mod clifford;
mod error;
pub mod hermite;
pub mod polyfun;
pub mod rational;
pub mod sample;
pub mod vekua;

pub use error::{Error, Result};

/// Largest truncation order accepted by the solvers: `HCLIF_MAX_K`, default 32.
pub fn max_order() -> usize {
    std::env::var("HCLIF_MAX_K")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(32)
}

pub(crate) fn check_order(k: usize) -> Result<()> {
    let limit = max_order();
    if k > limit {
        return Err(Error::InvalidParameter(format!(
            "truncation order K = {k} exceeds the limit {limit} (HCLIF_MAX_K)"
        )));
    }
    Ok(())
}
