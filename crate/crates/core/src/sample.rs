//! Seeded random elements for randomized identity checks.

use rand::Rng;

use crate::clifford::{AlgebraDim, Blade, CliffordElement, GaussianRational};
use crate::polyfun::{Monomial, PolyFunction, Var};
use crate::rational;

/// Small Gaussian rational with numerators in `-4..=4` and denominators in `1..=3`.
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    let re = rational::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    let im = if rng.gen_bool(0.5) {
        rational::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
    } else {
        rational::int(0)
    };
    GaussianRational::new(re, im)
}

/// Element with at most `max_terms` random blades of the algebra.
pub fn clifford<R: Rng + ?Sized>(rng: &mut R, dim: AlgebraDim, max_terms: usize) -> CliffordElement {
    let count = rng.gen_range(1..=max_terms.max(1));
    let full = (1u64 << dim.m()) as u32;
    let terms: Vec<_> = (0..count)
        .map(|_| (Blade::from_bits(rng.gen_range(0..full)), gaussian(rng)))
        .collect();
    CliffordElement::from_terms(dim, terms).expect("blades drawn inside the algebra")
}

/// Element of `dim` whose blades avoid the `f₀` generators.
pub fn clifford_without_z0<R: Rng + ?Sized>(
    rng: &mut R,
    dim: AlgebraDim,
    max_terms: usize,
) -> CliffordElement {
    let plain = AlgebraDim { n: dim.n, with_z0: false };
    let x = clifford(rng, plain, max_terms);
    if dim.with_z0 {
        x.embed()
    } else {
        x
    }
}

fn monomial<R: Rng + ?Sized>(rng: &mut R, dim: AlgebraDim, max_degree: u32, z0: bool) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let lo = if z0 && dim.with_z0 { 0 } else { 1 };
    let exps: Vec<(Var, u32)> = (0..degree)
        .map(|_| {
            let j = rng.gen_range(lo..=dim.n);
            let v = if rng.gen_bool(0.5) { Var::Z(j) } else { Var::ZBar(j) };
            (v, 1)
        })
        .collect();
    Monomial::from_exponents(exps)
}

/// Random polynomial of total degree at most `max_degree` with up to
/// `max_terms` monomials, each carrying up to `coeff_terms` blades. Uses
/// `z₀, z̄₀` when the algebra has them.
pub fn poly<R: Rng + ?Sized>(
    rng: &mut R,
    dim: AlgebraDim,
    max_degree: u32,
    max_terms: usize,
    coeff_terms: usize,
) -> PolyFunction {
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<_> = (0..count)
        .map(|_| (monomial(rng, dim, max_degree, true), clifford(rng, dim, coeff_terms)))
        .collect();
    PolyFunction::from_terms(dim, terms).expect("terms drawn inside the algebra")
}

/// Random polynomial in `z_j, z̄_j` only, coefficients in `C_{2n}`.
pub fn initial_data<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_terms: usize,
    coeff_terms: usize,
) -> PolyFunction {
    let dim = AlgebraDim::plain(n);
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<_> = (0..count)
        .map(|_| (monomial(rng, dim, max_degree, false), clifford(rng, dim, coeff_terms)))
        .collect();
    PolyFunction::from_terms(dim, terms).expect("terms drawn inside the algebra")
}
