//! Hermitian Clifford–Hermite polynomials, Laguerre polynomials and the
//! Gaussian-data coefficients of the series solutions.

mod laguerre;

pub use laguerre::{laguerre, LaguerrePoly};

use serde::{Deserialize, Serialize};

use crate::ck::Quad;
use crate::clifford::{AlgebraDim, CliffordElement, GaussianRational};
use crate::error::{Error, Result};
use crate::polyfun::{dirac_z, dirac_zdagger, laplacian, vector_var, PolyFunction, VectorKind, Weight};
use crate::rational::{self, factorial, Rational};

/// `H^{(1)}_{2p+1}, H^{(2)}_{2p+1}, H^{(3)}_{2p+2}, H^{(4)}_{2p+2}` as unweighted polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitePoly {
    pub type_id: u8,
    pub p: u32,
    pub n: usize,
    pub value: PolyFunction,
}

impl HermitePoly {
    /// Total degree `2p + 1` for types 1, 2 and `2p + 2` for types 3, 4.
    pub fn expected_degree(&self) -> u32 {
        if self.type_id <= 2 {
            2 * self.p + 1
        } else {
            2 * self.p + 2
        }
    }
}

/// How `β` enters closed forms: as the Clifford element `Σ f_j† f_j`, or
/// replaced by one of its eigenvalues `ℓ ∈ {0, …, n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetaMode {
    #[default]
    Element,
    Eigenvalue(u32),
}

fn check_type(type_id: u8) -> Result<()> {
    if (1..=4).contains(&type_id) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("Hermite type must be 1..=4, got {type_id}")))
    }
}

/// Defining formula: `H e^w = D Δ^p e^w` with `D` one of `∂_z̲†, ∂_z̲, ∂_z̲∂_z̲†, ∂_z̲†∂_z̲`.
pub fn hermite_rodrigues(type_id: u8, p: u32, n: usize) -> Result<HermitePoly> {
    check_type(type_id)?;
    let dim = AlgebraDim::new(n, false)?;
    let mut g = PolyFunction::gaussian(dim);
    for _ in 0..p {
        g = laplacian(&g);
    }
    let h = match type_id {
        1 => dirac_zdagger(&g),
        2 => dirac_z(&g),
        3 => dirac_z(&dirac_zdagger(&g)),
        _ => dirac_zdagger(&dirac_z(&g)),
    };
    Ok(HermitePoly { type_id, p, n, value: h.strip_weight() })
}

/// Building blocks of the closed forms over `C_{2n}`.
struct Blocks {
    dim: AlgebraDim,
    z: PolyFunction,
    zd: PolyFunction,
    beta: CliffordElement,
    half_modulus: PolyFunction,
}

impl Blocks {
    fn new(n: usize, mode: BetaMode) -> Result<Self> {
        let dim = AlgebraDim::new(n, false)?;
        let beta = match mode {
            BetaMode::Element => CliffordElement::beta(dim),
            BetaMode::Eigenvalue(l) => {
                if l as usize > n {
                    return Err(Error::InvalidParameter(format!("β eigenvalue {l} exceeds n = {n}")));
                }
                CliffordElement::scalar(dim, GaussianRational::from_int(i64::from(l)))
            }
        };
        Ok(Blocks {
            dim,
            z: vector_var(VectorKind::Z, n, false)?,
            zd: vector_var(VectorKind::ZDagger, n, false)?,
            beta,
            half_modulus: PolyFunction::modulus_sq(dim).scale_rational(&rational::frac(1, 2)),
        })
    }

    fn n_int(&self) -> i64 {
        self.dim.n as i64
    }

    /// `L_p^{(α)}(|z̲|²/2)` as a scalar polynomial.
    fn laguerre(&self, p: u32, alpha: i64) -> PolyFunction {
        let l = laguerre(p, alpha);
        let mut acc = PolyFunction::zero(self.dim);
        let mut power = PolyFunction::one(self.dim);
        for c in &l.coeffs {
            acc = &acc + &power.scale_rational(c);
            power = &power * &self.half_modulus;
        }
        acc
    }

    /// `z̲ L_p^n`
    fn z_l(&self, p: u32) -> PolyFunction {
        &self.z * &self.laguerre(p, self.n_int())
    }

    /// `z̲† L_p^n`
    fn zd_l(&self, p: u32) -> PolyFunction {
        &self.zd * &self.laguerre(p, self.n_int())
    }

    /// `β L_p^n − ½ z̲†z̲ L_p^{n+1}`
    fn third(&self, p: u32) -> PolyFunction {
        let a = self.laguerre(p, self.n_int()).left_mul(&self.beta).expect("same algebra");
        let b = &(&self.zd * &self.z) * &self.laguerre(p, self.n_int() + 1);
        &a - &b.scale_rational(&rational::frac(1, 2))
    }

    /// `(n − β) L_p^n − ½ z̲z̲† L_p^{n+1}`
    fn fourth(&self, p: u32) -> PolyFunction {
        let nb = &CliffordElement::scalar(self.dim, GaussianRational::from_int(self.n_int())) - &self.beta;
        let a = self.laguerre(p, self.n_int()).left_mul(&nb).expect("same algebra");
        let b = &(&self.z * &self.zd) * &self.laguerre(p, self.n_int() + 1);
        &a - &b.scale_rational(&rational::frac(1, 2))
    }
}

fn pow2(e: i64) -> Rational {
    rational::powi(&rational::int(2), e)
}

fn fact(k: u32) -> Rational {
    factorial(u64::from(k))
}

/// Laguerre-form expressions `(−1)^{p−1} 2^{p−1} p! · (…)`.
pub fn hermite_closed_form(type_id: u8, p: u32, n: usize, mode: BetaMode) -> Result<HermitePoly> {
    check_type(type_id)?;
    let b = Blocks::new(n, mode)?;
    let pref = rational::sign(u64::from(p) + 1) * pow2(i64::from(p) - 1) * fact(p);
    let body = match type_id {
        1 => b.z_l(p),
        2 => b.zd_l(p),
        3 => b.third(p),
        _ => b.fourth(p),
    };
    Ok(HermitePoly { type_id, p, n, value: body.scale_rational(&pref) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    A,
    B,
    C,
    D,
}

fn weighted(p: PolyFunction) -> PolyFunction {
    p.with_weight(Weight::Gaussian)
}

/// One coefficient of the Class I solution with `A₀ = e^w`, `D₀ = 0`, in Laguerre form.
/// The forms for `A_k`, `D_k` start at `k = 1`.
pub fn gaussian_ck_coefficient(part: Part, k: u32, n: usize) -> Result<PolyFunction> {
    let b = Blocks::new(n, BetaMode::Element)?;
    let ki = i64::from(k);
    let value = match part {
        Part::B => b.zd_l(k).scale_rational(&(pow2(-ki - 1) / fact(k + 1))),
        Part::C => b.z_l(k).scale_rational(&(pow2(-ki - 1) / fact(k + 1))),
        Part::A | Part::D if k == 0 => {
            return Err(Error::InvalidParameter("the A_k, D_k forms need k ≥ 1".into()));
        }
        Part::A => b.third(k - 1).scale_rational(&(pow2(-ki) / (fact(k) * rational::int(ki)))),
        Part::D => {
            let two_beta_k = &b.beta.scale(&GaussianRational::from_int(2))
                + &CliffordElement::scalar(b.dim, GaussianRational::from_int(ki));
            let body = &(&b.laguerre(k, b.n_int()).scale_rational(&rational::int(ki))
                - &b.laguerre(k - 1, b.n_int()).left_mul(&two_beta_k)?)
                + &(&(&b.zd * &b.z) * &b.laguerre(k - 1, b.n_int() + 1));
            body.scale_rational(&(pow2(-ki) / (fact(k) * rational::int(ki))))
        }
    };
    Ok(weighted(value))
}

/// All four Class I coefficients at index `k`; at `k = 0` these are the initial data.
pub fn gaussian_ck_coefficients(k: u32, n: usize) -> Result<Quad> {
    let dim = AlgebraDim::new(n, false)?;
    let (a, d) = if k == 0 {
        (PolyFunction::gaussian(dim), PolyFunction::zero(dim))
    } else {
        (gaussian_ck_coefficient(Part::A, k, n)?, gaussian_ck_coefficient(Part::D, k, n)?)
    };
    Ok(Quad { a, b: gaussian_ck_coefficient(Part::B, k, n)?, c: gaussian_ck_coefficient(Part::C, k, n)?, d })
}

fn check_s(s: u32) -> Result<()> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    Ok(())
}

/// Class II coefficients for `C₀ = D₀ = e^w` in Laguerre form.
pub fn gaussian_class2(k: u32, s: u32, n: usize) -> Result<Quad> {
    check_s(s)?;
    let b = Blocks::new(n, BetaMode::Element)?;
    let ki = i64::from(k);
    let base = fact(s - 1) / fact(s + k);
    let a = b.zd_l(k).scale_rational(&(-pow2(-ki - 1) * &base));
    let bb = b.zd_l(k).scale_rational(&(pow2(-ki - 1) * fact(s) / fact(s + 1 + k)));
    let (c, d) = if k == 0 {
        (PolyFunction::one(b.dim), PolyFunction::one(b.dim))
    } else {
        let c = b.fourth(k - 1).scale_rational(&(pow2(-ki) * fact(s - 1) / (rational::int(ki) * fact(s + k - 1))));
        let inner = &b.fourth(k - 1).scale_rational(&rational::frac(2 * i64::from(s), ki)) + &b.zd_l(k);
        (c, inner.scale_rational(&(pow2(-ki - 1) * &base)))
    };
    Ok(Quad { a: weighted(a), b: weighted(bb), c: weighted(c), d: weighted(d) })
}

/// Class III coefficients for `A₀ = B₀ = e^w` in Laguerre form, including
/// `D₀ = −e^w (z̲/(2s) + 1)`.
pub fn gaussian_class3(k: u32, s: u32, n: usize) -> Result<Quad> {
    check_s(s)?;
    let b = Blocks::new(n, BetaMode::Element)?;
    let ki = i64::from(k);
    let c = b.z_l(k).scale_rational(&(pow2(-ki - 1) * fact(s) / fact(s + k + 1)));
    let (a, bb, d) = if k == 0 {
        let d = &b.z.scale_rational(&rational::frac(-1, 2 * i64::from(s))) - &PolyFunction::one(b.dim);
        (PolyFunction::one(b.dim), PolyFunction::one(b.dim), d)
    } else {
        let a = b.third(k - 1).scale_rational(&(pow2(-ki) * fact(s) / (rational::int(ki) * fact(s + k))));
        let bb = b.third(k - 1).scale_rational(&(pow2(-ki) * fact(s - 1) / (rational::int(ki) * fact(s + k - 1))));
        let inner = &b.z_l(k) + &b.third(k - 1).scale_rational(&rational::frac(2 * i64::from(s), ki));
        (a, bb, inner.scale_rational(&(-pow2(-ki - 1) * fact(s - 1) / fact(s + k))))
    };
    Ok(Quad { a: weighted(a), b: weighted(bb), c: weighted(c), d: weighted(d) })
}
