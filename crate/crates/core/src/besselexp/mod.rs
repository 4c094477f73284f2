//! Exponential-type solutions. The Bessel factors `ν^{−n/2}J_n(2√(aν))` and
//! `ν^{−n/2}I_n(2√(−aν))`, `a = λμ`, both equal `|a|^{n/2} S_n(a; ν)` with the
//! entire series `S_n(a; ν) = Σ_k (−a)^k ν^k / (k!(k+n)!)`, so every function of
//! the solution is kept as an exact series times the common factor `|a|^{n/2}`.

mod numeric;

pub use numeric::{bessel_csv, bessel_series, BesselKind};

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, factorial, Rational};
use crate::vekua::{BetaPoly, NuSeries};

/// Coefficients of `S_order(a; ν)` for `ν⁰ … ν^M`.
pub fn bessel_coeffs(order: usize, a: &Rational, m: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut power = rational::int(1);
    let minus_a = -a;
    for k in 0..=u64::from(m) {
        out.push(&power / (factorial(k) * factorial(k + order as u64)));
        power *= &minus_a;
    }
    out
}

/// `S_n(a; ν)` truncated after `ν^M`, with `β`-polynomial coefficients over `n`.
pub fn scaled_bessel_nuseries(n: usize, a: &Rational, m: u32) -> NuSeries {
    NuSeries::from_scalars(n, &bessel_coeffs(n, a, m))
}

/// Series with the implicit factor `|λμ|^{half_power/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledSeries {
    pub series: NuSeries,
    pub m: u32,
    pub half_power: i64,
}

impl ScaledSeries {
    /// Dense coefficients of `ν⁰ … ν^M`.
    pub fn dense(&self) -> Vec<BetaPoly> {
        (0..=self.m).map(|k| self.series.coeff(&rational::int(i64::from(k)))).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PrefactorWire {
    base: String,
    half_power: i64,
}

#[derive(Serialize, Deserialize)]
struct ScaledWire {
    n: usize,
    #[serde(rename = "M")]
    m: u32,
    prefactor: PrefactorWire,
    coeffs: Vec<Vec<String>>,
}

const PREFACTOR_BASE: &str = "|λμ|";

impl Serialize for ScaledSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScaledWire {
            n: self.series.n(),
            m: self.m,
            prefactor: PrefactorWire { base: PREFACTOR_BASE.into(), half_power: self.half_power },
            coeffs: self.dense().iter().map(BetaPoly::to_wire).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ScaledSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = ScaledWire::deserialize(d)?;
        if w.prefactor.base != PREFACTOR_BASE {
            return Err(D::Error::custom(format!("unknown prefactor base '{}'", w.prefactor.base)));
        }
        if w.coeffs.len() != w.m as usize + 1 {
            return Err(D::Error::custom("expected M + 1 coefficients"));
        }
        let mut series = NuSeries::zero(w.n);
        for (k, c) in w.coeffs.iter().enumerate() {
            let c = BetaPoly::from_wire(w.n, c).map_err(D::Error::custom)?;
            series.add_term(rational::int(k as i64), c);
        }
        Ok(ScaledSeries { series, m: w.m, half_power: w.prefactor.half_power })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpParams {
    pub lambda: Rational,
    pub mu: Rational,
    pub n: usize,
    pub alpha1: Rational,
    pub alpha2: Rational,
}

impl ExpParams {
    pub fn lambda_mu(&self) -> Rational {
        &self.lambda * &self.mu
    }

    /// `J` for `λμ > 0`, `I` for `λμ < 0`.
    pub fn branch(&self) -> BesselKind {
        if self.lambda_mu().is_positive() {
            BesselKind::J
        } else {
            BesselKind::I
        }
    }

    fn validate(&self) -> Result<()> {
        if self.lambda.is_zero() || self.mu.is_zero() {
            return Err(Error::InvalidParameter("λ and μ must be nonzero".into()));
        }
        if self.n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        Ok(())
    }
}

/// The six functions of an exponential-type solution, each missing the common
/// factor `|λμ|^{n/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpSolution {
    #[serde(skip)]
    pub params: ExpParams,
    pub branch: BesselKind,
    pub a1: ScaledSeries,
    pub a2: ScaledSeries,
    pub b: ScaledSeries,
    pub c: ScaledSeries,
    pub d1: ScaledSeries,
    pub d2: ScaledSeries,
}

pub fn exp_solution(p: &ExpParams, m: u32) -> Result<ExpSolution> {
    p.validate()?;
    let n = p.n;
    let a = p.lambda_mu();
    let beta = BetaPoly::beta(n);
    let nb = &BetaPoly::constant(n, rational::int(n as i64)) - &beta;
    let s = scaled_bessel_nuseries(n, &a, m);
    let inv_l = rational::int(1) / &p.lambda;
    let inv_m = rational::int(1) / &p.mu;
    let b = s.scale(&p.alpha1);
    let c = s.scale(&p.alpha2);
    let a1 = c.mul_beta(&beta).scale(&inv_l);
    let a2 = c.derivative().scale(&inv_l);
    let d2 = &b.derivative().scale(&-&inv_m) - &a2;
    let d1 = &(&b.mul_beta(&nb).scale(&inv_m) - &a1) - &(&a2 + &d2).shift(&rational::int(1));
    let wrap = |series: NuSeries| ScaledSeries { series, m, half_power: n as i64 };
    Ok(ExpSolution {
        params: p.clone(),
        branch: p.branch(),
        a1: wrap(a1),
        a2: wrap(a2),
        b: wrap(b),
        c: wrap(c),
        d1: wrap(d1),
        d2: wrap(d2),
    })
}

/// `νx″ + (n+1)x′ + λμ x`
pub fn ode_residual(x: &NuSeries, n: usize, lambda_mu: &Rational) -> NuSeries {
    let d = x.derivative();
    &(&d.derivative().shift(&rational::int(1)) + &d.scale(&rational::int(n as i64 + 1))) + &x.scale(lambda_mu)
}

impl ExpSolution {
    /// Residuals of both three-equation systems, truncated to `ν^{M−1}`.
    pub fn system_residuals(&self) -> Vec<NuSeries> {
        let p = &self.params;
        let n = p.n;
        let beta = BetaPoly::beta(n);
        let nb = &BetaPoly::constant(n, rational::int(n as i64)) - &beta;
        let shifted = &beta - &BetaPoly::constant(n, rational::int(n as i64 + 1));
        let inv_l = rational::int(1) / &p.lambda;
        let inv_m = rational::int(1) / &p.mu;
        let one = rational::int(1);
        let (a1, a2, b, c, d1, d2) =
            (&self.a1.series, &self.a2.series, &self.b.series, &self.c.series, &self.d1.series, &self.d2.series);
        let ad2 = a2 + d2;
        let res = [
            a1 - &c.mul_beta(&beta).scale(&inv_l),
            a2 - &c.derivative().scale(&inv_l),
            &(&(&a1.derivative() + &a2.derivative().shift(&one)) + &c.scale(&p.mu)) - &a2.mul_beta(&shifted),
            &(&(&a1.derivative() + &d1.derivative()) + &b.scale(&p.lambda)) - &ad2.mul_beta(&beta),
            &(a1 + d1) - &(&b.mul_beta(&nb) + &b.derivative().shift(&one)).scale(&inv_m),
            &ad2 + &b.derivative().scale(&inv_m),
        ];
        let top = rational::int(i64::from(self.b.m) - 1);
        res.iter().map(|r| r.truncate(&top)).collect()
    }

    /// ODE residuals of `b` and `c`, truncated to `ν^{M−1}`.
    pub fn ode_residuals(&self) -> (NuSeries, NuSeries) {
        let a = self.params.lambda_mu();
        let top = rational::int(i64::from(self.b.m) - 1);
        (
            ode_residual(&self.b.series, self.params.n, &a).truncate(&top),
            ode_residual(&self.c.series, self.params.n, &a).truncate(&top),
        )
    }

    /// Series forms of the Bessel closed forms: `a₂ = −α₂(λμ/λ) S_{n+1}` and
    /// `d₂ = λμ(α₁/μ + α₂/λ) S_{n+1}`, both on the common factor `|λμ|^{n/2}`.
    pub fn closed_form_a2_d2(&self) -> (NuSeries, NuSeries) {
        let p = &self.params;
        let a = p.lambda_mu();
        let next = NuSeries::from_scalars(p.n, &bessel_coeffs(p.n + 1, &a, self.b.m.saturating_sub(1)));
        let a2 = next.scale(&(-(&p.alpha2 * &a) / &p.lambda));
        let d2 = next.scale(&(&a * (&p.alpha1 / &p.mu + &p.alpha2 / &p.lambda)));
        (a2, d2)
    }

    pub fn closed_forms_match(&self) -> bool {
        let (a2, d2) = self.closed_form_a2_d2();
        let top = rational::int(i64::from(self.b.m) - 1);
        a2 == self.a2.series.truncate(&top) && d2 == self.d2.series.truncate(&top)
    }
}

/// Coefficientwise comparison of `S_n′` with `−a S_{n+1}` up to `ν^{M−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivativeReport {
    pub n: usize,
    pub a: String,
    #[serde(rename = "M")]
    pub m: u32,
    pub matches: Vec<bool>,
}

impl DerivativeReport {
    pub fn all_match(&self) -> bool {
        self.matches.iter().all(|&b| b)
    }
}

pub fn bessel_derivative_identity_check(n: usize, a: &Rational, m: u32) -> DerivativeReport {
    let s = bessel_coeffs(n, a, m);
    let next = bessel_coeffs(n + 1, a, m);
    let matches = (0..m as usize)
        .map(|k| rational::int(k as i64 + 1) * &s[k + 1] == -a * &next[k])
        .collect();
    DerivativeReport { n, a: rational::to_string(a), m, matches }
}
