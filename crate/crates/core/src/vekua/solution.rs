use serde::{Deserialize, Serialize};

use super::beta::BetaPoly;
use super::series::{NuSeries, SeriesTermWire};
use crate::ck::compose_parts;
use crate::check_order;
use crate::clifford::AlgebraDim;
use crate::error::{Error, Result};
use crate::polyfun::{vector_var, Monomial, PolyFunction, Var, VectorKind};
use crate::rational::{self, Rational};

/// Which `z₀`-prefactors multiply the axial ansatz.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxialKind {
    /// `A = a₁ + z̲†z̲a₂`, `B = z₀z̲†b`, `C = z̄₀z̲c`, `D = d₁ + z̲†z̲d₂`
    Plain,
    /// extra factors `z₀ˢ, z₀ˢ⁺¹, z₀ˢ⁻¹, z₀ˢ` on `A, B, C, D`
    Z0Power,
    /// extra factors `z̄₀ˢ, z̄₀ˢ⁻¹, z̄₀ˢ⁺¹, z̄₀ˢ` on `A, B, C, D`
    Z0barPower,
}

/// Six tables indexed by the `ν₀`-power `k ≤ K` of `ν`-series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxialSolution {
    pub kind: AxialKind,
    /// Prefactor exponent for the two `z₀`-power kinds; the generalized power
    /// exponent for plain solutions built from powers of `ν`.
    pub s: Option<Rational>,
    pub order: usize,
    pub m: Rational,
    pub n: usize,
    pub terminated: bool,
    pub a1: Vec<NuSeries>,
    pub a2: Vec<NuSeries>,
    pub b: Vec<NuSeries>,
    pub c: Vec<NuSeries>,
    pub d1: Vec<NuSeries>,
    pub d2: Vec<NuSeries>,
}

/// Initial data `a₁(0,ν), a₂(0,ν), d₁(0,ν), d₂(0,ν)` of the plain system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainData {
    pub a1: NuSeries,
    pub a2: NuSeries,
    pub d1: NuSeries,
    pub d2: NuSeries,
}

/// Initial data `c(0,ν), d₁(0,ν), d₂(0,ν)` for the `z₀ˢ` kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z0Data {
    pub c: NuSeries,
    pub d1: NuSeries,
    pub d2: NuSeries,
}

/// Initial data `a₁(0,ν), a₂(0,ν), b(0,ν)` for the `z̄₀ˢ` kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z0barData {
    pub a1: NuSeries,
    pub a2: NuSeries,
    pub b: NuSeries,
}

fn q(num: i64, den: i64) -> Rational {
    rational::frac(num, den)
}

fn int(v: i64) -> Rational {
    rational::int(v)
}

/// `(n + 1)x′ + νx″`
fn radial(x: &NuSeries, n: usize) -> NuSeries {
    let d = x.derivative();
    &d.scale(&int(n as i64 + 1)) + &d.derivative().shift(&int(1))
}

fn check_n(n: usize, series: &[&NuSeries]) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if series.iter().any(|s| s.n() != n) {
        return Err(Error::DimensionMismatch(format!("initial series must be over n = {n}")));
    }
    Ok(())
}

struct Tables {
    a1: Vec<NuSeries>,
    a2: Vec<NuSeries>,
    b: Vec<NuSeries>,
    c: Vec<NuSeries>,
    d1: Vec<NuSeries>,
    d2: Vec<NuSeries>,
}

impl Tables {
    fn with_capacity(k: usize) -> Self {
        Tables {
            a1: Vec::with_capacity(k),
            a2: Vec::with_capacity(k),
            b: Vec::with_capacity(k),
            c: Vec::with_capacity(k),
            d1: Vec::with_capacity(k),
            d2: Vec::with_capacity(k),
        }
    }

    /// Splits off the level `K + 1` (computed only to detect termination) and truncates in `ν`.
    fn finish(mut self, kind: AxialKind, s: Option<Rational>, order: usize, m: Rational, n: usize) -> AxialSolution {
        let all = [&mut self.a1, &mut self.a2, &mut self.b, &mut self.c, &mut self.d1, &mut self.d2];
        let mut terminated = true;
        for t in all {
            if let Some(last) = t.pop() {
                terminated &= last.is_zero();
            }
            for x in t.iter_mut() {
                *x = x.truncate(&m);
            }
        }
        AxialSolution {
            kind,
            s,
            order,
            m,
            n,
            terminated,
            a1: self.a1,
            a2: self.a2,
            b: self.b,
            c: self.c,
            d1: self.d1,
            d2: self.d2,
        }
    }
}

/// Power-series solution of the plain Hermitian Vekua systems.
pub fn vekua_solve_plain(n: usize, data: &PlainData, order: usize, m: &Rational) -> Result<AxialSolution> {
    check_n(n, &[&data.a1, &data.a2, &data.d1, &data.d2])?;
    check_order(order)?;
    let beta = BetaPoly::beta(n);
    let nb = &BetaPoly::constant(n, int(n as i64)) - &beta;
    let (a01, a02, d01, d02) = (data.a1.truncate(m), data.a2.truncate(m), data.d1.truncate(m), data.d2.truncate(m));
    let c0 = &(&a02.mul_beta(&(&beta - &BetaPoly::constant(n, int(n as i64 + 1)))) - &a01.derivative())
        - &a02.derivative().shift(&int(1));
    let b0 = &(&(&a02 + &d02).mul_beta(&beta) - &a01.derivative()) - &d01.derivative();
    let mut t = Tables::with_capacity(order + 2);
    t.a1.push(a01);
    t.a2.push(a02);
    t.d1.push(d01);
    t.d2.push(d02);
    t.c.push(c0);
    t.b.push(b0);
    for k in 1..=order + 1 {
        let ki = k as i64;
        let (cp, bp) = (t.c[k - 1].clone(), t.b[k - 1].clone());
        t.c.push(radial(&cp, n).scale(&q(-1, ki * (ki + 1))));
        t.b.push(radial(&bp, n).scale(&q(-1, ki * (ki + 1))));
        t.a1.push(cp.mul_beta(&beta).scale(&q(1, ki)));
        t.a2.push(cp.derivative().scale(&q(1, ki)));
        let d1 = &(&bp.mul_beta(&nb) + &bp.derivative().shift(&int(1))) - &cp.mul_beta(&beta);
        t.d1.push(d1.scale(&q(1, ki)));
        t.d2.push((&bp.derivative() + &cp.derivative()).scale(&q(-1, ki)));
    }
    Ok(t.finish(AxialKind::Plain, None, order, m.clone(), n))
}

/// `Π_{ℓ=1}^k (s − ℓ)(n + s − ℓ) / ((k+1)(k!)²)` with sign `(−1)^k`.
fn power_weight(s: &Rational, n: usize, k: usize) -> Rational {
    let mut acc = rational::sign(k as u64) / (int(k as i64 + 1) * rational::factorial(k as u64).pow(2));
    for l in 1..=k as i64 {
        acc *= (s - int(l)) * (s + int(n as i64 - l));
    }
    acc
}

/// Coefficients `α(k)` (for `b_k`) and `δ(k)` (for `c_k`) of the generalized powers.
pub fn power_coefficients(
    s: &Rational,
    n: usize,
    alphas: (&Rational, &Rational),
    deltas: (&Rational, &Rational),
    k: usize,
) -> (BetaPoly, BetaPoly) {
    let (a1, a2) = alphas;
    let (d1, d2) = deltas;
    let w = power_weight(s, n, k);
    let alpha = BetaPoly::linear(n, -(a1 + d1) * s, a2 + d2).scale(&w);
    let delta = BetaPoly::linear(n, -(int(n as i64) + s) * a2 - a1 * s, a2.clone()).scale(&w);
    (alpha, delta)
}

/// Initial data `α₁νˢ, α₂νˢ⁻¹, δ₁νˢ, δ₂νˢ⁻¹` of the generalized powers.
pub fn power_data(s: &Rational, n: usize, alphas: (&Rational, &Rational), deltas: (&Rational, &Rational)) -> PlainData {
    let s1 = s - int(1);
    PlainData {
        a1: NuSeries::scalar_power(n, alphas.0.clone(), s.clone()),
        a2: NuSeries::scalar_power(n, alphas.1.clone(), s1.clone()),
        d1: NuSeries::scalar_power(n, deltas.0.clone(), s.clone()),
        d2: NuSeries::scalar_power(n, deltas.1.clone(), s1),
    }
}

/// Hermitian generalized powers from the closed-form coefficients `α(k)`, `δ(k)`.
pub fn generalized_powers(
    s: &Rational,
    n: usize,
    alphas: (&Rational, &Rational),
    deltas: (&Rational, &Rational),
    order: usize,
) -> Result<AxialSolution> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    check_order(order)?;
    let beta = BetaPoly::beta(n);
    let data = power_data(s, n, alphas, deltas);
    let mut t = Tables::with_capacity(order + 2);
    let mut coeffs = Vec::with_capacity(order + 2);
    for k in 0..=order + 1 {
        let (alpha, delta) = power_coefficients(s, n, alphas, deltas, k);
        let e = s - int(k as i64 + 1);
        t.b.push(NuSeries::monomial(e.clone(), alpha.clone()));
        t.c.push(NuSeries::monomial(e, delta.clone()));
        if k == 0 {
            t.a1.push(data.a1.clone());
            t.a2.push(data.a2.clone());
            t.d1.push(data.d1.clone());
            t.d2.push(data.d2.clone());
        } else {
            let (ap, dp): &(BetaPoly, BetaPoly) = &coeffs[k - 1];
            let ki = int(k as i64);
            let sk = s - &ki;
            let e1 = sk.clone();
            let e2 = &sk - int(1);
            t.a1.push(NuSeries::monomial(e1.clone(), (&beta * dp).scale(&(int(1) / &ki))));
            t.a2.push(NuSeries::monomial(e2.clone(), dp.scale(&(&sk / &ki))));
            let lead = &BetaPoly::constant(n, int(n as i64) + &sk) - &beta;
            let d1 = &(&lead * ap) - &(&beta * dp);
            t.d1.push(NuSeries::monomial(e1, d1.scale(&(int(1) / &ki))));
            t.d2.push(NuSeries::monomial(e2, (ap + dp).scale(&(-&sk / &ki))));
        }
        coeffs.push((alpha, delta));
    }
    let m = t
        .a1
        .iter()
        .chain(&t.a2)
        .chain(&t.b)
        .chain(&t.c)
        .chain(&t.d1)
        .chain(&t.d2)
        .filter_map(|x| x.max_exponent().cloned())
        .max()
        .unwrap_or_else(|| int(0));
    let m = m.max(s.clone());
    Ok(t.finish(AxialKind::Plain, Some(s.clone()), order, m, n))
}

fn check_s(s: u32) -> Result<()> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    Ok(())
}

/// Axial solutions with the `z₀ˢ` prefactors.
pub fn vekua_solve_z0power(n: usize, data: &Z0Data, s: u32, order: usize, m: &Rational) -> Result<AxialSolution> {
    check_s(s)?;
    check_n(n, &[&data.c, &data.d1, &data.d2])?;
    check_order(order)?;
    let si = i64::from(s);
    let beta = BetaPoly::beta(n);
    let nb = &BetaPoly::constant(n, int(n as i64)) - &beta;
    let mut t = Tables::with_capacity(order + 2);
    let (c0, d01, d02) = (data.c.truncate(m), data.d1.truncate(m), data.d2.truncate(m));
    let b0 = (&d02.mul_beta(&beta) - &d01.derivative()).scale(&q(1, si + 1));
    t.a1.push(c0.mul_beta(&beta).scale(&q(1, si)));
    t.a2.push(c0.derivative().scale(&q(1, si)));
    t.c.push(c0);
    t.b.push(b0);
    t.d1.push(d01);
    t.d2.push(d02);
    for k in 1..=order + 1 {
        let ki = k as i64;
        let (cp, bp) = (t.c[k - 1].clone(), t.b[k - 1].clone());
        let ck = radial(&cp, n).scale(&q(-1, ki * (ki + si - 1)));
        let bk = radial(&bp, n).scale(&q(-1, ki * (ki + si + 1)));
        let a1 = ck.mul_beta(&beta).scale(&q(1, ki + si));
        let a2 = ck.derivative().scale(&q(1, ki + si));
        let d1 = &(&bp.mul_beta(&nb) + &bp.derivative().shift(&int(1))).scale(&q(1, ki)) - &a1;
        let d2 = &bp.derivative().scale(&q(-1, ki)) - &a2;
        t.c.push(ck);
        t.b.push(bk);
        t.a1.push(a1);
        t.a2.push(a2);
        t.d1.push(d1);
        t.d2.push(d2);
    }
    Ok(t.finish(AxialKind::Z0Power, Some(int(si)), order, m.clone(), n))
}

/// Axial solutions with the `z̄₀ˢ` prefactors.
pub fn vekua_solve_z0barpower(n: usize, data: &Z0barData, s: u32, order: usize, m: &Rational) -> Result<AxialSolution> {
    check_s(s)?;
    check_n(n, &[&data.a1, &data.a2, &data.b])?;
    check_order(order)?;
    let si = i64::from(s);
    let beta = BetaPoly::beta(n);
    let nb = &BetaPoly::constant(n, int(n as i64)) - &beta;
    let shifted = &beta - &BetaPoly::constant(n, int(n as i64 + 1));
    let mut t = Tables::with_capacity(order + 2);
    let (a01, a02, b0) = (data.a1.truncate(m), data.a2.truncate(m), data.b.truncate(m));
    let c0 = (&(&a02.mul_beta(&shifted) - &a01.derivative()) - &a02.derivative().shift(&int(1))).scale(&q(1, si + 1));
    t.c.push(c0);
    t.a1.push(a01);
    t.a2.push(a02);
    t.b.push(b0);
    for k in 1..=order + 1 {
        let ki = k as i64;
        let (cp, bp) = (t.c[k - 1].clone(), t.b[k - 1].clone());
        t.c.push(radial(&cp, n).scale(&q(-1, ki * (ki + si + 1))));
        t.b.push(radial(&bp, n).scale(&q(-1, ki * (ki + si - 1))));
        t.a1.push(cp.mul_beta(&beta).scale(&q(1, ki)));
        t.a2.push(cp.derivative().scale(&q(1, ki)));
    }
    for k in 0..=order + 1 {
        let ki = k as i64;
        let bk = &t.b[k];
        let d1 = &(&bk.mul_beta(&nb) + &bk.derivative().shift(&int(1))).scale(&q(1, ki + si)) - &t.a1[k];
        let d2 = &bk.derivative().scale(&q(-1, ki + si)) - &t.a2[k];
        t.d1.push(d1);
        t.d2.push(d2);
    }
    Ok(t.finish(AxialKind::Z0barPower, Some(int(si)), order, m.clone(), n))
}

impl AxialSolution {
    pub fn is_zero(&self) -> bool {
        self.tables().iter().all(|t| t.iter().all(NuSeries::is_zero))
    }

    fn tables(&self) -> [&Vec<NuSeries>; 6] {
        [&self.a1, &self.a2, &self.b, &self.c, &self.d1, &self.d2]
    }

    fn prefactor(&self) -> Result<u32> {
        match self.kind {
            AxialKind::Plain => Ok(0),
            _ => {
                let s = self.s.as_ref().ok_or_else(|| Error::InvalidParameter("missing s".into()))?;
                rational::as_natural(s)
                    .and_then(|v| u32::try_from(v).ok())
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| Error::InvalidParameter("s must be a positive integer".into()))
            }
        }
    }

    /// Residuals of the Vekua system matching `kind`, collected coefficientwise in `ν₀`.
    /// Equations that would need index `K + 1` are skipped.
    pub fn residuals(&self) -> Result<Vec<NuSeries>> {
        let n = self.n;
        let s = self.prefactor()? as i64;
        let beta = BetaPoly::beta(n);
        let nb = &BetaPoly::constant(n, int(n as i64)) - &beta;
        let shifted = &beta - &BetaPoly::constant(n, int(n as i64 + 1));
        let nu = int(1);
        let kk = self.order;
        let mut out = Vec::new();
        let ad1: Vec<NuSeries> = self.a1.iter().zip(&self.d1).map(|(a, d)| a + d).collect();
        let ad2: Vec<NuSeries> = self.a2.iter().zip(&self.d2).map(|(a, d)| a + d).collect();
        for k in 0..=kk {
            let kf = int(k as i64);
            let (a1, a2, b, c) = (&self.a1[k], &self.a2[k], &self.b[k], &self.c[k]);
            let next = k < kk;
            let third = &(&a1.derivative() + &a2.derivative().shift(&nu)) - &a2.mul_beta(&shifted);
            let first2 = &ad1[k].derivative() - &ad2[k].mul_beta(&beta);
            match self.kind {
                AxialKind::Plain => {
                    if next {
                        let kn = int(k as i64 + 1);
                        out.push(&self.a1[k + 1].scale(&kn) - &c.mul_beta(&beta));
                        out.push(&self.a2[k + 1].scale(&kn) - &c.derivative());
                        out.push(&(&ad1[k + 1].scale(&kn) - &b.derivative().shift(&nu)) - &b.mul_beta(&nb));
                        out.push(&ad2[k + 1].scale(&kn) + &b.derivative());
                    }
                    out.push(&third + &c.scale(&(&kf + int(1))));
                    out.push(&first2 + &b.scale(&(&kf + int(1))));
                }
                AxialKind::Z0Power => {
                    let ks = &kf + int(s);
                    out.push(&a1.scale(&ks) - &c.mul_beta(&beta));
                    out.push(&a2.scale(&ks) - &c.derivative());
                    if next {
                        let kn = int(k as i64 + 1);
                        out.push(&third + &self.c[k + 1].scale(&kn));
                        out.push(&(&ad1[k + 1].scale(&kn) - &b.derivative().shift(&nu)) - &b.mul_beta(&nb));
                        out.push(&ad2[k + 1].scale(&kn) + &b.derivative());
                    }
                    out.push(&first2 + &b.scale(&(&kf + int(s + 1))));
                }
                AxialKind::Z0barPower => {
                    if next {
                        let kn = int(k as i64 + 1);
                        out.push(&self.a1[k + 1].scale(&kn) - &c.mul_beta(&beta));
                        out.push(&self.a2[k + 1].scale(&kn) - &c.derivative());
                        out.push(&first2 + &self.b[k + 1].scale(&kn));
                    }
                    out.push(&third + &c.scale(&(&kf + int(s + 1))));
                    let ks = &kf + int(s);
                    out.push(&(&ad1[k].scale(&ks) - &b.derivative().shift(&nu)) - &b.mul_beta(&nb));
                    out.push(&ad2[k].scale(&ks) + &b.derivative());
                }
            }
        }
        Ok(out)
    }

    pub fn residuals_vanish(&self) -> Result<bool> {
        Ok(self.residuals()?.iter().all(NuSeries::is_zero))
    }

    /// Rebuilds `f = A + f₀B + f₀†C + f₀†f₀D` over `C_{2n+2}`.
    pub fn expand(&self) -> Result<PolyFunction> {
        if !self.terminated {
            return Err(Error::NonTerminating("axial solution does not terminate within K".into()));
        }
        if !self.tables().iter().all(|t| t.iter().all(NuSeries::is_polynomial)) {
            return Err(Error::NonTerminating("axial solution has non-polynomial ν-powers".into()));
        }
        let s = self.prefactor()? as usize;
        let dim = AlgebraDim::extended(self.n);
        let z = vector_var(VectorKind::Z, self.n, true)?;
        let zd = vector_var(VectorKind::ZDagger, self.n, true)?;
        let zdz = &zd * &z;
        let nu = PolyFunction::modulus_sq(dim);
        let nu0 = PolyFunction::z0_modulus_sq(dim)?;
        let series = |t: &[NuSeries]| -> Result<PolyFunction> {
            let mut acc = PolyFunction::zero(dim);
            let mut nu0k = PolyFunction::one(dim);
            for x in t {
                acc = &acc + &(&nu0k * &series_to_poly(x, &nu, dim)?);
                nu0k = &nu0k * &nu0;
            }
            Ok(acc)
        };
        let pre = |p: usize, q: usize| {
            Monomial::from_exponents([(Var::Z(0), p as u32), (Var::ZBar(0), q as u32)])
        };
        let (pa, pb, pc) = match self.kind {
            AxialKind::Plain => (pre(0, 0), pre(1, 0), pre(0, 1)),
            AxialKind::Z0Power => (pre(s, 0), pre(s + 1, 0), pre(s - 1, 0)),
            AxialKind::Z0barPower => (pre(0, s), pre(0, s - 1), pre(0, s + 1)),
        };
        let a = (&series(&self.a1)? + &(&zdz * &series(&self.a2)?)).mul_monomial(&pa);
        let b = (&zd * &series(&self.b)?).mul_monomial(&pb);
        let c = (&z * &series(&self.c)?).mul_monomial(&pc);
        let d = (&series(&self.d1)? + &(&zdz * &series(&self.d2)?)).mul_monomial(&pa);
        compose_parts(&a, &b, &c, &d)
    }

    pub fn to_wire(&self) -> AxialWire {
        let table = |t: &[NuSeries]| t.iter().map(NuSeries::to_wire).collect();
        AxialWire {
            kind: self.kind,
            s: self.s.as_ref().map(rational::to_string),
            order: self.order,
            m: rational::to_string(&self.m),
            n: self.n,
            terminated: self.terminated,
            a1: table(&self.a1),
            a2: table(&self.a2),
            b: table(&self.b),
            c: table(&self.c),
            d1: table(&self.d1),
            d2: table(&self.d2),
        }
    }

    pub fn from_wire(w: &AxialWire) -> Result<Self> {
        let table = |t: &[Vec<SeriesTermWire>]| -> Result<Vec<NuSeries>> {
            if t.len() != w.order + 1 {
                return Err(Error::Parse(format!("expected {} entries per table", w.order + 1)));
            }
            t.iter().map(|x| NuSeries::from_wire(w.n, x)).collect()
        };
        Ok(AxialSolution {
            kind: w.kind,
            s: w.s.as_deref().map(rational::parse).transpose()?,
            order: w.order,
            m: rational::parse(&w.m)?,
            n: w.n,
            terminated: w.terminated,
            a1: table(&w.a1)?,
            a2: table(&w.a2)?,
            b: table(&w.b)?,
            c: table(&w.c)?,
            d1: table(&w.d1)?,
            d2: table(&w.d2)?,
        })
    }
}

/// `Σ c_e ν^e` with `ν = Σz_jz̄_j` and `β` as a Clifford element; `c_e` on the right.
fn series_to_poly(x: &NuSeries, nu: &PolyFunction, dim: AlgebraDim) -> Result<PolyFunction> {
    let mut acc = PolyFunction::zero(dim);
    for (e, c) in x.terms() {
        let k = rational::as_natural(e).ok_or_else(|| Error::NonTerminating("negative or fractional ν-power".into()))?;
        let mut p = PolyFunction::one(dim);
        for _ in 0..k {
            p = &p * nu;
        }
        let coeff = c.to_clifford(AlgebraDim::plain(dim.n))?.embed();
        acc = &acc + &p.right_mul(&coeff)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxialWire {
    pub kind: AxialKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(rename = "K")]
    pub order: usize,
    #[serde(rename = "M")]
    pub m: String,
    pub n: usize,
    pub terminated: bool,
    pub a1: Vec<Vec<SeriesTermWire>>,
    pub a2: Vec<Vec<SeriesTermWire>>,
    pub b: Vec<Vec<SeriesTermWire>>,
    pub c: Vec<Vec<SeriesTermWire>>,
    pub d1: Vec<Vec<SeriesTermWire>>,
    pub d2: Vec<Vec<SeriesTermWire>>,
}

impl Serialize for AxialSolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AxialSolution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        AxialSolution::from_wire(&AxialWire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
