use std::collections::BTreeMap;

use super::table::{CkClass, CkTable, Quad};
use crate::clifford::AlgebraDim;
use crate::check_order;
use crate::error::{Error, Result};
use crate::polyfun::{dirac_z, dirac_zdagger, PolyFunction};
use crate::rational::{factorial, sign, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Chain {
    /// `∂_z̲ ∂_z̲†`
    DzDzd,
    /// `∂_z̲† ∂_z̲`
    DzdDz,
}

/// Lazily extended sequence `X, LX, L²X, …` for `L` one of the two second-order products.
struct Powers {
    chain: Chain,
    seq: Vec<PolyFunction>,
}

impl Powers {
    fn new(chain: Chain, x: PolyFunction) -> Self {
        Powers { chain, seq: vec![x] }
    }

    fn get(&mut self, k: usize) -> &PolyFunction {
        while self.seq.len() <= k {
            let last = self.seq.last().expect("seeded");
            let next = if last.is_zero() {
                last.clone()
            } else {
                match self.chain {
                    Chain::DzDzd => dirac_z(&dirac_zdagger(last)),
                    Chain::DzdDz => dirac_zdagger(&dirac_z(last)),
                }
            };
            self.seq.push(next);
        }
        &self.seq[k]
    }
}

fn fact(k: usize) -> Rational {
    factorial(k as u64)
}

fn sgn(k: usize) -> Rational {
    sign(k as u64)
}

fn check_initial(data: &[&PolyFunction]) -> Result<AlgebraDim> {
    let dim = data[0].dim();
    for p in data {
        if p.has_z0() {
            return Err(Error::InvalidParameter("initial functions must be free of z₀".into()));
        }
        if p.dim() != dim {
            return Err(Error::DimensionMismatch("initial functions over different algebras".into()));
        }
    }
    Ok(dim)
}

fn single_table(class: CkClass, s: u32, order: usize, n: usize, terminated: bool, quads: Vec<Quad>) -> CkTable {
    let coefficients: BTreeMap<_, _> = quads.into_iter().enumerate().map(|(k, q)| ((k, 0), q)).collect();
    CkTable { class, s, order, n, terminated, coefficients }
}

/// Class I: the series in `z₀z̄₀` determined by `A₀ = A|_{z₀=0}` and `D₀ = D|_{z₀=0}`.
pub fn ck_class1(a0: &PolyFunction, d0: &PolyFunction, order: usize) -> Result<CkTable> {
    let dim = check_initial(&[a0, d0])?;
    check_order(order)?;
    let mut p = Powers::new(Chain::DzDzd, a0.clone());
    let mut q = Powers::new(Chain::DzdDz, a0.clone());
    let mut r = Powers::new(Chain::DzdDz, d0.clone());
    let mut quads = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let f2 = fact(k) * fact(k);
        let even = sgn(k) / &f2;
        let odd = -sgn(k) / (&f2 * Rational::from_integer((k as i64 + 1).into()));
        let pk = p.get(k).clone();
        let ad = q.get(k).checked_add(r.get(k))?;
        let a = pk.scale_rational(&even);
        let c = dirac_zdagger(&pk).scale_rational(&odd);
        let b = dirac_z(&ad).scale_rational(&odd);
        let d = ad.scale_rational(&even).checked_sub(&a)?;
        quads.push(Quad { a, b, c, d });
    }
    let terminated = p.get(order + 1).is_zero() && q.get(order + 1).is_zero() && r.get(order + 1).is_zero();
    Ok(single_table(CkClass::I, 0, order, dim.n, terminated, quads))
}

/// Class II: `A = z₀ˢ Σ(z₀z̄₀)ᵏA_k`, `B = z₀ˢ⁺¹…`, `C = z₀ˢ⁻¹…`, `D = z₀ˢ…` from `C₀`, `D₀`.
pub fn ck_class2(c0: &PolyFunction, d0: &PolyFunction, s: u32, order: usize) -> Result<CkTable> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let dim = check_initial(&[c0, d0])?;
    check_order(order)?;
    let su = s as usize;
    let mut u = Powers::new(Chain::DzdDz, c0.clone());
    let mut v = Powers::new(Chain::DzdDz, d0.clone());
    let mut quads = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let uk = u.get(k).clone();
        let vk = v.get(k).clone();
        let du = dirac_z(&uk);
        let ca = sgn(k) * fact(su - 1) / (fact(k) * fact(su + k));
        let cc = sgn(k) * fact(su - 1) / (fact(k) * fact(su - 1 + k));
        let cb = -sgn(k) * fact(su) / (fact(k) * fact(su + 1 + k));
        let a = du.scale_rational(&ca);
        let c = uk.scale_rational(&cc);
        let b = dirac_z(&vk).scale_rational(&cb);
        let d = if k == 0 {
            d0.clone()
        } else {
            vk.scale_rational(&Rational::from_integer(s.into())).checked_sub(&du)?.scale_rational(&ca)
        };
        quads.push(Quad { a, b, c, d });
    }
    let terminated = u.get(order + 1).is_zero() && v.get(order + 1).is_zero();
    Ok(single_table(CkClass::II, s, order, dim.n, terminated, quads))
}

/// Class III: `A = z̄₀ˢ Σ(z₀z̄₀)ᵏA_k`, `B = z̄₀ˢ⁻¹…`, `C = z̄₀ˢ⁺¹…`, `D = z̄₀ˢ…` from `A₀`, `B₀`.
pub fn ck_class3(a0: &PolyFunction, b0: &PolyFunction, s: u32, order: usize) -> Result<CkTable> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let dim = check_initial(&[a0, b0])?;
    check_order(order)?;
    let su = s as usize;
    let mut p = Powers::new(Chain::DzDzd, a0.clone());
    let mut w = Powers::new(Chain::DzDzd, b0.clone());
    let mut quads = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let pk = p.get(k).clone();
        let wk = w.get(k).clone();
        let ca = sgn(k) * fact(su) / (fact(k) * fact(su + k));
        let cc = -sgn(k) * fact(su) / (fact(k) * fact(su + k + 1));
        let cb = sgn(k) * fact(su - 1) / (fact(k) * fact(su + k - 1));
        let cd = sgn(k) * fact(su - 1) / (fact(k) * fact(su + k));
        let a = pk.scale_rational(&ca);
        let c = dirac_zdagger(&pk).scale_rational(&cc);
        let b = wk.scale_rational(&cb);
        let d = dirac_zdagger(&wk)
            .checked_sub(&pk.scale_rational(&Rational::from_integer(s.into())))?
            .scale_rational(&cd);
        quads.push(Quad { a, b, c, d });
    }
    let terminated = p.get(order + 1).is_zero() && w.get(order + 1).is_zero();
    Ok(single_table(CkClass::III, s, order, dim.n, terminated, quads))
}

/// Free data of the double series: `A_{0,ℓ}`, `B_{0,ℓ}` along the first row and
/// `C_{k,0}`, `D_{k,0}` down the first column, each of length `K + 1`.
#[derive(Debug, Clone)]
pub struct DoubleData {
    pub a_row: Vec<PolyFunction>,
    pub b_row: Vec<PolyFunction>,
    pub c_col: Vec<PolyFunction>,
    pub d_col: Vec<PolyFunction>,
}

struct DoubleSolver {
    dim: AlgebraDim,
    a_row: Vec<Powers>,
    b_row: Vec<Powers>,
    c_col: Vec<Powers>,
    /// `(A + D)_{k,0}`
    ad_col: Vec<Powers>,
}

impl DoubleSolver {
    fn zero(&self) -> PolyFunction {
        PolyFunction::zero(self.dim)
    }

    fn power(seeds: &mut [Powers], i: usize, k: usize) -> Option<PolyFunction> {
        seeds.get_mut(i).map(|p| p.get(k).clone())
    }

    fn ratio(sign_k: usize, num: usize, k: usize, l: usize) -> Rational {
        sgn(sign_k) * fact(num) / (fact(k) * fact(l))
    }

    fn a(&mut self, k: usize, l: usize) -> PolyFunction {
        let out = if k == 0 {
            Self::power(&mut self.a_row, l, 0)
        } else if l == 0 {
            Self::power(&mut self.c_col, k - 1, 0)
                .map(|c| dirac_z(&c).scale_rational(&Rational::new(1.into(), (k as i64).into())))
        } else if k <= l {
            Self::power(&mut self.a_row, l - k, k).map(|x| x.scale_rational(&Self::ratio(k, l - k, k, l)))
        } else {
            Self::power(&mut self.c_col, k - 1 - l, l)
                .map(|x| dirac_z(&x).scale_rational(&Self::ratio(l, k - 1 - l, k, l)))
        };
        out.unwrap_or_else(|| self.zero())
    }

    fn c(&mut self, k: usize, l: usize) -> PolyFunction {
        let out = if l == 0 {
            Self::power(&mut self.c_col, k, 0)
        } else if k == 0 {
            Self::power(&mut self.a_row, l - 1, 0)
                .map(|a| dirac_zdagger(&a).scale_rational(&Rational::new((-1).into(), (l as i64).into())))
        } else if k < l {
            Self::power(&mut self.a_row, l - 1 - k, k)
                .map(|x| dirac_zdagger(&x).scale_rational(&Self::ratio(k + 1, l - 1 - k, k, l)))
        } else {
            Self::power(&mut self.c_col, k - l, l).map(|x| x.scale_rational(&Self::ratio(l, k - l, k, l)))
        };
        out.unwrap_or_else(|| self.zero())
    }

    fn b(&mut self, k: usize, l: usize) -> PolyFunction {
        let out = if k == 0 {
            Self::power(&mut self.b_row, l, 0)
        } else if l == 0 {
            Self::power(&mut self.ad_col, k - 1, 0)
                .map(|x| dirac_z(&x).scale_rational(&Rational::new((-1).into(), (k as i64).into())))
        } else if k <= l {
            Self::power(&mut self.b_row, l - k, k).map(|x| x.scale_rational(&Self::ratio(k, l - k, k, l)))
        } else {
            Self::power(&mut self.ad_col, k - 1 - l, l)
                .map(|x| dirac_z(&x).scale_rational(&Self::ratio(l + 1, k - 1 - l, k, l)))
        };
        out.unwrap_or_else(|| self.zero())
    }

    /// `A_{k,ℓ} + D_{k,ℓ}`
    fn ad(&mut self, k: usize, l: usize) -> PolyFunction {
        let out = if l == 0 {
            Self::power(&mut self.ad_col, k, 0)
        } else if k == 0 {
            Self::power(&mut self.b_row, l - 1, 0)
                .map(|x| dirac_zdagger(&x).scale_rational(&Rational::new(1.into(), (l as i64).into())))
        } else if k < l {
            Self::power(&mut self.b_row, l - 1 - k, k)
                .map(|x| dirac_zdagger(&x).scale_rational(&Self::ratio(k, l - 1 - k, k, l)))
        } else {
            Self::power(&mut self.ad_col, k - l, l).map(|x| x.scale_rational(&Self::ratio(l, k - l, k, l)))
        };
        out.unwrap_or_else(|| self.zero())
    }
}

/// Double power series `Σ z₀ᵏ z̄₀^ℓ (…)_{k,ℓ}` for `0 ≤ k, ℓ ≤ K`.
pub fn ck_double(data: &DoubleData, order: usize) -> Result<CkTable> {
    check_order(order)?;
    let lens = [data.a_row.len(), data.b_row.len(), data.c_col.len(), data.d_col.len()];
    if lens.iter().any(|&l| l != order + 1) {
        return Err(Error::InvalidParameter(format!(
            "inconsistent corner data: expected {} entries per family, got {lens:?}",
            order + 1
        )));
    }
    let all: Vec<&PolyFunction> =
        data.a_row.iter().chain(&data.b_row).chain(&data.c_col).chain(&data.d_col).collect();
    let dim = check_initial(&all)
        .map_err(|e| Error::InvalidParameter(format!("inconsistent corner data: {e}")))?;
    let mut ad_col = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let a = if k == 0 {
            data.a_row[0].clone()
        } else {
            dirac_z(&data.c_col[k - 1]).scale_rational(&Rational::new(1.into(), (k as i64).into()))
        };
        ad_col.push(Powers::new(Chain::DzdDz, a.checked_add(&data.d_col[k])?));
    }
    // A_{K+1,0} = ∂_z̲C_{K,0}/(K+1) still feeds the (A + D) column.
    let a_next = dirac_z(&data.c_col[order]).scale_rational(&Rational::new(1.into(), (order as i64 + 1).into()));
    ad_col.push(Powers::new(Chain::DzdDz, a_next));
    let mut solver = DoubleSolver {
        dim,
        a_row: data.a_row.iter().map(|x| Powers::new(Chain::DzDzd, x.clone())).collect(),
        b_row: data.b_row.iter().map(|x| Powers::new(Chain::DzDzd, x.clone())).collect(),
        c_col: data.c_col.iter().map(|x| Powers::new(Chain::DzdDz, x.clone())).collect(),
        ad_col,
    };
    let mut coefficients = BTreeMap::new();
    for k in 0..=order {
        for l in 0..=order {
            let a = solver.a(k, l);
            let d = solver.ad(k, l).checked_sub(&a)?;
            let q = Quad { b: solver.b(k, l), c: solver.c(k, l), a, d };
            coefficients.insert((k, l), q);
        }
    }
    // Every family is a multiple of one seed power along each diagonal, so the
    // series beyond K vanishes once the band K < max(k, ℓ) ≤ 2K + 2 does.
    let mut terminated = true;
    'band: for k in 0..=2 * order + 2 {
        for l in 0..=2 * order + 2 {
            if k.max(l) <= order {
                continue;
            }
            if !(solver.a(k, l).is_zero()
                && solver.b(k, l).is_zero()
                && solver.c(k, l).is_zero()
                && solver.ad(k, l).is_zero())
            {
                terminated = false;
                break 'band;
            }
        }
    }
    Ok(CkTable { class: CkClass::Double, s: 0, order, n: dim.n, terminated, coefficients })
}
