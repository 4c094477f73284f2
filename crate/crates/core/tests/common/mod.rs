//! Naive oracles: coefficient tables obtained by stepping the raw recurrences one
//! index at a time, with no closed forms involved.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hclif::ck::Quad;
use hclif::polyfun::{dirac_z, dirac_zdagger, PolyFunction};
use hclif::rational::{frac, Rational};

fn by(p: &PolyFunction, num: i64, den: i64) -> PolyFunction {
    p.scale_rational(&frac(num, den))
}

fn d(p: &PolyFunction) -> PolyFunction {
    dirac_z(p)
}

fn dd(p: &PolyFunction) -> PolyFunction {
    dirac_zdagger(p)
}

fn quads(a: Vec<PolyFunction>, b: Vec<PolyFunction>, c: Vec<PolyFunction>, ad: Vec<PolyFunction>) -> Vec<Quad> {
    a.into_iter()
        .zip(b)
        .zip(c)
        .zip(ad)
        .map(|(((a, b), c), ad)| {
            let d = &ad - &a;
            Quad { a, b, c, d }
        })
        .collect()
}

/// Class I: `C_k = −∂†A_k/(k+1)`, `A_{k+1} = ∂C_k/(k+1)`,
/// `B_k = −∂(A_k+D_k)/(k+1)`, `(A+D)_{k+1} = ∂†B_k/(k+1)`.
pub fn class1(a0: &PolyFunction, d0: &PolyFunction, order: usize) -> Vec<Quad> {
    let (mut a, mut b, mut c, mut ad) = (vec![a0.clone()], vec![], vec![], vec![a0 + d0]);
    for k in 0..=order {
        let k1 = k as i64 + 1;
        c.push(by(&dd(&a[k]), -1, k1));
        a.push(by(&d(&c[k]), 1, k1));
        b.push(by(&d(&ad[k]), -1, k1));
        ad.push(by(&dd(&b[k]), 1, k1));
    }
    a.truncate(order + 1);
    ad.truncate(order + 1);
    quads(a, b, c, ad)
}

/// Class II: `A_k = ∂C_k/(s+k)`, `C_{k+1} = −∂†A_k/(k+1)`,
/// `B_k = −∂(A_k+D_k)/(s+1+k)`, `(A+D)_{k+1} = ∂†B_k/(k+1)`.
pub fn class2(c0: &PolyFunction, d0: &PolyFunction, s: u32, order: usize) -> Vec<Quad> {
    let s = i64::from(s);
    let (mut a, mut b, mut c, mut ad) = (vec![], vec![], vec![c0.clone()], vec![]);
    for k in 0..=order {
        let ki = k as i64;
        a.push(by(&d(&c[k]), 1, s + ki));
        if k == 0 {
            ad.push(&a[0] + d0);
        }
        c.push(by(&dd(&a[k]), -1, ki + 1));
        b.push(by(&d(&ad[k]), -1, s + 1 + ki));
        ad.push(by(&dd(&b[k]), 1, ki + 1));
    }
    c.truncate(order + 1);
    ad.truncate(order + 1);
    quads(a, b, c, ad)
}

/// Class III: `C_k = −∂†A_k/(s+1+k)`, `A_{k+1} = ∂C_k/(k+1)`,
/// `(A+D)_k = ∂†B_k/(s+k)`, `B_{k+1} = −∂(A_k+D_k)/(k+1)`.
pub fn class3(a0: &PolyFunction, b0: &PolyFunction, s: u32, order: usize) -> Vec<Quad> {
    let s = i64::from(s);
    let (mut a, mut b, mut c, mut ad) = (vec![a0.clone()], vec![b0.clone()], vec![], vec![]);
    for k in 0..=order {
        let ki = k as i64;
        c.push(by(&dd(&a[k]), -1, s + 1 + ki));
        a.push(by(&d(&c[k]), 1, ki + 1));
        ad.push(by(&dd(&b[k]), 1, s + ki));
        b.push(by(&d(&ad[k]), -1, ki + 1));
    }
    a.truncate(order + 1);
    b.truncate(order + 1);
    quads(a, b, c, ad)
}

/// Double series: `A_{k+1,ℓ} = ∂C_{k,ℓ}/(k+1)`, `C_{k,ℓ+1} = −∂†A_{k,ℓ}/(ℓ+1)`,
/// `B_{k+1,ℓ} = −∂(A+D)_{k,ℓ}/(k+1)`, `(A+D)_{k,ℓ+1} = ∂†B_{k,ℓ}/(ℓ+1)`,
/// seeded by `A_{0,ℓ}`, `B_{0,ℓ}`, `C_{k,0}`, `D_{k,0}`.
pub fn double(
    a_row: &[PolyFunction],
    b_row: &[PolyFunction],
    c_col: &[PolyFunction],
    d_col: &[PolyFunction],
    order: usize,
) -> BTreeMap<(usize, usize), Quad> {
    let mut a: BTreeMap<(usize, usize), PolyFunction> = BTreeMap::new();
    let mut b = BTreeMap::new();
    let mut c = BTreeMap::new();
    let mut ad = BTreeMap::new();
    for total in 0..=2 * order {
        for k in 0..=total.min(order) {
            let l = total - k;
            if l > order {
                continue;
            }
            let av = if k == 0 { a_row[l].clone() } else { by(&d(&c[&(k - 1, l)]), 1, k as i64) };
            let cv = if l == 0 { c_col[k].clone() } else { by(&dd(&a[&(k, l - 1)]), -1, l as i64) };
            let bv = if k == 0 { b_row[l].clone() } else { by(&d(&ad[&(k - 1, l)]), -1, k as i64) };
            let adv = if l == 0 { &av + &d_col[k] } else { by(&dd(&b[&(k, l - 1)]), 1, l as i64) };
            a.insert((k, l), av);
            b.insert((k, l), bv);
            c.insert((k, l), cv);
            ad.insert((k, l), adv);
        }
    }
    a.into_iter()
        .map(|(key, av)| {
            let dv = &ad[&key] - &av;
            (key, Quad { a: av, b: b[&key].clone(), c: c[&key].clone(), d: dv })
        })
        .collect()
}

/// `L_p^{(α)}` coefficients from the explicit binomial sum, computed independently.
pub fn laguerre_coeffs(p: u32, alpha: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for i in 0..=p {
        // C(p+α, p−i) = Π_{j=1}^{p−i} (α + i + j)/j
        let mut binom = frac(1, 1);
        for j in 1..=i64::from(p - i) {
            binom *= frac(alpha + i64::from(i) + j, j);
        }
        let mut inv_fact = frac(1, 1);
        for j in 1..=i64::from(i) {
            inv_fact /= frac(j, 1);
        }
        let sign = if i % 2 == 0 { frac(1, 1) } else { frac(-1, 1) };
        out.push(sign * binom * inv_fact);
    }
    out
}

/// Exact partial sum of `J_α(t)` (or `I_α(t)` when `modified`) at rational `t`.
pub fn bessel_exact(alpha: u32, modified: bool, t: &Rational, terms: u32) -> Rational {
    let half = t / frac(2, 1);
    let sq = &half * &half;
    let mut lead = frac(1, 1);
    for j in 1..=i64::from(alpha) {
        lead = lead * &half / frac(j, 1);
    }
    let mut term = lead;
    let mut sum = term.clone();
    for k in 1..=i64::from(terms) {
        term = term * &sq / frac(k * (k + i64::from(alpha)), 1);
        if !modified {
            term = -term;
        }
        sum += &term;
    }
    sum
}
