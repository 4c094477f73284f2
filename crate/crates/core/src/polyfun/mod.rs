//! Clifford-valued polynomials in the independent formal variables
//! `z_j, z̄_j` (and `z₀, z̄₀`), optionally carrying the Gaussian weight
//! `exp(−|z̲|²/2)`, together with exact Wirtinger derivatives and the
//! Hermitian Dirac operators.

mod function;
mod monomial;
mod operators;

pub use function::{PolyFunction, PolyTermWire, PolyWire, Weight};
pub use monomial::{Monomial, Var};
pub use operators::{dirac_x, dirac_z, dirac_zdagger, laplacian, vector_var, VectorKind};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{AlgebraDim, CliffordElement, GaussianRational};
    use crate::sample;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn scalar_mono(dim: AlgebraDim, exps: &[(Var, u32)], c: i64) -> PolyFunction {
        PolyFunction::monomial(
            dim,
            Monomial::from_exponents(exps.iter().copied()),
            CliffordElement::scalar(dim, GaussianRational::from_int(c)),
        )
        .unwrap()
    }

    /// Real-variable Laplacian `4 Σ ∂_{z_j} ∂_{z̄_j}`, coefficientwise.
    fn real_laplacian(g: &PolyFunction) -> PolyFunction {
        let mut acc = PolyFunction::zero(g.dim()).with_weight(g.weight());
        for j in 1..=g.n() {
            let d = g.partial(Var::Z(j)).unwrap().partial(Var::ZBar(j)).unwrap();
            acc = &acc + &d;
        }
        acc.scale(&GaussianRational::from_int(4))
    }

    #[test]
    fn partial_examples() {
        let d = AlgebraDim::plain(1);
        let z1sq = scalar_mono(d, &[(Var::Z(1), 2)], 1);
        assert_eq!(z1sq.partial(Var::Z(1)).unwrap(), scalar_mono(d, &[(Var::Z(1), 1)], 2));
        let zb = scalar_mono(d, &[(Var::ZBar(1), 1)], 1);
        assert!(zb.partial(Var::Z(1)).unwrap().is_zero());
        assert!(zb.partial(Var::Z(2)).is_err());
        assert!(zb.partial(Var::Z(0)).is_err());
    }

    #[test]
    fn gaussian_chain_rule() {
        let d = AlgebraDim::plain(1);
        let g = PolyFunction::gaussian(d);
        let expected = PolyFunction::monomial(
            d,
            Monomial::var(Var::Z(1)),
            CliffordElement::scalar(d, GaussianRational::frac(-1, 2)),
        )
        .unwrap()
        .with_weight(Weight::Gaussian);
        let got = g.partial(Var::ZBar(1)).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got.weight(), Weight::Gaussian);
    }

    #[test]
    fn z0_derivatives_ignore_weight() {
        let d = AlgebraDim::extended(1);
        let g = PolyFunction::gaussian(d);
        assert!(g.partial(Var::Z(0)).unwrap().is_zero());
        let zg = scalar_mono(d, &[(Var::Z(0), 1)], 1).with_weight(Weight::Gaussian);
        assert_eq!(zg.partial(Var::Z(0)).unwrap(), PolyFunction::gaussian(d));
    }

    #[test]
    fn weight_rules() {
        let d = AlgebraDim::plain(1);
        let g = PolyFunction::gaussian(d);
        let p = PolyFunction::one(d);
        assert!(g.checked_mul(&g).is_err());
        assert!(g.checked_add(&p).is_err());
        assert_eq!(g.checked_mul(&p).unwrap().weight(), Weight::Gaussian);
        assert!(g.checked_add(&PolyFunction::zero(d)).is_ok());
    }

    #[test]
    fn dirac_examples() {
        let d = AlgebraDim::plain(1);
        let z1 = PolyFunction::var(d, Var::Z(1)).unwrap();
        let fd = CliffordElement::witt_dagger(d, 1).unwrap();
        assert_eq!(dirac_z(&z1), PolyFunction::constant(fd));
        for n in 1..=3 {
            let z = vector_var(VectorKind::Z, n, false).unwrap();
            let beta = CliffordElement::beta(AlgebraDim::plain(n));
            assert_eq!(dirac_z(&z), PolyFunction::constant(beta));
        }
    }

    #[test]
    fn laplacian_examples() {
        let d = AlgebraDim::plain(1);
        let r = scalar_mono(d, &[(Var::Z(1), 1), (Var::ZBar(1), 1)], 1);
        assert_eq!(laplacian(&r), scalar_mono(d, &[], 4));
        assert!(laplacian(&PolyFunction::one(d)).is_zero());
        assert!(laplacian(&scalar_mono(d, &[(Var::Z(1), 2)], 1)).is_zero());
    }

    #[test]
    fn vector_variable_identities() {
        for n in 1..=3 {
            let dim = AlgebraDim::plain(n);
            let z = vector_var(VectorKind::Z, n, false).unwrap();
            let zd = vector_var(VectorKind::ZDagger, n, false).unwrap();
            assert_eq!(&(&z * &zd) + &(&zd * &z), PolyFunction::modulus_sq(dim));
            let beta = PolyFunction::constant(CliffordElement::beta(dim));
            assert_eq!(&(&z * &beta) - &(&beta * &z), z);
            let x = vector_var(VectorKind::X, n, false).unwrap();
            assert_eq!(x, &z - &zd);
        }
        let z = vector_var(VectorKind::Z, 1, false).unwrap();
        let f1 = CliffordElement::witt(AlgebraDim::plain(1), 1).unwrap();
        assert_eq!(z, PolyFunction::monomial(AlgebraDim::plain(1), Monomial::var(Var::Z(1)), f1).unwrap());
    }

    #[test]
    fn restriction_examples() {
        let d = AlgebraDim::extended(1);
        let zb1 = PolyFunction::var(d, Var::ZBar(1)).unwrap();
        let f0d = CliffordElement::witt_dagger(d, 0).unwrap();
        let f1 = CliffordElement::witt(d, 1).unwrap();
        let corr = PolyFunction::monomial(d, Monomial::var(Var::ZBar(0)), &f0d * &f1).unwrap();
        let f = &zb1 - &corr;
        let r = f.restrict_z0();
        assert!(!r.has_z0());
        assert_eq!(r, PolyFunction::var(AlgebraDim::plain(1), Var::ZBar(1)).unwrap());

        let g = PolyFunction::constant(f0d.clone());
        assert_eq!(g.restrict_z0(), g);
        let h = scalar_mono(d, &[(Var::Z(0), 1), (Var::ZBar(0), 1), (Var::Z(1), 1)], 3);
        assert!(h.restrict_z0().is_zero());
    }

    #[test]
    fn wire_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let p = sample::poly(&mut rng, AlgebraDim::extended(2), 3, 4, 3).with_weight(Weight::Gaussian);
        let json = serde_json::to_string(&p).unwrap();
        let q: PolyFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.weight(), Weight::Gaussian);
    }

    fn arb_poly(weighted: bool) -> impl Strategy<Value = PolyFunction> {
        (1usize..=2, any::<bool>(), any::<u64>()).prop_map(move |(n, z0, seed)| {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let dim = AlgebraDim::new(n, z0).unwrap();
            let p = sample::poly(&mut rng, dim, 3, 4, 3);
            if weighted {
                p.with_weight(Weight::Gaussian)
            } else {
                p
            }
        })
    }

    fn all_vars(p: &PolyFunction) -> Vec<Var> {
        let lo = if p.has_z0() { 0 } else { 1 };
        (lo..=p.n()).flat_map(|j| [Var::Z(j), Var::ZBar(j)]).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn partials_commute(p in arb_poly(false), w in any::<bool>()) {
            let p = if w { p.with_weight(Weight::Gaussian) } else { p };
            let vars = all_vars(&p);
            for &u in &vars {
                for &v in &vars {
                    let uv = p.partial(u).unwrap().partial(v).unwrap();
                    let vu = p.partial(v).unwrap().partial(u).unwrap();
                    prop_assert_eq!(uv, vu);
                }
            }
        }

        #[test]
        fn dirac_operators_are_isotropic(p in arb_poly(false), w in any::<bool>()) {
            let p = if w { p.with_weight(Weight::Gaussian) } else { p };
            prop_assert!(dirac_z(&dirac_z(&p)).is_zero());
            prop_assert!(dirac_zdagger(&dirac_zdagger(&p)).is_zero());
        }

        #[test]
        fn laplacian_factorizations(p in arb_poly(false)) {
            let lap = laplacian(&p);
            prop_assert_eq!(lap.clone(), -&dirac_x(&dirac_x(&p)));
            prop_assert_eq!(lap, real_laplacian(&p));
        }

        #[test]
        fn weighted_product_rule(p in arb_poly(false)) {
            // ∂_z̲(p e^w) = (∂_z̲ p − ½ z̲† p) e^w
            let zd = vector_var(VectorKind::ZDagger, p.n(), p.has_z0()).unwrap();
            let weighted = dirac_z(&p.clone().with_weight(Weight::Gaussian)).strip_weight();
            let manual = &dirac_z(&p) - &(&zd * &p).scale(&GaussianRational::frac(1, 2));
            prop_assert_eq!(weighted, manual);
            let z = vector_var(VectorKind::Z, p.n(), p.has_z0()).unwrap();
            let weighted = dirac_zdagger(&p.clone().with_weight(Weight::Gaussian)).strip_weight();
            let manual = &dirac_zdagger(&p) - &(&z * &p).scale(&GaussianRational::frac(1, 2));
            prop_assert_eq!(weighted, manual);
        }
    }
}
