//! The submonogenic system over `C_{2n+2}`: splitting `f` along `f₀`, residuals
//! of the related systems, and Cauchy–Kowalevski type series solutions.

mod decomposition;
mod residuals;
mod solvers;
mod table;

pub use decomposition::{compose_parts, decompose, Decomposition};
pub use residuals::{components as component_residuals, hmonogenic as residuals_hmonogenic};
pub use residuals::{hms_split as residuals_hms_split, inhomogeneous_data};
pub use residuals::submonogenic as residuals_submonogenic;
pub use solvers::{ck_class1, ck_class2, ck_class3, ck_double, DoubleData};
pub use table::{CkClass, CkTable, CkTableWire, EntryWire, Quad, ResidualReport};

use crate::clifford::{AlgebraDim, CliffordElement};
use crate::error::{Error, Result};

/// `f₀` of `C_{2n+2}`.
pub fn f0(dim: AlgebraDim) -> Result<CliffordElement> {
    if !dim.with_z0 {
        return Err(Error::DimensionMismatch("f₀ lives in C_{2n+2}".into()));
    }
    CliffordElement::witt(dim, 0)
}

pub fn f0_dagger(dim: AlgebraDim) -> Result<CliffordElement> {
    if !dim.with_z0 {
        return Err(Error::DimensionMismatch("f₀† lives in C_{2n+2}".into()));
    }
    CliffordElement::witt_dagger(dim, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::GaussianRational;
    use crate::polyfun::{Monomial, PolyFunction, Var};
    use crate::sample;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn mono(dim: AlgebraDim, exps: &[(Var, u32)]) -> PolyFunction {
        PolyFunction::monomial(dim, Monomial::from_exponents(exps.iter().copied()), CliffordElement::one(dim))
            .unwrap()
    }

    fn times(c: &CliffordElement, p: &PolyFunction) -> PolyFunction {
        p.left_mul(c).unwrap()
    }

    fn ext(n: usize) -> AlgebraDim {
        AlgebraDim::extended(n)
    }

    fn witt(dim: AlgebraDim, j: usize) -> CliffordElement {
        CliffordElement::witt(dim, j).unwrap()
    }

    fn wittd(dim: AlgebraDim, j: usize) -> CliffordElement {
        CliffordElement::witt_dagger(dim, j).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let dim = ext(1);
        let z1 = mono(dim, &[(Var::Z(1), 1)]);
        let one = PolyFunction::one(dim);
        let zero = PolyFunction::zero(dim);
        let d = decompose(&times(&witt(dim, 0), &z1)).unwrap();
        assert_eq!((d.a.clone(), d.b.clone(), d.c.clone(), d.d.clone()), (zero.clone(), z1.clone(), zero.clone(), zero.clone()));
        let d = decompose(&one).unwrap();
        assert_eq!(d.a, one);
        assert!(d.b.is_zero() && d.c.is_zero() && d.d.is_zero());
        let n0 = &wittd(dim, 0) * &witt(dim, 0);
        let d = decompose(&PolyFunction::constant(n0)).unwrap();
        assert!(d.a.is_zero() && d.b.is_zero() && d.c.is_zero());
        assert_eq!(d.d, one);
        let d = decompose(&PolyFunction::constant(wittd(dim, 0))).unwrap();
        assert_eq!(d.c, one);
    }

    #[test]
    fn decompose_needs_extended_algebra() {
        assert!(decompose(&PolyFunction::one(AlgebraDim::plain(1))).is_err());
    }

    #[test]
    fn submonogenic_examples() {
        let dim = ext(1);
        let zb1 = mono(dim, &[(Var::ZBar(1), 1)]);
        let zb0 = mono(dim, &[(Var::ZBar(0), 1)]);
        let f = zb1.checked_sub(&times(&(&wittd(dim, 0) * &witt(dim, 1)), &zb0)).unwrap();
        let (s1, s2) = residuals_submonogenic(&f).unwrap();
        assert!(s1.is_zero() && s2.is_zero());
        let (s1, s2) = residuals_submonogenic(&PolyFunction::one(dim)).unwrap();
        assert!(s1.is_zero() && s2.is_zero());
        let (s1, s2) = residuals_submonogenic(&zb0).unwrap();
        assert!(s1.is_zero());
        assert_eq!(s2, PolyFunction::constant(witt(dim, 0)));
    }

    #[test]
    fn hmonogenic_and_inhomogeneous_examples() {
        let dim = ext(1);
        let (r1, r2) = residuals_hmonogenic(&mono(dim, &[(Var::Z(1), 1)])).unwrap();
        assert_eq!(r1, PolyFunction::constant(wittd(dim, 1)));
        assert!(r2.is_zero());
        let (g, h) = inhomogeneous_data(&mono(dim, &[(Var::ZBar(1), 1)])).unwrap();
        assert!(g.is_zero());
        assert_eq!(h, PolyFunction::constant(&witt(dim, 0) * &witt(dim, 1)));
        let (g, h) = inhomogeneous_data(&PolyFunction::one(dim)).unwrap();
        assert!(g.is_zero() && h.is_zero());
        for q in residuals_hms_split(&PolyFunction::one(dim)).unwrap() {
            assert!(q.is_zero());
        }
    }

    #[test]
    fn component_residuals_of_constant() {
        let dim = ext(2);
        let z = PolyFunction::zero(dim);
        let d = Decomposition { a: PolyFunction::one(dim), b: z.clone(), c: z.clone(), d: z };
        assert!(component_residuals(&d).unwrap().iter().all(PolyFunction::is_zero));
    }

    #[test]
    fn class1_examples() {
        let plain = AlgebraDim::plain(1);
        let dim = ext(1);
        let zb1 = mono(plain, &[(Var::ZBar(1), 1)]);
        let zero = PolyFunction::zero(plain);
        let t = ck_class1(&zb1, &zero, 3).unwrap();
        assert!(t.terminated);
        let q0 = t.coeff(0).unwrap();
        assert_eq!(q0.a, zb1);
        assert_eq!(q0.c, PolyFunction::constant(-&witt(plain, 1)));
        assert!(q0.b.is_zero() && q0.d.is_zero());
        assert!((1..=3).all(|k| t.coeff(k).unwrap().is_zero()));
        let expected = mono(dim, &[(Var::ZBar(1), 1)])
            .checked_sub(&times(&(&wittd(dim, 0) * &witt(dim, 1)), &mono(dim, &[(Var::ZBar(0), 1)])))
            .unwrap();
        assert_eq!(t.assemble(), expected);

        let t = ck_class1(&PolyFunction::one(plain), &zero, 2).unwrap();
        assert_eq!(t.assemble(), PolyFunction::one(dim));

        let a0 = mono(plain, &[(Var::Z(1), 1), (Var::ZBar(1), 1)]);
        let t = ck_class1(&a0, &zero, 4).unwrap();
        let z1 = mono(plain, &[(Var::Z(1), 1)]);
        assert_eq!(t.coeff(0).unwrap().c, times(&-&witt(plain, 1), &z1));
        assert_eq!(t.coeff(1).unwrap().a, PolyFunction::constant(-&(&wittd(plain, 1) * &witt(plain, 1))));
        assert_eq!(t.coeff(0).unwrap().b, times(&-&wittd(plain, 1), &zb1));
        assert!(t.residual_report().is_exact());
        assert!(t.vanishing_index() <= 2);
    }

    #[test]
    fn class2_and_class3_examples() {
        let plain = AlgebraDim::plain(1);
        let dim = ext(1);
        let zero = PolyFunction::zero(plain);
        let t = ck_class2(&zero, &zero, 2, 3).unwrap();
        assert!(t.assemble().is_zero());
        let t = ck_class2(&mono(plain, &[(Var::ZBar(1), 1)]), &zero, 1, 3).unwrap();
        assert_eq!(t.assemble(), times(&wittd(dim, 0), &mono(dim, &[(Var::ZBar(1), 1)])));
        assert!(t.residual_report().is_exact());

        let t = ck_class3(&mono(plain, &[(Var::Z(1), 1)]), &zero, 1, 3).unwrap();
        let z1 = mono(dim, &[(Var::Z(1), 1)]);
        let inner = z1.checked_sub(&times(&(&wittd(dim, 0) * &witt(dim, 0)), &z1)).unwrap();
        let expected = inner.mul_monomial(&Monomial::var(Var::ZBar(0)));
        assert_eq!(t.assemble(), expected);
        assert!(t.residual_report().is_exact());
        assert!(ck_class2(&zero, &zero, 0, 1).is_err());
        assert!(ck_class3(&zero, &zero, 0, 1).is_err());
    }

    #[test]
    fn initial_data_must_be_free_of_z0() {
        let p = PolyFunction::one(ext(1));
        assert!(ck_class1(&p, &p, 1).is_err());
    }

    #[test]
    fn double_rejects_bad_lengths() {
        let z = PolyFunction::zero(AlgebraDim::plain(1));
        let data = DoubleData { a_row: vec![z.clone(); 2], b_row: vec![z.clone(); 2], c_col: vec![z.clone(); 2], d_col: vec![z; 1] };
        assert!(ck_double(&data, 1).is_err());
    }

    #[test]
    fn double_of_zero_data_is_zero() {
        let z = PolyFunction::zero(AlgebraDim::plain(2));
        let data = DoubleData { a_row: vec![z.clone(); 3], b_row: vec![z.clone(); 3], c_col: vec![z.clone(); 3], d_col: vec![z; 3] };
        let t = ck_double(&data, 2).unwrap();
        assert!(t.terminated && t.assemble().is_zero());
    }

    #[test]
    fn table_wire_round_trip() {
        let plain = AlgebraDim::plain(2);
        let a0 = mono(plain, &[(Var::Z(1), 1), (Var::ZBar(2), 2)]);
        let t = ck_class1(&a0, &PolyFunction::one(plain), 3).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: CkTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(json.contains("\"K\":3"));
    }

    #[test]
    fn gaussian_data_does_not_terminate() {
        let plain = AlgebraDim::plain(1);
        let g = PolyFunction::gaussian(plain);
        let t = ck_class1(&g, &PolyFunction::zero(plain), 2).unwrap();
        assert!(!t.terminated);
        let report = t.residual_report();
        assert!(!report.is_exact());
        assert!(report.min_order.unwrap() >= 2);
    }

    fn random_f(seed: u64, n: usize) -> PolyFunction {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        sample::poly(&mut rng, ext(n), 3, 4, 2)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn decomposition_round_trip(seed in any::<u64>(), n in 1usize..=3) {
            let f = random_f(seed, n);
            let d = decompose(&f).unwrap();
            d.validate().unwrap();
            prop_assert_eq!(d.compose().unwrap(), f);
        }

        #[test]
        fn split_system_sums_to_hms(seed in any::<u64>(), n in 1usize..=2) {
            let f = random_f(seed, n);
            let dim = f.dim();
            let (r1, r2) = residuals_hmonogenic(&f).unwrap();
            let [q1, q2, q3, q4] = residuals_hms_split(&f).unwrap();
            prop_assert_eq!(&r1, &(&q1 + &q2));
            prop_assert_eq!(&r2, &(&q3 + &q4));
            let n0 = &f0_dagger(dim).unwrap() * &f0(dim).unwrap();
            let m0 = &f0(dim).unwrap() * &f0_dagger(dim).unwrap();
            prop_assert_eq!(q1, r1.left_mul(&n0).unwrap());
            prop_assert_eq!(q2, r1.left_mul(&m0).unwrap());
            prop_assert_eq!(q3, r2.left_mul(&m0).unwrap());
            prop_assert_eq!(q4, r2.left_mul(&n0).unwrap());
        }

        #[test]
        fn inhomogeneous_contract(seed in any::<u64>(), n in 1usize..=2) {
            let f = random_f(seed, n);
            let dim = f.dim();
            let (r1, r2) = residuals_hmonogenic(&f).unwrap();
            let (g, h) = inhomogeneous_data(&f).unwrap();
            let (s1, s2) = residuals_submonogenic(&f).unwrap();
            prop_assert_eq!(&r1 - &g.left_mul(&f0(dim).unwrap()).unwrap(), s1);
            prop_assert_eq!(&r2 - &h.left_mul(&f0_dagger(dim).unwrap()).unwrap(), s2);
        }

        #[test]
        fn component_form_matches_submonogenic(seed in any::<u64>(), n in 1usize..=2, solved in any::<bool>()) {
            let f = if solved {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let a0 = sample::initial_data(&mut rng, n, 3, 3, 2);
                let d0 = sample::initial_data(&mut rng, n, 3, 3, 2);
                ck_class1(&a0, &d0, 3).unwrap().assemble()
            } else {
                random_f(seed, n)
            };
            let comps = component_residuals(&decompose(&f).unwrap()).unwrap();
            let (s1, s2) = residuals_submonogenic(&f).unwrap();
            prop_assert_eq!(comps.iter().all(PolyFunction::is_zero), s1.is_zero() && s2.is_zero());
            if solved {
                prop_assert!(s1.is_zero() && s2.is_zero());
            }
        }

        #[test]
        fn class1_restricts_to_initial_data(seed in any::<u64>(), n in 1usize..=2) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a0 = sample::initial_data(&mut rng, n, 4, 3, 2);
            let d0 = sample::initial_data(&mut rng, n, 4, 3, 2);
            let t = ck_class1(&a0, &d0, 2).unwrap();
            let dim = ext(n);
            let n0 = &f0_dagger(dim).unwrap() * &f0(dim).unwrap();
            let expected = a0.embed().checked_add(&d0.embed().left_mul(&n0).unwrap()).unwrap();
            prop_assert_eq!(t.assemble().restrict_z0(), expected.restrict_z0());
            prop_assert!(t.terminated);
            prop_assert!(t.residual_report().is_exact());
            prop_assert!(t.vanishing_index() <= 3);
        }
    }

    #[test]
    fn scalar_helpers_are_consistent() {
        let dim = ext(1);
        let e = &(&f0(dim).unwrap() * &f0_dagger(dim).unwrap()) + &(&f0_dagger(dim).unwrap() * &f0(dim).unwrap());
        assert_eq!(e, CliffordElement::scalar(dim, GaussianRational::from_int(1)));
        assert!(f0(AlgebraDim::plain(1)).is_err());
    }
}
