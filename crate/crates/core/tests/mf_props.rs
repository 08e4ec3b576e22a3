mod common;

use proptest::prelude::*;
use singcat_core::{
    certify_swap, fold, fold_morphism, fold_shift_permutation, phi_morphism, sing_cone_formula, swap_periodicity, unfold,
    KoszulAlgebra, KoszulModule, KoszulMorphism, MFMorphism, MatrixFactorization, Outcome, RingMatrix,
};

fn random_swap_input(r: &mut impl rand::Rng) -> KoszulModule {
    let ring = common::qx();
    let (f, factors) = common::factored_poly(r, &ring);
    let size = r.gen_range(1..=3);
    let x = common::mf_with(r, &ring, &f, &factors, size);
    let alg = KoszulAlgebra::new(&ring, vec![f]).unwrap();
    KoszulModule::two_term(&alg, r.gen_range(-2..=2), x.p0(), x.p1()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn folded_modules_factor_the_potential(seed in any::<u64>(), amp in 2usize..=4) {
        let mut r = common::rng(seed);
        let alg = common::factored_algebra(&mut r, &common::qx(), 1);
        let m = common::module(&mut r, &alg, amp);
        let x = fold(&m).unwrap();
        let ring = x.ring();
        let f = alg.potential(0);
        prop_assert_eq!(x.p1() * x.p0(), RingMatrix::scalar(ring, x.e0(), f));
        prop_assert_eq!(x.p0() * x.p1(), RingMatrix::scalar(ring, x.e1(), f));
        prop_assert_eq!(x.e0() + x.e1(), m.complex().total_rank());
        let perm = fold_shift_permutation(&m).unwrap();
        prop_assert_eq!(perm.apply(&x.shift()).unwrap(), fold(&m.shift(1)).unwrap());
        let id = fold_morphism(&KoszulMorphism::identity(&m)).unwrap();
        prop_assert_eq!(id, MFMorphism::identity(&x));
    }

    #[test]
    fn unfold_then_fold_is_identity(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let x = common::mf(&mut r, &common::qx());
        let m = unfold(&x).unwrap();
        prop_assert_eq!(m.support(), Some((-1, 0)));
        prop_assert_eq!(fold(&m).unwrap(), x.clone());
        prop_assert_eq!(x.shift().shift(), x);
    }

    #[test]
    fn hom_differential_squares_to_zero(seed in any::<u64>(), parity in 0u8..=1, sx in 1usize..=3, sy in 1usize..=3) {
        let mut r = common::rng(seed);
        let ring = common::qx();
        let (f, factors) = common::factored_poly(&mut r, &ring);
        let x = common::mf_with(&mut r, &ring, &f, &factors, sx);
        let y = common::mf_with(&mut r, &ring, &f, &factors, sy);
        let (rows0, rows1) = if parity == 0 { (y.e0(), y.e1()) } else { (y.e1(), y.e0()) };
        let chi = MFMorphism::new(&x, &y, parity, common::matrix(&mut r, &ring, rows0, x.e0(), 2), common::matrix(&mut r, &ring, rows1, x.e1(), 2)).unwrap();
        let dd = chi.delta().delta();
        prop_assert!(dd.chi0().is_zero() && dd.chi1().is_zero());
        prop_assert_eq!(chi.delta().parity(), 1 - parity);
        if parity == 1 {
            prop_assert!(chi.delta().is_closed());
        }
    }

    #[test]
    fn cone_formula_agrees_with_folded_cone(seed in any::<u64>(), sx in 1usize..=2, sy in 1usize..=2, same in any::<bool>()) {
        let mut r = common::rng(seed);
        let ring = common::qx();
        let (f, factors) = common::factored_poly(&mut r, &ring);
        let x = common::mf_with(&mut r, &ring, &f, &factors, sx);
        let y = if same { x.clone() } else { common::mf_with(&mut r, &ring, &f, &factors, sy) };
        let chi = common::closed_morphism(&mut r, &x, &y);
        let phi = common::unfolded_morphism(&chi);
        prop_assert!(phi.validate().is_valid());
        let c = sing_cone_formula(&phi).unwrap();
        prop_assert!(c.agrees());
        prop_assert!(c.formula.validate().is_valid());
        let mf_cone = chi.cone().unwrap();
        prop_assert!(mf_cone.validate().is_valid());
        prop_assert_eq!((mf_cone.e0(), mf_cone.e1()), (c.formula.e0(), c.formula.e1()));
    }

    #[test]
    fn swap_certificates(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let m = random_swap_input(&mut r);
        let top = m.support().unwrap().1;
        let s = swap_periodicity(&m, top).unwrap();
        for (name, phi) in [("phi", &s.phi), ("psi", &s.psi), ("chi", &s.chi)] {
            prop_assert!(phi.validate().is_valid(), "{} fails: {:?}", name, phi.validate().violations);
        }
        prop_assert!(s.chi.is_quasi_isomorphism().unwrap());
        let cert = certify_swap(&s);
        prop_assert_eq!(cert.status(), Outcome::Pass, "{:#?}", cert.checks);
        let twice = swap_periodicity(&s.output, top - 1).unwrap();
        prop_assert_eq!(twice.output, m.shift(2));
    }

    #[test]
    fn tensor_of_factorizations(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let ring = common::qx();
        let (x, y) = (common::mf(&mut r, &ring), common::mf(&mut r, &ring));
        let t = x.tensor(&y).unwrap();
        prop_assert!(t.validate().is_valid());
        prop_assert_eq!(t.potential(), &ring.add(x.potential(), y.potential()));
        prop_assert_eq!(t.e0() + t.e1(), (x.e0() + x.e1()) * (y.e0() + y.e1()));
    }
}

#[test]
fn eisenbud_fixture() {
    let r = common::qx();
    let alg = KoszulAlgebra::new(&r, vec![r.parse("x^2").unwrap()]).unwrap();
    let x = RingMatrix::parse(&r, &[&["x"]]).unwrap();
    let m = KoszulModule::two_term(&alg, 0, &x, &x).unwrap();
    let folded = fold(&m).unwrap();
    assert_eq!(folded, MatrixFactorization::new(&r, r.parse("x^2").unwrap(), x.clone(), x.clone()).unwrap());
    assert_eq!(folded.stable_class().unwrap(), vec![r.var(0)]);
    assert!(!folded.is_contractible().unwrap());
    let phi = phi_morphism(&m).unwrap();
    assert!(phi.validate().is_valid());
}

#[test]
fn invalid_factorization_is_rejected() {
    let r = common::qx();
    let one = RingMatrix::identity(&r, 1);
    assert!(MatrixFactorization::new(&r, r.parse("x^2").unwrap(), one.clone(), one).is_err());
}
