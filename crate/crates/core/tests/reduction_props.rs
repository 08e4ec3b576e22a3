mod common;

use proptest::prelude::*;
use singcat_core::{certify_step, reduce, reduce_once, tensor_with_koszul, Error, KoszulMorphism, Outcome, PerfectComplex};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reduction_reaches_n_plus_one(seed in any::<u64>(), n in 1usize..=2, extra in 0usize..=2) {
        let mut r = common::rng(seed);
        let alg = common::factored_algebra(&mut r, &common::qx(), n);
        let m = common::module(&mut r, &alg, n + 1 + extra);
        let amp = m.amplitude();
        let red = reduce(&m).unwrap();
        prop_assert_eq!(red.steps.len(), amp.saturating_sub(n + 1));
        prop_assert!(red.result.amplitude() <= n + 1);
        prop_assert!(red.result.validate().is_valid());
        for step in &red.steps {
            let cert = certify_step(step);
            prop_assert_eq!(cert.status(), Outcome::Pass, "{:#?}", cert.checks);
            prop_assert_eq!(step.output.amplitude(), step.input.amplitude() - 1);
            prop_assert_eq!(step.bottom, step.input.support().unwrap().0);
        }
        if let Some(last) = red.steps.last() {
            prop_assert_eq!(&last.output, &red.result);
        }
    }
}

#[test]
fn short_modules_are_left_alone() {
    let r = common::qx();
    let mut rng = common::rng(3);
    let alg = common::factored_algebra(&mut rng, &r, 2);
    let m = tensor_with_koszul(&alg, &PerfectComplex::concentrated(&r, 0, 2)).unwrap();
    let red = reduce(&m).unwrap();
    assert!(red.steps.is_empty());
    assert_eq!(red.result, m);
    assert!(matches!(reduce_once(&m), Err(Error::AmplitudeBelowThreshold { .. })));
}

#[test]
fn tampering_with_psi_is_caught() {
    let mut rng = common::rng(11);
    let r = common::qx();
    let alg = common::factored_algebra(&mut rng, &r, 1);
    let m = common::module(&mut rng, &alg, 4);
    let mut step = reduce_once(&m).unwrap();
    let (&deg, c) = step.psi.components().iter().find(|(_, c)| c.rows() > 0 && c.cols() > 0).unwrap();
    let mut c = c.clone();
    c.set(0, 0, r.add(c.get(0, 0), &r.one()));
    let mut comps = step.psi.components().clone();
    comps.insert(deg, c);
    step.psi = KoszulMorphism::unchecked(step.psi.source(), step.psi.target(), comps).unwrap();
    let cert = certify_step(&step);
    assert_eq!(cert.status(), Outcome::Fail);
    assert!(cert.checks.iter().any(|c| c.name == "cone(psi) = cone(phi)" && c.outcome == Outcome::Fail));
}
