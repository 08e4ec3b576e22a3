//! Amplitude reduction: a module in degrees `[m', m]` with `m − m' + 1 ≥ n + 2`
//! is replaced by one in degrees `[m', m − 1]`.
//!
//! With `T = E ⊗ K`, `φ : T → M` and `N = m' + n`, the cone of `φ` contains
//! the sub-module `F_s = T^{>N}_{s+1} ⊕ E_s` (blocks of `T` whose `E`-index
//! exceeds `N`). The quotient is `Q[1]` with `Q = (E_{m'} → … → E_N) ⊗ K`,
//! so `cone(φ) = cone(ψ)` for the connecting morphism `ψ : Q → F`. The top
//! map `F_{m−1} = E_m ⊕ E_{m−1} → E_m` is `[1, d]`, whose kernel is the graph
//! of `−d`; replacing the top two degrees of `F` by that kernel gives the
//! output.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::certificate::Certificate;
use crate::complex::PerfectComplex;
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::module::{phi_morphism, tensor_with_koszul, Homotopy, KoszulModule, KoszulMorphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub input: KoszulModule,
    /// `φ : E ⊗ K → E`.
    pub phi: KoszulMorphism,
    /// `(E_{m'} → … → E_{m'+n}) ⊗ K`.
    pub perfect_piece: KoszulModule,
    /// The sub-module `F` of `cone(φ)`.
    pub sub_module: KoszulModule,
    /// `ψ : perfect_piece → F` with `cone(ψ) = cone(φ)`.
    pub psi: KoszulMorphism,
    pub output: KoszulModule,
    /// `ι : output → F`, identity below `m − 1` and the graph section at `m − 1`.
    pub truncation: KoszulMorphism,
    pub bottom: i32,
    pub top: i32,
}

/// Stupid truncation keeping degrees `≤ top`.
fn truncate_above(c: &PerfectComplex, top: i32) -> PerfectComplex {
    let ranks = c.ranks().range(..=top).map(|(&m, &r)| (m, r)).collect();
    let diffs = c.differentials().range(..top).map(|(&m, d)| (m, d.clone())).collect();
    PerfectComplex::unchecked(c.ring(), ranks, diffs).unwrap()
}

pub fn reduce_once(m: &KoszulModule) -> Result<ReductionStep> {
    let n = m.n();
    let (bottom, top) = m.support().ok_or(Error::AmplitudeBelowThreshold {
        amplitude: 0,
        threshold: n + 2,
    })?;
    if m.amplitude() < n + 2 {
        return Err(Error::AmplitudeBelowThreshold {
            amplitude: m.amplitude(),
            threshold: n + 2,
        });
    }
    m.validate().violations.first().map_or(Ok(()), |v| Err(Error::InvalidModule(format!("{v}"))))?;
    let ring = m.ring();
    let alg = m.algebra();
    let threshold = bottom + n as i32;

    let phi = phi_morphism(m)?;
    let cone = phi.cone_unchecked();
    let q = tensor_with_koszul(alg, &truncate_above(m.complex(), threshold))?;
    let (clo, chi) = cone.support().unwrap();

    // F is the complement of the leading Q-blocks in each cone degree.
    let split = |s: i32| q.rank(s + 1);
    let mut f_ranks = BTreeMap::new();
    let mut f_diffs = BTreeMap::new();
    let mut f_h: Vec<Homotopy> = alloc::vec![Homotopy::new(); n];
    let mut psi = BTreeMap::new();
    for s in clo..=chi {
        let (r, r_up, r_down) = (cone.rank(s), cone.rank(s + 1), cone.rank(s - 1));
        f_ranks.insert(s, r - split(s));
        f_diffs.insert(s, cone.d(s).submatrix(split(s + 1), r_up, split(s), r));
        for (i, h) in f_h.iter_mut().enumerate() {
            h.insert(s, cone.h(i, s).submatrix(split(s - 1), r_down, split(s), r));
        }
        psi.insert(s + 1, cone.d(s).submatrix(split(s + 1), r_up, 0, split(s)));
    }
    let f = KoszulModule::unchecked(alg, PerfectComplex::unchecked(ring, f_ranks, f_diffs)?, f_h)?;
    let psi = KoszulMorphism::unchecked(&q, &f, psi)?;

    // F_{top-1} = E_top ⊕ E_{top-1}; its kernel in F_top is the graph of −d.
    let d_top = m.d(top - 1);
    let (e_top, e_below) = (m.rank(top), m.rank(top - 1));
    let section = RingMatrix::vcat(ring, &[&-&d_top, &RingMatrix::identity(ring, e_below)])?;
    let retract = RingMatrix::hcat(ring, &[&RingMatrix::zero(ring, e_below, e_top), &RingMatrix::identity(ring, e_below)])?;

    let mut g_ranks = BTreeMap::new();
    let mut g_diffs = BTreeMap::new();
    let mut g_h: Vec<Homotopy> = alloc::vec![Homotopy::new(); n];
    let (flo, _) = f.support().unwrap_or((bottom, top));
    for s in flo..top {
        g_ranks.insert(s, if s == top - 1 { e_below } else { f.rank(s) });
        if s == top - 2 {
            g_diffs.insert(s, &retract * &f.d(s));
        } else if s < top - 2 {
            g_diffs.insert(s, f.d(s));
        }
        for (i, h) in g_h.iter_mut().enumerate() {
            h.insert(s, if s == top - 1 { &f.h(i, s) * &section } else { f.h(i, s) });
        }
    }
    let output = KoszulModule::unchecked(alg, PerfectComplex::unchecked(ring, g_ranks, g_diffs)?, g_h)?;
    let iota = (flo..top)
        .map(|s| {
            let c = if s == top - 1 {
                section.clone()
            } else {
                RingMatrix::identity(ring, f.rank(s))
            };
            (s, c)
        })
        .collect();
    let truncation = KoszulMorphism::unchecked(&output, &f, iota)?;

    Ok(ReductionStep {
        input: m.clone(),
        phi,
        perfect_piece: q,
        sub_module: f,
        psi,
        output,
        truncation,
        bottom,
        top,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub result: KoszulModule,
    pub steps: Vec<ReductionStep>,
}

/// Applies [`reduce_once`] until the amplitude is at most `n + 1`.
pub fn reduce(m: &KoszulModule) -> Result<Reduction> {
    m.validate().violations.first().map_or(Ok(()), |v| Err(Error::InvalidModule(format!("{v}"))))?;
    let mut current = m.clone();
    let mut steps = Vec::new();
    while current.amplitude() > m.n() + 1 {
        let step = reduce_once(&current)?;
        current = step.output.clone();
        steps.push(step);
    }
    Ok(Reduction { result: current, steps })
}

/// Re-checks every claim a step makes. Homology of the truncation cone is
/// computed only over Euclidean rings and is otherwise marked uncertified.
pub fn certify_step(step: &ReductionStep) -> Certificate {
    let mut cert = Certificate::new();
    let (lo, hi) = (step.bottom, step.top);
    let window = format!("[{lo}, {hi}]");
    cert.validation("input module identities", &window, &step.input.validate());
    cert.validation("phi is a morphism", &window, &step.phi.validate());
    cert.validation("perfect piece identities", &window, &step.perfect_piece.validate());
    cert.validation("sub-module identities", &window, &step.sub_module.validate());
    cert.validation("psi is a morphism", &window, &step.psi.validate());
    cert.validation("output module identities", &window, &step.output.validate());
    cert.validation("truncation is a morphism", &window, &step.truncation.validate());

    let recomputed = tensor_with_koszul(step.input.algebra(), &truncate_above(step.input.complex(), lo + step.input.n() as i32));
    cert.check(
        "perfect piece is slice ⊗ K",
        &format!("[{lo}, {}]", lo + step.input.n() as i32),
        recomputed.as_ref() == Ok(&step.perfect_piece),
        "perfect piece differs from the tensor of the bottom slice with K",
    );

    let cone_phi = step.phi.cone_unchecked();
    let cone_psi = step.psi.cone_unchecked();
    cert.check("cone(psi) = cone(phi)", &window, cone_psi == cone_phi, "cones differ as matrices");

    let bad_rank = cone_phi.support().and_then(|(a, b)| {
        (a..=b).find(|&s| step.sub_module.rank(s) + step.perfect_piece.rank(s + 1) != cone_phi.rank(s))
    });
    cert.check(
        "rank F_s + rank Q_{s+1} = rank cone(phi)_s",
        &window,
        bad_rank.is_none(),
        format!("fails at degree {}", bad_rank.unwrap_or_default()),
    );

    let expected = step.input.amplitude() - 1;
    let out_window = step.output.support().map_or(0, |(a, _)| (hi - 1 - a + 1) as usize);
    cert.check(
        "output amplitude",
        &format!("[{lo}, {}]", hi - 1),
        out_window == expected && step.output.support().is_none_or(|(a, b)| a >= lo && b < hi),
        format!("expected degrees [{lo}, {}]", hi - 1),
    );

    let ring = step.input.ring();
    let d = step.input.d(hi - 1);
    let graph = RingMatrix::vcat(ring, &[&-&d, &RingMatrix::identity(ring, step.input.rank(hi - 1))]);
    let graph_ok = graph.as_ref() == Ok(&step.truncation.component(hi - 1))
        && step
            .truncation
            .components()
            .iter()
            .all(|(&s, c)| s == hi - 1 || c.is_identity());
    cert.check(
        "truncation has graph form x ↦ (−d x, x)",
        &format!("degree {}", hi - 1),
        graph_ok,
        "truncation component is not the graph section",
    );

    let acyclic = match step.truncation.is_quasi_isomorphism() {
        Ok(b) => Some(b),
        Err(Error::NotEuclidean) => None,
        Err(_) => Some(false),
    };
    cert.homology("truncation is a quasi-isomorphism", &format!("degrees {} and {hi}", hi - 1), acyclic);
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Outcome;
    use crate::koszul::KoszulAlgebra;
    use crate::ring::{Base, Ring};
    use alloc::vec;

    fn qx() -> Ring {
        Ring::polynomial(Base::Rationals, &["x"]).unwrap()
    }

    #[test]
    fn n1_three_terms() {
        let r = qx();
        let alg = KoszulAlgebra::new(&r, vec![r.parse("x^2").unwrap()]).unwrap();
        let c = PerfectComplex::two_term(-1, &RingMatrix::parse(&r, &[&["x"]]).unwrap());
        let m = tensor_with_koszul(&alg, &c).unwrap();
        assert_eq!(m.amplitude(), 3);
        let step = reduce_once(&m).unwrap();
        assert_eq!(step.output.amplitude(), 2);
        let cert = certify_step(&step);
        assert_eq!(cert.status(), Outcome::Pass, "{:#?}", cert.checks);
        assert!(matches!(
            reduce_once(&step.output),
            Err(Error::AmplitudeBelowThreshold { amplitude: 2, threshold: 3 })
        ));
    }

    #[test]
    fn n2_over_two_variables_is_uncertified() {
        let r = Ring::polynomial(Base::Rationals, &["x", "y"]).unwrap();
        let alg = KoszulAlgebra::new(&r, vec![r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let c = PerfectComplex::two_term(0, &RingMatrix::parse(&r, &[&["x + y"]]).unwrap());
        let m = tensor_with_koszul(&alg, &c).unwrap();
        assert_eq!(m.amplitude(), 4);
        let red = reduce(&m).unwrap();
        assert_eq!(red.steps.len(), 1);
        assert_eq!(red.result.amplitude(), 3);
        let cert = certify_step(&red.steps[0]);
        assert_eq!(cert.status(), Outcome::Uncertified, "{:#?}", cert.checks);
    }

    #[test]
    fn tampered_step_fails() {
        let r = qx();
        let alg = KoszulAlgebra::new(&r, vec![r.parse("x^2").unwrap()]).unwrap();
        let c = PerfectComplex::two_term(-1, &RingMatrix::parse(&r, &[&["x"]]).unwrap());
        let mut step = reduce_once(&tensor_with_koszul(&alg, &c).unwrap()).unwrap();
        let (lo, _) = step.output.support().unwrap();
        let mut d = step.output.d(lo);
        d.set(0, 0, r.add(d.get(0, 0), &r.one()));
        let mut diffs = step.output.complex().differentials().clone();
        diffs.insert(lo, d);
        let ranks = step.output.complex().ranks().clone();
        let complex = PerfectComplex::unchecked(&r, ranks, diffs).unwrap();
        step.output = KoszulModule::unchecked(&alg, complex, step.output.homotopies().to_vec()).unwrap();
        let cert = certify_step(&step);
        assert_eq!(cert.status(), Outcome::Fail);
        assert!(cert
            .checks
            .iter()
            .any(|c| c.name == "output module identities" && c.outcome == Outcome::Fail));
    }
}
