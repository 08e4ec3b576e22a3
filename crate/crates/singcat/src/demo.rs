//! Bundled scenarios. Each one builds its inputs in code, runs the
//! operations end to end and certifies every step.

use singcat_core::{
    certify_step, certify_swap, fold, phi_morphism, reduce, sing_cone_formula, swap_periodicity, tensor_with_koszul,
    Base, KoszulAlgebra, KoszulModule, KoszulMorphism, MatrixFactorization, PerfectComplex, Ring, RingMatrix,
};

use crate::commands::{record, InputError, Result};
use crate::report::{Artifact, Report};

pub const DEMOS: &[&str] = &["eisenbud", "koszul-n2", "periodicity", "reduce-n2", "fold-chain", "cone-formula"];

pub fn run(name: &str) -> Result<Report> {
    let mut report = Report::new(&format!("demo {name}"));
    match name {
        "eisenbud" => eisenbud(&mut report)?,
        "koszul-n2" => koszul_n2(&mut report)?,
        "periodicity" => periodicity(&mut report)?,
        "reduce-n2" => reduce_n2(&mut report)?,
        "fold-chain" => fold_chain(&mut report)?,
        "cone-formula" => cone_formula(&mut report)?,
        _ => {
            return Err(InputError::Invalid(format!(
                "unknown demo {name:?}; available: {}",
                DEMOS.join(", ")
            )))
        }
    }
    Ok(report)
}

fn qx() -> Ring {
    Ring::polynomial(Base::Rationals, &["x"]).expect("valid ring")
}

fn window(m: &KoszulModule) -> String {
    m.support().map_or_else(|| "empty".into(), |(a, b)| format!("[{a}, {b}]"))
}

/// `B --x--> B` with `h = x` over `(ℚ[x], x²)`, in degrees `[-1, 0]`.
fn eisenbud_module() -> Result<KoszulModule> {
    let r = qx();
    let alg = KoszulAlgebra::new(&r, vec![r.parse("x^2")?])?;
    let x = RingMatrix::parse(&r, &[&["x"]])?;
    Ok(KoszulModule::two_term(&alg, 0, &x, &x)?)
}

fn eisenbud(report: &mut Report) -> Result<()> {
    let m = eisenbud_module()?;
    let r = m.ring().clone();
    record(report, "module identities", &window(&m), &m.validate());
    let folded = fold(&m)?;
    record(report, "p₁p₀ = p₀p₁ = f·id", "fold", &folded.validate());
    let x = RingMatrix::parse(&r, &[&["x"]])?;
    let expected = MatrixFactorization::new(&r, r.parse("x^2")?, x.clone(), x)?;
    report.check("fold gives (x, x)", "fold", folded == expected, "folded factorization differs from (x, x)");
    let class = folded.stable_class()?;
    report.check(
        "stable class is [x]",
        "coker p₀",
        class == vec![r.var(0)],
        format!("stable class {:?}", class.iter().map(|p| r.format(p)).collect::<Vec<_>>()),
    );
    report.artifact("module", Artifact::Module(m));
    report.artifact("factorization", Artifact::Factorization(folded));
    Ok(())
}

fn koszul_n2(report: &mut Report) -> Result<()> {
    let r = Ring::polynomial(Base::Rationals, &["x", "y"])?;
    let (f, g) = (r.parse("x^2 + y")?, r.parse("x*y - 1")?);
    let one = KoszulAlgebra::new(&r, vec![f.clone()])?.complex();
    let two = KoszulAlgebra::new(&r, vec![f, g])?.complex();
    report.check("n=1 differential", "degree -1", one.d(-1).to_strings() == [["x^2 + y"]], one.d(-1).to_string());
    report.check(
        "concentrated in degrees [-2, 0]",
        "n=2",
        two.support() == Some((-2, 0)),
        format!("{:?}", two.support()),
    );
    report.check(
        "n=2 differential",
        "degree -2",
        two.d(-2).to_strings() == [["-x*y + 1"], ["x^2 + y"]],
        two.d(-2).to_string(),
    );
    report.check(
        "n=2 differential",
        "degree -1",
        two.d(-1).to_strings() == [["x^2 + y", "x*y - 1"]],
        two.d(-1).to_string(),
    );
    let bad = two.d_squared_violations();
    report.check("d² = 0", "n=2", bad.is_empty(), format!("fails at degrees {bad:?}"));
    report.artifact("complex", Artifact::Complex(two));
    Ok(())
}

fn periodicity(report: &mut Report) -> Result<()> {
    let m = eisenbud_module()?;
    record(report, "input module identities", &window(&m), &m.validate());
    let s = swap_periodicity(&m, 0)?;
    report.extend("", certify_swap(&s));
    report.artifact("output", Artifact::Module(s.output));
    report.artifact("phi", Artifact::Morphism(s.phi));
    report.artifact("psi", Artifact::Morphism(s.psi));
    report.artifact("chi", Artifact::Morphism(s.chi));
    Ok(())
}

fn reduce_n2(report: &mut Report) -> Result<()> {
    let r = Ring::polynomial(Base::Rationals, &["x", "y"])?;
    let alg = KoszulAlgebra::new(&r, vec![r.var(0), r.var(1)])?;
    let d = RingMatrix::parse(&r, &[&["x + y"]])?;
    let m = tensor_with_koszul(&alg, &PerfectComplex::two_term(-1, &d))?;
    record(report, "input module identities", &window(&m), &m.validate());
    report.check("input has four terms", &window(&m), m.amplitude() == 4, format!("amplitude {}", m.amplitude()));
    let red = reduce(&m)?;
    for (k, step) in red.steps.iter().enumerate() {
        report.extend(&format!("step {}: ", k + 1), certify_step(step));
    }
    report.check(
        "result has three terms",
        &window(&red.result),
        red.result.amplitude() == 3,
        format!("amplitude {}", red.result.amplitude()),
    );
    report.artifact("input", Artifact::Module(m));
    report.artifact("result", Artifact::Module(red.result));
    Ok(())
}

fn fold_chain(report: &mut Report) -> Result<()> {
    let e = eisenbud_module()?;
    let m = e.direct_sum(&e.shift(1))?.direct_sum(&e.shift(2))?;
    record(report, "input module identities", &window(&m), &m.validate());
    let direct = fold(&m)?;
    record(report, "direct fold identities", "fold", &direct.validate());
    let red = reduce(&m)?;
    for (k, step) in red.steps.iter().enumerate() {
        report.extend(&format!("step {}: ", k + 1), certify_step(step));
    }
    let reduced = fold(&red.result)?;
    record(report, "reduced fold identities", "reduce then fold", &reduced.validate());
    let (a, b) = (direct.stable_class()?, reduced.stable_class()?);
    let r = m.ring();
    report.check(
        "stable classes agree",
        "coker p₀",
        a == b,
        format!(
            "{:?} vs {:?}",
            a.iter().map(|p| r.format(p)).collect::<Vec<_>>(),
            b.iter().map(|p| r.format(p)).collect::<Vec<_>>()
        ),
    );
    report.artifact("input", Artifact::Module(m));
    report.artifact("direct", Artifact::Factorization(direct));
    report.artifact("reduced", Artifact::Factorization(reduced));
    Ok(())
}

fn cone_formula(report: &mut Report) -> Result<()> {
    let m = eisenbud_module()?;
    let id = KoszulMorphism::identity(&m);
    record(report, "identity is a morphism", &window(&m), &id.validate());
    let c = sing_cone_formula(&id)?;
    record(report, "cone formula identities", "formula", &c.formula.validate());
    report.check("formula agrees with fold(cone)", "permutation", c.agrees(), "conjugated matrices differ");
    report.check("cone of the identity is contractible", "coker p₀", c.formula.is_contractible()?, "stable class is nonzero");
    let phi = phi_morphism(&m)?;
    record(report, "phi is a morphism", &window(&m), &phi.validate());
    report.artifact("factorization", Artifact::Factorization(c.formula));
    Ok(())
}
