//! Dispatch from parsed arguments to library operations.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use singcat_core::{
    box_tensor, certify_step, certify_swap, fold, reduce, swap_periodicity, tensor_with_koszul, unfold, Error,
    KoszulAlgebra, KoszulModule, KoszulMorphism, MatrixFactorization, Outcome, PerfectComplex, ValidationReport,
};

use crate::cli::Command;
use crate::json::{self, SchemaError};
use crate::report::{Artifact, Report};
use crate::demo;

/// Anything that stops a command before it can produce a report (exit 2).
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{path}: schema violation {source}")]
    Schema { path: String, source: SchemaError },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{0}")]
    Invalid(String),
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::Invalid(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, InputError>;

struct Input {
    label: String,
    value: Value,
}

impl Input {
    fn parse<T>(&self, f: impl FnOnce(&Value) -> json::Result<T>) -> Result<T> {
        f(&self.value).map_err(|source| InputError::Schema {
            path: self.label.clone(),
            source,
        })
    }
}

fn load(arg: &str) -> Result<Input> {
    let (label, text) = if arg.trim_start().starts_with('{') {
        ("<inline>".to_string(), arg.to_string())
    } else {
        let text = fs::read_to_string(arg).map_err(|source| InputError::Read {
            path: arg.into(),
            source,
        })?;
        (arg.to_string(), text)
    };
    let value = serde_json::from_str(&text).map_err(|source| InputError::Json {
        path: label.clone(),
        source,
    })?;
    Ok(Input { label, value })
}

fn window(support: Option<(i32, i32)>) -> String {
    support.map_or_else(|| "empty".into(), |(a, b)| format!("[{a}, {b}]"))
}

/// One failing check per violation, named by the identity; a single
/// passing check when there are none. Returns whether the report was clean.
pub(crate) fn record(report: &mut Report, what: &str, location: &str, v: &ValidationReport) -> bool {
    if v.is_valid() {
        report.check(what, location, true, "");
    }
    for violation in &v.violations {
        report.certificate.push(
            violation.identity,
            &format!("{what}, degree {}", violation.degree),
            Outcome::Fail,
            violation.to_string(),
        );
    }
    v.is_valid()
}

fn record_complex(report: &mut Report, what: &str, c: &PerfectComplex) -> bool {
    let bad = c.d_squared_violations();
    if bad.is_empty() {
        report.check(what, &window(c.support()), true, "");
    }
    for m in &bad {
        report.certificate.push("d²", &format!("{what}, degree {m}"), Outcome::Fail, format!("d² ≠ 0 at degree {m}"));
    }
    bad.is_empty()
}

fn record_module(report: &mut Report, what: &str, m: &KoszulModule) -> bool {
    record(report, what, &window(m.support()), &m.validate())
}

fn record_morphism(report: &mut Report, phi: &KoszulMorphism) -> bool {
    let s = record_module(report, "source module identities", phi.source());
    let t = record_module(report, "target module identities", phi.target());
    s && t && record(report, "morphism identities", &window(phi.chain().support()), &phi.validate())
}

fn record_mf(report: &mut Report, what: &str, x: &MatrixFactorization) -> bool {
    record(report, what, &format!("ranks ({}, {})", x.e0(), x.e1()), &x.validate())
}

fn module_from(arg: &str) -> Result<KoszulModule> {
    load(arg)?.parse(json::parse_module)
}

fn mf_from(arg: &str) -> Result<MatrixFactorization> {
    load(arg)?.parse(json::parse_mf)
}

fn algebra(ring: &singcat_core::Ring, potentials: &[String]) -> Result<KoszulAlgebra> {
    let pots = json::parse_potentials(ring, potentials).map_err(|e| InputError::Invalid(format!("--potentials: {e}")))?;
    Ok(KoszulAlgebra::new(ring, pots)?)
}

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Koszul { ring, potentials } => koszul(ring, potentials),
        Command::Validate {
            complex,
            module,
            morphism,
            mf,
        } => validate(complex.as_deref(), module.as_deref(), morphism.as_deref(), mf.as_deref()),
        Command::Cone { morphism } => cone(morphism),
        Command::Tensor { complex, potentials } => tensor(complex, potentials),
        Command::Boxtensor { left, right } => boxtensor(left, right),
        Command::Reduce {
            module,
            certify,
            emit_steps,
        } => run_reduce(module, *certify, emit_steps.as_deref()),
        Command::Fold { module } => run_fold(module),
        Command::Unfold { mf } => run_unfold(mf),
        Command::MfCone { morphism } => mf_cone(morphism),
        Command::MfTensor { left, right } => mf_tensor(left, right),
        Command::Swap { module, top, certify } => swap(module, *top, *certify),
        Command::Homology { complex, module } => homology(complex.as_deref(), module.as_deref()),
        Command::Demo { name } => demo::run(name),
    }
}

fn koszul(ring: &str, potentials: &[String]) -> Result<Report> {
    let ring = load(ring)?.parse(json::parse_ring)?;
    let alg = algebra(&ring, potentials)?;
    let mut report = Report::new("koszul");
    let c = alg.complex();
    record_complex(&mut report, "d² = 0", &c);
    report.artifact("complex", Artifact::Complex(c));
    Ok(report)
}

fn validate(complex: Option<&str>, module: Option<&str>, morphism: Option<&str>, mf: Option<&str>) -> Result<Report> {
    let mut report = Report::new("validate");
    if let Some(arg) = complex {
        let c = load(arg)?.parse(json::parse_complex)?;
        record_complex(&mut report, "complex identities", &c);
    } else if let Some(arg) = module {
        record_module(&mut report, "module identities", &module_from(arg)?);
    } else if let Some(arg) = morphism {
        let input = load(arg)?;
        if json::is_module(&input.value["source"]) {
            record_morphism(&mut report, &input.parse(json::parse_morphism)?);
        } else {
            let phi = input.parse(json::parse_chain_morphism)?;
            let ok = record_complex(&mut report, "source complex identities", phi.source())
                & record_complex(&mut report, "target complex identities", phi.target());
            if ok {
                let bad = phi.chain_violations();
                report.check("chain map", &window(phi.support()), bad.is_empty(), format!("dφ−φd ≠ 0 at degrees {bad:?}"));
            }
        }
    } else if let Some(arg) = mf {
        record_mf(&mut report, "factorization identities", &mf_from(arg)?);
    }
    Ok(report)
}

fn cone(morphism: &str) -> Result<Report> {
    let input = load(morphism)?;
    let mut report = Report::new("cone");
    if json::is_module(&input.value["source"]) {
        let phi = input.parse(json::parse_morphism)?;
        if record_morphism(&mut report, &phi) {
            let c = phi.cone()?;
            record_module(&mut report, "cone module identities", &c);
            report.artifact("cone", Artifact::Module(c));
        }
    } else {
        let phi = input.parse(json::parse_chain_morphism)?;
        let bad = phi.chain_violations();
        report.check("chain map", &window(phi.support()), bad.is_empty(), format!("dφ−φd ≠ 0 at degrees {bad:?}"));
        if bad.is_empty() {
            let c = phi.cone();
            record_complex(&mut report, "cone complex identities", &c);
            report.artifact("cone", Artifact::Complex(c));
        }
    }
    Ok(report)
}

fn tensor(complex: &str, potentials: &[String]) -> Result<Report> {
    let c = load(complex)?.parse(json::parse_complex)?;
    let mut report = Report::new("tensor");
    if record_complex(&mut report, "input complex identities", &c) {
        let alg = algebra(c.ring(), potentials)?;
        let m = tensor_with_koszul(&alg, &c)?;
        record_module(&mut report, "module identities", &m);
        report.artifact("module", Artifact::Module(m));
    }
    Ok(report)
}

fn boxtensor(left: &str, right: &str) -> Result<Report> {
    let (a, b) = (module_from(left)?, module_from(right)?);
    let mut report = Report::new("boxtensor");
    if record_module(&mut report, "left module identities", &a) & record_module(&mut report, "right module identities", &b) {
        let m = box_tensor(&a, &b)?;
        record_module(&mut report, "product module identities", &m);
        report.artifact("module", Artifact::Module(m));
    }
    Ok(report)
}

fn write_json(path: &Path, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("JSON values always serialize") + "\n";
    fs::write(path, text).map_err(|source| InputError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn emit_step(dir: &Path, k: usize, step: &singcat_core::ReductionStep) -> Result<Vec<PathBuf>> {
    let sub = dir.join(format!("step-{k}"));
    fs::create_dir_all(&sub).map_err(|source| InputError::Write {
        path: sub.display().to_string(),
        source,
    })?;
    let parts = [
        ("input", Artifact::Module(step.input.clone())),
        ("phi", Artifact::Morphism(step.phi.clone())),
        ("perfect_piece", Artifact::Module(step.perfect_piece.clone())),
        ("sub_module", Artifact::Module(step.sub_module.clone())),
        ("psi", Artifact::Morphism(step.psi.clone())),
        ("output", Artifact::Module(step.output.clone())),
        ("truncation", Artifact::Morphism(step.truncation.clone())),
    ];
    let mut files = Vec::new();
    for (name, a) in parts {
        let path = sub.join(format!("{name}.json"));
        write_json(&path, &a.to_json())?;
        files.push(path);
    }
    Ok(files)
}

fn run_reduce(module: &str, certify: bool, emit: Option<&Path>) -> Result<Report> {
    let m = module_from(module)?;
    let mut report = Report::new("reduce");
    if !record_module(&mut report, "input module identities", &m) {
        return Ok(report);
    }
    let red = reduce(&m)?;
    for (k, step) in red.steps.iter().enumerate() {
        let k = k + 1;
        if certify {
            report.extend(&format!("step {k}: "), certify_step(step));
        }
        if let Some(dir) = emit {
            let files = emit_step(dir, k, step)?;
            report.files.extend(files);
        }
    }
    let target = m.n() + 1;
    report.check(
        "amplitude ≤ n+1",
        &window(red.result.support()),
        red.result.amplitude() <= target,
        format!("amplitude {} after {} steps", red.result.amplitude(), red.steps.len()),
    );
    record_module(&mut report, "result module identities", &red.result);
    report.artifact("result", Artifact::Module(red.result));
    Ok(report)
}

fn run_fold(module: &str) -> Result<Report> {
    let m = module_from(module)?;
    let mut report = Report::new("fold");
    if record_module(&mut report, "module identities", &m) {
        let x = fold(&m)?;
        record_mf(&mut report, "p₁p₀ = p₀p₁ = f·id", &x);
        report.artifact("factorization", Artifact::Factorization(x));
    }
    Ok(report)
}

fn run_unfold(mf: &str) -> Result<Report> {
    let x = mf_from(mf)?;
    let mut report = Report::new("unfold");
    if record_mf(&mut report, "factorization identities", &x) {
        let m = unfold(&x)?;
        record_module(&mut report, "module identities", &m);
        report.check("fold ∘ unfold = id", "", fold(&m).as_ref() == Ok(&x), "folding back changes the data");
        report.artifact("module", Artifact::Module(m));
    }
    Ok(report)
}

fn mf_cone(morphism: &str) -> Result<Report> {
    let chi = load(morphism)?.parse(json::parse_mf_morphism)?;
    let mut report = Report::new("mf-cone");
    let ok = record_mf(&mut report, "source identities", chi.source()) & record_mf(&mut report, "target identities", chi.target());
    if ok {
        report.check("closed", &format!("parity {}", chi.parity()), chi.is_closed(), "δχ ≠ 0");
        if chi.is_closed() {
            let c = chi.cone()?;
            record_mf(&mut report, "cone identities", &c);
            report.artifact("factorization", Artifact::Factorization(c));
        }
    }
    Ok(report)
}

fn mf_tensor(left: &str, right: &str) -> Result<Report> {
    let (x, y) = (mf_from(left)?, mf_from(right)?);
    let mut report = Report::new("mf-tensor");
    if record_mf(&mut report, "left identities", &x) & record_mf(&mut report, "right identities", &y) {
        let t = x.tensor(&y)?;
        record_mf(&mut report, "tensor identities", &t);
        report.artifact("factorization", Artifact::Factorization(t));
    }
    Ok(report)
}

fn swap(module: &str, top: Option<i32>, certify: bool) -> Result<Report> {
    let m = module_from(module)?;
    let mut report = Report::new("swap");
    if !record_module(&mut report, "input module identities", &m) {
        return Ok(report);
    }
    let top = match top.or_else(|| m.support().map(|(_, b)| b)) {
        Some(t) => t,
        None => return Err(InputError::Invalid("the module is zero; pass --top".into())),
    };
    let s = swap_periodicity(&m, top)?;
    if certify {
        report.extend("", certify_swap(&s));
    } else {
        record_module(&mut report, "output module identities", &s.output);
    }
    report.artifact("output", Artifact::Module(s.output));
    report.artifact("phi", Artifact::Morphism(s.phi));
    report.artifact("psi", Artifact::Morphism(s.psi));
    report.artifact("chi", Artifact::Morphism(s.chi));
    Ok(report)
}

fn homology(complex: Option<&str>, module: Option<&str>) -> Result<Report> {
    let c = match (complex, module) {
        (Some(arg), _) => load(arg)?.parse(json::parse_complex)?,
        (_, Some(arg)) => module_from(arg)?.complex().clone(),
        _ => unreachable!("clap requires one input"),
    };
    let mut report = Report::new("homology");
    if !record_complex(&mut report, "complex identities", &c) {
        return Ok(report);
    }
    let mut groups = BTreeMap::new();
    if let Some((lo, hi)) = c.support() {
        for m in lo..=hi {
            match c.homology(m) {
                Ok(h) => {
                    groups.insert(m, h);
                }
                Err(Error::NotEuclidean) => {
                    report.certificate.push(
                        "homology",
                        &window(c.support()),
                        Outcome::Uncertified,
                        "ring is not Euclidean; homology not computed",
                    );
                    return Ok(report);
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    report.check("homology", &window(c.support()), true, "");
    report.artifact("homology", Artifact::Homology(c.ring().clone(), groups));
    Ok(report)
}
