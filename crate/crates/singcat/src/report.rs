//! Command reports: a status, the checks behind it, and the objects produced.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Map, Value};
use singcat_core::{
    Certificate, ChainMorphism, Homology, KoszulModule, KoszulMorphism, MFMorphism, MatrixFactorization, Outcome,
    PerfectComplex, Ring, RingMatrix, ValidationReport,
};

use crate::json;

#[derive(Clone, Debug)]
pub enum Artifact {
    Complex(PerfectComplex),
    Module(KoszulModule),
    Morphism(KoszulMorphism),
    ChainMorphism(ChainMorphism),
    Factorization(MatrixFactorization),
    FactorizationMorphism(MFMorphism),
    Homology(Ring, BTreeMap<i32, Homology>),
}

impl Artifact {
    pub fn to_json(&self) -> Value {
        match self {
            Artifact::Complex(c) => json::complex_to_json(c),
            Artifact::Module(m) => json::module_to_json(m),
            Artifact::Morphism(phi) => json::morphism_to_json(phi),
            Artifact::ChainMorphism(phi) => json::chain_morphism_to_json(phi),
            Artifact::Factorization(x) => json::mf_to_json(x),
            Artifact::FactorizationMorphism(chi) => json::mf_morphism_to_json(chi),
            Artifact::Homology(r, h) => json::homology_to_json(r, h),
        }
    }

    fn write_text(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        match self {
            Artifact::Complex(c) => write_complex(out, c, indent),
            Artifact::Module(m) => write_module(out, m, indent),
            Artifact::Morphism(phi) => {
                let _ = writeln!(out, "{pad}source:");
                write_module(out, phi.source(), indent + 2);
                let _ = writeln!(out, "{pad}target:");
                write_module(out, phi.target(), indent + 2);
                write_components(out, phi.components(), indent);
            }
            Artifact::ChainMorphism(phi) => {
                let _ = writeln!(out, "{pad}source:");
                write_complex(out, phi.source(), indent + 2);
                let _ = writeln!(out, "{pad}target:");
                write_complex(out, phi.target(), indent + 2);
                write_components(out, phi.components(), indent);
            }
            Artifact::Factorization(x) => {
                let _ = writeln!(out, "{pad}ring: {}", x.ring());
                let _ = writeln!(out, "{pad}potential: {}", x.ring().format(x.potential()));
                write_matrix(out, "p0", x.p0(), indent);
                write_matrix(out, "p1", x.p1(), indent);
            }
            Artifact::FactorizationMorphism(chi) => {
                let _ = writeln!(out, "{pad}parity: {}", chi.parity());
                write_matrix(out, "chi0", chi.chi0(), indent);
                write_matrix(out, "chi1", chi.chi1(), indent);
            }
            Artifact::Homology(r, groups) => {
                if groups.is_empty() {
                    let _ = writeln!(out, "{pad}(zero complex)");
                }
                for (deg, h) in groups {
                    let mut parts = Vec::new();
                    if h.free_rank > 0 {
                        parts.push(format!("{r}^{}", h.free_rank));
                    }
                    parts.extend(h.torsion.iter().map(|t| format!("{r}/({})", r.format(t))));
                    let group = if parts.is_empty() { "0".to_string() } else { parts.join(" ⊕ ") };
                    let _ = writeln!(out, "{pad}H^{deg} = {group}");
                }
            }
        }
    }
}

fn write_matrix(out: &mut String, label: &str, m: &RingMatrix, indent: usize) {
    let pad = " ".repeat(indent);
    let _ = writeln!(out, "{pad}{label} ({}×{}):", m.rows(), m.cols());
    let cells = m.to_strings();
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| cells.iter().map(|row| row[j].chars().count()).max().unwrap_or(0))
        .collect();
    for row in cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "{pad}  [ {} ]", line.join("  "));
    }
}

fn write_complex(out: &mut String, c: &PerfectComplex, indent: usize) {
    let pad = " ".repeat(indent);
    let ranks: Vec<String> = c.ranks().iter().map(|(d, r)| format!("{d}:{r}")).collect();
    let _ = writeln!(out, "{pad}ring: {}", c.ring());
    let _ = writeln!(out, "{pad}ranks: {}", if ranks.is_empty() { "(zero)".into() } else { ranks.join(", ") });
    for (deg, d) in c.differentials() {
        write_matrix(out, &format!("d^{deg}"), d, indent);
    }
}

fn write_module(out: &mut String, m: &KoszulModule, indent: usize) {
    let pad = " ".repeat(indent);
    write_complex(out, m.complex(), indent);
    let pots: Vec<String> = m.algebra().potentials().iter().map(|p| m.ring().format(p)).collect();
    let _ = writeln!(out, "{pad}potentials: {}", pots.join(", "));
    for (i, h) in m.homotopies().iter().enumerate() {
        for (deg, mat) in h {
            write_matrix(out, &format!("h{}^{deg}", i + 1), mat, indent);
        }
    }
}

fn write_components(out: &mut String, comps: &BTreeMap<i32, RingMatrix>, indent: usize) {
    for (deg, c) in comps {
        write_matrix(out, &format!("component {deg}"), c, indent);
    }
}

/// The result of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub certificate: Certificate,
    pub artifacts: Vec<(String, Artifact)>,
    /// Files written alongside the report.
    pub files: Vec<PathBuf>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            certificate: Certificate::new(),
            artifacts: Vec::new(),
            files: Vec::new(),
        }
    }

    pub fn status(&self) -> Outcome {
        self.certificate.status()
    }

    pub fn check(&mut self, name: &str, location: &str, ok: bool, detail: impl Into<String>) {
        self.certificate.check(name, location, ok, detail);
    }

    pub fn validation(&mut self, name: &str, location: &str, report: &ValidationReport) {
        self.certificate.validation(name, location, report);
    }

    /// Appends the checks of `cert`, prefixing their names.
    pub fn extend(&mut self, prefix: &str, cert: Certificate) {
        for mut c in cert.checks {
            c.name = format!("{prefix}{}", c.name);
            self.certificate.checks.push(c);
        }
    }

    pub fn artifact(&mut self, name: &str, a: Artifact) {
        self.artifacts.push((name.into(), a));
    }

    /// Exit status: 0 for pass and uncertified, 1 for fail.
    pub fn exit_code(&self) -> u8 {
        match self.status() {
            Outcome::Fail => 1,
            Outcome::Pass | Outcome::Uncertified => 0,
        }
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .certificate
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "location": c.location,
                    "outcome": c.outcome.as_str(),
                    "detail": c.detail,
                })
            })
            .collect();
        let artifacts: Map<String, Value> = self.artifacts.iter().map(|(n, a)| (n.clone(), a.to_json())).collect();
        let mut o = Map::new();
        o.insert("command".into(), json!(self.command));
        o.insert("status".into(), json!(self.status().as_str()));
        o.insert("checks".into(), Value::Array(checks));
        o.insert("artifacts".into(), Value::Object(artifacts));
        if !self.files.is_empty() {
            let files: Vec<String> = self.files.iter().map(|p| p.display().to_string()).collect();
            o.insert("files".into(), json!(files));
        }
        Value::Object(o)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, self.status());
        for c in &self.certificate.checks {
            let _ = write!(out, "  [{}] {}", c.outcome, c.name);
            if !c.location.is_empty() {
                let _ = write!(out, " @ {}", c.location);
            }
            if !c.detail.is_empty() {
                let _ = write!(out, ": {}", c.detail);
            }
            out.push('\n');
        }
        for (name, a) in &self.artifacts {
            let _ = writeln!(out, "{name}:");
            a.write_text(&mut out, 2);
        }
        for f in &self.files {
            let _ = writeln!(out, "wrote {}", f.display());
        }
        out
    }
}
