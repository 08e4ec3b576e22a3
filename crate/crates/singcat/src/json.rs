//! JSON encodings of rings, matrices, complexes, modules, morphisms and
//! matrix factorizations.
//!
//! Every `*_to_json` function emits the canonical form: keys in a fixed
//! order, degree maps ascending, polynomials in the ring's canonical
//! string form. Parsing reports the JSON pointer of the first offending
//! field.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};
use singcat_core::module::Homotopy;
use singcat_core::{
    Base, ChainMorphism, Homology, KoszulAlgebra, KoszulModule, KoszulMorphism, MFMorphism, MatrixFactorization,
    PerfectComplex, Poly, Ring, RingMatrix,
};

/// A document that does not match its schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError {
    /// RFC 6901 pointer to the offending value; empty for the document root.
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "document root" } else { &self.pointer };
        write!(f, "at {at}: {}", self.message)
    }
}

impl std::error::Error for SchemaError {}

pub type Result<T> = std::result::Result<T, SchemaError>;

struct Node<'a> {
    value: &'a Value,
    pointer: String,
}

fn escape(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

impl<'a> Node<'a> {
    fn root(value: &'a Value) -> Self {
        Node {
            value,
            pointer: String::new(),
        }
    }

    fn child(&self, key: &str, value: &'a Value) -> Node<'a> {
        Node {
            value,
            pointer: format!("{}/{}", self.pointer, escape(key)),
        }
    }

    fn err(&self, message: impl Into<String>) -> SchemaError {
        SchemaError {
            pointer: self.pointer.clone(),
            message: message.into(),
        }
    }

    fn object(&self) -> Result<&'a Map<String, Value>> {
        self.value.as_object().ok_or_else(|| self.err("expected an object"))
    }

    fn field(&self, key: &str) -> Result<Node<'a>> {
        self.opt_field(key)?.ok_or_else(|| self.err(format!("missing field {key:?}")))
    }

    fn opt_field(&self, key: &str) -> Result<Option<Node<'a>>> {
        Ok(self.object()?.get(key).map(|v| self.child(key, v)))
    }

    fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.err("expected a string"))
    }

    fn usize(&self) -> Result<usize> {
        self.value
            .as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| self.err("expected a nonnegative integer"))
    }

    fn array(&self) -> Result<Vec<Node<'a>>> {
        let items = self.value.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(items.iter().enumerate().map(|(i, v)| self.child(&i.to_string(), v)).collect())
    }

    fn degrees(&self) -> Result<Vec<(i32, Node<'a>)>> {
        self.object()?
            .iter()
            .map(|(k, v)| {
                let node = self.child(k, v);
                let deg = k.parse::<i32>().map_err(|_| node.err("degree keys must be integers"))?;
                Ok((deg, node))
            })
            .collect()
    }

    fn poly(&self, ring: &Ring) -> Result<Poly> {
        ring.parse(self.str()?).map_err(|e| self.err(e.to_string()))
    }
}

fn degree_map<T>(map: &BTreeMap<i32, T>, f: impl Fn(&T) -> Value) -> Value {
    Value::Object(map.iter().map(|(d, v)| (d.to_string(), f(v))).collect())
}

fn shape_check(node: &Node, m: &RingMatrix, want: (usize, usize), what: &str) -> Result<()> {
    if m.shape() == want {
        Ok(())
    } else {
        Err(node.err(format!(
            "{what} must be {}×{}, found {}×{}",
            want.0,
            want.1,
            m.rows(),
            m.cols()
        )))
    }
}

pub fn ring_to_json(ring: &Ring) -> Value {
    let base = match ring.base() {
        Base::Integers => json!("ZZ"),
        Base::Rationals => json!("QQ"),
        Base::PrimeField(p) => json!({ "Fp": p }),
    };
    let mut m = Map::new();
    m.insert("base".into(), base);
    m.insert("vars".into(), json!(ring.vars()));
    if let Some(q) = ring.quotient() {
        m.insert("quotient".into(), json!(ring.format(q)));
    }
    Value::Object(m)
}

fn ring_node(node: &Node) -> Result<Ring> {
    let b = node.field("base")?;
    let base = match b.value {
        Value::String(s) if s == "QQ" => Base::Rationals,
        Value::String(s) if s == "ZZ" => Base::Integers,
        Value::Object(_) => {
            let p = b.field("Fp")?;
            Base::PrimeField(p.value.as_u64().ok_or_else(|| p.err("expected a prime"))?)
        }
        _ => return Err(b.err(r#"expected "QQ", "ZZ" or {"Fp": p}"#)),
    };
    let vars = match node.opt_field("vars")? {
        Some(v) => v.array()?.iter().map(|n| n.str().map(str::to_string)).collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let quotient = node.opt_field("quotient")?.map(|q| q.str()).transpose()?;
    Ring::new(base, &vars, quotient).map_err(|e| node.err(e.to_string()))
}

pub fn parse_ring(v: &Value) -> Result<Ring> {
    ring_node(&Node::root(v))
}

pub fn matrix_to_json(m: &RingMatrix) -> Value {
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": m.to_strings() })
}

fn matrix_node(node: &Node, ring: &Ring) -> Result<RingMatrix> {
    let rows = node.field("rows")?.usize()?;
    let cols = node.field("cols")?.usize()?;
    let entries = node.field("entries")?;
    let lines = entries.array()?;
    if lines.len() != rows {
        return Err(entries.err(format!("expected {rows} rows, found {}", lines.len())));
    }
    let mut m = RingMatrix::zero(ring, rows, cols);
    for (i, line) in lines.iter().enumerate() {
        let cells = line.array()?;
        if cells.len() != cols {
            return Err(line.err(format!("expected {cols} entries, found {}", cells.len())));
        }
        for (j, cell) in cells.iter().enumerate() {
            m.set(i, j, cell.poly(ring)?);
        }
    }
    Ok(m)
}

pub fn parse_matrix(v: &Value, ring: &Ring) -> Result<RingMatrix> {
    matrix_node(&Node::root(v), ring)
}

fn complex_fields(c: &PerfectComplex) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("ring".into(), ring_to_json(c.ring()));
    m.insert("ranks".into(), degree_map(c.ranks(), |r| json!(r)));
    m.insert("differentials".into(), degree_map(c.differentials(), matrix_to_json));
    m
}

pub fn complex_to_json(c: &PerfectComplex) -> Value {
    Value::Object(complex_fields(c))
}

fn complex_node(node: &Node, ring: &Ring) -> Result<PerfectComplex> {
    let mut ranks = BTreeMap::new();
    for (deg, r) in node.field("ranks")?.degrees()? {
        ranks.insert(deg, r.usize()?);
    }
    let rank = |m: i32| ranks.get(&m).copied().unwrap_or(0);
    let mut diffs = BTreeMap::new();
    if let Some(ds) = node.opt_field("differentials")? {
        for (deg, d) in ds.degrees()? {
            let mat = matrix_node(&d, ring)?;
            shape_check(&d, &mat, (rank(deg + 1), rank(deg)), "differential")?;
            diffs.insert(deg, mat);
        }
    }
    PerfectComplex::unchecked(ring, ranks, diffs).map_err(|e| node.err(e.to_string()))
}

/// Parses a complex without checking `d² = 0`.
pub fn parse_complex(v: &Value) -> Result<PerfectComplex> {
    let node = Node::root(v);
    let ring = ring_node(&node.field("ring")?)?;
    complex_node(&node, &ring)
}

pub fn module_to_json(m: &KoszulModule) -> Value {
    let ring = m.ring();
    let mut o = complex_fields(m.complex());
    let potentials: Vec<String> = m.algebra().potentials().iter().map(|p| ring.format(p)).collect();
    o.insert("potentials".into(), json!(potentials));
    let homotopies: Vec<Value> = m.homotopies().iter().map(|h| degree_map(h, matrix_to_json)).collect();
    o.insert("homotopies".into(), Value::Array(homotopies));
    Value::Object(o)
}

fn module_node(node: &Node) -> Result<KoszulModule> {
    let ring = ring_node(&node.field("ring")?)?;
    let complex = complex_node(node, &ring)?;
    let pots = node.field("potentials")?;
    let potentials = pots.array()?.iter().map(|p| p.poly(&ring)).collect::<Result<Vec<_>>>()?;
    let alg = KoszulAlgebra::new(&ring, potentials).map_err(|e| pots.err(e.to_string()))?;
    let hs = node.field("homotopies")?;
    let items = hs.array()?;
    if items.len() != alg.n() {
        return Err(hs.err(format!("expected {} homotopies, one per potential, found {}", alg.n(), items.len())));
    }
    let mut homotopies = Vec::new();
    for item in &items {
        let mut h = Homotopy::new();
        for (deg, mat) in item.degrees()? {
            let m = matrix_node(&mat, &ring)?;
            shape_check(&mat, &m, (complex.rank(deg - 1), complex.rank(deg)), "homotopy")?;
            h.insert(deg, m);
        }
        homotopies.push(h);
    }
    KoszulModule::unchecked(&alg, complex, homotopies).map_err(|e| node.err(e.to_string()))
}

/// Parses a module without checking its identities; run
/// [`KoszulModule::validate`] on the result.
pub fn parse_module(v: &Value) -> Result<KoszulModule> {
    module_node(&Node::root(v))
}

/// True when the value looks like a module rather than a bare complex.
pub fn is_module(v: &Value) -> bool {
    v.get("potentials").is_some()
}

fn same_ring(node: &Node, a: &Ring, b: &Ring) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(node.err(format!("ring {b} differs from source ring {a}")))
    }
}

fn components_node(
    node: &Node,
    ring: &Ring,
    src: impl Fn(i32) -> usize,
    tgt: impl Fn(i32) -> usize,
) -> Result<BTreeMap<i32, RingMatrix>> {
    let mut out = BTreeMap::new();
    for (deg, c) in node.field("components")?.degrees()? {
        let m = matrix_node(&c, ring)?;
        shape_check(&c, &m, (tgt(deg), src(deg)), "component")?;
        out.insert(deg, m);
    }
    Ok(out)
}

pub fn morphism_to_json(phi: &KoszulMorphism) -> Value {
    json!({
        "source": module_to_json(phi.source()),
        "target": module_to_json(phi.target()),
        "components": degree_map(phi.components(), matrix_to_json),
    })
}

/// Parses a module morphism without checking that it is a cocycle.
pub fn parse_morphism(v: &Value) -> Result<KoszulMorphism> {
    let node = Node::root(v);
    let source = module_node(&node.field("source")?)?;
    let tnode = node.field("target")?;
    let target = module_node(&tnode)?;
    same_ring(&tnode, source.ring(), target.ring())?;
    let comps = components_node(&node, source.ring(), |m| source.rank(m), |m| target.rank(m))?;
    KoszulMorphism::unchecked(&source, &target, comps).map_err(|e| node.err(e.to_string()))
}

pub fn chain_morphism_to_json(phi: &ChainMorphism) -> Value {
    json!({
        "source": complex_to_json(phi.source()),
        "target": complex_to_json(phi.target()),
        "components": degree_map(phi.components(), matrix_to_json),
    })
}

/// Parses a chain map between bare complexes without checking it commutes
/// with the differentials.
pub fn parse_chain_morphism(v: &Value) -> Result<ChainMorphism> {
    let node = Node::root(v);
    let snode = node.field("source")?;
    let tnode = node.field("target")?;
    let ring = ring_node(&snode.field("ring")?)?;
    let target_ring = ring_node(&tnode.field("ring")?)?;
    same_ring(&tnode, &ring, &target_ring)?;
    let source = complex_node(&snode, &ring)?;
    let target = complex_node(&tnode, &ring)?;
    let comps = components_node(&node, &ring, |m| source.rank(m), |m| target.rank(m))?;
    ChainMorphism::unchecked(&source, &target, comps).map_err(|e| node.err(e.to_string()))
}

pub fn mf_to_json(x: &MatrixFactorization) -> Value {
    json!({
        "ring": ring_to_json(x.ring()),
        "potential": x.ring().format(x.potential()),
        "p0": matrix_to_json(x.p0()),
        "p1": matrix_to_json(x.p1()),
    })
}

fn mf_node(node: &Node) -> Result<MatrixFactorization> {
    let ring = ring_node(&node.field("ring")?)?;
    let f = node.field("potential")?.poly(&ring)?;
    let p0 = matrix_node(&node.field("p0")?, &ring)?;
    let n1 = node.field("p1")?;
    let p1 = matrix_node(&n1, &ring)?;
    shape_check(&n1, &p1, (p0.cols(), p0.rows()), "p1")?;
    MatrixFactorization::unchecked(&ring, f, p0, p1).map_err(|e| node.err(e.to_string()))
}

/// Parses a factorization without checking `p₁p₀ = p₀p₁ = f`.
pub fn parse_mf(v: &Value) -> Result<MatrixFactorization> {
    mf_node(&Node::root(v))
}

pub fn mf_morphism_to_json(chi: &MFMorphism) -> Value {
    json!({
        "source": mf_to_json(chi.source()),
        "target": mf_to_json(chi.target()),
        "parity": chi.parity(),
        "chi0": matrix_to_json(chi.chi0()),
        "chi1": matrix_to_json(chi.chi1()),
    })
}

pub fn parse_mf_morphism(v: &Value) -> Result<MFMorphism> {
    let node = Node::root(v);
    let source = mf_node(&node.field("source")?)?;
    let tnode = node.field("target")?;
    let target = mf_node(&tnode)?;
    same_ring(&tnode, source.ring(), target.ring())?;
    let pnode = node.field("parity")?;
    let parity = match pnode.usize()? {
        p @ (0 | 1) => p as u8,
        _ => return Err(pnode.err("parity must be 0 or 1")),
    };
    let chi0 = matrix_node(&node.field("chi0")?, source.ring())?;
    let chi1 = matrix_node(&node.field("chi1")?, source.ring())?;
    MFMorphism::new(&source, &target, parity, chi0, chi1).map_err(|e| node.err(e.to_string()))
}

pub fn homology_to_json(ring: &Ring, groups: &BTreeMap<i32, Homology>) -> Value {
    degree_map(groups, |h| {
        let torsion: Vec<String> = h.torsion.iter().map(|t| ring.format(t)).collect();
        json!({ "free_rank": h.free_rank, "torsion": torsion })
    })
}

/// Comma-separated polynomials, as given to `--potentials`.
pub fn parse_potentials(ring: &Ring, list: &[String]) -> std::result::Result<Vec<Poly>, String> {
    list.iter()
        .map(|s| ring.parse(s.trim()).map_err(|e| e.to_string()))
        .collect()
}
