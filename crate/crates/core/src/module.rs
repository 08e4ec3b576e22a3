//! Dg-modules over the Koszul algebra: a complex `(E, d)` with degree −1
//! operators `h^1..h^n` such that `h^i h^i = 0`, `[d, h^i] = f_i` and
//! `[h^i, h^j] = 0`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{sign, span, ChainMorphism, PerfectComplex};
use crate::error::{Error, Result};
use crate::koszul::{KoszulAlgebra, Subset};
use crate::matrix::RingMatrix;
use crate::ring::{Base, Poly, Ring};

/// `h_m : E_m -> E_{m-1}` by degree.
pub type Homotopy = BTreeMap<i32, RingMatrix>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulModule {
    algebra: KoszulAlgebra,
    complex: PerfectComplex,
    homotopies: Vec<Homotopy>,
}

/// One failed identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub degree: i32,
    /// Generator indices involved (0-based).
    pub indices: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ≠ 0 at degree {}", self.identity, self.degree)?;
        match self.indices.as_slice() {
            [] => Ok(()),
            [i] => write!(f, " (i={})", i + 1),
            [i, j, ..] => write!(f, " (i={}, j={})", i + 1, j + 1),
        }
    }
}

pub const D_SQUARED: &str = "d²";
pub const H_SQUARED: &str = "h²";
pub const D_H_COMMUTATOR: &str = "[d,h]−f·id";
pub const H_H_COMMUTATOR: &str = "[h_i,h_j]";
pub const CHAIN_MAP: &str = "dφ−φd";
pub const HOMOTOPY_MAP: &str = "hφ−φh";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, identity: &'static str, degree: i32, indices: Vec<usize>) {
        self.violations.push(Violation {
            identity,
            degree,
            indices,
        });
    }

    fn into_result(self, wrap: fn(String) -> Error) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(wrap(alloc::format!("{v}"))),
        }
    }
}

fn fill_homotopy(ring: &Ring, c: &PerfectComplex, h: Homotopy) -> Result<Homotopy> {
    let mut kept = Homotopy::new();
    for (m, mat) in h {
        ring.same(mat.ring())?;
        let want = (c.rank(m - 1), c.rank(m));
        if mat.shape() != want {
            return Err(Error::ShapeMismatch {
                op: "homotopy",
                left: mat.shape(),
                right: want,
            });
        }
        if want.0 > 0 && want.1 > 0 {
            kept.insert(m, mat);
        }
    }
    for (&m, &r) in c.ranks() {
        let below = c.rank(m - 1);
        if below > 0 {
            kept.entry(m).or_insert_with(|| RingMatrix::zero(ring, below, r));
        }
    }
    Ok(kept)
}

impl KoszulModule {
    /// Builds a module and rejects it unless every identity holds.
    pub fn new(algebra: &KoszulAlgebra, complex: PerfectComplex, homotopies: Vec<Homotopy>) -> Result<Self> {
        let m = Self::unchecked(algebra, complex, homotopies)?;
        m.validate().into_result(Error::InvalidModule)?;
        Ok(m)
    }

    /// Shape-checked only; see [`KoszulModule::validate`].
    pub fn unchecked(algebra: &KoszulAlgebra, complex: PerfectComplex, homotopies: Vec<Homotopy>) -> Result<Self> {
        let ring = algebra.ring();
        ring.same(complex.ring())?;
        if homotopies.len() != algebra.n() {
            return Err(Error::PotentialCountMismatch(homotopies.len(), algebra.n()));
        }
        let homotopies = homotopies
            .into_iter()
            .map(|h| fill_homotopy(ring, &complex, h))
            .collect::<Result<_>>()?;
        Ok(KoszulModule {
            algebra: algebra.clone(),
            complex,
            homotopies,
        })
    }

    pub fn zero(algebra: &KoszulAlgebra) -> Self {
        KoszulModule {
            algebra: algebra.clone(),
            complex: PerfectComplex::zero(algebra.ring()),
            homotopies: (0..algebra.n()).map(|_| Homotopy::new()).collect(),
        }
    }

    /// `E_{m-1} --d--> E_m` with a single homotopy `h : E_m -> E_{m-1}`,
    /// validated like [`KoszulModule::new`].
    pub fn two_term(algebra: &KoszulAlgebra, m: i32, d: &RingMatrix, h: &RingMatrix) -> Result<Self> {
        if algebra.n() != 1 {
            return Err(Error::NotMonoPotential(algebra.n()));
        }
        let c = PerfectComplex::two_term(m - 1, d);
        Self::new(algebra, c, alloc::vec![[(m, h.clone())].into()])
    }

    /// The unit object: the coefficient ring in degree 0 over `K(A, 0, …, 0)`.
    pub fn unit(base: Base, n: usize) -> Result<Self> {
        let ring = Ring::new::<&str>(base, &[], None)?;
        let alg = KoszulAlgebra::new(&ring, alloc::vec![Poly::zero(); n])?;
        Self::unchecked(&alg, PerfectComplex::concentrated(&ring, 0, 1), alloc::vec![Homotopy::new(); n])
    }

    pub fn algebra(&self) -> &KoszulAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &Ring {
        self.algebra.ring()
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn complex(&self) -> &PerfectComplex {
        &self.complex
    }

    pub fn rank(&self, m: i32) -> usize {
        self.complex.rank(m)
    }

    pub fn d(&self, m: i32) -> RingMatrix {
        self.complex.d(m)
    }

    pub fn support(&self) -> Option<(i32, i32)> {
        self.complex.support()
    }

    pub fn amplitude(&self) -> usize {
        self.complex.amplitude()
    }

    pub fn homotopies(&self) -> &[Homotopy] {
        &self.homotopies
    }

    /// `h^i_m : E_m -> E_{m-1}`.
    pub fn h(&self, i: usize, m: i32) -> RingMatrix {
        self.homotopies[i]
            .get(&m)
            .cloned()
            .unwrap_or_else(|| RingMatrix::zero(self.ring(), self.rank(m - 1), self.rank(m)))
    }

    /// Lists every failing module identity.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for m in self.complex.d_squared_violations() {
            report.push(D_SQUARED, m, Vec::new());
        }
        let Some((lo, hi)) = self.support() else {
            return report;
        };
        let ring = self.ring();
        for i in 0..self.n() {
            for m in lo..=hi {
                if !(&self.h(i, m - 1) * &self.h(i, m)).is_zero() {
                    report.push(H_SQUARED, m, alloc::vec![i]);
                }
            }
            for m in lo..=hi {
                let lhs = &(&self.d(m - 1) * &self.h(i, m)) + &(&self.h(i, m + 1) * &self.d(m));
                let rhs = RingMatrix::scalar(ring, self.rank(m), self.algebra.potential(i));
                if lhs != rhs {
                    report.push(D_H_COMMUTATOR, m, alloc::vec![i]);
                }
            }
        }
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                for m in lo..=hi {
                    let s = &(&self.h(i, m - 1) * &self.h(j, m)) + &(&self.h(j, m - 1) * &self.h(i, m));
                    if !s.is_zero() {
                        report.push(H_H_COMMUTATOR, m, alloc::vec![i, j]);
                    }
                }
            }
        }
        report
    }

    /// `M[k]`: degree `m` holds `E_{m+k}`; `d` and every `h` pick up `(−1)^k`.
    pub fn shift(&self, k: i32) -> Self {
        let neg = sign(k as i64);
        KoszulModule {
            algebra: self.algebra.clone(),
            complex: self.complex.shift(k),
            homotopies: self
                .homotopies
                .iter()
                .map(|h| h.iter().map(|(&m, x)| (m - k, if neg { -x } else { x.clone() })).collect())
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidModule("direct summands over different algebras".into()));
        }
        let complex = self.complex.direct_sum(&other.complex)?;
        let range = span([self.support(), other.support()]);
        let homotopies = (0..self.n())
            .map(|i| {
                let mut h = Homotopy::new();
                if let Some((lo, hi)) = range {
                    for m in lo + 1..=hi {
                        h.insert(m, RingMatrix::block_diag(self.ring(), &[&self.h(i, m), &other.h(i, m)]));
                    }
                }
                h
            })
            .collect();
        Self::unchecked(&self.algebra, complex, homotopies)
    }

    /// `h^{i_1} ∘ … ∘ h^{i_k}` on `E_m` (so `h^{i_k}` acts first),
    /// a map `E_m -> E_{m-k}`.
    pub fn composite_homotopy(&self, indices: &[usize], m: i32) -> RingMatrix {
        let mut acc = RingMatrix::identity(self.ring(), self.rank(m));
        let mut deg = m;
        for &i in indices.iter().rev() {
            acc = &self.h(i, deg) * &acc;
            deg -= 1;
        }
        acc
    }

    /// Checks `[d, H] = Σ_j (−1)^{j+1} f_{i_j} H_{∖j}` for
    /// `H = h^{i_1} ∘ … ∘ h^{i_k}`, degree by degree.
    pub fn commutator_check(&self, indices: &[usize]) -> Result<bool> {
        Subset::from_indices(indices, self.n())?;
        let Some((lo, hi)) = self.support() else {
            return Ok(true);
        };
        let k = indices.len() as i32;
        let ring = self.ring();
        for m in lo - 1..=hi + 1 {
            let h_here = self.composite_homotopy(indices, m);
            let h_next = self.composite_homotopy(indices, m + 1);
            let dh = &self.d(m - k) * &h_here;
            let hd = &h_next * &self.d(m);
            let lhs = if sign(k as i64) { &dh + &hd } else { &dh - &hd };
            let mut rhs = RingMatrix::zero(ring, lhs.rows(), lhs.cols());
            for (j, &i) in indices.iter().enumerate() {
                let rest: Vec<usize> = indices.iter().copied().filter(|&x| x != i).collect();
                let f = self.algebra.potential(i);
                let f = if j % 2 == 1 { ring.neg(f) } else { f.clone() };
                rhs = &rhs + &self.composite_homotopy(&rest, m).scale(&f);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulMorphism {
    source: KoszulModule,
    target: KoszulModule,
    chain: ChainMorphism,
}

impl KoszulMorphism {
    /// Builds a morphism and rejects it unless it commutes with `d` and every `h`.
    pub fn new(source: &KoszulModule, target: &KoszulModule, components: BTreeMap<i32, RingMatrix>) -> Result<Self> {
        let f = Self::unchecked(source, target, components)?;
        f.validate().into_result(Error::InvalidMorphism)?;
        Ok(f)
    }

    pub fn unchecked(source: &KoszulModule, target: &KoszulModule, components: BTreeMap<i32, RingMatrix>) -> Result<Self> {
        if source.algebra != target.algebra {
            return Err(Error::InvalidMorphism("source and target have different algebras".into()));
        }
        Ok(KoszulMorphism {
            source: source.clone(),
            target: target.clone(),
            chain: ChainMorphism::unchecked(&source.complex, &target.complex, components)?,
        })
    }

    pub fn identity(m: &KoszulModule) -> Self {
        KoszulMorphism {
            source: m.clone(),
            target: m.clone(),
            chain: ChainMorphism::identity(&m.complex),
        }
    }

    pub fn zero(source: &KoszulModule, target: &KoszulModule) -> Result<Self> {
        Self::unchecked(source, target, BTreeMap::new())
    }

    pub fn source(&self) -> &KoszulModule {
        &self.source
    }

    pub fn target(&self) -> &KoszulModule {
        &self.target
    }

    pub fn chain(&self) -> &ChainMorphism {
        &self.chain
    }

    pub fn component(&self, m: i32) -> RingMatrix {
        self.chain.component(m)
    }

    pub fn components(&self) -> &BTreeMap<i32, RingMatrix> {
        self.chain.components()
    }

    /// Lists degrees where the morphism fails to commute with `d` or some `h`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for m in self.chain.chain_violations() {
            report.push(CHAIN_MAP, m, Vec::new());
        }
        if let Some((lo, hi)) = self.chain.support() {
            for i in 0..self.source.n() {
                for m in lo..=hi + 1 {
                    let a = &self.target.h(i, m) * &self.component(m);
                    let b = &self.component(m - 1) * &self.source.h(i, m);
                    if a != b {
                        report.push(HOMOTOPY_MAP, m, alloc::vec![i]);
                    }
                }
            }
        }
        report
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::InvalidMorphism("composed morphisms do not share an object".into()));
        }
        Ok(KoszulMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            chain: self.chain.then(&other.chain)?,
        })
    }

    /// Mapping cone; rejects morphisms that fail [`KoszulMorphism::validate`].
    pub fn cone(&self) -> Result<KoszulModule> {
        self.validate().into_result(Error::InvalidMorphism)?;
        Ok(self.cone_unchecked())
    }

    /// Degree `s` is `Src_{s+1} ⊕ Tgt_s` with `D = [[−d, 0], [φ, d']]` and
    /// `H^i = [[−h^i, 0], [0, h'^i]]`.
    pub fn cone_unchecked(&self) -> KoszulModule {
        let ring = self.source.ring();
        let complex = self.chain.cone();
        let homotopies = (0..self.source.n())
            .map(|i| {
                let mut h = Homotopy::new();
                if let Some((lo, hi)) = complex.support() {
                    for s in lo + 1..=hi {
                        let a = -&self.source.h(i, s + 1);
                        h.insert(s, RingMatrix::block_diag(ring, &[&a, &self.target.h(i, s)]));
                    }
                }
                h
            })
            .collect();
        KoszulModule::unchecked(self.source.algebra(), complex, homotopies).unwrap()
    }

    /// Cone has zero homology (Euclidean rings only).
    pub fn is_quasi_isomorphism(&self) -> Result<bool> {
        self.chain.is_quasi_isomorphism()
    }
}

/// Offsets of labelled blocks inside one degree of a direct sum.
#[derive(Clone, Debug)]
pub(crate) struct Blocks<K> {
    pub entries: Vec<(K, usize, usize)>,
    pub total: usize,
}

impl<K: PartialEq + Copy> Blocks<K> {
    pub fn new(parts: impl IntoIterator<Item = (K, usize)>) -> Self {
        let mut entries = Vec::new();
        let mut total = 0;
        for (k, size) in parts {
            entries.push((k, total, size));
            total += size;
        }
        Blocks { entries, total }
    }

    pub fn find(&self, key: K) -> Option<(usize, usize)> {
        self.entries.iter().find(|e| e.0 == key).map(|e| (e.1, e.2))
    }
}

/// Blocks of `(C ⊗ K)_m`: one per subset `S`, holding `C_{m+|S|}`.
pub(crate) fn koszul_tensor_blocks(alg: &KoszulAlgebra, c: &PerfectComplex, m: i32) -> Blocks<Subset> {
    Blocks::new((0..=alg.n()).flat_map(|k| alg.basis(k).iter().map(move |&s| (s, c.rank(m + k as i32)))))
}

/// The free module `C ⊗ K(B, f)` with
/// `∂(x ⊗ ε_S) = (−1)^k d(x) ⊗ ε_S + Σ_j (−1)^{j+1} f_{i_j} x ⊗ ε_{S∖i_j}`
/// and `η^i(x ⊗ ε_S) = (−1)^{#{s∈S : s<i}} x ⊗ ε_{S∪i}`.
pub fn tensor_with_koszul(alg: &KoszulAlgebra, c: &PerfectComplex) -> Result<KoszulModule> {
    let ring = alg.ring();
    ring.same(c.ring())?;
    let n = alg.n();
    let Some((lo, hi)) = c.support() else {
        return Ok(KoszulModule::zero(alg));
    };
    let (lo, hi) = (lo - n as i32, hi);
    let blocks: BTreeMap<i32, Blocks<Subset>> = (lo - 1..=hi + 1).map(|m| (m, koszul_tensor_blocks(alg, c, m))).collect();
    let mut ranks = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    let mut homotopies: Vec<Homotopy> = alloc::vec![Homotopy::new(); n];
    for m in lo..=hi {
        let (src, tgt, below) = (&blocks[&m], &blocks[&(m + 1)], &blocks[&(m - 1)]);
        ranks.insert(m, src.total);
        let mut d = RingMatrix::zero(ring, tgt.total, src.total);
        for &(s, off, size) in &src.entries {
            if size == 0 {
                continue;
            }
            let k = s.len() as i32;
            let dc = c.d(m + k);
            let (toff, _) = tgt.find(s).unwrap();
            d.set_block(toff, off, &if sign(k as i64) { -&dc } else { dc });
            for (j, i) in s.indices().enumerate() {
                let f = alg.potential(i);
                let f = if j % 2 == 1 { ring.neg(f) } else { f.clone() };
                let (toff, _) = tgt.find(s.remove(i)).unwrap();
                d.set_block(toff, off, &RingMatrix::scalar(ring, size, &f));
            }
        }
        diffs.insert(m, d);
        for (i, h) in homotopies.iter_mut().enumerate() {
            let mut eta = RingMatrix::zero(ring, below.total, src.total);
            for &(s, off, size) in &src.entries {
                if size == 0 || s.contains(i) {
                    continue;
                }
                let (toff, _) = below.find(s.insert(i)).unwrap();
                let one = if s.count_below(i) % 2 == 1 {
                    ring.neg(&ring.one())
                } else {
                    ring.one()
                };
                eta.set_block(toff, off, &RingMatrix::scalar(ring, size, &one));
            }
            h.insert(m, eta);
        }
    }
    KoszulModule::unchecked(alg, PerfectComplex::unchecked(ring, ranks, diffs)?, homotopies)
}

/// The Koszul algebra as a module over itself (`h^i` = left multiplication by `ε_i`).
pub fn koszul_self_module(alg: &KoszulAlgebra) -> KoszulModule {
    tensor_with_koszul(alg, &PerfectComplex::concentrated(alg.ring(), 0, 1)).unwrap()
}

/// The canonical morphism `M.complex ⊗ K -> M`,
/// `x ⊗ ε_{i_1}∧…∧ε_{i_k} ↦ h^{i_1} ∘ … ∘ h^{i_k}(x)`.
pub fn phi_morphism(m: &KoszulModule) -> Result<KoszulMorphism> {
    let t = tensor_with_koszul(m.algebra(), m.complex())?;
    let alg = m.algebra();
    let mut comps = BTreeMap::new();
    if let Some((lo, hi)) = t.support() {
        for deg in lo..=hi {
            let blocks = koszul_tensor_blocks(alg, m.complex(), deg);
            let mut c = RingMatrix::zero(m.ring(), m.rank(deg), blocks.total);
            for &(s, off, size) in &blocks.entries {
                if size == 0 || m.rank(deg) == 0 {
                    continue;
                }
                let idx: Vec<usize> = s.indices().collect();
                c.set_block(0, off, &m.composite_homotopy(&idx, deg + s.len() as i32));
            }
            comps.insert(deg, c);
        }
    }
    KoszulMorphism::unchecked(&t, m, comps)
}

/// External product over `B ⊗ C` with potentials `f_i + g_i`. Degree `s`
/// is `⊕_{a+b=s} M_a ⊗ N_b` (ascending `a`), `D = d ⊗ 1 + (−1)^a 1 ⊗ d'`
/// and `H^i = h^i ⊗ 1 + (−1)^a 1 ⊗ h'^i`.
pub fn box_tensor(m: &KoszulModule, n: &KoszulModule) -> Result<KoszulModule> {
    if m.n() != n.n() {
        return Err(Error::PotentialCountMismatch(m.n(), n.n()));
    }
    let (rm, rn) = (m.ring(), n.ring());
    let ring = rm.join(rn)?;
    let off = rm.nvars();
    let lift_m = |x: &RingMatrix| x.map_ring(&ring, |p| ring.embed(rm, 0, p));
    let lift_n = |x: &RingMatrix| x.map_ring(&ring, |p| ring.embed(rn, off, p));
    let potentials = (0..m.n())
        .map(|i| {
            ring.add(
                &ring.embed(rm, 0, m.algebra().potential(i)),
                &ring.embed(rn, off, n.algebra().potential(i)),
            )
        })
        .collect();
    let alg = KoszulAlgebra::new(&ring, potentials)?;
    let (Some((ml, mh)), Some((nl, nh))) = (m.support(), n.support()) else {
        return Ok(KoszulModule::zero(&alg));
    };
    let blocks = |s: i32| Blocks::new((ml..=mh).map(|a| (a, m.rank(a) * n.rank(s - a))));
    let id = |r: usize| RingMatrix::identity(&ring, r);
    let mut ranks = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    let mut homotopies: Vec<Homotopy> = alloc::vec![Homotopy::new(); m.n()];
    for s in ml + nl..=mh + nh {
        let (src, up, down) = (blocks(s), blocks(s + 1), blocks(s - 1));
        ranks.insert(s, src.total);
        let mut d = RingMatrix::zero(&ring, up.total, src.total);
        for &(a, o, size) in &src.entries {
            if size == 0 {
                continue;
            }
            let b = s - a;
            if let Some((t, _)) = up.find(a + 1).filter(|e| e.1 > 0) {
                d.set_block(t, o, &lift_m(&m.d(a)).kron(&id(n.rank(b))));
            }
            let (t, _) = up.find(a).unwrap();
            let x = id(m.rank(a)).kron(&lift_n(&n.d(b)));
            d.set_block(t, o, &if sign(a as i64) { -&x } else { x });
        }
        diffs.insert(s, d);
        for (i, h) in homotopies.iter_mut().enumerate() {
            let mut x = RingMatrix::zero(&ring, down.total, src.total);
            for &(a, o, size) in &src.entries {
                if size == 0 {
                    continue;
                }
                let b = s - a;
                if let Some((t, _)) = down.find(a - 1).filter(|e| e.1 > 0) {
                    x.set_block(t, o, &lift_m(&m.h(i, a)).kron(&id(n.rank(b))));
                }
                let (t, _) = down.find(a).unwrap();
                let y = id(m.rank(a)).kron(&lift_n(&n.h(i, b)));
                x.set_block(t, o, &if sign(a as i64) { -&y } else { y });
            }
            h.insert(s, x);
        }
    }
    KoszulModule::unchecked(&alg, PerfectComplex::unchecked(&ring, ranks, diffs)?, homotopies)
}
