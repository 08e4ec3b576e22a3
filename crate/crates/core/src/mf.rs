//! Matrix factorizations `(E_0, E_1, p_0, p_1)` with `p_1 p_0 = f` and
//! `p_0 p_1 = f`, and their relation to dg-modules over `K(B, f)`.
//!
//! Folding sends a module to `E_0 = ⊕ E_{odd}`, `E_1 = ⊕ E_{even}` (blocks in
//! ascending degree) with both maps given by `d + h`; unfolding places
//! `E_0 --p_0--> E_1` in degrees `[−1, 0]` with `h = p_1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::certificate::Certificate;
use crate::complex::PerfectComplex;
use crate::error::{Error, Result};
use crate::koszul::KoszulAlgebra;
use crate::matrix::RingMatrix;
use crate::module::{phi_morphism, tensor_with_koszul, KoszulModule, KoszulMorphism, ValidationReport, Violation};
use crate::ring::{Poly, Ring};

pub const P1_P0: &str = "p₁p₀−f·id";
pub const P0_P1: &str = "p₀p₁−f·id";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    ring: Ring,
    potential: Poly,
    p0: RingMatrix,
    p1: RingMatrix,
}

impl MatrixFactorization {
    /// Rejects the data unless both composites equal `f · id`.
    pub fn new(ring: &Ring, potential: Poly, p0: RingMatrix, p1: RingMatrix) -> Result<Self> {
        let x = Self::unchecked(ring, potential, p0, p1)?;
        if let Some(v) = x.validate().violations.first() {
            return Err(Error::InvalidFactorization(format!("{v}")));
        }
        Ok(x)
    }

    /// Checks that `p_0 : E_0 → E_1` and `p_1 : E_1 → E_0` have matching shapes.
    pub fn unchecked(ring: &Ring, potential: Poly, p0: RingMatrix, p1: RingMatrix) -> Result<Self> {
        ring.same(p0.ring())?;
        ring.same(p1.ring())?;
        if (p1.rows(), p1.cols()) != (p0.cols(), p0.rows()) {
            return Err(Error::ShapeMismatch {
                op: "matrix factorization",
                left: p0.shape(),
                right: p1.shape(),
            });
        }
        Ok(MatrixFactorization {
            ring: ring.clone(),
            potential: ring.normalize(&potential),
            p0,
            p1,
        })
    }

    pub fn zero(ring: &Ring, potential: Poly) -> Self {
        Self::unchecked(ring, potential, RingMatrix::zero(ring, 0, 0), RingMatrix::zero(ring, 0, 0)).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn potential(&self) -> &Poly {
        &self.potential
    }

    pub fn p0(&self) -> &RingMatrix {
        &self.p0
    }

    pub fn p1(&self) -> &RingMatrix {
        &self.p1
    }

    pub fn e0(&self) -> usize {
        self.p0.cols()
    }

    pub fn e1(&self) -> usize {
        self.p0.rows()
    }

    /// Reports `p₁p₀ − f·id` as degree 0 and `p₀p₁ − f·id` as degree 1.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let f = &self.potential;
        if &self.p1 * &self.p0 != RingMatrix::scalar(&self.ring, self.e0(), f) {
            report.violations.push(Violation {
                identity: P1_P0,
                degree: 0,
                indices: Vec::new(),
            });
        }
        if &self.p0 * &self.p1 != RingMatrix::scalar(&self.ring, self.e1(), f) {
            report.violations.push(Violation {
                identity: P0_P1,
                degree: 1,
                indices: Vec::new(),
            });
        }
        report
    }

    /// Suspension `(E_1, E_0, −p_1, −p_0)`.
    pub fn shift(&self) -> Self {
        MatrixFactorization {
            ring: self.ring.clone(),
            potential: self.potential.clone(),
            p0: -&self.p1,
            p1: -&self.p0,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_category(other)?;
        Self::unchecked(
            &self.ring,
            self.potential.clone(),
            RingMatrix::block_diag(&self.ring, &[&self.p0, &other.p0]),
            RingMatrix::block_diag(&self.ring, &[&self.p1, &other.p1]),
        )
    }

    fn same_category(&self, other: &Self) -> Result<()> {
        self.ring.same(&other.ring)?;
        if self.potential != other.potential {
            return Err(Error::InvalidFactorization("factorizations of different potentials".into()));
        }
        Ok(())
    }

    /// Tensor product over the joined ring with potential `f + g`; even part
    /// `E_0F_0 ⊕ E_1F_1`, odd part `E_0F_1 ⊕ E_1F_0`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let (ring, lift_a, lift_b): (Ring, RingMatrixMap, RingMatrixMap) = if self.ring == other.ring {
            (self.ring.clone(), None, None)
        } else {
            (self.ring.join(&other.ring)?, Some((self.ring.clone(), 0)), Some((other.ring.clone(), self.ring.nvars())))
        };
        let lift = |m: &RingMatrix, how: &RingMatrixMap| match how {
            None => m.clone(),
            Some((from, off)) => m.map_ring(&ring, |p| ring.embed(from, *off, p)),
        };
        let lift_p = |p: &Poly, how: &RingMatrixMap| match how {
            None => p.clone(),
            Some((from, off)) => ring.embed(from, *off, p),
        };
        let (p0, p1) = (lift(&self.p0, &lift_a), lift(&self.p1, &lift_a));
        let (q0, q1) = (lift(&other.p0, &lift_b), lift(&other.p1, &lift_b));
        let f = ring.add(&lift_p(&self.potential, &lift_a), &lift_p(&other.potential, &lift_b));
        let id = |r: usize| RingMatrix::identity(&ring, r);
        let (e0, e1, f0, f1) = (self.e0(), self.e1(), other.e0(), other.e1());
        // even = [E0F0; E1F1], odd = [E0F1; E1F0]
        let big_p0 = RingMatrix::block(
            &ring,
            &[
                alloc::vec![&id(e0).kron(&q0), &p1.kron(&id(f1))],
                alloc::vec![&p0.kron(&id(f0)), &-&id(e1).kron(&q1)],
            ],
        )?;
        let big_p1 = RingMatrix::block(
            &ring,
            &[
                alloc::vec![&id(e0).kron(&q1), &p1.kron(&id(f0))],
                alloc::vec![&p0.kron(&id(f1)), &-&id(e1).kron(&q0)],
            ],
        )?;
        Self::unchecked(&ring, f, big_p0, big_p1)
    }

    /// Stable class of `coker p_0` over `B/f`: the non-unit invariant factors
    /// of `p_0` that are not associates of `f`. Over a Euclidean `B` with
    /// `f ≠ 0` two factorizations are homotopy equivalent exactly when these
    /// lists agree, and the factorization is contractible exactly when the
    /// list is empty.
    pub fn stable_class(&self) -> Result<Vec<Poly>> {
        if self.potential.is_zero() {
            return Err(Error::InvalidFactorization("stable class needs a nonzero potential".into()));
        }
        let f = self.ring.canonical_associate(&self.potential)?;
        let h = unfold(self)?.complex().homology(0)?;
        Ok(h.torsion.into_iter().filter(|t| *t != f).collect())
    }

    pub fn is_contractible(&self) -> Result<bool> {
        Ok(self.stable_class()?.is_empty())
    }
}

type RingMatrixMap = Option<(Ring, usize)>;

/// Homogeneous map of MFs: parity 0 has `χ_0 : E_0 → F_0`, `χ_1 : E_1 → F_1`;
/// parity 1 has `χ_0 : E_0 → F_1`, `χ_1 : E_1 → F_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFMorphism {
    source: MatrixFactorization,
    target: MatrixFactorization,
    parity: u8,
    chi0: RingMatrix,
    chi1: RingMatrix,
}

impl MFMorphism {
    pub fn new(
        source: &MatrixFactorization,
        target: &MatrixFactorization,
        parity: u8,
        chi0: RingMatrix,
        chi1: RingMatrix,
    ) -> Result<Self> {
        source.same_category(target)?;
        if parity > 1 {
            return Err(Error::WrongParity { expected: 1 });
        }
        let (t0, t1) = if parity == 0 {
            (target.e0(), target.e1())
        } else {
            (target.e1(), target.e0())
        };
        for (c, want) in [(&chi0, (t0, source.e0())), (&chi1, (t1, source.e1()))] {
            if c.shape() != want {
                return Err(Error::ShapeMismatch {
                    op: "MF morphism",
                    left: c.shape(),
                    right: want,
                });
            }
        }
        Ok(MFMorphism {
            source: source.clone(),
            target: target.clone(),
            parity,
            chi0,
            chi1,
        })
    }

    pub fn identity(x: &MatrixFactorization) -> Self {
        let r = &x.ring;
        Self::new(x, x, 0, RingMatrix::identity(r, x.e0()), RingMatrix::identity(r, x.e1())).unwrap()
    }

    pub fn zero(source: &MatrixFactorization, target: &MatrixFactorization, parity: u8) -> Result<Self> {
        let r = &source.ring;
        let (t0, t1) = if parity == 0 {
            (target.e0(), target.e1())
        } else {
            (target.e1(), target.e0())
        };
        Self::new(
            source,
            target,
            parity,
            RingMatrix::zero(r, t0, source.e0()),
            RingMatrix::zero(r, t1, source.e1()),
        )
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn chi0(&self) -> &RingMatrix {
        &self.chi0
    }

    pub fn chi1(&self) -> &RingMatrix {
        &self.chi1
    }

    /// `δχ = q ∘ χ − (−1)^{parity} χ ∘ p`, a morphism of the opposite parity.
    pub fn delta(&self) -> Self {
        let (p0, p1) = (&self.source.p0, &self.source.p1);
        let (q0, q1) = (&self.target.p0, &self.target.p1);
        let (c0, c1) = (&self.chi0, &self.chi1);
        let (d0, d1) = if self.parity == 0 {
            (&(q0 * c0) - &(c1 * p0), &(q1 * c1) - &(c0 * p1))
        } else {
            (&(q1 * c0) + &(c1 * p0), &(q0 * c1) + &(c0 * p1))
        };
        MFMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            parity: 1 - self.parity,
            chi0: d0,
            chi1: d1,
        }
    }

    pub fn is_closed(&self) -> bool {
        let d = self.delta();
        d.chi0.is_zero() && d.chi1.is_zero()
    }

    /// `other ∘ self` for parity-0 morphisms.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if self.parity != 0 || other.parity != 0 {
            return Err(Error::WrongParity { expected: 0 });
        }
        if self.target != other.source {
            return Err(Error::InvalidMorphism("composed morphisms do not share an object".into()));
        }
        Self::new(&self.source, &other.target, 0, &other.chi0 * &self.chi0, &other.chi1 * &self.chi1)
    }

    /// `(F_0 ⊕ E_1, F_1 ⊕ E_0, [[q_0, χ_1], [0, −p_1]], [[q_1, χ_0], [0, −p_0]])`.
    pub fn cone(&self) -> Result<MatrixFactorization> {
        if self.parity != 0 {
            return Err(Error::WrongParity { expected: 0 });
        }
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let r = &self.source.ring;
        let (x, y) = (&self.source, &self.target);
        let p0 = RingMatrix::block(
            r,
            &[
                alloc::vec![&y.p0, &self.chi1],
                alloc::vec![&RingMatrix::zero(r, x.e0(), y.e0()), &-&x.p1],
            ],
        )?;
        let p1 = RingMatrix::block(
            r,
            &[
                alloc::vec![&y.p1, &self.chi0],
                alloc::vec![&RingMatrix::zero(r, x.e1(), y.e1()), &-&x.p0],
            ],
        )?;
        MatrixFactorization::unchecked(r, y.potential.clone(), p0, p1)
    }
}

/// Block offsets of odd and even degrees in ascending order.
struct FoldLayout {
    odd: BTreeMap<i32, usize>,
    even: BTreeMap<i32, usize>,
    e0: usize,
    e1: usize,
}

fn fold_layout(m: &KoszulModule) -> FoldLayout {
    let mut layout = FoldLayout {
        odd: BTreeMap::new(),
        even: BTreeMap::new(),
        e0: 0,
        e1: 0,
    };
    for (&deg, &r) in m.complex().ranks() {
        if deg.rem_euclid(2) == 1 {
            layout.odd.insert(deg, layout.e0);
            layout.e0 += r;
        } else {
            layout.even.insert(deg, layout.e1);
            layout.e1 += r;
        }
    }
    layout
}

fn require_mono(m: &KoszulModule) -> Result<()> {
    if m.n() != 1 {
        return Err(Error::NotMonoPotential(m.n()));
    }
    Ok(())
}

/// Collapses an `n = 1` module to the factorization `(⊕E_odd, ⊕E_even, d+h, d+h)`.
pub fn fold(m: &KoszulModule) -> Result<MatrixFactorization> {
    require_mono(m)?;
    if let Some(v) = m.validate().violations.first() {
        return Err(Error::InvalidModule(format!("{v}")));
    }
    let ring = m.ring();
    let l = fold_layout(m);
    let mut p0 = RingMatrix::zero(ring, l.e1, l.e0);
    let mut p1 = RingMatrix::zero(ring, l.e0, l.e1);
    for (&deg, &off) in &l.odd {
        if let Some(&t) = l.even.get(&(deg + 1)) {
            p0.set_block(t, off, &m.d(deg));
        }
        if let Some(&t) = l.even.get(&(deg - 1)) {
            p0.set_block(t, off, &m.h(0, deg));
        }
    }
    for (&deg, &off) in &l.even {
        if let Some(&t) = l.odd.get(&(deg + 1)) {
            p1.set_block(t, off, &m.d(deg));
        }
        if let Some(&t) = l.odd.get(&(deg - 1)) {
            p1.set_block(t, off, &m.h(0, deg));
        }
    }
    MatrixFactorization::unchecked(ring, m.algebra().potential(0).clone(), p0, p1)
}

/// `(⊕φ_odd, ⊕φ_even)` between the folded source and target.
pub fn fold_morphism(phi: &KoszulMorphism) -> Result<MFMorphism> {
    if let Some(v) = phi.validate().violations.first() {
        return Err(Error::InvalidMorphism(format!("{v}")));
    }
    let (x, y) = (fold(phi.source())?, fold(phi.target())?);
    let (ls, lt) = (fold_layout(phi.source()), fold_layout(phi.target()));
    let ring = x.ring();
    let mut chi0 = RingMatrix::zero(ring, y.e0(), x.e0());
    let mut chi1 = RingMatrix::zero(ring, y.e1(), x.e1());
    for (&deg, c) in phi.components() {
        let (src, tgt, chi) = if deg.rem_euclid(2) == 1 {
            (&ls.odd, &lt.odd, &mut chi0)
        } else {
            (&ls.even, &lt.even, &mut chi1)
        };
        if let (Some(&col), Some(&row)) = (src.get(&deg), tgt.get(&deg)) {
            chi.set_block(row, col, c);
        }
    }
    MFMorphism::new(&x, &y, 0, chi0, chi1)
}

/// The module `E_0 --p_0--> E_1` in degrees `[−1, 0]` with `h = p_1`.
pub fn unfold(x: &MatrixFactorization) -> Result<KoszulModule> {
    let alg = KoszulAlgebra::new(&x.ring, alloc::vec![x.potential.clone()])?;
    KoszulModule::two_term(&alg, 0, &x.p0, &x.p1)
}

/// Row/column reorderings relating two factorizations:
/// `other.p0 = self.p0.select_rows(e1).select_cols(e0)` and
/// `other.p1 = self.p1.select_rows(e0).select_cols(e1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFPermutation {
    pub e0: Vec<usize>,
    pub e1: Vec<usize>,
}

impl MFPermutation {
    pub fn identity(x: &MatrixFactorization) -> Self {
        MFPermutation {
            e0: (0..x.e0()).collect(),
            e1: (0..x.e1()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.e0.iter().enumerate().all(|(i, &j)| i == j) && self.e1.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn apply(&self, x: &MatrixFactorization) -> Result<MatrixFactorization> {
        MatrixFactorization::unchecked(
            &x.ring,
            x.potential.clone(),
            x.p0.select_rows(&self.e1).select_cols(&self.e0),
            x.p1.select_rows(&self.e0).select_cols(&self.e1),
        )
    }
}

fn block_permutation(sizes: &[usize], order: &[usize]) -> Vec<usize> {
    let mut starts = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        starts.push(acc);
        acc += s;
    }
    order.iter().flat_map(|&b| starts[b]..starts[b] + sizes[b]).collect()
}

/// Permutation taking `fold(M).shift()` to `fold(M.shift(1))`, read off the
/// degree bookkeeping: both place each `E_m` of `M` in the same parity slot.
pub fn fold_shift_permutation(m: &KoszulModule) -> Result<MFPermutation> {
    require_mono(m)?;
    let original = fold_layout(m);
    let shifted = fold_layout(&m.shift(1));
    // mf_shift swaps the parts: its E_0 is fold(M)'s E_1 (even degrees of M).
    let mut e0 = Vec::new();
    for &deg in shifted.odd.keys() {
        let off = original.even[&(deg + 1)];
        e0.extend(off..off + m.rank(deg + 1));
    }
    let mut e1 = Vec::new();
    for &deg in shifted.even.keys() {
        let off = original.odd[&(deg + 1)];
        e1.extend(off..off + m.rank(deg + 1));
    }
    Ok(MFPermutation { e0, e1 })
}

/// The cone of a morphism between two-term modules in degrees `[−1, 0]`,
/// written directly as
/// `(E'_{−1} ⊕ E_0, E'_0 ⊕ E_{−1}, [[d', φ_0], [0, −h]], [[h', φ_{−1}], [0, −d]])`,
/// together with the permutation relating it to `fold(cone(φ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeComparison {
    pub formula: MatrixFactorization,
    pub folded: MatrixFactorization,
    pub permutation: MFPermutation,
}

impl ConeComparison {
    pub fn agrees(&self) -> bool {
        self.permutation.apply(&self.folded).as_ref() == Ok(&self.formula)
    }
}

pub fn sing_cone_formula(phi: &KoszulMorphism) -> Result<ConeComparison> {
    let (src, tgt) = (phi.source(), phi.target());
    require_mono(src)?;
    for m in [src, tgt] {
        if m.support().is_some_and(|(lo, hi)| lo < -1 || hi > 0) {
            return Err(Error::WrongAmplitude { lo: -1, hi: 0 });
        }
    }
    if let Some(v) = phi.validate().violations.first() {
        return Err(Error::InvalidMorphism(format!("{v}")));
    }
    let r = src.ring();
    let (e_m1, e_0, f_m1, f_0) = (src.rank(-1), src.rank(0), tgt.rank(-1), tgt.rank(0));
    let p0 = RingMatrix::block(
        r,
        &[
            alloc::vec![&tgt.d(-1), &phi.component(0)],
            alloc::vec![&RingMatrix::zero(r, e_m1, f_m1), &-&src.h(0, 0)],
        ],
    )?;
    let p1 = RingMatrix::block(
        r,
        &[
            alloc::vec![&tgt.h(0, 0), &phi.component(-1)],
            alloc::vec![&RingMatrix::zero(r, e_0, f_0), &-&src.d(-1)],
        ],
    )?;
    let formula = MatrixFactorization::new(r, src.algebra().potential(0).clone(), p0, p1)?;
    let folded = fold(&phi.cone()?)?;
    // fold(cone φ) has E_0 = [E_0 ; E'_{−1}] (degree −1) and E_1 = [E_{−1} ; E'_0].
    let permutation = MFPermutation {
        e0: block_permutation(&[e_0, f_m1], &[1, 0]),
        e1: block_permutation(&[e_m1, f_0], &[1, 0]),
    };
    Ok(ConeComparison {
        formula,
        folded,
        permutation,
    })
}

/// Result of exchanging the two terms of a two-term module one degree lower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Swap {
    pub input: KoszulModule,
    pub top: i32,
    /// `(F_{top−2} --q--> E_{top−1}, h = p)`.
    pub output: KoszulModule,
    /// `φ : M ⊗ K → M`.
    pub phi: KoszulMorphism,
    /// `ψ : E ⊗ K → W` with `cone(ψ) = cone(φ)`.
    pub psi: KoszulMorphism,
    /// The quasi-isomorphism `output → W` with components `1` and `[−p; 1]`.
    pub chi: KoszulMorphism,
}

/// For `M = (E_{top−1} --p--> F_top, h = q)` returns `(F --q--> E, h = p)` in
/// degrees `[top − 2, top − 1]` with the morphisms exhibiting the equivalence.
pub fn swap_periodicity(m: &KoszulModule, top: i32) -> Result<Swap> {
    require_mono(m)?;
    if m.support().is_some_and(|(lo, hi)| lo < top - 1 || hi > top) {
        return Err(Error::WrongAmplitude { lo: top - 1, hi: top });
    }
    if let Some(v) = m.validate().violations.first() {
        return Err(Error::InvalidModule(format!("{v}")));
    }
    let r = m.ring();
    let alg = m.algebra();
    let (p, q) = (m.d(top - 1), m.h(0, top));
    let (e, f) = (m.rank(top - 1), m.rank(top));
    let fpot = alg.potential(0);
    let id = |k: usize| RingMatrix::identity(r, k);

    let output = KoszulModule::two_term(alg, top - 1, &q, &p)?;
    let phi = phi_morphism(m)?;

    let src = tensor_with_koszul(alg, &PerfectComplex::concentrated(r, top - 1, e))?;
    let w_complex = PerfectComplex::unchecked(
        r,
        [(top - 2, f), (top - 1, f + e), (top, f)].into(),
        [
            (top - 2, RingMatrix::vcat(r, &[&RingMatrix::scalar(r, f, &r.neg(fpot)), &q])?),
            (top - 1, RingMatrix::hcat(r, &[&id(f), &p])?),
        ]
        .into(),
    )?;
    let w_h = [
        (top - 1, RingMatrix::hcat(r, &[&-&id(f), &RingMatrix::zero(r, f, e)])?),
        (top, RingMatrix::vcat(r, &[&RingMatrix::zero(r, f, f), &q])?),
    ];
    let w = KoszulModule::unchecked(alg, w_complex, alloc::vec![w_h.into()])?;
    let graph = RingMatrix::vcat(r, &[&-&p, &id(e)])?;
    let psi = KoszulMorphism::unchecked(&src, &w, [(top - 2, p.clone()), (top - 1, graph.clone())].into())?;
    let chi = KoszulMorphism::unchecked(&output, &w, [(top - 2, id(f)), (top - 1, graph)].into())?;
    Ok(Swap {
        input: m.clone(),
        top,
        output,
        phi,
        psi,
        chi,
    })
}

/// Validates the three morphisms of a swap, compares `cone(ψ)` with
/// `cone(φ)` and certifies `χ` as a quasi-isomorphism over Euclidean rings.
pub fn certify_swap(s: &Swap) -> Certificate {
    let mut cert = Certificate::new();
    let window = format!("[{}, {}]", s.top - 2, s.top);
    cert.validation("output module identities", &window, &s.output.validate());
    cert.validation("phi is a morphism", &window, &s.phi.validate());
    cert.validation("psi is a morphism", &window, &s.psi.validate());
    cert.validation("chi is a morphism", &window, &s.chi.validate());
    cert.check(
        "cone(psi) = cone(phi)",
        &window,
        s.psi.cone_unchecked() == s.phi.cone_unchecked(),
        "cones differ as matrices",
    );
    let acyclic = match s.chi.is_quasi_isomorphism() {
        Ok(b) => Some(b),
        Err(Error::NotEuclidean) => None,
        Err(_) => Some(false),
    };
    cert.homology("chi is a quasi-isomorphism", &window, acyclic);
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Outcome;
    use crate::module::koszul_self_module;
    use crate::ring::Base;
    use alloc::vec;

    fn qx() -> Ring {
        Ring::polynomial(Base::Rationals, &["x"]).unwrap()
    }

    fn mat(r: &Ring, rows: &[&[&str]]) -> RingMatrix {
        RingMatrix::parse(r, rows).unwrap()
    }

    fn mf(r: &Ring, f: &str, p0: &[&[&str]], p1: &[&[&str]]) -> MatrixFactorization {
        MatrixFactorization::unchecked(r, r.parse(f).unwrap(), mat(r, p0), mat(r, p1)).unwrap()
    }

    fn eisenbud() -> KoszulModule {
        let r = qx();
        let alg = KoszulAlgebra::new(&r, vec![r.parse("x^2").unwrap()]).unwrap();
        let x = mat(&r, &[&["x"]]);
        KoszulModule::two_term(&alg, 0, &x, &x).unwrap()
    }

    #[test]
    fn validation() {
        let r = qx();
        assert!(mf(&r, "x^2", &[&["x"]], &[&["x"]]).validate().is_valid());
        assert!(mf(&r, "x^2", &[&["x^2"]], &[&["1"]]).validate().is_valid());
        let bad = mf(&r, "x^2", &[&["x"]], &[&["1"]]).validate();
        assert_eq!(bad.violations.len(), 2);
    }

    #[test]
    fn suspension() {
        let r = qx();
        let x = mf(&r, "x^2", &[&["x"]], &[&["x"]]);
        assert_eq!(x.shift(), mf(&r, "x^2", &[&["-x"]], &[&["-x"]]));
        assert_eq!(x.shift().shift(), x);
        let t = mf(&r, "x^2", &[&["x^2"]], &[&["1"]]);
        assert_eq!(t.shift(), mf(&r, "x^2", &[&["-1"]], &[&["-x^2"]]));
    }

    #[test]
    fn folding() {
        let x = fold(&eisenbud()).unwrap();
        let r = x.ring().clone();
        assert_eq!(x, mf(&r, "x^2", &[&["x"]], &[&["x"]]));
        assert_eq!(unfold(&x).unwrap(), eisenbud());
        let alg = KoszulAlgebra::new(&r, vec![r.parse("x^3 - x").unwrap()]).unwrap();
        let k = fold(&koszul_self_module(&alg)).unwrap();
        assert_eq!(k, mf(&r, "x^3 - x", &[&["x^3 - x"]], &[&["1"]]));
        assert!(k.is_contractible().unwrap());
        assert!(!x.is_contractible().unwrap());
        assert_eq!(fold(&KoszulModule::zero(&alg)).unwrap().e0(), 0);
    }

    #[test]
    fn cones_and_delta() {
        let r = qx();
        let x = mf(&r, "x^2", &[&["x"]], &[&["x"]]);
        let id = MFMorphism::identity(&x);
        assert!(id.is_closed());
        let c = id.cone().unwrap();
        assert!(c.validate().is_valid());
        assert!(c.is_contractible().unwrap());
        let mult = MFMorphism::new(&x, &x, 0, mat(&r, &[&["x"]]), mat(&r, &[&["x"]])).unwrap();
        assert!(mult.is_closed());
        assert!(mult.cone().unwrap().validate().is_valid());
        let zero = MFMorphism::zero(&x, &x, 0).unwrap();
        assert_eq!(zero.cone().unwrap(), x.direct_sum(&x.shift()).unwrap());
        let odd = MFMorphism::new(&x, &x, 1, mat(&r, &[&["x + 1"]]), mat(&r, &[&["3"]])).unwrap();
        let dd = odd.delta().delta();
        assert!(dd.chi0().is_zero() && dd.chi1().is_zero());
        assert_eq!(
            MFMorphism::new(&x, &x, 0, mat(&r, &[&["1"]]), mat(&r, &[&["0"]])).unwrap().cone(),
            Err(Error::NotClosed)
        );
    }

    #[test]
    fn tensor_products() {
        let rx = qx();
        let ry = Ring::polynomial(Base::Rationals, &["y"]).unwrap();
        let x = mf(&rx, "x^2", &[&["x"]], &[&["x"]]);
        let y = mf(&ry, "y^2", &[&["y"]], &[&["y"]]);
        let t = x.tensor(&y).unwrap();
        assert!(t.validate().is_valid());
        assert_eq!((t.e0(), t.e1()), (2, 2));
        assert_eq!(t.potential(), &t.ring().parse("x^2 + y^2").unwrap());
        let triv = mf(&rx, "x^2", &[&["x^2"]], &[&["1"]]);
        let same = x.tensor(&triv).unwrap();
        assert!(same.validate().is_valid());
        assert_eq!(same.potential(), &rx.parse("2*x^2").unwrap());
    }

    #[test]
    fn shift_permutation_is_literal() {
        let m = eisenbud();
        let perm = fold_shift_permutation(&m).unwrap();
        let lhs = fold(&m.shift(1)).unwrap();
        assert_eq!(perm.apply(&fold(&m).unwrap().shift()).unwrap(), lhs);
    }

    #[test]
    fn swap_eisenbud() {
        let m = eisenbud();
        let s = swap_periodicity(&m, 0).unwrap();
        let r = m.ring();
        let x = mat(r, &[&["x"]]);
        assert_eq!(s.output, KoszulModule::two_term(m.algebra(), -1, &x, &x).unwrap());
        let cert = certify_swap(&s);
        assert_eq!(cert.status(), Outcome::Pass, "{:#?}", cert.checks);
        let twice = swap_periodicity(&s.output, -1).unwrap();
        assert_eq!(twice.output, m.shift(2));
    }

    #[test]
    fn swap_asymmetric() {
        let r = qx();
        let alg = KoszulAlgebra::new(&r, vec![r.parse("x^3 + x").unwrap()]).unwrap();
        let m = KoszulModule::two_term(&alg, 3, &mat(&r, &[&["x^2 + 1"]]), &mat(&r, &[&["x"]])).unwrap();
        let s = swap_periodicity(&m, 3).unwrap();
        assert_eq!(certify_swap(&s).status(), Outcome::Pass);
        assert_eq!(s.output.support(), Some((1, 2)));
    }

    #[test]
    fn cone_formula_matches_fold() {
        let m = eisenbud();
        for phi in [KoszulMorphism::identity(&m), KoszulMorphism::zero(&m, &m).unwrap()] {
            let c = sing_cone_formula(&phi).unwrap();
            assert!(c.formula.validate().is_valid());
            assert!(c.agrees());
        }
        let id = sing_cone_formula(&KoszulMorphism::identity(&m)).unwrap();
        assert!(id.formula.is_contractible().unwrap());
    }
}
