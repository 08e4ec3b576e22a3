//! Bounded complexes of finite free modules, chain maps, cones and homology.
//!
//! Grading is cohomological: `d_m : E_m -> E_{m+1}` has shape
//! `rank(m+1) x rank(m)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{Poly, Ring};
use crate::smith::{smith_normal_form, SmithForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectComplex {
    ring: Ring,
    ranks: BTreeMap<i32, usize>,
    diffs: BTreeMap<i32, RingMatrix>,
}

pub(crate) fn sign(k: i64) -> bool {
    k.rem_euclid(2) == 1
}

/// Smallest interval containing every key, or `None` if there are none.
pub(crate) fn span(ranges: impl IntoIterator<Item = Option<(i32, i32)>>) -> Option<(i32, i32)> {
    ranges.into_iter().flatten().reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
}

impl PerfectComplex {
    /// Builds a complex after checking shapes and `d^2 = 0`.
    pub fn new(ring: &Ring, ranks: BTreeMap<i32, usize>, diffs: BTreeMap<i32, RingMatrix>) -> Result<Self> {
        let c = Self::unchecked(ring, ranks, diffs)?;
        if let Some(&m) = c.d_squared_violations().first() {
            return Err(Error::NotAComplex(m));
        }
        Ok(c)
    }

    /// Builds a graded object with maps of the right shapes, without
    /// checking `d^2 = 0`. Zero ranks are dropped and missing differentials
    /// between nonzero ranks are filled with zeros.
    pub fn unchecked(ring: &Ring, ranks: BTreeMap<i32, usize>, diffs: BTreeMap<i32, RingMatrix>) -> Result<Self> {
        let ranks: BTreeMap<i32, usize> = ranks.into_iter().filter(|&(_, r)| r > 0).collect();
        let rank = |m: i32| ranks.get(&m).copied().unwrap_or(0);
        let mut kept = BTreeMap::new();
        for (m, d) in diffs {
            ring.same(d.ring())?;
            let want = (rank(m + 1), rank(m));
            if d.shape() != want {
                return Err(Error::ShapeMismatch {
                    op: "differential",
                    left: d.shape(),
                    right: want,
                });
            }
            if want.0 > 0 && want.1 > 0 {
                kept.insert(m, d);
            }
        }
        for (&m, &r) in &ranks {
            let next = rank(m + 1);
            if next > 0 {
                kept.entry(m).or_insert_with(|| RingMatrix::zero(ring, next, r));
            }
        }
        Ok(PerfectComplex {
            ring: ring.clone(),
            ranks,
            diffs: kept,
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        PerfectComplex {
            ring: ring.clone(),
            ranks: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    /// A single free module of the given rank placed in degree `m`.
    pub fn concentrated(ring: &Ring, m: i32, rank: usize) -> Self {
        Self::unchecked(ring, [(m, rank)].into(), BTreeMap::new()).unwrap()
    }

    /// `E_m --d--> E_{m+1}` with ranks read off `d`.
    pub fn two_term(m: i32, d: &RingMatrix) -> Self {
        let ring = d.ring();
        Self::unchecked(ring, [(m, d.cols()), (m + 1, d.rows())].into(), [(m, d.clone())].into()).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self, m: i32) -> usize {
        self.ranks.get(&m).copied().unwrap_or(0)
    }

    /// Nonzero ranks by degree.
    pub fn ranks(&self) -> &BTreeMap<i32, usize> {
        &self.ranks
    }

    /// Stored differentials (present exactly where both adjacent ranks are nonzero).
    pub fn differentials(&self) -> &BTreeMap<i32, RingMatrix> {
        &self.diffs
    }

    pub fn d(&self, m: i32) -> RingMatrix {
        self.diffs
            .get(&m)
            .cloned()
            .unwrap_or_else(|| RingMatrix::zero(&self.ring, self.rank(m + 1), self.rank(m)))
    }

    /// Lowest and highest degree with nonzero rank.
    pub fn support(&self) -> Option<(i32, i32)> {
        Some((*self.ranks.keys().next()?, *self.ranks.keys().next_back()?))
    }

    /// Number of degrees from the lowest to the highest nonzero one.
    pub fn amplitude(&self) -> usize {
        self.support().map_or(0, |(lo, hi)| (hi - lo + 1) as usize)
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&m, &r)| if sign(m as i64) { -(r as i64) } else { r as i64 })
            .sum()
    }

    /// Degrees `m` where `d_{m+1} d_m != 0`.
    pub fn d_squared_violations(&self) -> Vec<i32> {
        self.diffs
            .iter()
            .filter_map(|(&m, d)| {
                let next = self.diffs.get(&(m + 1))?;
                (!(next * d).is_zero()).then_some(m)
            })
            .collect()
    }

    /// `C[k]`: degree `m` holds `C_{m+k}`, differentials multiplied by `(-1)^k`.
    pub fn shift(&self, k: i32) -> Self {
        let neg = sign(k as i64);
        PerfectComplex {
            ring: self.ring.clone(),
            ranks: self.ranks.iter().map(|(&m, &r)| (m - k, r)).collect(),
            diffs: self
                .diffs
                .iter()
                .map(|(&m, d)| (m - k, if neg { -d } else { d.clone() }))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.ring.same(&other.ring)?;
        let mut ranks = self.ranks.clone();
        for (&m, &r) in &other.ranks {
            *ranks.entry(m).or_insert(0) += r;
        }
        let mut diffs = BTreeMap::new();
        if let Some((lo, hi)) = span([self.support(), other.support()]) {
            for m in lo..hi {
                diffs.insert(m, RingMatrix::block_diag(&self.ring, &[&self.d(m), &other.d(m)]));
            }
        }
        Self::unchecked(&self.ring, ranks, diffs)
    }

    /// Invariant-factor description of `H^m` (Euclidean rings only),
    /// computed after cancelling unit entries.
    pub fn homology(&self, m: i32) -> Result<Homology> {
        self.ring.euclidean_kind().ok_or(Error::NotEuclidean)?;
        let c = self.cancel_units();
        if c.rank(m) == 0 {
            return Ok(Homology::zero());
        }
        c.homology_of(m, &smith_normal_form(&c.d(m))?, &smith_normal_form(&c.d(m - 1))?)
    }

    fn homology_of(&self, m: i32, outgoing: &SmithForm, incoming: &SmithForm) -> Result<Homology> {
        let torsion: Vec<Poly> = incoming
            .invariant_factors()
            .into_iter()
            .filter(|p| !self.ring.is_unit(p))
            .collect();
        let free_rank = self
            .rank(m)
            .checked_sub(outgoing.rank() + incoming.rank())
            .ok_or(Error::NotAComplex(m - 1))?;
        Ok(Homology {
            free_rank,
            torsion,
        })
    }

    /// True when every homology group vanishes (Euclidean rings only).
    pub fn is_acyclic(&self) -> Result<bool> {
        self.ring.euclidean_kind().ok_or(Error::NotEuclidean)?;
        let c = self.cancel_units();
        let Some((lo, hi)) = c.support() else {
            return Ok(true);
        };
        let forms = (lo - 1..=hi)
            .map(|m| Ok((m, smith_normal_form(&c.d(m))?)))
            .collect::<Result<BTreeMap<i32, SmithForm>>>()?;
        for m in lo..=hi {
            if !c.homology_of(m, &forms[&m], &forms[&(m - 1)])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `H^m ≅ B^free_rank ⊕ ⊕ B/(t)` for `t` in `torsion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub free_rank: usize,
    pub torsion: Vec<Poly>,
}

impl Homology {
    pub fn zero() -> Self {
        Homology {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMorphism {
    source: PerfectComplex,
    target: PerfectComplex,
    components: BTreeMap<i32, RingMatrix>,
}

impl ChainMorphism {
    /// Builds a morphism after checking shapes and commutation with `d`.
    pub fn new(source: &PerfectComplex, target: &PerfectComplex, components: BTreeMap<i32, RingMatrix>) -> Result<Self> {
        let f = Self::unchecked(source, target, components)?;
        if let Some(&m) = f.chain_violations().first() {
            return Err(Error::NotAChainMap(m));
        }
        Ok(f)
    }

    /// Shape-checked only; missing components are zero.
    pub fn unchecked(source: &PerfectComplex, target: &PerfectComplex, components: BTreeMap<i32, RingMatrix>) -> Result<Self> {
        source.ring.same(&target.ring)?;
        let mut kept = BTreeMap::new();
        for (m, c) in components {
            source.ring.same(c.ring())?;
            let want = (target.rank(m), source.rank(m));
            if c.shape() != want {
                return Err(Error::ShapeMismatch {
                    op: "morphism component",
                    left: c.shape(),
                    right: want,
                });
            }
            if want.0 > 0 && want.1 > 0 {
                kept.insert(m, c);
            }
        }
        Ok(ChainMorphism {
            source: source.clone(),
            target: target.clone(),
            components: kept,
        })
    }

    pub fn identity(c: &PerfectComplex) -> Self {
        let comps = c.ranks.iter().map(|(&m, &r)| (m, RingMatrix::identity(&c.ring, r))).collect();
        ChainMorphism {
            source: c.clone(),
            target: c.clone(),
            components: comps,
        }
    }

    pub fn zero(source: &PerfectComplex, target: &PerfectComplex) -> Result<Self> {
        Self::unchecked(source, target, BTreeMap::new())
    }

    pub fn source(&self) -> &PerfectComplex {
        &self.source
    }

    pub fn target(&self) -> &PerfectComplex {
        &self.target
    }

    pub fn components(&self) -> &BTreeMap<i32, RingMatrix> {
        &self.components
    }

    pub fn component(&self, m: i32) -> RingMatrix {
        self.components
            .get(&m)
            .cloned()
            .unwrap_or_else(|| RingMatrix::zero(&self.source.ring, self.target.rank(m), self.source.rank(m)))
    }

    /// Degree range where source or target is nonzero.
    pub fn support(&self) -> Option<(i32, i32)> {
        span([self.source.support(), self.target.support()])
    }

    /// Degrees `m` where `d'_m φ_m != φ_{m+1} d_m`.
    pub fn chain_violations(&self) -> Vec<i32> {
        let Some((lo, hi)) = self.support() else {
            return Vec::new();
        };
        (lo - 1..=hi)
            .filter(|&m| &self.target.d(m) * &self.component(m) != &self.component(m + 1) * &self.source.d(m))
            .collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::InvalidMorphism("composed morphisms do not share an object".into()));
        }
        let comps = self
            .components
            .keys()
            .map(|&m| (m, &other.component(m) * &self.component(m)))
            .collect();
        Self::unchecked(&self.source, &other.target, comps)
    }

    /// Mapping cone: degree `s` is `Src_{s+1} ⊕ Tgt_s` with
    /// `D = [[-d, 0], [φ, d']]`.
    pub fn cone(&self) -> PerfectComplex {
        let ring = &self.source.ring;
        let mut ranks = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        if let Some((lo, hi)) = self.support() {
            for s in lo - 1..=hi {
                ranks.insert(s, self.source.rank(s + 1) + self.target.rank(s));
            }
            for s in lo - 1..hi {
                diffs.insert(s, cone_block(ring, &self.source.d(s + 1), &self.component(s + 1), &self.target.d(s)));
            }
        }
        PerfectComplex::unchecked(ring, ranks, diffs).unwrap()
    }

    /// Cone has zero homology (Euclidean rings only).
    pub fn is_quasi_isomorphism(&self) -> Result<bool> {
        self.cone().is_acyclic()
    }
}

/// `[[-a, 0], [phi, b]]` for the degree-`s` cone differential.
pub(crate) fn cone_block(ring: &Ring, a: &RingMatrix, phi: &RingMatrix, b: &RingMatrix) -> RingMatrix {
    let z = RingMatrix::zero(ring, a.rows(), b.cols());
    RingMatrix::block(ring, &[vec_of(&[&-a, &z]), vec_of(&[phi, b])]).unwrap()
}

pub(crate) fn vec_of<'a>(xs: &[&'a RingMatrix]) -> Vec<&'a RingMatrix> {
    xs.to_vec()
}
