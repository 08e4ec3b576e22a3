//! The Koszul dg-algebra `K(B, f_1..f_n)`: the exterior algebra on
//! `ε_1..ε_n` in degree −1 with `d(ε_i) = f_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::complex::PerfectComplex;
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{Poly, Ring, RingElement};

/// A set of generator indices (0-based), i.e. the basis element
/// `ε_{i_1} ∧ … ∧ ε_{i_k}` with `i_1 < … < i_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

pub const MAX_GENERATORS: usize = 16;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// Fails on repeated or out-of-range indices.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            if bits & (1 << i) != 0 {
                return Err(Error::RepeatedIndex(i));
            }
            bits |= 1 << i;
        }
        Ok(Subset(bits))
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        Subset(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |&i| bits & (1 << i) != 0)
    }

    /// Number of elements strictly below `i`.
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u32 << i) - 1)).count_ones() as usize
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// `ε_a · ε_b`: `None` if the subsets meet, otherwise `(negative, a ∪ b)`
/// with the sign of the sorting permutation of the concatenation.
pub fn koszul_product(a: Subset, b: Subset) -> Option<(bool, Subset)> {
    if a.intersects(b) {
        return None;
    }
    let inversions: usize = b.indices().map(|j| a.len() - a.count_below(j)).sum();
    Some((inversions % 2 == 1, a.union(b)))
}

/// Subsets of `{0..n}` of size `k` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    fn go(start: usize, n: usize, k: usize, cur: Subset, out: &mut Vec<Subset>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - k {
            go(i + 1, n, k - 1, cur.insert(i), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, Subset::EMPTY, &mut out);
    }
    out
}

/// An element of `K`: basis subsets with nonzero coefficients.
pub type KoszulElement = BTreeMap<Subset, Poly>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulAlgebra {
    ring: Ring,
    potentials: Vec<Poly>,
    basis: Vec<Vec<Subset>>,
}

impl KoszulAlgebra {
    pub fn new(ring: &Ring, potentials: Vec<Poly>) -> Result<Self> {
        if potentials.is_empty() {
            return Err(Error::EmptyPotentials);
        }
        let n = potentials.len();
        if n > MAX_GENERATORS {
            return Err(Error::IndexOutOfRange {
                index: n,
                n: MAX_GENERATORS,
            });
        }
        let potentials = potentials.iter().map(|p| ring.normalize(p)).collect();
        Ok(KoszulAlgebra {
            ring: ring.clone(),
            potentials,
            basis: (0..=n).map(|k| k_subsets(n, k)).collect(),
        })
    }

    pub fn from_elements(ring: &Ring, potentials: &[RingElement]) -> Result<Self> {
        for p in potentials {
            ring.same(p.ring())?;
        }
        Self::new(ring, potentials.iter().map(|p| p.value().clone()).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.potentials.len()
    }

    pub fn potentials(&self) -> &[Poly] {
        &self.potentials
    }

    pub fn potential(&self, i: usize) -> &Poly {
        &self.potentials[i]
    }

    /// Basis of the degree `−k` part.
    pub fn basis(&self, k: usize) -> &[Subset] {
        self.basis.get(k).map_or(&[], |b| b.as_slice())
    }

    /// Position of `s` within `basis(s.len())`.
    pub fn index_of(&self, s: Subset) -> usize {
        self.basis[s.len()].binary_search(&s).expect("subset within range")
    }

    /// `d(ε_S) = Σ_j (−1)^{j+1} f_{i_j} ε_{S∖i_j}` with `j` counted from 1.
    pub fn d_basis(&self, s: Subset) -> Vec<(Poly, Subset)> {
        s.indices()
            .enumerate()
            .filter(|(_, i)| !self.potentials[*i].is_zero())
            .map(|(j, i)| {
                let f = &self.potentials[i];
                let c = if j % 2 == 1 { self.ring.neg(f) } else { f.clone() };
                (c, s.remove(i))
            })
            .collect()
    }

    /// Matrix of `d` from degree `−k` to `−k+1`.
    pub fn differential(&self, k: usize) -> RingMatrix {
        let (src, tgt) = (self.basis(k), self.basis(k.wrapping_sub(1)));
        let mut m = RingMatrix::zero(&self.ring, tgt.len(), src.len());
        for (c, &s) in src.iter().enumerate() {
            for (coeff, t) in self.d_basis(s) {
                m.set(self.index_of(t), c, coeff);
            }
        }
        m
    }

    /// Underlying complex, in degrees `[−n, 0]`.
    pub fn complex(&self) -> PerfectComplex {
        let n = self.n();
        let ranks = (0..=n).map(|k| (-(k as i32), self.basis(k).len())).collect();
        let diffs = (1..=n).map(|k| (-(k as i32), self.differential(k))).collect();
        PerfectComplex::unchecked(&self.ring, ranks, diffs).unwrap()
    }

    pub fn d_element(&self, a: &KoszulElement) -> KoszulElement {
        let mut out = KoszulElement::new();
        for (&s, c) in a {
            for (f, t) in self.d_basis(s) {
                add_term(&self.ring, &mut out, t, self.ring.mul(c, &f));
            }
        }
        out
    }

    pub fn multiply(&self, a: &KoszulElement, b: &KoszulElement) -> KoszulElement {
        let mut out = KoszulElement::new();
        for (&s, x) in a {
            for (&t, y) in b {
                if let Some((neg, u)) = koszul_product(s, t) {
                    let c = self.ring.mul(x, y);
                    add_term(&self.ring, &mut out, u, if neg { self.ring.neg(&c) } else { c });
                }
            }
        }
        out
    }
}

fn add_term(ring: &Ring, out: &mut KoszulElement, s: Subset, c: Poly) {
    let sum = match out.remove(&s) {
        Some(prev) => ring.add(&prev, &c),
        None => c,
    };
    if !sum.is_zero() {
        out.insert(s, sum);
    }
}
