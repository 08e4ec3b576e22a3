#![no_std]
extern crate alloc;

pub mod certificate;
pub mod complex;
pub mod error;
pub mod koszul;
pub mod matrix;
mod minimal;
pub mod mf;
pub mod module;
mod parse;
pub mod reduction;
pub mod ring;
pub mod smith;

pub use certificate::{Certificate, Check, Outcome};
pub use complex::{ChainMorphism, Homology, PerfectComplex};
pub use error::{Error, Result};
pub use koszul::{koszul_product, KoszulAlgebra, Subset};
pub use matrix::RingMatrix;
pub use mf::{
    certify_swap, fold, fold_morphism, fold_shift_permutation, sing_cone_formula, swap_periodicity, unfold, ConeComparison,
    MFMorphism, MFPermutation, MatrixFactorization, Swap,
};
pub use module::{
    box_tensor, koszul_self_module, phi_morphism, tensor_with_koszul, KoszulModule, KoszulMorphism, ValidationReport,
    Violation,
};
pub use reduction::{certify_step, reduce, reduce_once, Reduction, ReductionStep};
pub use ring::{Base, Poly, Ring, RingElement};
pub use smith::{smith_normal_form, SmithForm};
