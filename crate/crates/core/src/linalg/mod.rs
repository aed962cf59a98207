//! Exact linear algebra over ℚ and K = ℚ(i, √m), plus integer lattice
//! normal forms.
//!
//! Everything here is dense and exact. Subspaces are kept in reduced
//! column-echelon form, so two equal subspaces always carry bit-identical
//! basis matrices.

mod kfield;
mod lattice;
mod matrix;
mod subspace;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactfield::{FieldElem, Rational};

pub use kfield::{
    conj_fixed_points, rational_kernel, rational_points, realify_matrix, realify_vector,
    complexify_real_vector, KMatrix, KSubspace, QMatrix, QSubspace,
};
pub use lattice::{
    hermite_normal_form, integer_kernel, lattice_normal_form, primitive_integer_matrix,
    saturated_lattice, smith_normal_form, to_rational_matrix, IntMatrix, NormalForm, NormalFormKind,
};
pub use matrix::Matrix;
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field parameter mismatch: m = {0} vs m = {1}")]
    FieldMismatch(u64, u64),
    #[error("subspace is not stable under conjugation; witness column {0}")]
    NotConjugationStable(usize),
    #[error("matrix is singular")]
    Singular,
}

/// Commutative ring with exact equality, as needed by dense matrices.
///
/// The context carries whatever an element needs besides its value: the
/// field parameter `m` for [`FieldElem`], nothing for ℚ and ℤ.
pub trait Ring: Clone + PartialEq + Debug {
    type Ctx: Copy + Eq + std::hash::Hash + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: Self::Ctx) -> Self;
    fn one_in(ctx: Self::Ctx) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

pub trait Field: Ring {
    /// Multiplicative inverse; callers guarantee `self` is nonzero.
    fn inverse(&self) -> Self;
}

impl Ring for Rational {
    type Ctx = ();
    fn ctx(&self) {}
    fn zero_in(_: ()) -> Self {
        Rational::zero()
    }
    fn one_in(_: ()) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn inverse(&self) -> Self {
        self.recip()
    }
}

impl Ring for FieldElem {
    type Ctx = u64;
    fn ctx(&self) -> u64 {
        self.m()
    }
    fn zero_in(m: u64) -> Self {
        FieldElem::zero(m)
    }
    fn one_in(m: u64) -> Self {
        FieldElem::one(m)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for FieldElem {
    fn inverse(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
}

impl Ring for BigInt {
    type Ctx = ();
    fn ctx(&self) {}
    fn zero_in(_: ()) -> Self {
        BigInt::zero()
    }
    fn one_in(_: ()) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}
