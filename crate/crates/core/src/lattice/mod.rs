//! Integral symmetric bilinear forms.
//!
//! [`GramMatrix`] wraps a symmetric integer matrix. [`invariants`] computes
//! rank, signature, determinant and the discriminant form; the submodules
//! handle congruences, recognition against a small catalog and the
//! orthogonal-complement criterion for discriminant forms.

mod catalog;
mod congruence;
mod disc;
mod duality;
pub mod matrix;

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{int, Int};
pub use catalog::{recognize, Catalog, LatticeName, MatchLevel, Recognition, Summand};
pub use congruence::{
    detect_u_summand, find_congruence, find_congruence_with_budget, verify_congruence, CongruenceWitness, SearchOutcome,
};
pub use disc::{disc_forms_isomorphic, is_consistent, DiscriminantForm};
pub use duality::{check_duality, DualityReport};
pub use matrix::{smith_normal_form, IntMatrix, RatMatrix, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("Gram matrix is degenerate (determinant 0)")]
    Degenerate,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

/// A symmetric integer matrix read as the Gram matrix of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    m: IntMatrix,
}

impl GramMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(LatticeError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if !m.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(GramMatrix { m })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    pub fn diagonal(d: &[i64]) -> Self {
        GramMatrix { m: IntMatrix::diagonal(d) }
    }

    pub fn hyperbolic() -> Self {
        GramMatrix { m: IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]) }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.m[(i, j)]
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.m.to_i64_rows()
    }

    pub fn det(&self) -> Int {
        self.m.det()
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }

    /// `(n_plus, n_minus)`; zero eigenvalues are not counted.
    pub fn signature(&self) -> (usize, usize) {
        matrix::signature_char_poly(&self.m)
    }

    pub fn is_even(&self) -> bool {
        (0..self.dim()).all(|i| self.m[(i, i)].is_even())
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    pub fn direct_sum(&self, other: &GramMatrix) -> GramMatrix {
        GramMatrix { m: IntMatrix::block_diag(&[&self.m, &other.m]) }
    }

    pub fn direct_sum_all(parts: &[GramMatrix]) -> GramMatrix {
        let blocks: Vec<&IntMatrix> = parts.iter().map(|g| &g.m).collect();
        GramMatrix { m: IntMatrix::block_diag(&blocks) }
    }

    /// `P G P^T`.
    pub fn transform(&self, p: &IntMatrix) -> Result<GramMatrix> {
        if p.cols() != self.dim() {
            return Err(LatticeError::DimensionMismatch(p.cols(), self.dim()));
        }
        GramMatrix::new(self.m.congruent(p))
    }

    pub fn pair(&self, x: &[Int], y: &[Int]) -> Int {
        self.m.bilinear(x, y)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

#[derive(Clone, Debug)]
pub struct LatticeInvariants {
    pub rank: usize,
    pub signature: (usize, usize),
    pub determinant: Int,
    /// Elementary divisors greater than 1.
    pub disc_group: Vec<Int>,
    pub disc_form: DiscriminantForm,
}

impl LatticeInvariants {
    pub fn disc_order(&self) -> Int {
        self.disc_group.iter().fold(int(1), |acc, d| acc * d)
    }

    /// Same rank, signature, determinant and discriminant group, and
    /// isomorphic discriminant forms.
    pub fn equivalent(&self, other: &LatticeInvariants) -> bool {
        self.rank == other.rank
            && self.signature == other.signature
            && self.determinant == other.determinant
            && self.disc_group == other.disc_group
            && disc_forms_isomorphic(&self.disc_form, &other.disc_form, 1).is_some()
    }
}

pub fn invariants(g: &GramMatrix) -> Result<LatticeInvariants> {
    let determinant = g.det();
    if determinant.is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let disc_form = DiscriminantForm::of(g)?;
    let inv = LatticeInvariants {
        rank: g.dim(),
        signature: g.signature(),
        disc_group: disc_form.orders.clone(),
        determinant,
        disc_form,
    };
    debug_assert_eq!(inv.disc_order(), inv.determinant.abs());
    Ok(inv)
}
