//! Exact computations for toric K3 families arising from double covers of the
//! plane branched along sextics of (2,3)-torus type.
//!
//! The crate is organised bottom-up:
//!
//! * [`polytope`]: hulls, polar duals, faces and lattice points in rank 3.
//! * [`monomial`]: weighted-degree-6 monomials in weights (1,1,1,3) and the
//!   lattice points they label.
//! * [`picard`]: divisor intersection graphs and Picard Gram matrices of
//!   generic anticanonical sections.
//! * [`lattice`]: integral symmetric bilinear forms (invariants, Smith form,
//!   discriminant forms, congruences, recognition, duality).
//! * [`curve`]: torus-type sextics, singular points and ADE types.
//! * [`fixtures`] and [`report`]: the reference data set and the end-to-end
//!   verification pipeline.

pub mod arith;
pub mod curve;
pub mod fixtures;
pub mod io;
pub mod lattice;
pub mod monomial;
pub mod picard;
pub mod polytope;
pub mod report;

pub use arith::{Int, Rat};
pub use polytope::{
    convex_hull, dual_face, is_reflexive, polar_dual, FaceRef, HalfSpace, LatticePoint, Polytope, PolytopeError,
    RationalPoint,
};
