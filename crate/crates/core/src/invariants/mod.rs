//! Group actions on ambient coordinate rings: torus weights, semi-invariant
//! enumeration, the classical determinant and trace invariants, their
//! equivariance, and the ideals of relations among them.

mod classical;
mod matrix;
mod weights;

pub use classical::{
    classical_generators, is_invariant_under, relation_ideal, scalar_equivariance, x_matrix, ClassicalCase,
    ClassicalSystem, FactorKind, GroupElement, GroupFactor, NamedGenerator, TRACE_MATRICES,
};
pub use matrix::{
    det_columns, mat2, mat2_det, mat2_inverse, mat2_scalar, nilpotency_ideal, traceless_coordinates, Mat2,
    MatrixConstraint, MatrixSymbol, Vector2,
};
pub use weights::{check_generation, monomials_up_to, TorusWeightSystem};
