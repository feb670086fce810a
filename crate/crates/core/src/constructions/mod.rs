//! Representation matrices for bi-uniform matroids.
//!
//! Three constructions are provided: the direct `d = 2` construction over
//! `F_q` indexed by quadratic residues, and two choices of points and β for
//! the evaluation code `C(F1, F2, β)` (over an extension field, or over a
//! large prime field). [`auto_construct`] dispatches between them.

mod auto;
mod condition;
mod d2;
mod evalcode;
mod extfield;
mod params;
mod primefield;
mod representation;
mod uniform;

use num_bigint::BigUint;
use thiserror::Error;

use crate::fields::FieldError;
use crate::linalg::LinalgError;
use crate::matroid::{Verdict, VerifyError};

pub use auto::{auto_construct, construct_unverified, smallest_d2_prime, smallest_ext_params, AutoOptions, Preference};
pub use condition::{
    condition_matrix, condition_spec_for_subset, poly_from_roots, varphi, varphi_integer_poly, ConditionMatrixSpec,
};
pub use d2::{ascending_squares, construct_d2_squares};
pub use evalcode::{eval_code_generator, eval_code_matrix, EvalCodeSpec};
pub use extfield::construct_ext_field;
pub use params::{binomial, BiUniformParams};
pub use primefield::{alternating_points, construct_prime_field, prime_field_plan, PrimeFieldPlan};
pub use representation::{Method, Provenance, Representation};
pub use uniform::{construct_uniform, uniform_representation};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameters out of range: {0}")]
    ParamsOutOfRange(String),
    #[error("the field size q must be odd")]
    FieldNotOdd,
    #[error("evaluation points must be pairwise distinct")]
    DuplicatePoints,
    #[error("evaluation points must be nonzero")]
    ZeroPoint,
    #[error("base field q0 = {q0} must exceed the largest class size {max_class}")]
    BaseFieldTooSmall { q0: BigUint, max_class: usize },
    #[error("extension degree s = {s} must exceed d(d-1)/2 = {bound}")]
    DegreeTooSmall { s: usize, bound: usize },
    #[error("condition matrix is vacuous when t1 = 0 or t2 = 0")]
    DegenerateSplit,
    #[error("field of order {order} has fewer than {needed} usable elements")]
    FieldTooSmall { order: BigUint, needed: usize },
    #[error("malformed representation: {0}")]
    Malformed(String),
    #[error("constructed matrix failed verification")]
    VerificationFailed(Box<Verdict>),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
