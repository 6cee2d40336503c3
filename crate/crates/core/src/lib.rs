//! Exact matrix realizations of homogeneous convex cones.
//!
//! A realization fixes a block partition `(n_1, ..., n_r)` and subspaces
//! `V_kj` of `n_k x n_j` matrices; the cone is the set of positive definite
//! symmetric matrices with scalar diagonal blocks and lower blocks in the
//! `V_kj`. On top of that the crate provides
//!
//! * closure-condition verification and exact block LDL membership,
//! * degrees of basic relative invariants from the dimensions `d_kj`,
//! * the doubling construction reaching degree `2^(r-1)`,
//! * rank-3 cones and their duals built from composition families.
//!
//! All algorithms are generic over [`Scalar`]; [`Rational`] makes every
//! check exact and is what the aliases below use.

// Block algorithms read more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod degrees;
pub mod doubling;
pub mod element;
pub mod error;
pub mod json;
pub mod ldl;
pub mod matrix;
pub mod poly;
pub mod rank3;
pub mod realization;
pub mod sample;
pub mod scalar;
pub mod span;

pub use degrees::{
    character_exponents, degrees_from_sigma, dual_degrees_rank3, sigma_from_dims, ColumnTrace, DimTable, SigmaMatrix,
};
pub use doubling::{double, iterate_construction, rank_cap, DEFAULT_RANK_CAP, RANK_CAP_ENV};
pub use element::{ConeElement, GroupElement, OffCoords};
pub use error::{
    ActionError, CompositionError, CoordinateError, DegreeError, FormatError, ParseRationalError, ProjectionError,
    Rank3Error, RealizationError,
};
pub use ldl::{LdlResult, PairingReport};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use realization::{
    space_inner_product, BlockPartition, Condition, ConditionOutcome, OffDiagonalSpace, Realization,
    VerificationReport, Witness,
};
pub use sample::RationalSampler;
pub use scalar::{approx, format_rational, parse_rational, Scalar};

/// Arbitrary-precision rational, the canonical exact scalar.
pub type Rational = num_rational::BigRational;
pub type QMatrix = Matrix<Rational>;
pub type QRealization = Realization<Rational>;
pub type QConeElement = ConeElement<Rational>;
pub type QGroupElement = GroupElement<Rational>;
pub type QPolynomial = Polynomial<Rational>;
pub type QCompositionFamily = rank3::CompositionFamily<Rational>;
