use thiserror::Error;

/// A wire string that is not a canonical rational.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a rational literal: {0:?} (expected \"p/q\" or an integer)")]
pub struct ParseRationalError(pub String);

/// Structural problems with a realization datum. These are distinct from
/// failures of the closure conditions, which are reported by
/// [`crate::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("partition must have at least one block")]
    EmptyPartition,
    #[error("block {0} has size zero")]
    ZeroBlock(usize),
    #[error("space index ({k}, {j}) is out of range for rank {rank} (need j < k < rank)")]
    SpaceIndex { k: usize, j: usize, rank: usize },
    #[error("space ({k}, {j}) is given more than once")]
    DuplicateSpace { k: usize, j: usize },
    #[error("basis element {index} of space ({k}, {j}) has shape {found:?}, expected {expected:?}")]
    Shape {
        k: usize,
        j: usize,
        index: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("basis of space ({k}, {j}) is linearly dependent (element {index})")]
    DependentBasis { k: usize, j: usize, index: usize },
}

/// Coordinates that do not fit the realization they are used with.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoordinateError {
    #[error("expected {expected} diagonal entries, found {found}")]
    DiagLength { expected: usize, found: usize },
    #[error("space ({k}, {j}) expects {expected} coordinates, found {found}")]
    SpaceLength {
        k: usize,
        j: usize,
        expected: usize,
        found: usize,
    },
    #[error("off-diagonal coordinate table has the wrong shape")]
    Layout,
    #[error("group element has zero diagonal entry at block {0}")]
    SingularDiagonal(usize),
    #[error("flat coordinate vector has length {found}, expected {expected}")]
    FlatLength { expected: usize, found: usize },
}

/// A symmetric (or triangular) matrix that does not lie in the realization
/// space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error("matrix is {found:?}, expected {expected}x{expected}")]
    Size { expected: usize, found: (usize, usize) },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("diagonal block {0} is not a scalar multiple of the identity")]
    NonScalarDiagonal(usize),
    #[error("block ({k}, {j}) is not in the span of the declared basis")]
    NotInSpan { k: usize, j: usize },
    #[error("block ({k}, {j}) above the diagonal is nonzero")]
    NonZeroUpper { k: usize, j: usize },
    #[error("diagonal block {0} is zero, not an invertible group element")]
    SingularDiagonal(usize),
}

/// Failure of an operation that needs the closure conditions to hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error(transparent)]
    Coordinates(#[from] CoordinateError),
    #[error("closure violation: {0}")]
    Closure(#[from] ProjectionError),
    #[error("space ({k}, {j}) violates the scalar-product condition")]
    NotScalar { k: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("dimension table not consistent with a homogeneous cone: l^({step})_{i} has negative entry at position {position}")]
    Inconsistent {
        i: usize,
        step: usize,
        position: usize,
    },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("dimension index ({k}, {j}) out of range for rank {rank}")]
    Index { k: usize, j: usize, rank: usize },
    #[error("row index {index} out of range for rank {rank}")]
    Row { index: usize, rank: usize },
    #[error("({r}, {s}, {n}) is not a supported rank-3 triple: {reason}")]
    Triple {
        r: usize,
        s: usize,
        n: usize,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("r = {r} exceeds the Hurwitz-Radon bound rho({n}) = {bound}")]
    AboveBound { r: usize, n: usize, bound: usize },
    #[error("n must be positive")]
    ZeroSize,
    #[error("matrix A_{index} has shape {found:?}, expected {expected:?}")]
    Shape {
        index: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("family has {found} matrices, expected r = {expected}")]
    Count { expected: usize, found: usize },
    #[error("relation fails for pair (A_{i}, A_{j})")]
    Relation { i: usize, j: usize },
    #[error("L(x)y and R(y)x differ at bilinear monomial x_{i} y_{j}, row {row}")]
    Bilinear { row: usize, i: usize, j: usize },
    #[error("ᵗR(e_{b})R(e_{c}) + ᵗR(e_{c})R(e_{b}) is not 2δ I at entry ({row}, {col})")]
    RightNorm { b: usize, c: usize, row: usize, col: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rank3Error {
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error("built realization fails the closure conditions")]
    Conditions(Box<crate::realization::VerificationReport>),
    #[error("element does not match the family shape")]
    Shape,
    #[error("closed form undefined at this point: {0}")]
    Undefined(&'static str),
    #[error("this operation needs r >= 1")]
    NeedsPositiveR,
}

/// JSON wire-format problems.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Coordinates(#[from] CoordinateError),
    #[error("{0}")]
    Schema(String),
}
