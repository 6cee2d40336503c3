//! Rank-3 cones built from composition families `(r, s, n)`.

pub mod classify;
pub mod cone;
pub mod family;
pub mod invariants;

pub use classify::{classify_degrees, Classification};
pub use cone::{
    block_reverse, build_rank3_cone, build_rank3_dual, coupling, coupling_decomposition, det_rank3_closed,
    det_rank3_dual_closed, dual_factor, primal_factor, CouplingDecomposition, DualRank3Element, Rank3Element,
};
pub use family::{composition_family, family_3_5_7, hurwitz_radon_number, CompositionFamily};
pub use invariants::{
    closed_form_invariants, invariant_system, relative_invariance_check, InvarianceError, InvarianceFailure,
    InvarianceReport, InvariantSystem, Side,
};
