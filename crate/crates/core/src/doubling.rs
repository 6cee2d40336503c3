//! Rank-raising construction: from a realization with partition
//! `(n_1, ..., n_r)` build one with partition `(2n_1, n_1, ..., n_r)` whose
//! first-column dimensions are doubled. Iterating from the half-line gives
//! `d_kj = 2^(k-j)` and hence a basic relative invariant of degree
//! `2^(r-1)`.

use std::env;

use crate::matrix::Matrix;
use crate::realization::{BlockPartition, Realization};
use crate::scalar::Scalar;

/// Default largest rank accepted by [`iterate_construction`] callers.
pub const DEFAULT_RANK_CAP: usize = 12;

/// Environment variable overriding [`DEFAULT_RANK_CAP`].
pub const RANK_CAP_ENV: &str = "CONELAB_RANK_CAP";

/// Rank cap from the environment, falling back to the default.
pub fn rank_cap() -> usize {
    env::var(RANK_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_RANK_CAP)
}

/// One doubling step. Block indices shift by one; the new leading block has
/// size `2 n_1`. The new spaces are
///
/// * `V'_{1,0}`: basis `(I 0), (0 I)`;
/// * `V'_{k+1,0}`: basis `(E_a 0)` for every `E_a` of `V_{k,0}`, then
///   `(0 E_a)` in the same order;
/// * `V'_{k+1,j+1} = V_{k,j}` otherwise.
///
/// The input is assumed to satisfy the closure conditions; the output then
/// does as well.
pub fn double<T: Scalar>(v: &Realization<T>) -> Realization<T> {
    let n1 = v.partition().size(0);
    let mut sizes = vec![2 * n1];
    sizes.extend_from_slice(v.partition().sizes());
    let partition = BlockPartition::new(sizes).expect("sizes stay positive");

    let mut spaces = Vec::new();
    let id = Matrix::identity(n1);
    let zero = Matrix::zeros(n1, n1);
    spaces.push(((1, 0), vec![id.hcat(&zero), zero.hcat(&id)]));
    for k in 1..v.rank() {
        let old = v.space(k, 0).basis();
        let nk = v.partition().size(k);
        let pad = Matrix::zeros(nk, n1);
        let mut basis: Vec<Matrix<T>> = old.iter().map(|e| e.hcat(&pad)).collect();
        basis.extend(old.iter().map(|e| pad.hcat(e)));
        spaces.push(((k + 1, 0), basis));
    }
    for (k, j, s) in v.spaces() {
        spaces.push(((k + 1, j + 1), s.basis().to_vec()));
    }
    Realization::new(partition, spaces).expect("doubling preserves shapes and independence")
}

/// Applies [`double`] `rank - 1` times to the half-line. The result has
/// partition `(2^(r-1), ..., 2, 1)`.
pub fn iterate_construction<T: Scalar>(rank: usize) -> Realization<T> {
    assert!(rank >= 1, "rank must be at least 1");
    let mut v = Realization::half_line(1);
    for _ in 1..rank {
        v = double(&v);
    }
    v
}
