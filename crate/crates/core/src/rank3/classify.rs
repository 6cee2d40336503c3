//! Degree patterns of the basic relative invariants for the rank-3 cone
//! with `(d_32, d_21, d_31) = (r, s, n)` and for its dual.

use serde::Serialize;

use crate::degrees::{degrees_from_sigma, dual_degrees_rank3, sigma_from_dims, DimTable};
use crate::error::DegreeError;

use super::family::hurwitz_radon_number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// 1: `r = s = n`; 2: `r < s = n`; 3: `r ≤ s < n`; 4: `r = 0`
    /// (all after ordering `r ≤ s`).
    pub case: u8,
    pub triple: (usize, usize, usize),
    /// `r` and `s` were exchanged to bring the triple into `r ≤ s` form.
    pub swapped: bool,
    pub primal: [u64; 3],
    pub dual: [u64; 3],
    /// Primal and dual degree lists coincide up to reversal.
    pub self_dual_pattern: bool,
}

fn reject(r: usize, s: usize, n: usize, reason: &str) -> DegreeError {
    DegreeError::Triple {
        r,
        s,
        n,
        reason: reason.to_string(),
    }
}

fn reversed(d: [u64; 3]) -> [u64; 3] {
    [d[2], d[1], d[0]]
}

/// Classifies a triple and cross-checks the answer against the general
/// degree algorithm.
pub fn classify_degrees(r: usize, s: usize, n: usize) -> Result<Classification, DegreeError> {
    if [r, s, n].iter().filter(|&&v| v == 0).count() >= 2 {
        return Err(reject(r, s, n, "at least two zero dimensions give a reducible cone"));
    }
    let swapped = r > s;
    let (a, b) = if swapped { (s, r) } else { (r, s) };
    if n < b {
        return Err(reject(r, s, n, "need n >= max(r, s)"));
    }
    let (case, primal, dual) = if a == 0 {
        (4, [1, 2, 2], [3, 1, 1])
    } else if a == b && b == n {
        if ![1, 2, 4, 8].contains(&n) {
            return Err(reject(r, s, n, "r = s = n requires n in {1, 2, 4, 8}"));
        }
        (1, [1, 2, 3], [3, 2, 1])
    } else if b == n {
        if a > hurwitz_radon_number(n) {
            return Err(reject(r, s, n, "r exceeds the Hurwitz-Radon number of n"));
        }
        (2, [1, 2, 4], [3, 2, 1])
    } else {
        (3, [1, 2, 4], [4, 2, 1])
    };
    let (primal, dual) = if swapped {
        (reversed(dual), reversed(primal))
    } else {
        (primal, dual)
    };

    let sigma = sigma_from_dims(&DimTable::rank3(r, s, n))?;
    let computed = degrees_from_sigma(&sigma);
    let computed_dual = dual_degrees_rank3(r, s, n)?;
    if computed != primal || computed_dual != dual {
        return Err(reject(r, s, n, "table disagrees with the degree algorithm"));
    }
    Ok(Classification {
        case,
        triple: (r, s, n),
        swapped,
        primal,
        dual,
        self_dual_pattern: reversed(primal) == dual,
    })
}
