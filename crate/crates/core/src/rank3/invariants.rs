//! Basic relative invariants of the rank-3 cones as explicit polynomials in
//! the flat coordinates of the corresponding realization, and a generic
//! sampling check of relative invariance.

use crate::degrees::{character_exponents, sigma_from_dims, SigmaMatrix};
use crate::element::{ConeElement, GroupElement};
use crate::error::{ActionError, DegreeError, Rank3Error};
use crate::poly::Polynomial;
use crate::realization::Realization;
use crate::scalar::Scalar;

use super::cone::{build_rank3_cone, build_rank3_dual};
use super::family::CompositionFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Primal,
    Dual,
}

type P<T> = Polynomial<T>;

fn vars<T: Scalar>(start: usize, len: usize) -> Vec<P<T>> {
    (start..start + len).map(P::var).collect()
}

/// `ᵗA_i`-weighted bilinear forms `Σ_m Σ_b A_i[m][b] u_b v_m` for each `i`.
fn bilinear_a<T: Scalar>(f: &CompositionFamily<T>, u: &[P<T>], v: &[P<T>]) -> Vec<P<T>> {
    f.matrices()
        .iter()
        .map(|a| {
            let mut acc = P::zero();
            for (m, vm) in v.iter().enumerate() {
                for (b, ub) in u.iter().enumerate() {
                    let c = &a[(m, b)];
                    if !c.is_zero() {
                        acc = acc + (ub.clone() * vm.clone()).scale(c);
                    }
                }
            }
            acc
        })
        .collect()
}

/// The three invariants in the usual numbering (for the dual, `Δ'_1` is the
/// one of top degree and `Δ'_3 = ξ33`).
///
/// Variables are the flat coordinates of the matching realization:
/// primal `(x11, x22, x33, y, z, x)`, dual `(ξ33, ξ22, ξ11, ξ, ζ, η)`.
pub fn closed_form_invariants<T: Scalar>(f: &CompositionFamily<T>, side: Side) -> Vec<P<T>> {
    let (r, s, n) = f.triple();
    match side {
        Side::Primal => {
            let (x11, x22, x33) = (P::var(0), P::var(1), P::var(2));
            let y = vars(3, s);
            let z = vars(3 + s, n);
            let x = vars(3 + s + n, r);
            let d2 = x11.clone() * x22 - P::norm_sq(&y);
            let c = x11.clone() * x33 - P::norm_sq(&z);
            let d3 = if r == 0 {
                c
            } else {
                // (ᵗR(y) z)_i = Σ A_i[m][b] y_b z_m
                let w = bilinear_a(f, &y, &z);
                let diff: Vec<P<T>> = x.iter().zip(w).map(|(xi, wi)| x11.clone() * xi.clone() - wi).collect();
                let factor = d2.clone() * c - P::norm_sq(&diff);
                if r == n {
                    factor.divide_by_var(0).expect("x11 divides the factor when r = n")
                } else {
                    factor
                }
            };
            vec![x11, d2, d3]
        }
        Side::Dual => {
            let (xi33, xi22, xi11) = (P::var(0), P::var(1), P::var(2));
            let xi = vars(3, r);
            let zeta = vars(3 + r, n);
            let eta = vars(3 + r + n, s);
            if r == 0 {
                let d1 = xi11 * xi22.clone() * xi33.clone()
                    - xi22.clone() * P::norm_sq(&zeta)
                    - xi33.clone() * P::norm_sq(&eta);
                return vec![d1, xi22, xi33];
            }
            let d2 = xi22 * xi33.clone() - P::norm_sq(&xi);
            // (ᵗL(ξ) ζ)_b = Σ_i Σ_m ξ_i A_i[m][b] ζ_m
            let mut w = vec![P::zero(); s];
            for (i, a) in f.matrices().iter().enumerate() {
                for (b, wb) in w.iter_mut().enumerate() {
                    for (m, zm) in zeta.iter().enumerate() {
                        let c = &a[(m, b)];
                        if !c.is_zero() {
                            *wb = wb.clone() + (xi[i].clone() * zm.clone()).scale(c);
                        }
                    }
                }
            }
            let diff: Vec<P<T>> = eta.iter().zip(w).map(|(e, wb)| xi33.clone() * e.clone() - wb).collect();
            let factor = (xi11 * xi33.clone() - P::norm_sq(&zeta)) * d2.clone() - P::norm_sq(&diff);
            let d1 = if s == n {
                factor.divide_by_var(0).expect("ξ33 divides the factor when s = n")
            } else {
                factor
            };
            vec![d1, d2, xi33]
        }
    }
}

/// Everything needed to check relative invariance on one side: the
/// realization, the invariants in the realization's block order, and `σ`
/// computed from its measured dimensions.
#[derive(Debug, Clone)]
pub struct InvariantSystem<T> {
    pub realization: Realization<T>,
    pub invariants: Vec<P<T>>,
    pub sigma: SigmaMatrix,
}

pub fn invariant_system<T: Scalar>(f: &CompositionFamily<T>, side: Side) -> Result<InvariantSystem<T>, Rank3Error> {
    let (realization, invariants) = match side {
        Side::Primal => (build_rank3_cone(f)?, closed_form_invariants(f, side)),
        Side::Dual => {
            let mut list = closed_form_invariants(f, side);
            list.reverse();
            (build_rank3_dual(f)?, list)
        }
    };
    let sigma = sigma_from_dims(&realization.measured_dims()).map_err(|_| Rank3Error::Undefined("dimension table"))?;
    Ok(InvariantSystem {
        realization,
        invariants,
        sigma,
    })
}

/// First sample at which `Δ_j(ρ(h)x) ≠ χ_j(h) Δ_j(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceFailure {
    pub sample: usize,
    /// 0-based invariant index.
    pub invariant: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvarianceReport {
    pub checked: usize,
    pub failure: Option<InvarianceFailure>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum InvarianceError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error("{invariants} invariants for a realization of rank {rank}")]
    Count { invariants: usize, rank: usize },
}

/// Checks `Δ_j(ρ(h)x) = Π_i t_ii^{2σ_ji} Δ_j(x)` for every sample `(h, x)`.
/// The invariants are polynomials in the flat coordinates of `v`.
pub fn relative_invariance_check<T: Scalar>(
    v: &Realization<T>,
    invariants: &[P<T>],
    sigma: &SigmaMatrix,
    samples: &[(GroupElement<T>, ConeElement<T>)],
) -> Result<InvarianceReport, InvarianceError> {
    if invariants.len() != v.rank() || sigma.rank() != v.rank() {
        return Err(InvarianceError::Count {
            invariants: invariants.len(),
            rank: v.rank(),
        });
    }
    let exponents: Vec<Vec<u64>> = (0..v.rank())
        .map(|j| character_exponents(sigma, j))
        .collect::<Result<_, _>>()?;
    let mut report = InvarianceReport::default();
    for (idx, (h, x)) in samples.iter().enumerate() {
        let moved = v.rho_act(h, x)?.to_flat();
        let flat = x.to_flat();
        report.checked += 1;
        for (j, (delta, exps)) in invariants.iter().zip(&exponents).enumerate() {
            let chi = h
                .diag
                .iter()
                .zip(exps)
                .fold(T::one(), |acc, (t, &e)| acc * num_traits::pow(t.clone(), e as usize));
            if delta.eval(&moved) != chi * delta.eval(&flat) {
                report.failure = Some(InvarianceFailure {
                    sample: idx,
                    invariant: j,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}
