//! Square-root-free block elimination in `V` coordinates.
//!
//! For `x ∈ V` the elimination produces a unit element `u ∈ H` and pivots
//! `d_1, ..., d_r` with `x = u · diag(d_1 I, ..., d_r I) · ᵗu`. Every
//! intermediate Schur complement stays in `V`, so each block keeps a single
//! scalar pivot and the whole computation is exact over the rationals.

use crate::element::{ConeElement, GroupElement};
use crate::error::{ActionError, ProjectionError};
use crate::matrix::Matrix;
use crate::realization::Realization;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdlResult<T> {
    /// Unit lower triangular factor (all diagonal entries 1).
    pub unit: GroupElement<T>,
    /// One pivot per block. Shorter than the rank when the elimination
    /// broke down.
    pub pivots: Vec<T>,
    /// Block at which a zero pivot met a nonzero column below it.
    pub breakdown: Option<usize>,
    pub is_member: bool,
}

impl<T: Scalar> LdlResult<T> {
    pub fn is_complete(&self) -> bool {
        self.breakdown.is_none()
    }

    /// All pivots defined and nonnegative: the point lies in the closed cone.
    pub fn in_closure(&self) -> bool {
        self.is_complete() && self.pivots.iter().all(|d| !d.is_negative())
    }

    /// `det embed(x) = Π d_i^{n_i}`; `None` after a breakdown.
    pub fn determinant(&self, v: &Realization<T>) -> Option<T> {
        if !self.is_complete() {
            return None;
        }
        Some(
            self.pivots
                .iter()
                .zip(v.partition().sizes())
                .fold(T::one(), |acc, (d, &n)| acc * num_traits::pow(d.clone(), n)),
        )
    }

    /// `u · diag(d) · ᵗu` as a point of `V`.
    pub fn reconstruct(&self, v: &Realization<T>) -> Result<ConeElement<T>, ActionError> {
        let d = ConeElement::diagonal(v, self.pivots.clone())?;
        v.rho_act(&self.unit, &d)
    }
}

impl<T: Scalar> Realization<T> {
    pub fn ldl_decompose(&self, x: &ConeElement<T>) -> Result<LdlResult<T>, ActionError> {
        x.check(self)?;
        let r = self.rank();
        let mut diag = x.diag.clone();
        let mut blocks: Vec<Vec<Matrix<T>>> = (0..r)
            .map(|k| (0..k).map(|j| self.space(k, j).combine(&x.off[k][j])).collect())
            .collect();
        let mut unit = GroupElement::identity(self);
        let mut pivots = Vec::with_capacity(r);
        let mut breakdown = None;

        for j in 0..r {
            let d = diag[j].clone();
            // Column j below the pivot, in coordinates of the V_kj.
            let mut column = Vec::with_capacity(r - j - 1);
            for k in j + 1..r {
                let c = self
                    .space(k, j)
                    .coordinates(&blocks[k][j])
                    .ok_or(ProjectionError::NotInSpan { k, j })?;
                column.push(c);
            }
            if d.is_zero() {
                pivots.push(d);
                if blocks.iter().skip(j + 1).any(|row| !row[j].is_zero()) {
                    breakdown = Some(j);
                    break;
                }
                continue;
            }
            for (k, c) in (j + 1..r).zip(column) {
                unit.lower[k][j] = c.into_iter().map(|a| a / d.clone()).collect();
            }
            for k in j + 1..r {
                let xkj = blocks[k][j].clone();
                if xkj.is_zero() {
                    continue;
                }
                let norm = xkj
                    .mul_transpose(&xkj)
                    .scalar_value()
                    .ok_or(ActionError::NotScalar { k, j })?;
                diag[k] = diag[k].clone() - norm / d.clone();
                for jp in j + 1..k {
                    let corr = xkj.mul_transpose(&blocks[jp][j]);
                    if corr.is_zero() {
                        continue;
                    }
                    blocks[k][jp] = blocks[k][jp].sub(&corr.scale(&(T::one() / d.clone())));
                }
            }
            pivots.push(d);
        }

        let is_member = breakdown.is_none() && pivots.iter().all(T::is_positive);
        Ok(LdlResult {
            unit,
            pivots,
            breakdown,
            is_member,
        })
    }

    /// Sampling check for `y ∈ Ω*`: `⟨x, y⟩_V > 0` for every nonzero sample
    /// `x` of the closed cone. A necessary condition only.
    pub fn dual_pairing_positive(
        &self,
        y: &ConeElement<T>,
        samples: &[ConeElement<T>],
    ) -> Result<PairingReport, ActionError> {
        let mut report = PairingReport::default();
        for (idx, x) in samples.iter().enumerate() {
            if x.is_zero() || !self.ldl_decompose(x)?.in_closure() {
                report.skipped.push(idx);
                continue;
            }
            report.checked += 1;
            if !self.inner_product(x, y)?.is_positive() && report.first_failure.is_none() {
                report.first_failure = Some(idx);
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairingReport {
    pub checked: usize,
    /// Samples that were zero or not in the closed cone.
    pub skipped: Vec<usize>,
    pub first_failure: Option<usize>,
}

impl PairingReport {
    pub fn all_positive(&self) -> bool {
        self.first_failure.is_none()
    }
}
