//! The rank-3 cone attached to a composition family and its dual.
//!
//! Primal (`r ≥ 1`), partition `(n, r, 1)`:
//!
//! ```text
//!     ⎛ x11 I_n   R(y)      z   ⎞
//! X = ⎜ ᵗR(y)     x22 I_r   x   ⎟
//!     ⎝ ᵗz        ᵗx        x33 ⎠
//! ```
//!
//! Primal (`r = 0`), partition `(s + n, 1, 1)`: the first row block of the
//! `(2,1)` and `(3,1)` positions carries `(ᵗy, 0)` and `(0, ᵗz)`.
//!
//! Dual, written with the large block last:
//!
//! ```text
//!     ⎛ ξ11   ᵗη        ᵗζ      ⎞
//! Ξ = ⎜ η     ξ22 I_s   ᵗL(ξ)   ⎟
//!     ⎝ ζ     L(ξ)      ξ33 I_n ⎠
//! ```
//!
//! Internally the dual is stored lower-triangular with the blocks reversed,
//! partition `(n, s, 1)` and diagonal `(ξ33, ξ22, ξ11)`.

use crate::element::ConeElement;
use crate::error::Rank3Error;
use crate::matrix::{dot, norm_sq, Matrix};
use crate::realization::{BlockPartition, Realization};
use crate::scalar::Scalar;

use super::family::CompositionFamily;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank3Element<T> {
    pub x11: T,
    pub x22: T,
    pub x33: T,
    /// Length `r`.
    pub x: Vec<T>,
    /// Length `s`.
    pub y: Vec<T>,
    /// Length `n`.
    pub z: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualRank3Element<T> {
    pub xi11: T,
    pub xi22: T,
    pub xi33: T,
    /// Length `r`.
    pub xi: Vec<T>,
    /// Length `s`.
    pub eta: Vec<T>,
    /// Length `n`.
    pub zeta: Vec<T>,
}

fn unit_row<T: Scalar>(len: usize, at: usize) -> Matrix<T> {
    let mut m = Matrix::zeros(1, len);
    m[(0, at)] = T::one();
    m
}

fn checked<T: Scalar>(v: Realization<T>) -> Result<Realization<T>, Rank3Error> {
    let report = v.verify_conditions();
    if !report.passed() {
        return Err(Rank3Error::Conditions(Box::new(report)));
    }
    Ok(v)
}

/// Realization of the primal cone. The family is verified first and the
/// closure conditions are re-checked on the result.
pub fn build_rank3_cone<T: Scalar>(f: &CompositionFamily<T>) -> Result<Realization<T>, Rank3Error> {
    f.verify()?;
    let (r, s, n) = f.triple();
    let v = if r == 0 {
        let partition = BlockPartition::new(vec![s + n, 1, 1])?;
        let v21 = (0..s).map(|b| unit_row(s + n, b)).collect();
        let v31 = (0..n).map(|m| unit_row(s + n, s + m)).collect();
        Realization::new(partition, vec![((1, 0), v21), ((2, 0), v31)])?
    } else {
        let partition = BlockPartition::new(vec![n, r, 1])?;
        let v21 = f.right_coefficients().iter().map(Matrix::transpose).collect();
        let v31 = (0..n).map(|m| unit_row(n, m)).collect();
        let v32 = (0..r).map(|i| unit_row(r, i)).collect();
        Realization::new(partition, vec![((1, 0), v21), ((2, 0), v31), ((2, 1), v32)])?
    };
    checked(v)
}

/// Lower-triangular realization of the dual cone, partition `(n, s, 1)`.
pub fn build_rank3_dual<T: Scalar>(f: &CompositionFamily<T>) -> Result<Realization<T>, Rank3Error> {
    f.verify()?;
    let (_, s, n) = f.triple();
    let partition = BlockPartition::new(vec![n, s, 1])?;
    let v21 = f.matrices().iter().map(Matrix::transpose).collect();
    let v31 = (0..n).map(|m| unit_row(n, m)).collect();
    let v32 = (0..s).map(|b| unit_row(s, b)).collect();
    checked(Realization::new(partition, vec![((1, 0), v21), ((2, 0), v31), ((2, 1), v32)])?)
}

/// Conjugates by the permutation reversing the block order of `sizes`.
pub fn block_reverse<T: Scalar>(m: &Matrix<T>, sizes: &[usize]) -> Matrix<T> {
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        offsets.push(acc);
        acc += s;
    }
    let total = acc;
    assert_eq!(m.shape(), (total, total), "matrix does not match block sizes");
    let mut new_offsets = vec![0; sizes.len()];
    let mut acc = 0;
    for i in (0..sizes.len()).rev() {
        new_offsets[i] = acc;
        acc += sizes[i];
    }
    let mut out = Matrix::zeros(total, total);
    for (a, &sa) in sizes.iter().enumerate() {
        for (b, &sb) in sizes.iter().enumerate() {
            out.set_block(new_offsets[a], new_offsets[b], &m.block(offsets[a], offsets[b], sa, sb));
        }
    }
    out
}

impl<T: Scalar> Rank3Element<T> {
    fn check(&self, f: &CompositionFamily<T>) -> Result<(), Rank3Error> {
        let (r, s, n) = f.triple();
        if self.x.len() != r || self.y.len() != s || self.z.len() != n {
            return Err(Rank3Error::Shape);
        }
        Ok(())
    }

    /// Coordinates in [`build_rank3_cone`]: diagonal `(x11, x22, x33)`,
    /// `V_21 = y`, `V_31 = z`, `V_32 = x`.
    pub fn to_cone(&self, f: &CompositionFamily<T>) -> Result<ConeElement<T>, Rank3Error> {
        self.check(f)?;
        Ok(ConeElement {
            diag: vec![self.x11.clone(), self.x22.clone(), self.x33.clone()],
            off: vec![vec![], vec![self.y.clone()], vec![self.z.clone(), self.x.clone()]],
        })
    }

    pub fn from_cone(f: &CompositionFamily<T>, c: &ConeElement<T>) -> Result<Self, Rank3Error> {
        if c.diag.len() != 3 || c.off.len() != 3 || c.off[1].len() != 1 || c.off[2].len() != 2 {
            return Err(Rank3Error::Shape);
        }
        let out = Self {
            x11: c.diag[0].clone(),
            x22: c.diag[1].clone(),
            x33: c.diag[2].clone(),
            x: c.off[2][1].clone(),
            y: c.off[1][0].clone(),
            z: c.off[2][0].clone(),
        };
        out.check(f)?;
        Ok(out)
    }

    pub fn identity(f: &CompositionFamily<T>) -> Self {
        let (r, s, n) = f.triple();
        Self {
            x11: T::one(),
            x22: T::one(),
            x33: T::one(),
            x: vec![T::zero(); r],
            y: vec![T::zero(); s],
            z: vec![T::zero(); n],
        }
    }
}

impl<T: Scalar> DualRank3Element<T> {
    fn check(&self, f: &CompositionFamily<T>) -> Result<(), Rank3Error> {
        let (r, s, n) = f.triple();
        if self.xi.len() != r || self.eta.len() != s || self.zeta.len() != n {
            return Err(Rank3Error::Shape);
        }
        Ok(())
    }

    /// Coordinates in [`build_rank3_dual`]: diagonal `(ξ33, ξ22, ξ11)`,
    /// `V_21 = ξ`, `V_31 = ζ`, `V_32 = η`.
    pub fn to_cone(&self, f: &CompositionFamily<T>) -> Result<ConeElement<T>, Rank3Error> {
        self.check(f)?;
        Ok(ConeElement {
            diag: vec![self.xi33.clone(), self.xi22.clone(), self.xi11.clone()],
            off: vec![vec![], vec![self.xi.clone()], vec![self.zeta.clone(), self.eta.clone()]],
        })
    }

    pub fn from_cone(f: &CompositionFamily<T>, c: &ConeElement<T>) -> Result<Self, Rank3Error> {
        if c.diag.len() != 3 || c.off.len() != 3 || c.off[1].len() != 1 || c.off[2].len() != 2 {
            return Err(Rank3Error::Shape);
        }
        let out = Self {
            xi11: c.diag[2].clone(),
            xi22: c.diag[1].clone(),
            xi33: c.diag[0].clone(),
            xi: c.off[1][0].clone(),
            eta: c.off[2][1].clone(),
            zeta: c.off[2][0].clone(),
        };
        out.check(f)?;
        Ok(out)
    }

    pub fn identity(f: &CompositionFamily<T>) -> Self {
        let (r, s, n) = f.triple();
        Self {
            xi11: T::one(),
            xi22: T::one(),
            xi33: T::one(),
            xi: vec![T::zero(); r],
            eta: vec![T::zero(); s],
            zeta: vec![T::zero(); n],
        }
    }

    /// The dual point as a symmetric matrix with blocks ordered `(1, s, n)`.
    pub fn display_matrix(&self, f: &CompositionFamily<T>) -> Result<Matrix<T>, Rank3Error> {
        self.check(f)?;
        let (_, s, n) = f.triple();
        let mut m = Matrix::zeros(1 + s + n, 1 + s + n);
        m[(0, 0)] = self.xi11.clone();
        for b in 0..s {
            m[(0, 1 + b)] = self.eta[b].clone();
            m[(1 + b, 0)] = self.eta[b].clone();
            m[(1 + b, 1 + b)] = self.xi22.clone();
        }
        for c in 0..n {
            m[(0, 1 + s + c)] = self.zeta[c].clone();
            m[(1 + s + c, 0)] = self.zeta[c].clone();
            m[(1 + s + c, 1 + s + c)] = self.xi33.clone();
        }
        let l = f.left(&self.xi);
        m.set_block(1 + s, 1, &l);
        m.set_block(1, 1 + s, &l.transpose());
        Ok(m)
    }
}

/// `ᵗR(y) z`, length `r`.
fn rt_y_z<T: Scalar>(f: &CompositionFamily<T>, y: &[T], z: &[T]) -> Vec<T> {
    f.right(y).transpose().mul_vec(z)
}

/// `ᵗL(ξ) ζ`, length `s`.
fn lt_xi_zeta<T: Scalar>(f: &CompositionFamily<T>, xi: &[T], zeta: &[T]) -> Vec<T> {
    f.left(xi).transpose().mul_vec(zeta)
}

fn int(v: usize) -> i64 {
    i64::try_from(v).expect("size fits in i64")
}

/// Primal factor `F = Δ2 (x11 x33 − ‖z‖²) − ‖x11 x − ᵗR(y) z‖²` (`r ≥ 1`).
pub fn primal_factor<T: Scalar>(f: &CompositionFamily<T>, e: &Rank3Element<T>) -> Result<T, Rank3Error> {
    e.check(f)?;
    if f.r() == 0 {
        return Err(Rank3Error::NeedsPositiveR);
    }
    let d2 = e.x11.clone() * e.x22.clone() - norm_sq(&e.y);
    let c = e.x11.clone() * e.x33.clone() - norm_sq(&e.z);
    let w = rt_y_z(f, &e.y, &e.z);
    let diff: Vec<T> = e.x.iter().zip(&w).map(|(a, b)| e.x11.clone() * a.clone() - b.clone()).collect();
    Ok(d2 * c - norm_sq(&diff))
}

/// Dual factor `F' = (ξ11 ξ33 − ‖ζ‖²)(ξ22 ξ33 − ‖ξ‖²) − ‖ξ33 η − ᵗL(ξ) ζ‖²`.
pub fn dual_factor<T: Scalar>(f: &CompositionFamily<T>, e: &DualRank3Element<T>) -> Result<T, Rank3Error> {
    e.check(f)?;
    let a = e.xi11.clone() * e.xi33.clone() - norm_sq(&e.zeta);
    let b = e.xi22.clone() * e.xi33.clone() - norm_sq(&e.xi);
    let w = lt_xi_zeta(f, &e.xi, &e.zeta);
    let diff: Vec<T> = e.eta.iter().zip(&w).map(|(p, q)| e.xi33.clone() * p.clone() - q.clone()).collect();
    Ok(a * b - norm_sq(&diff))
}

/// Closed-form `det X`:
/// `x11^(n−r−1) (x11 x22 − ‖y‖²)^(r−1) F` for `r ≥ 1` and
/// `x11^(s+n−2) (x11 x22 − ‖y‖²)(x11 x33 − ‖z‖²)` for `r = 0`.
/// Negative exponents make this a rational function; a vanishing base under
/// a negative exponent is reported as undefined.
pub fn det_rank3_closed<T: Scalar>(f: &CompositionFamily<T>, e: &Rank3Element<T>) -> Result<T, Rank3Error> {
    e.check(f)?;
    let (r, s, n) = f.triple();
    let d2 = e.x11.clone() * e.x22.clone() - norm_sq(&e.y);
    if r == 0 {
        let p = e
            .x11
            .pow_int(int(s + n) - 2)
            .ok_or(Rank3Error::Undefined("x11 = 0 with s + n < 2"))?;
        return Ok(p * d2 * (e.x11.clone() * e.x33.clone() - norm_sq(&e.z)));
    }
    let p = e
        .x11
        .pow_int(int(n) - int(r) - 1)
        .ok_or(Rank3Error::Undefined("x11 = 0 with r = n"))?;
    let q = d2.pow_int(int(r) - 1).ok_or(Rank3Error::Undefined("x11 x22 = ‖y‖²"))?;
    Ok(p * q * primal_factor(f, e)?)
}

/// Closed-form `det Ξ = ξ33^(n−s−1) (ξ22 ξ33 − ‖ξ‖²)^(s−1) F'`.
pub fn det_rank3_dual_closed<T: Scalar>(
    f: &CompositionFamily<T>,
    e: &DualRank3Element<T>,
) -> Result<T, Rank3Error> {
    e.check(f)?;
    let (_, s, n) = f.triple();
    let p = e
        .xi33
        .pow_int(int(n) - int(s) - 1)
        .ok_or(Rank3Error::Undefined("ξ33 = 0 with s = n"))?;
    let b = e.xi22.clone() * e.xi33.clone() - norm_sq(&e.xi);
    let q = b.pow_int(int(s) - 1).ok_or(Rank3Error::Undefined("ξ22 ξ33 = ‖ξ‖²"))?;
    Ok(p * q * dual_factor(f, e)?)
}

/// `⟨X, Ξ⟩ = x11 ξ11 + x22 ξ22 + x33 ξ33 + 2 (⟨x, ξ⟩ + ⟨y, η⟩ + ⟨z, ζ⟩)`.
pub fn coupling<T: Scalar>(
    f: &CompositionFamily<T>,
    x: &Rank3Element<T>,
    xi: &DualRank3Element<T>,
) -> Result<T, Rank3Error> {
    x.check(f)?;
    xi.check(f)?;
    let two = T::from_int(2);
    Ok(x.x11.clone() * xi.xi11.clone()
        + x.x22.clone() * xi.xi22.clone()
        + x.x33.clone() * xi.xi33.clone()
        + two * (dot(&x.x, &xi.xi) + dot(&x.y, &xi.eta) + dot(&x.z, &xi.zeta)))
}

/// Both sides of the decomposition of the coupling into terms that are
/// manifestly positive on the interiors of the two cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingDecomposition<T> {
    pub coupling: T,
    /// `x11 (ξ̈11 + ᵗC Ξ̃ C)`
    pub first: T,
    /// `x̃22 (ξ̃22 + ξ33 ‖d‖²)`
    pub second: T,
    /// `ẍ33 ξ33`
    pub third: T,
}

impl<T: Scalar> CouplingDecomposition<T> {
    pub fn sum(&self) -> T {
        self.first.clone() + self.second.clone() + self.third.clone()
    }

    pub fn holds(&self) -> bool {
        self.sum() == self.coupling
    }

    pub fn all_positive(&self) -> bool {
        self.first.is_positive() && self.second.is_positive() && self.third.is_positive()
    }
}

/// Evaluates the coupling and its three-term decomposition. Needs `r ≥ 1`,
/// `x11 ≠ 0`, `x̃22 ≠ 0`, `ξ33 ≠ 0` and `ξ̃22 ≠ 0`.
pub fn coupling_decomposition<T: Scalar>(
    f: &CompositionFamily<T>,
    x: &Rank3Element<T>,
    xi: &DualRank3Element<T>,
) -> Result<CouplingDecomposition<T>, Rank3Error> {
    x.check(f)?;
    xi.check(f)?;
    let (r, s, n) = f.triple();
    if r == 0 {
        return Err(Rank3Error::NeedsPositiveR);
    }
    if x.x11.is_zero() {
        return Err(Rank3Error::Undefined("x11 = 0"));
    }
    if xi.xi33.is_zero() {
        return Err(Rank3Error::Undefined("ξ33 = 0"));
    }
    let x11 = x.x11.clone();
    let xi33 = xi.xi33.clone();

    // primal Schur complements
    let xt22 = x.x22.clone() - norm_sq(&x.y) / x11.clone();
    if xt22.is_zero() {
        return Err(Rank3Error::Undefined("x11 x22 = ‖y‖²"));
    }
    let w = rt_y_z(f, &x.y, &x.z);
    let xt: Vec<T> = x.x.iter().zip(&w).map(|(a, b)| a.clone() - b.clone() / x11.clone()).collect();
    let xt33 = x.x33.clone() - norm_sq(&x.z) / x11.clone();
    let xdd33 = xt33 - norm_sq(&xt) / xt22.clone();

    // dual Schur complements
    let xit22 = xi.xi22.clone() - norm_sq(&xi.xi) / xi33.clone();
    if xit22.is_zero() {
        return Err(Rank3Error::Undefined("ξ22 ξ33 = ‖ξ‖²"));
    }
    let l = f.left(&xi.xi);
    let mut tilde = Matrix::zeros(s + n, s + n);
    tilde.set_block(0, 0, &Matrix::scalar(s, xi.xi22.clone()));
    tilde.set_block(0, s, &l.transpose());
    tilde.set_block(s, 0, &l);
    tilde.set_block(s, s, &Matrix::scalar(n, xi33.clone()));
    let eta_zeta: Vec<T> = xi.eta.iter().chain(&xi.zeta).cloned().collect();
    let b = tilde
        .solve(&eta_zeta)
        .ok_or(Rank3Error::Undefined("dual Schur block is singular"))?;
    let xidd11 = xi.xi11.clone() - dot(&eta_zeta, &b);

    let c: Vec<T> = b
        .iter()
        .zip(x.y.iter().chain(&x.z))
        .map(|(p, q)| p.clone() + q.clone() / x11.clone())
        .collect();
    let d: Vec<T> = xi
        .xi
        .iter()
        .zip(&xt)
        .map(|(p, q)| p.clone() / xi33.clone() + q.clone() / xt22.clone())
        .collect();

    let ctc = dot(&c, &tilde.mul_vec(&c));
    Ok(CouplingDecomposition {
        coupling: coupling(f, x, xi)?,
        first: x11 * (xidd11 + ctc),
        second: xt22 * (xit22 + xi33.clone() * norm_sq(&d)),
        third: xdd33 * xi33,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank3::family::{composition_family, family_3_5_7};
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| q(a)).collect()
    }

    #[test]
    fn fixture_layout_matches_expected_matrix() {
        let f = family_3_5_7::<Rational>();
        let v = build_rank3_cone(&f).unwrap();
        assert_eq!(v.partition().sizes(), &[7, 3, 1]);
        // R(y) with y = e_b reproduces the printed pattern
        let y = qs(&[1, 2, 3, 4, 5]);
        #[rustfmt::skip]
        let expected = Matrix::from_ints(7, 3, &[
            1, 4, -3,
            2, -3, -4,
            3, 2, 1,
            4, -1, 2,
            5, 0, 0,
            0, 5, 0,
            0, 0, 5,
        ]);
        assert_eq!(f.right(&y), expected);
        let e = Rank3Element { x11: q(2), x22: q(3), x33: q(4), x: qs(&[1, 0, -1]), y, z: qs(&[0, 1, 0, 0, 0, 0, 2]) };
        let m = v.embed(&e.to_cone(&f).unwrap()).unwrap();
        assert_eq!(m.block(0, 7, 7, 3), expected);
        assert_eq!(m.block(10, 7, 1, 3), Matrix::from_ints(1, 3, &[1, 0, -1]));
        assert_eq!(m.block(10, 0, 1, 7), Matrix::from_ints(1, 7, &[0, 1, 0, 0, 0, 0, 2]));
    }

    #[test]
    fn closed_determinants_agree_with_elimination() {
        let f = family_3_5_7::<Rational>();
        let v = build_rank3_cone(&f).unwrap();
        let e = Rank3Element { x11: q(9), x22: q(7), x33: q(11), x: qs(&[1, -2, 0]), y: qs(&[1, 0, 2, -1, 1]), z: qs(&[0, 1, 1, 0, -1, 2, 0]) };
        let m = v.embed(&e.to_cone(&f).unwrap()).unwrap();
        assert_eq!(det_rank3_closed(&f, &e).unwrap(), m.determinant());

        let w = build_rank3_dual(&f).unwrap();
        let d = DualRank3Element { xi11: q(13), xi22: q(6), xi33: q(5), xi: qs(&[1, 1, -1]), eta: qs(&[0, 1, 0, 2, 1]), zeta: qs(&[1, 0, 0, -1, 0, 1, 1]) };
        let lowered = w.embed(&d.to_cone(&f).unwrap()).unwrap();
        assert_eq!(det_rank3_dual_closed(&f, &d).unwrap(), lowered.determinant());
        let display = d.display_matrix(&f).unwrap();
        assert_eq!(block_reverse(&lowered, &[7, 5, 1]), display);
    }

    #[test]
    fn r_zero_layout() {
        let f = CompositionFamily::<Rational>::new(2, 3, vec![]).unwrap();
        let v = build_rank3_cone(&f).unwrap();
        assert_eq!(v.partition().sizes(), &[5, 1, 1]);
        assert_eq!(v.dim(2, 1), 0);
        let e = Rank3Element { x11: q(3), x22: q(2), x33: q(5), x: vec![], y: qs(&[1, 1]), z: qs(&[1, 0, 2]) };
        let m = v.embed(&e.to_cone(&f).unwrap()).unwrap();
        assert_eq!(det_rank3_closed(&f, &e).unwrap(), m.determinant());
        let w = build_rank3_dual(&f).unwrap();
        let d = DualRank3Element { xi11: q(4), xi22: q(3), xi33: q(2), xi: vec![], eta: qs(&[1, 0]), zeta: qs(&[0, 1, 1]) };
        assert_eq!(det_rank3_dual_closed(&f, &d).unwrap(), w.embed(&d.to_cone(&f).unwrap()).unwrap().determinant());
    }

    #[test]
    fn square_case_uses_negative_exponent() {
        let f = composition_family::<Rational>(2, 2).unwrap();
        let e = Rank3Element { x11: q(3), x22: q(3), x33: q(3), x: qs(&[1, 0]), y: qs(&[1, 1]), z: qs(&[0, 1]) };
        let v = build_rank3_cone(&f).unwrap();
        assert_eq!(det_rank3_closed(&f, &e).unwrap(), v.embed(&e.to_cone(&f).unwrap()).unwrap().determinant());
        let mut zero = e.clone();
        zero.x11 = q(0);
        assert!(matches!(det_rank3_closed(&f, &zero), Err(Rank3Error::Undefined(_))));
    }

    #[test]
    fn decomposition_at_identity_pair() {
        let f = family_3_5_7::<Rational>();
        let dec = coupling_decomposition(&f, &Rank3Element::identity(&f), &DualRank3Element::identity(&f)).unwrap();
        assert!(dec.holds());
        assert_eq!(dec.coupling, q(3));
        assert!(dec.all_positive());
    }

    #[test]
    fn conversion_round_trip() {
        let f = family_3_5_7::<Rational>();
        let e = Rank3Element { x11: q(1), x22: q(2), x33: q(3), x: qs(&[4, 5, 6]), y: qs(&[7, 8, 9, 10, 11]), z: qs(&[1, 2, 3, 4, 5, 6, 7]) };
        let c = e.to_cone(&f).unwrap();
        assert_eq!(Rank3Element::from_cone(&f, &c).unwrap(), e);
        let d = DualRank3Element { xi11: q(1), xi22: q(2), xi33: q(3), xi: qs(&[4, 5, 6]), eta: qs(&[7, 8, 9, 10, 11]), zeta: qs(&[1, 2, 3, 4, 5, 6, 7]) };
        assert_eq!(DualRank3Element::from_cone(&f, &d.to_cone(&f).unwrap()).unwrap(), d);
        let mut bad = e;
        bad.x.pop();
        assert_eq!(bad.to_cone(&f).unwrap_err(), Rank3Error::Shape);
    }
}
