//! Coordinates of points of `V` and of the triangular group `H`, and the
//! maps between coordinates and `N x N` matrices.

use crate::error::{ActionError, CoordinateError, ProjectionError};
use crate::matrix::Matrix;
use crate::realization::Realization;
use crate::scalar::Scalar;

/// Off-diagonal coordinate table: `table[k][j]` for `j < k`.
pub type OffCoords<T> = Vec<Vec<Vec<T>>>;

/// A point of `V`: scalar diagonal blocks plus coordinates of each lower
/// block `X_kj` in the basis of `V_kj`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeElement<T> {
    pub diag: Vec<T>,
    pub off: OffCoords<T>,
}

/// A point of `H`: nonzero scalar diagonal blocks `t_ii I` plus strictly
/// lower blocks `T_kj ∈ V_kj`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement<T> {
    pub diag: Vec<T>,
    pub lower: OffCoords<T>,
}

fn zero_table<T: Scalar>(v: &Realization<T>) -> OffCoords<T> {
    (0..v.rank())
        .map(|k| (0..k).map(|j| vec![T::zero(); v.dim(k, j)]).collect())
        .collect()
}

fn check_table<T: Scalar>(v: &Realization<T>, diag: &[T], off: &OffCoords<T>) -> Result<(), CoordinateError> {
    let r = v.rank();
    if diag.len() != r {
        return Err(CoordinateError::DiagLength {
            expected: r,
            found: diag.len(),
        });
    }
    if off.len() != r || off.iter().enumerate().any(|(k, row)| row.len() != k) {
        return Err(CoordinateError::Layout);
    }
    for (k, j, space) in v.spaces() {
        let found = off[k][j].len();
        if found != space.dim() {
            return Err(CoordinateError::SpaceLength {
                k,
                j,
                expected: space.dim(),
                found,
            });
        }
    }
    Ok(())
}

fn flatten<T: Clone>(diag: &[T], off: &OffCoords<T>) -> Vec<T> {
    diag.iter()
        .cloned()
        .chain(off.iter().flatten().flatten().cloned())
        .collect()
}

fn unflatten<T: Scalar>(v: &Realization<T>, flat: &[T]) -> Result<(Vec<T>, OffCoords<T>), CoordinateError> {
    let expected = v.dimension();
    if flat.len() != expected {
        return Err(CoordinateError::FlatLength {
            expected,
            found: flat.len(),
        });
    }
    let r = v.rank();
    let diag = flat[..r].to_vec();
    let mut pos = r;
    let mut off = zero_table(v);
    for (k, j, s) in v.spaces() {
        off[k][j] = flat[pos..pos + s.dim()].to_vec();
        pos += s.dim();
    }
    Ok((diag, off))
}

impl<T: Scalar> ConeElement<T> {
    pub fn identity(v: &Realization<T>) -> Self {
        Self {
            diag: vec![T::one(); v.rank()],
            off: zero_table(v),
        }
    }

    pub fn zero(v: &Realization<T>) -> Self {
        Self {
            diag: vec![T::zero(); v.rank()],
            off: zero_table(v),
        }
    }

    /// Diagonal element `diag(d_1 I, ..., d_r I)`.
    pub fn diagonal(v: &Realization<T>, diag: Vec<T>) -> Result<Self, CoordinateError> {
        let x = Self {
            diag,
            off: zero_table(v),
        };
        x.check(v)?;
        Ok(x)
    }

    pub fn check(&self, v: &Realization<T>) -> Result<(), CoordinateError> {
        check_table(v, &self.diag, &self.off)
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(T::is_zero) && self.off.iter().flatten().flatten().all(T::is_zero)
    }

    /// Coordinates in canonical order: diagonal, then spaces by `(k, j)`.
    pub fn to_flat(&self) -> Vec<T> {
        flatten(&self.diag, &self.off)
    }

    pub fn from_flat(v: &Realization<T>, flat: &[T]) -> Result<Self, CoordinateError> {
        let (diag, off) = unflatten(v, flat)?;
        Ok(Self { diag, off })
    }

    /// Coordinate-wise linear combination `a*self + b*other`.
    pub fn combine(&self, a: &T, other: &Self, b: &T) -> Self {
        let lin = |x: &T, y: &T| a.clone() * x.clone() + b.clone() * y.clone();
        Self {
            diag: self.diag.iter().zip(&other.diag).map(|(x, y)| lin(x, y)).collect(),
            off: self
                .off
                .iter()
                .zip(&other.off)
                .map(|(rx, ry)| {
                    rx.iter()
                        .zip(ry)
                        .map(|(cx, cy)| cx.iter().zip(cy).map(|(x, y)| lin(x, y)).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl<T: Scalar> GroupElement<T> {
    pub fn identity(v: &Realization<T>) -> Self {
        Self {
            diag: vec![T::one(); v.rank()],
            lower: zero_table(v),
        }
    }

    /// Diagonal group element `diag(t_1 I, ..., t_r I)`.
    pub fn diagonal(v: &Realization<T>, diag: Vec<T>) -> Result<Self, CoordinateError> {
        let h = Self {
            diag,
            lower: zero_table(v),
        };
        h.check(v)?;
        Ok(h)
    }

    pub fn check(&self, v: &Realization<T>) -> Result<(), CoordinateError> {
        check_table(v, &self.diag, &self.lower)?;
        if let Some(i) = self.diag.iter().position(T::is_zero) {
            return Err(CoordinateError::SingularDiagonal(i));
        }
        Ok(())
    }

    pub fn to_flat(&self) -> Vec<T> {
        flatten(&self.diag, &self.lower)
    }

    pub fn from_flat(v: &Realization<T>, flat: &[T]) -> Result<Self, CoordinateError> {
        let (diag, lower) = unflatten(v, flat)?;
        let h = Self { diag, lower };
        h.check(v)?;
        Ok(h)
    }
}

impl<T: Scalar> Realization<T> {
    /// The symmetric `N x N` matrix of `x`.
    pub fn embed(&self, x: &ConeElement<T>) -> Result<Matrix<T>, CoordinateError> {
        x.check(self)?;
        let p = self.partition();
        let mut m = Matrix::zeros(self.size(), self.size());
        for (i, d) in x.diag.iter().enumerate() {
            m.set_block(p.offset(i), p.offset(i), &Matrix::scalar(p.size(i), d.clone()));
        }
        for (k, j, s) in self.spaces() {
            let b = s.combine(&x.off[k][j]);
            m.set_block(p.offset(k), p.offset(j), &b);
            m.set_block(p.offset(j), p.offset(k), &b.transpose());
        }
        Ok(m)
    }

    /// Inverse of [`Realization::embed`].
    pub fn project(&self, m: &Matrix<T>) -> Result<ConeElement<T>, ProjectionError> {
        self.check_size(m)?;
        if !m.is_symmetric() {
            return Err(ProjectionError::NotSymmetric);
        }
        let (diag, off) = self.read_lower(m)?;
        Ok(ConeElement { diag, off })
    }

    /// The block lower triangular `N x N` matrix of `h`.
    pub fn embed_group(&self, h: &GroupElement<T>) -> Result<Matrix<T>, CoordinateError> {
        h.check(self)?;
        let p = self.partition();
        let mut m = Matrix::zeros(self.size(), self.size());
        for (i, t) in h.diag.iter().enumerate() {
            m.set_block(p.offset(i), p.offset(i), &Matrix::scalar(p.size(i), t.clone()));
        }
        for (k, j, s) in self.spaces() {
            m.set_block(p.offset(k), p.offset(j), &s.combine(&h.lower[k][j]));
        }
        Ok(m)
    }

    /// Reads a block lower triangular matrix back into `H` coordinates.
    pub fn project_group(&self, m: &Matrix<T>) -> Result<GroupElement<T>, ProjectionError> {
        self.check_size(m)?;
        let p = self.partition();
        for k in 0..self.rank() {
            for j in k + 1..self.rank() {
                let b = m.block(p.offset(k), p.offset(j), p.size(k), p.size(j));
                if !b.is_zero() {
                    return Err(ProjectionError::NonZeroUpper { k, j });
                }
            }
        }
        let (diag, lower) = self.read_lower(m)?;
        if let Some(i) = diag.iter().position(T::is_zero) {
            return Err(ProjectionError::SingularDiagonal(i));
        }
        Ok(GroupElement { diag, lower })
    }

    fn check_size(&self, m: &Matrix<T>) -> Result<(), ProjectionError> {
        let n = self.size();
        if m.shape() != (n, n) {
            return Err(ProjectionError::Size {
                expected: n,
                found: m.shape(),
            });
        }
        Ok(())
    }

    fn read_lower(&self, m: &Matrix<T>) -> Result<(Vec<T>, OffCoords<T>), ProjectionError> {
        let p = self.partition();
        let mut diag = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let b = m.block(p.offset(i), p.offset(i), p.size(i), p.size(i));
            diag.push(b.scalar_value().ok_or(ProjectionError::NonScalarDiagonal(i))?);
        }
        let mut off = zero_table(self);
        for (k, j, s) in self.spaces() {
            let b = m.block(p.offset(k), p.offset(j), p.size(k), p.size(j));
            off[k][j] = s.coordinates(&b).ok_or(ProjectionError::NotInSpan { k, j })?;
        }
        Ok((diag, off))
    }

    /// `⟨x, y⟩_V = Σ x_i y_i + 2 Σ ⟨X_kj, Y_kj⟩_kj`.
    pub fn inner_product(&self, x: &ConeElement<T>, y: &ConeElement<T>) -> Result<T, ActionError> {
        x.check(self)?;
        y.check(self)?;
        let mut acc = crate::matrix::dot(&x.diag, &y.diag);
        let two = T::from_int(2);
        for (k, j, s) in self.spaces() {
            if s.dim() == 0 {
                continue;
            }
            let ip = s
                .inner(&x.off[k][j], &y.off[k][j])
                .ok_or(ActionError::NotScalar { k, j })?;
            acc = acc + two.clone() * ip;
        }
        Ok(acc)
    }

    /// `ρ(h) x = h x ᵗh`, read back into coordinates. A projection failure
    /// means the realization is not closed under the action.
    pub fn rho_act(&self, h: &GroupElement<T>, x: &ConeElement<T>) -> Result<ConeElement<T>, ActionError> {
        let hm = self.embed_group(h)?;
        let xm = self.embed(x)?;
        let out = hm.matmul(&xm).mul_transpose(&hm);
        Ok(self.project(&out)?)
    }

    /// Group product `h1 h2`.
    pub fn group_mul(&self, h1: &GroupElement<T>, h2: &GroupElement<T>) -> Result<GroupElement<T>, ActionError> {
        let a = self.embed_group(h1)?;
        let b = self.embed_group(h2)?;
        Ok(self.project_group(&a.matmul(&b))?)
    }
}
