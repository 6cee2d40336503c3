//! Exact span membership for a fixed, linearly independent set of vectors.

use crate::scalar::Scalar;

/// Reduced row-echelon form of a basis together with the change of basis
/// back to the original vectors.
#[derive(Debug, Clone)]
pub struct SpanBasis<T> {
    len: usize,
    pivots: Vec<usize>,
    // reduced rows, sparse; row i is 1 at pivots[i] and 0 at every other pivot
    rows: Vec<Vec<(usize, T)>>,
    // rows[i] = Σ_a transform[i][a] * basis[a]
    transform: Vec<Vec<T>>,
}

impl<T: Scalar> SpanBasis<T> {
    /// Eliminates `vectors` (all of length `len`). On dependence returns the
    /// index of the first vector that lies in the span of its predecessors.
    pub fn new(len: usize, vectors: &[Vec<T>]) -> Result<Self, usize> {
        let d = vectors.len();
        let mut work: Vec<Vec<T>> = vectors.to_vec();
        let mut transform: Vec<Vec<T>> = (0..d)
            .map(|i| {
                let mut e = vec![T::zero(); d];
                e[i] = T::one();
                e
            })
            .collect();
        // Process vectors in order so a dependent one is reported by index.
        let mut pivots: Vec<usize> = Vec::with_capacity(d);
        for i in 0..d {
            for (p, &col) in pivots.clone().iter().enumerate() {
                let f = work[i][col].clone();
                if f.is_zero() {
                    continue;
                }
                let (head, tail) = work.split_at_mut(i);
                for (dst, src) in tail[0].iter_mut().zip(&head[p]) {
                    if !src.is_zero() {
                        *dst = dst.clone() - f.clone() * src.clone();
                    }
                }
                let (th, tt) = transform.split_at_mut(i);
                for (dst, src) in tt[0].iter_mut().zip(&th[p]) {
                    *dst = dst.clone() - f.clone() * src.clone();
                }
            }
            let Some(col) = work[i].iter().position(|v| !v.is_zero()) else {
                return Err(i);
            };
            let inv = T::one() / work[i][col].clone();
            for v in work[i].iter_mut() {
                *v = v.clone() * inv.clone();
            }
            for v in transform[i].iter_mut() {
                *v = v.clone() * inv.clone();
            }
            // clear the new pivot column from earlier rows
            for p in 0..i {
                let f = work[p][col].clone();
                if f.is_zero() {
                    continue;
                }
                let (head, tail) = work.split_at_mut(i);
                for (dst, src) in head[p].iter_mut().zip(&tail[0]) {
                    if !src.is_zero() {
                        *dst = dst.clone() - f.clone() * src.clone();
                    }
                }
                let (th, tt) = transform.split_at_mut(i);
                for (dst, src) in th[p].iter_mut().zip(&tt[0]) {
                    *dst = dst.clone() - f.clone() * src.clone();
                }
            }
            pivots.push(col);
        }
        let rows = work
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Ok(Self {
            len,
            pivots,
            rows,
            transform,
        })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of `v` with respect to the original vectors, or `None`
    /// when `v` is outside their span.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.len, "vector length differs from span ambient");
        let mut residual = v.to_vec();
        let mut reduced = Vec::with_capacity(self.dim());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                for (idx, val) in row {
                    residual[*idx] = residual[*idx].clone() - c.clone() * val.clone();
                }
            }
            reduced.push(c);
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let d = self.dim();
        let mut coords = vec![T::zero(); d];
        for (c, t) in reduced.iter().zip(&self.transform) {
            if c.is_zero() {
                continue;
            }
            for a in 0..d {
                coords[a] = coords[a].clone() + c.clone() * t[a].clone();
            }
        }
        Some(coords)
    }
}
