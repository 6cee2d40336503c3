//! Degrees of basic relative invariants from structure constants.
//!
//! Given the dimensions `d_kj = dim V_kj`, the multidegree matrix `σ`
//! (row `j` is the exponent vector of `Δ_j` on diagonal points) is obtained
//! by tracking, for every column `i`, how the vector of dimensions below the
//! diagonal is consumed by the later columns. Row sums of `σ` are the
//! degrees of `Δ_1, ..., Δ_r`.
//!
//! Indices are 0-based in the API; `DimTable::get(k, j)` is `d_{k+1, j+1}`.

use serde::Serialize;

use crate::error::DegreeError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimTable {
    rank: usize,
    // d[k][j] for j < k
    d: Vec<Vec<usize>>,
}

impl DimTable {
    pub fn zeros(rank: usize) -> Self {
        Self {
            rank,
            d: (0..rank).map(|k| vec![0; k]).collect(),
        }
    }

    /// Builds from `(k, j, d_kj)` entries; unspecified pairs are zero.
    pub fn from_entries(
        rank: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, DegreeError> {
        if rank == 0 {
            return Err(DegreeError::ZeroRank);
        }
        let mut t = Self::zeros(rank);
        for (k, j, v) in entries {
            if !(j < k && k < rank) {
                return Err(DegreeError::Index { k, j, rank });
            }
            t.d[k][j] = v;
        }
        Ok(t)
    }

    /// `d_kj = 2^(k-j)`, the structure constants of the doubling family.
    pub fn powers_of_two(rank: usize) -> Self {
        let mut t = Self::zeros(rank);
        for k in 0..rank {
            for j in 0..k {
                t.d[k][j] = 1 << (k - j);
            }
        }
        t
    }

    /// Rank-3 table with `(d_32, d_21, d_31) = (r, s, n)`.
    pub fn rank3(r: usize, s: usize, n: usize) -> Self {
        let mut t = Self::zeros(3);
        t.d[2][1] = r;
        t.d[1][0] = s;
        t.d[2][0] = n;
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, k: usize, j: usize) -> usize {
        self.d[k][j]
    }

    pub fn set(&mut self, k: usize, j: usize, v: usize) {
        self.d[k][j] = v;
    }

    /// Column vector `d_i = (0, ..., 0, d_{i+1,i}, ..., d_{r,i})`.
    fn column(&self, i: usize) -> Vec<i64> {
        (0..self.rank)
            .map(|k| if k > i { self.d[k][i] as i64 } else { 0 })
            .collect()
    }
}

/// The vectors `l_i^(k)` and the indicator vector `ε^[i]` for one column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnTrace {
    /// `l_i^(i), l_i^(i+1), ..., l_i^(r-1)` (each of length `r`).
    pub l: Vec<Vec<i64>>,
    /// `ε_{i+1,i}, ..., ε_{r,i}`.
    pub epsilon: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaMatrix {
    entries: Vec<Vec<u64>>,
    trace: Vec<ColumnTrace>,
}

impl SigmaMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn get(&self, j: usize, k: usize) -> u64 {
        self.entries[j][k]
    }

    /// Per-column audit trail of the algorithm (empty for rank 1).
    pub fn trace(&self) -> &[ColumnTrace] {
        &self.trace
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        let r = self.rank();
        (0..r).all(|j| {
            (0..r).all(|k| match k.cmp(&j) {
                std::cmp::Ordering::Greater => self.entries[j][k] == 0,
                std::cmp::Ordering::Equal => self.entries[j][k] == 1,
                std::cmp::Ordering::Less => true,
            })
        })
    }
}

/// Computes `σ = E_{r-1} ⋯ E_1` from the structure constants.
pub fn sigma_from_dims(d: &DimTable) -> Result<SigmaMatrix, DegreeError> {
    let r = d.rank();
    if r == 0 {
        return Err(DegreeError::ZeroRank);
    }
    let mut trace = Vec::with_capacity(r.saturating_sub(1));
    for i in 0..r.saturating_sub(1) {
        let mut l = d.column(i);
        let mut history = vec![l.clone()];
        for k in i + 1..r - 1 {
            if l[k] > 0 {
                let dk = d.column(k);
                for (a, b) in l.iter_mut().zip(&dk) {
                    *a -= b;
                }
                if let Some(position) = l.iter().position(|&v| v < 0) {
                    return Err(DegreeError::Inconsistent {
                        i: i + 1,
                        step: k + 1,
                        position: position + 1,
                    });
                }
            }
            history.push(l.clone());
        }
        let epsilon = (i + 1..r).map(|j| u8::from(l[j] > 0)).collect();
        trace.push(ColumnTrace { l: history, epsilon });
    }

    let mut sigma: Vec<Vec<u64>> = (0..r)
        .map(|j| (0..r).map(|k| u64::from(j == k)).collect())
        .collect();
    // left-multiply by E_1, then E_2, ..., E_{r-1}
    for (i, col) in trace.iter().enumerate() {
        let pivot_row = sigma[i].clone();
        for (offset, &e) in col.epsilon.iter().enumerate() {
            if e == 1 {
                let row = &mut sigma[i + 1 + offset];
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a += b;
                }
            }
        }
    }
    Ok(SigmaMatrix {
        entries: sigma,
        trace,
    })
}

/// `deg Δ_j`: row sums of `σ`.
pub fn degrees_from_sigma(sigma: &SigmaMatrix) -> Vec<u64> {
    sigma.entries.iter().map(|row| row.iter().sum()).collect()
}

/// Exponents of the character `χ_j`, i.e. `(2σ_j1, ..., 2σ_jr)`, so that
/// `Δ_j(ρ(h)x) = Π t_ii^{2σ_ji} Δ_j(x)`. `j` is 0-based.
pub fn character_exponents(sigma: &SigmaMatrix, j: usize) -> Result<Vec<u64>, DegreeError> {
    let rank = sigma.rank();
    sigma
        .entries
        .get(j)
        .map(|row| row.iter().map(|&s| 2 * s).collect())
        .ok_or(DegreeError::Row { index: j, rank })
}

/// Degrees of the dual of a rank-3 cone with `(d_32, d_21, d_31) = (r, s, n)`,
/// numbered so that `Δ*_1` carries the top degree. The dual cone has the
/// table with `r` and `s` exchanged, read in reversed block order.
pub fn dual_degrees_rank3(r: usize, s: usize, n: usize) -> Result<[u64; 3], DegreeError> {
    let sigma = sigma_from_dims(&DimTable::rank3(s, r, n))?;
    let deg = degrees_from_sigma(&sigma);
    Ok([deg[2], deg[1], deg[0]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma3(d21: usize, d31: usize, d32: usize) -> Vec<Vec<u64>> {
        let t = DimTable::from_entries(3, [(1, 0, d21), (2, 0, d31), (2, 1, d32)]).unwrap();
        sigma_from_dims(&t).unwrap().entries().to_vec()
    }

    #[test]
    fn rank3_power_of_two_table() {
        assert_eq!(sigma3(2, 4, 2), vec![vec![1, 0, 0], vec![1, 1, 0], vec![2, 1, 1]]);
        let s = sigma_from_dims(&DimTable::powers_of_two(3)).unwrap();
        assert_eq!(degrees_from_sigma(&s), vec![1, 2, 4]);
    }

    #[test]
    fn rank_one() {
        let s = sigma_from_dims(&DimTable::zeros(1)).unwrap();
        assert_eq!(s.entries(), &[vec![1]]);
        assert_eq!(degrees_from_sigma(&s), vec![1]);
        assert!(s.trace().is_empty());
    }

    #[test]
    fn rank3_cases() {
        // r = 0: (d32, d21, d31) = (0, s, n)
        assert_eq!(sigma3(3, 5, 0), vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1]]);
        // 1 <= r < n, d21 = d31 = n
        for (n, r) in [(2, 1), (4, 3), (8, 5)] {
            let t = DimTable::rank3(r, n, n);
            let s = sigma_from_dims(&t).unwrap();
            assert!(s.trace().iter().all(|c| c.epsilon.iter().all(|&e| e == 1)));
            assert_eq!(s.entries(), &[vec![1, 0, 0], vec![1, 1, 0], vec![2, 1, 1]]);
        }
    }

    #[test]
    fn trace_records_l_vectors() {
        let s = sigma_from_dims(&DimTable::rank3(1, 2, 2)).unwrap();
        assert_eq!(s.trace()[0].l, vec![vec![0, 2, 2], vec![0, 2, 1]]);
        assert_eq!(s.trace()[1].l, vec![vec![0, 0, 1]]);
    }

    #[test]
    fn negative_l_entry_is_rejected() {
        // d32 > d31 with d21 > 0
        let err = sigma_from_dims(&DimTable::rank3(2, 1, 1)).unwrap_err();
        assert_eq!(err, DegreeError::Inconsistent { i: 1, step: 2, position: 3 });
    }

    #[test]
    fn powers_of_two_closed_form() {
        let s = sigma_from_dims(&DimTable::powers_of_two(5)).unwrap();
        assert_eq!(degrees_from_sigma(&s), vec![1, 2, 4, 8, 16]);
        assert!(s.is_unit_lower_triangular());
    }

    #[test]
    fn identity_sigma_has_unit_degrees() {
        let s = sigma_from_dims(&DimTable::zeros(4)).unwrap();
        assert_eq!(degrees_from_sigma(&s), vec![1, 1, 1, 1]);
    }

    #[test]
    fn dual_degrees_published_cases() {
        assert_eq!(dual_degrees_rank3(1, 2, 2).unwrap(), [3, 2, 1]);
        assert_eq!(dual_degrees_rank3(3, 5, 7).unwrap(), [4, 2, 1]);
        assert_eq!(dual_degrees_rank3(0, 4, 9).unwrap(), [3, 1, 1]);
        assert_eq!(dual_degrees_rank3(2, 2, 2).unwrap(), [3, 2, 1]);
    }

    #[test]
    fn character_exponent_rows() {
        let case2 = sigma_from_dims(&DimTable::rank3(1, 2, 2)).unwrap();
        assert_eq!(character_exponents(&case2, 0).unwrap(), vec![2, 0, 0]);
        assert_eq!(character_exponents(&case2, 2).unwrap(), vec![4, 2, 2]);
        let case4 = sigma_from_dims(&DimTable::rank3(0, 3, 4)).unwrap();
        assert_eq!(character_exponents(&case4, 2).unwrap(), vec![2, 0, 2]);
        assert!(character_exponents(&case4, 3).is_err());
    }

    #[test]
    fn table_index_validation() {
        assert!(matches!(DimTable::from_entries(3, [(0, 1, 1)]), Err(DegreeError::Index { .. })));
        assert_eq!(DimTable::from_entries(0, []), Err(DegreeError::ZeroRank));
    }
}
