//! Matrix realization data for a homogeneous cone.
//!
//! A realization fixes an ordered block partition `N = n_1 + ... + n_r` and,
//! for every pair of blocks `j < k`, a space `V_kj` of `n_k x n_j` matrices
//! given by an explicit basis. The cone is the set of positive definite
//! matrices in the space `V` of symmetric matrices with scalar diagonal
//! blocks and lower blocks drawn from the `V_kj`.
//!
//! Block indices are 0-based throughout the API: `space(k, j)` with
//! `j < k < rank`.

use crate::error::RealizationError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::span::SpanBasis;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl BlockPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self, RealizationError> {
        if sizes.is_empty() {
            return Err(RealizationError::EmptyPartition);
        }
        if let Some(i) = sizes.iter().position(|&n| n == 0) {
            return Err(RealizationError::ZeroBlock(i));
        }
        let offsets = sizes
            .iter()
            .scan(0, |acc, &n| {
                let o = *acc;
                *acc += n;
                Some(o)
            })
            .collect();
        Ok(Self { sizes, offsets })
    }

    pub fn rank(&self) -> usize {
        self.sizes.len()
    }

    /// Total matrix size `N`.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, block: usize) -> usize {
        self.sizes[block]
    }

    pub fn offset(&self, block: usize) -> usize {
        self.offsets[block]
    }
}

/// One off-diagonal space `V_kj` with its declared basis.
#[derive(Debug, Clone)]
pub struct OffDiagonalSpace<T> {
    rows: usize,
    cols: usize,
    basis: Vec<Matrix<T>>,
    span: SpanBasis<T>,
    // Gram matrix of the space inner product; None when the polarized
    // scalar condition fails, in which case the failing pair is kept.
    gram: Option<Matrix<T>>,
    scalar_failure: Option<(usize, usize)>,
}

impl<T: Scalar> OffDiagonalSpace<T> {
    fn new(
        k: usize,
        j: usize,
        rows: usize,
        cols: usize,
        basis: Vec<Matrix<T>>,
    ) -> Result<Self, RealizationError> {
        for (index, e) in basis.iter().enumerate() {
            if e.shape() != (rows, cols) {
                return Err(RealizationError::Shape {
                    k,
                    j,
                    index,
                    expected: (rows, cols),
                    found: e.shape(),
                });
            }
        }
        let flat: Vec<Vec<T>> = basis.iter().map(|e| e.as_slice().to_vec()).collect();
        let span = SpanBasis::new(rows * cols, &flat)
            .map_err(|index| RealizationError::DependentBasis { k, j, index })?;

        let d = basis.len();
        let two = T::from_int(2);
        let mut gram = Matrix::zeros(d, d);
        let mut scalar_failure = None;
        'outer: for a in 0..d {
            for b in a..d {
                let ab = basis[a].mul_transpose(&basis[b]);
                let sym = ab.add(&ab.transpose());
                match sym.scalar_value() {
                    Some(c) => {
                        let c = c / two.clone();
                        gram[(a, b)] = c.clone();
                        gram[(b, a)] = c;
                    }
                    None => {
                        scalar_failure = Some((a, b));
                        break 'outer;
                    }
                }
            }
        }
        Ok(Self {
            rows,
            cols,
            basis,
            span,
            gram: scalar_failure.is_none().then_some(gram),
            scalar_failure,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn basis(&self) -> &[Matrix<T>] {
        &self.basis
    }

    /// Coordinates of `m` in the declared basis, `None` if `m` is outside
    /// the span.
    pub fn coordinates(&self, m: &Matrix<T>) -> Option<Vec<T>> {
        assert_eq!(m.shape(), self.shape(), "block shape differs from space");
        self.span.coordinates(m.as_slice())
    }

    /// `Σ_a coords[a] * basis[a]`.
    pub fn combine(&self, coords: &[T]) -> Matrix<T> {
        assert_eq!(coords.len(), self.dim(), "coordinate count differs from dim");
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (c, e) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&e.scale(c));
            }
        }
        out
    }

    /// Gram matrix of the space inner product in the declared basis, if the
    /// polarized scalar condition holds.
    pub fn gram(&self) -> Option<&Matrix<T>> {
        self.gram.as_ref()
    }

    /// `⟨X, Y⟩_kj` from coordinates.
    pub fn inner(&self, x: &[T], y: &[T]) -> Option<T> {
        let g = self.gram.as_ref()?;
        let gy = g.mul_vec(y);
        Some(crate::matrix::dot(x, &gy))
    }
}

/// Index triple witnessing a failed closure condition. For the product
/// conditions `(k, j, i)` are the block indices and `(a, b)` the basis
/// elements; for the scalar condition `i == j` and `(k, j)` is the space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub k: usize,
    pub j: usize,
    pub i: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// `X_kj X_ji ∈ V_ki`
    Product,
    /// `X_ki ᵗX_ji ∈ V_kj`
    TransposeProduct,
    /// `E_a ᵗE_b + E_b ᵗE_a ∈ ℝ I`
    Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub condition: Condition,
    pub counterexample: Option<Witness>,
}

impl ConditionOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub product: ConditionOutcome,
    pub transpose_product: ConditionOutcome,
    pub scalar: ConditionOutcome,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.product.holds() && self.transpose_product.holds() && self.scalar.holds()
    }

    pub fn outcomes(&self) -> [&ConditionOutcome; 3] {
        [&self.product, &self.transpose_product, &self.scalar]
    }
}

/// Realization datum: partition plus bases of all off-diagonal spaces.
#[derive(Debug, Clone)]
pub struct Realization<T> {
    partition: BlockPartition,
    // spaces[k][j] for j < k
    spaces: Vec<Vec<OffDiagonalSpace<T>>>,
}

impl<T: Scalar> Realization<T> {
    /// Builds a realization. Pairs missing from `spaces` are zero
    /// dimensional. Checks shapes and linear independence only; use
    /// [`Realization::verify_conditions`] for the closure conditions.
    #[allow(clippy::type_complexity)]
    pub fn new(
        partition: BlockPartition,
        spaces: Vec<((usize, usize), Vec<Matrix<T>>)>,
    ) -> Result<Self, RealizationError> {
        let rank = partition.rank();
        let mut slots: Vec<Vec<Option<Vec<Matrix<T>>>>> =
            (0..rank).map(|k| vec![None; k]).collect();
        for ((k, j), basis) in spaces {
            if !(j < k && k < rank) {
                return Err(RealizationError::SpaceIndex { k, j, rank });
            }
            if slots[k][j].is_some() {
                return Err(RealizationError::DuplicateSpace { k, j });
            }
            slots[k][j] = Some(basis);
        }
        let mut built = Vec::with_capacity(rank);
        for (k, row) in slots.into_iter().enumerate() {
            let mut out = Vec::with_capacity(k);
            for (j, basis) in row.into_iter().enumerate() {
                out.push(OffDiagonalSpace::new(
                    k,
                    j,
                    partition.size(k),
                    partition.size(j),
                    basis.unwrap_or_default(),
                )?);
            }
            built.push(out);
        }
        Ok(Self {
            partition,
            spaces: built,
        })
    }

    /// The rank-one realization of the half-line, block size `n`.
    pub fn half_line(n: usize) -> Self {
        let partition = BlockPartition::new(vec![n.max(1)]).expect("nonempty partition");
        Self::new(partition, Vec::new()).expect("no spaces to check")
    }

    pub fn partition(&self) -> &BlockPartition {
        &self.partition
    }

    pub fn rank(&self) -> usize {
        self.partition.rank()
    }

    pub fn size(&self) -> usize {
        self.partition.total()
    }

    pub fn space(&self, k: usize, j: usize) -> &OffDiagonalSpace<T> {
        &self.spaces[k][j]
    }

    /// `dim V_kj`.
    pub fn dim(&self, k: usize, j: usize) -> usize {
        self.spaces[k][j].dim()
    }

    /// Iterates `(k, j, space)` in the canonical order: `k` ascending, then
    /// `j` ascending.
    pub fn spaces(&self) -> impl Iterator<Item = (usize, usize, &OffDiagonalSpace<T>)> {
        self.spaces
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().enumerate().map(move |(j, s)| (k, j, s)))
    }

    /// Real dimension of the ambient space `V`.
    pub fn dimension(&self) -> usize {
        self.rank() + self.spaces().map(|(_, _, s)| s.dim()).sum::<usize>()
    }

    /// Checks the two product-closure conditions and the polarized scalar
    /// condition on all basis tuples. Reports the first counterexample of
    /// each failing condition.
    pub fn verify_conditions(&self) -> VerificationReport {
        let r = self.rank();
        let mut product = None;
        let mut transpose_product = None;
        for k in 0..r {
            for j in 0..k {
                for i in 0..j {
                    if product.is_none() {
                        product = self.first_product_failure(k, j, i);
                    }
                    if transpose_product.is_none() {
                        transpose_product = self.first_transpose_failure(k, j, i);
                    }
                }
            }
        }
        let scalar = self.spaces().find_map(|(k, j, s)| {
            s.scalar_failure.map(|(a, b)| Witness { k, j, i: j, a, b })
        });
        VerificationReport {
            product: ConditionOutcome {
                condition: Condition::Product,
                counterexample: product,
            },
            transpose_product: ConditionOutcome {
                condition: Condition::TransposeProduct,
                counterexample: transpose_product,
            },
            scalar: ConditionOutcome {
                condition: Condition::Scalar,
                counterexample: scalar,
            },
        }
    }

    fn first_product_failure(&self, k: usize, j: usize, i: usize) -> Option<Witness> {
        let target = &self.spaces[k][i];
        for (a, ea) in self.spaces[k][j].basis.iter().enumerate() {
            for (b, eb) in self.spaces[j][i].basis.iter().enumerate() {
                if target.coordinates(&ea.matmul(eb)).is_none() {
                    return Some(Witness { k, j, i, a, b });
                }
            }
        }
        None
    }

    fn first_transpose_failure(&self, k: usize, j: usize, i: usize) -> Option<Witness> {
        let target = &self.spaces[k][j];
        for (a, ea) in self.spaces[k][i].basis.iter().enumerate() {
            for (b, eb) in self.spaces[j][i].basis.iter().enumerate() {
                if target.coordinates(&ea.mul_transpose(eb)).is_none() {
                    return Some(Witness { k, j, i, a, b });
                }
            }
        }
        None
    }

    /// Structure constants `d_kj = dim V_kj`.
    pub fn measured_dims(&self) -> crate::degrees::DimTable {
        let r = self.rank();
        let mut table = crate::degrees::DimTable::zeros(r);
        for (k, j, s) in self.spaces() {
            table.set(k, j, s.dim());
        }
        table
    }
}

/// `⟨X, Y⟩` for two elements of one off-diagonal space, read off from
/// `(X ᵗY + Y ᵗX) / 2 = ⟨X, Y⟩ I`. `None` when the symmetrized product is
/// not scalar.
pub fn space_inner_product<T: Scalar>(x: &Matrix<T>, y: &Matrix<T>) -> Option<T> {
    assert_eq!(x.shape(), y.shape(), "operands of different shapes");
    let xy = x.mul_transpose(y);
    xy.add(&xy.transpose())
        .scalar_value()
        .map(|c| c / T::from_int(2))
}
