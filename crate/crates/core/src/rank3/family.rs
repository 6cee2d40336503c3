//! Composition families `A_1, ..., A_r` (each `n x s`) with
//! `ᵗA_i A_j + ᵗA_j A_i = 2δ_ij I_s`, i.e. bilinear maps realizing
//! `(x_1² + ⋯ + x_r²)(y_1² + ⋯ + y_s²) = z_1² + ⋯ + z_n²` via `z = L(x) y`.

use crate::error::CompositionError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `ρ(n) = 8α + 2^β` where `n = 2^(4α+β) · odd`, `0 ≤ β ≤ 3`.
pub fn hurwitz_radon_number(n: usize) -> usize {
    assert!(n >= 1, "Hurwitz-Radon number needs n >= 1");
    let e = n.trailing_zeros() as usize;
    8 * (e / 4) + (1 << (e % 4))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionFamily<T> {
    s: usize,
    n: usize,
    a: Vec<Matrix<T>>,
}

impl<T: Scalar> CompositionFamily<T> {
    /// Wraps `a` (each `n x s`). Only shapes are checked here; see
    /// [`CompositionFamily::verify`].
    pub fn new(s: usize, n: usize, a: Vec<Matrix<T>>) -> Result<Self, CompositionError> {
        if n == 0 || s == 0 {
            return Err(CompositionError::ZeroSize);
        }
        for (i, m) in a.iter().enumerate() {
            if m.shape() != (n, s) {
                return Err(CompositionError::Shape {
                    index: i + 1,
                    expected: (n, s),
                    found: m.shape(),
                });
            }
        }
        Ok(Self { s, n, a })
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.r(), self.s, self.n)
    }

    pub fn matrices(&self) -> &[Matrix<T>] {
        &self.a
    }

    /// `L(x) = Σ x_i A_i`, an `n x s` matrix.
    pub fn left(&self, x: &[T]) -> Matrix<T> {
        assert_eq!(x.len(), self.r(), "x has wrong length");
        x.iter()
            .zip(&self.a)
            .fold(Matrix::zeros(self.n, self.s), |acc, (c, m)| {
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&m.scale(c))
                }
            })
    }

    /// `R(y)`: the `n x r` matrix whose `i`-th column is `A_i y`.
    pub fn right(&self, y: &[T]) -> Matrix<T> {
        assert_eq!(y.len(), self.s, "y has wrong length");
        let mut out = Matrix::zeros(self.n, self.r());
        for (i, m) in self.a.iter().enumerate() {
            for (row, v) in m.mul_vec(y).into_iter().enumerate() {
                out[(row, i)] = v;
            }
        }
        out
    }

    /// Coefficient matrices of `R`: `R(y) = Σ_b y_b R_b`, read directly from
    /// the entries of the `A_i`.
    pub fn right_coefficients(&self) -> Vec<Matrix<T>> {
        (0..self.s)
            .map(|b| {
                let mut rb = Matrix::zeros(self.n, self.r());
                for (i, m) in self.a.iter().enumerate() {
                    for row in 0..self.n {
                        rb[(row, i)] = m[(row, b)].clone();
                    }
                }
                rb
            })
            .collect()
    }

    /// Checks `ᵗA_i A_j + ᵗA_j A_i = 2δ_ij I_s` for all `i ≤ j`. The failing
    /// pair is reported with 1-based indices.
    pub fn verify(&self) -> Result<(), CompositionError> {
        let two = T::from_int(2);
        for i in 0..self.r() {
            let ti = self.a[i].transpose();
            for j in i..self.r() {
                let p = ti.matmul(&self.a[j]);
                let sym = p.add(&p.transpose());
                let expected = if i == j { two.clone() } else { T::zero() };
                if sym != Matrix::scalar(self.s, expected) {
                    return Err(CompositionError::Relation { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(())
    }

    /// Cross-checks the two bilinear descriptions of `z`: `L(x) y = R(y) x`
    /// coefficient-wise over the monomials `x_i y_b`, and
    /// `ᵗR(y) R(y) = ‖y‖² I_r` through its polarization
    /// `ᵗR_b R_c + ᵗR_c R_b = 2δ_bc I_r`.
    pub fn consistency_lr(&self) -> Result<(), CompositionError> {
        let rc = self.right_coefficients();
        for (b, rb) in rc.iter().enumerate() {
            for i in 0..self.r() {
                for row in 0..self.n {
                    // coefficient of x_i y_b in row `row` of L(x)y and R(y)x
                    if self.a[i][(row, b)] != rb[(row, i)] {
                        return Err(CompositionError::Bilinear {
                            row: row + 1,
                            i: i + 1,
                            j: b + 1,
                        });
                    }
                }
            }
        }
        let two = T::from_int(2);
        for b in 0..self.s {
            let tb = rc[b].transpose();
            for (c, rcc) in rc.iter().enumerate().skip(b) {
                let p = tb.matmul(rcc);
                let sym = p.add(&p.transpose());
                let expected = if b == c { two.clone() } else { T::zero() };
                if let Some((row, col)) = first_difference(&sym, &Matrix::scalar(self.r(), expected)) {
                    return Err(CompositionError::RightNorm {
                        b: b + 1,
                        c: c + 1,
                        row: row + 1,
                        col: col + 1,
                    });
                }
            }
        }
        Ok(())
    }
}

fn first_difference<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Option<(usize, usize)> {
    (0..a.rows())
        .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| a[(i, j)] != b[(i, j)])
}

// Kronecker words over the 2x2 matrices
//   I, P = diag(1, -1), Q = [[0, 1], [1, 0]], J = [[0, -1], [1, 0]].
// Words anticommute iff they differ (both non-I) in an odd number of
// positions; a word is skew iff it has an odd number of J.
//
// BASE[e] lists 2^e - ... anticommuting skew words of length e, with
// ρ(2^e) - 1 entries for e = 0..3.
const BASE: [&[&str]; 4] = [
    &[],
    &["J"],
    &["IJ", "JP", "JQ"],
    &["IIJ", "IJP", "PJQ", "QJQ", "JIQ", "JPP", "JQP"],
];
// Eight anticommuting skew words of length 4 and one symmetric word
// anticommuting with all of them: extends a family on ℝ^m to ℝ^(16m) with
// eight more members.
const PERIOD_SKEW: [&str; 8] = ["IIIJ", "IIJP", "IPJQ", "IQJQ", "IJIQ", "IJPP", "PJQP", "QJQP"];
const PERIOD_SYM: &str = "JJQP";

fn skew_words(e: usize) -> Vec<String> {
    if e < 4 {
        return BASE[e].iter().map(|w| w.to_string()).collect();
    }
    let pad = "I".repeat(e - 4);
    let mut out: Vec<String> = PERIOD_SKEW.iter().map(|w| format!("{w}{pad}")).collect();
    out.extend(skew_words(e - 4).into_iter().map(|w| format!("{PERIOD_SYM}{w}")));
    out
}

fn word_matrix<T: Scalar>(word: &str) -> Matrix<T> {
    word.chars().fold(Matrix::identity(1), |acc, c| {
        let f = match c {
            'I' => Matrix::from_ints(2, 2, &[1, 0, 0, 1]),
            'P' => Matrix::from_ints(2, 2, &[1, 0, 0, -1]),
            'Q' => Matrix::from_ints(2, 2, &[0, 1, 1, 0]),
            'J' => Matrix::from_ints(2, 2, &[0, -1, 1, 0]),
            _ => unreachable!("word alphabet is IPQJ"),
        };
        acc.kron(&f)
    })
}

/// Square family for the triple `(r, n, n)`: `A_1 = I_n` followed by `r - 1`
/// pairwise anticommuting skew signed permutation matrices. Needs
/// `1 ≤ r ≤ ρ(n)`.
pub fn composition_family<T: Scalar>(r: usize, n: usize) -> Result<CompositionFamily<T>, CompositionError> {
    if n == 0 {
        return Err(CompositionError::ZeroSize);
    }
    let bound = hurwitz_radon_number(n);
    if r > bound {
        return Err(CompositionError::AboveBound { r, n, bound });
    }
    let e = n.trailing_zeros() as usize;
    let odd = Matrix::identity(n >> e);
    let mut a = Vec::with_capacity(r);
    if r >= 1 {
        a.push(Matrix::identity(n));
    }
    for w in skew_words(e).iter().take(r.saturating_sub(1)) {
        a.push(word_matrix::<T>(w).kron(&odd));
    }
    CompositionFamily::new(n, n, a)
}

/// The `(3, 5, 7)` family read off from
/// `(x_1²+x_2²+x_3²)(y_1²+⋯+y_5²) = (x_1y_1+x_2y_4−x_3y_3)² + ⋯ + (x_3y_5)²`.
pub fn family_3_5_7<T: Scalar>() -> CompositionFamily<T> {
    #[rustfmt::skip]
    let a1 = Matrix::from_ints(7, 5, &[
        1, 0, 0, 0, 0,
        0, 1, 0, 0, 0,
        0, 0, 1, 0, 0,
        0, 0, 0, 1, 0,
        0, 0, 0, 0, 1,
        0, 0, 0, 0, 0,
        0, 0, 0, 0, 0,
    ]);
    #[rustfmt::skip]
    let a2 = Matrix::from_ints(7, 5, &[
        0, 0, 0, 1, 0,
        0, 0, -1, 0, 0,
        0, 1, 0, 0, 0,
        -1, 0, 0, 0, 0,
        0, 0, 0, 0, 0,
        0, 0, 0, 0, 1,
        0, 0, 0, 0, 0,
    ]);
    #[rustfmt::skip]
    let a3 = Matrix::from_ints(7, 5, &[
        0, 0, -1, 0, 0,
        0, 0, 0, -1, 0,
        1, 0, 0, 0, 0,
        0, 1, 0, 0, 0,
        0, 0, 0, 0, 0,
        0, 0, 0, 0, 0,
        0, 0, 0, 0, 1,
    ]);
    CompositionFamily::new(5, 7, vec![a1, a2, a3]).expect("fixture shapes are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type F = CompositionFamily<Rational>;

    #[test]
    fn hurwitz_radon_values() {
        let expected = [(1, 1), (2, 2), (3, 1), (4, 4), (8, 8), (12, 4), (16, 9), (32, 10), (48, 9), (256, 17)];
        for (n, rho) in expected {
            assert_eq!(hurwitz_radon_number(n), rho, "rho({n})");
        }
    }

    #[test]
    fn small_families() {
        let f = composition_family::<Rational>(1, 1).unwrap();
        assert_eq!(f.matrices(), &[Matrix::identity(1)]);
        let f = composition_family::<Rational>(2, 2).unwrap();
        assert_eq!(f.matrices()[1], Matrix::from_ints(2, 2, &[0, -1, 1, 0]));
        f.verify().unwrap();
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            composition_family::<Rational>(5, 4).unwrap_err(),
            CompositionError::AboveBound { r: 5, n: 4, bound: 4 }
        );
        assert_eq!(composition_family::<Rational>(1, 0).unwrap_err(), CompositionError::ZeroSize);
    }

    #[test]
    fn maximal_families_for_mixed_sizes() {
        for n in [3, 6, 12, 16, 24, 32] {
            let r = hurwitz_radon_number(n);
            let f = composition_family::<Rational>(r, n).unwrap();
            assert_eq!(f.triple(), (r, n, n));
            f.verify().unwrap();
            f.consistency_lr().unwrap();
        }
    }

    #[test]
    fn fixture_passes_and_perturbation_fails() {
        let f = family_3_5_7::<Rational>();
        f.verify().unwrap();
        f.consistency_lr().unwrap();
        let mut a = f.matrices().to_vec();
        a[1][(0, 3)] = Rational::from_int(-1);
        let bad = F::new(5, 7, a).unwrap();
        assert!(matches!(bad.verify(), Err(CompositionError::Relation { i: 1, j: 2 } | CompositionError::Relation { i: 2, j: 2 })));
    }

    #[test]
    fn single_isometry_passes() {
        let a = Matrix::from_ints(3, 2, &[0, 1, 1, 0, 0, 0]);
        F::new(2, 3, vec![a]).unwrap().verify().unwrap();
    }

    #[test]
    fn right_matrix_for_complex_multiplication() {
        let f = composition_family::<Rational>(2, 2).unwrap();
        let y: Vec<Rational> = [3, 5].iter().map(|&v| Rational::from_int(v)).collect();
        assert_eq!(f.right(&y), Matrix::from_ints(2, 2, &[3, -5, 5, 3]));
    }

    #[test]
    fn shape_checks() {
        let a = Matrix::<Rational>::identity(2);
        assert!(matches!(F::new(3, 2, vec![a]), Err(CompositionError::Shape { index: 1, .. })));
        assert_eq!(F::new(0, 2, vec![]).unwrap_err(), CompositionError::ZeroSize);
    }
}
