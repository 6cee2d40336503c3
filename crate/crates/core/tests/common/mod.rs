//! Independent oracles shared by the integration tests: fraction-free
//! (Bareiss) elimination over the integers and brute-force evaluations of
//! the defining identities. Nothing here calls the library's own
//! determinant or elimination code.

#![allow(dead_code)]

use conelab::rank3::CompositionFamily;
use conelab::{QMatrix, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Clears denominators: returns `(D·M, D)` with `D` the lcm of all entry
/// denominators.
pub fn integer_matrix(m: &QMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let d = m
        .as_slice()
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let rows = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|q| q.numer() * (&d / q.denom()))
                .collect()
        })
        .collect();
    (rows, d)
}

/// Bareiss determinant of a square integer matrix. Every division is exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exact determinant of a rational matrix via Bareiss on `D·M`.
pub fn det_oracle(m: &QMatrix) -> Rational {
    assert_eq!(m.rows(), m.cols());
    let (a, d) = integer_matrix(m);
    let scale = num_traits::pow(d, m.rows());
    Rational::new(bareiss_det(a), scale)
}

/// `det` of the leading `k x k` submatrix of `D·M` for `k = 1..=N`. Signs
/// agree with the leading minors of `M` since `D > 0`.
pub fn leading_minors(m: &QMatrix) -> Vec<BigInt> {
    let (a, _) = integer_matrix(m);
    (1..=a.len())
        .map(|k| bareiss_det(a[..k].iter().map(|row| row[..k].to_vec()).collect()))
        .collect()
}

/// Sylvester's criterion: positive definite iff all leading minors are
/// positive.
pub fn positive_definite_oracle(m: &QMatrix) -> bool {
    leading_minors(m).iter().all(Signed::is_positive)
}

/// `‖L(x) y‖² = ‖x‖² ‖y‖²` evaluated directly from the matrix entries.
pub fn composition_identity_holds(f: &CompositionFamily<Rational>, x: &[Rational], y: &[Rational]) -> bool {
    let mut z = vec![Rational::zero(); f.n()];
    for (xi, a) in x.iter().zip(f.matrices()) {
        for (m, zm) in z.iter_mut().enumerate() {
            for (b, yb) in y.iter().enumerate() {
                *zm += xi * &a[(m, b)] * yb;
            }
        }
    }
    let sq = |v: &[Rational]| v.iter().fold(Rational::zero(), |acc, t| acc + t * t);
    sq(&z) == sq(x) * sq(y)
}

pub fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&a| q(a)).collect()
}

#[test]
fn bareiss_matches_hand_values() {
    let m = QMatrix::from_ints(3, 3, &[2, -1, 0, -1, 2, -1, 0, -1, 2]);
    assert_eq!(det_oracle(&m), q(4));
    assert_eq!(leading_minors(&m), vec![BigInt::from(2), BigInt::from(3), BigInt::from(4)]);
    let swap = QMatrix::from_ints(2, 2, &[0, 1, 1, 0]);
    assert_eq!(det_oracle(&swap), q(-1));
    let half = QMatrix::from_vec(1, 1, vec![Rational::new(BigInt::from(1), BigInt::from(2))]);
    assert_eq!(det_oracle(&half), Rational::new(BigInt::from(1), BigInt::from(2)));
}
