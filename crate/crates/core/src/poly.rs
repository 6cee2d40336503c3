//! Sparse multivariate polynomials with exact coefficients.
//!
//! Variables are plain indices into a coordinate vector. Polynomials are
//! kept fully expanded, so equality is coefficient-wise and the total
//! degree is exact.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Exponent vector as sorted `(variable, power)` pairs with nonzero powers.
pub type Monomial = Vec<(usize, u32)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<T> {
    terms: BTreeMap<Monomial, T>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(index: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(index, 1)], T::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    /// Maximal total degree over the monomials; `None` for the zero
    /// polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&(_, e)| e).sum())
            .max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .filter_map(|m| m.iter().find(|&&(v, _)| v == var).map(|&(_, e)| e))
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut p = Self::zero();
        for (m, v) in &self.terms {
            p.add_term(m.clone(), v.clone() * c.clone());
        }
        p
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::constant(T::one()), |acc, _| acc * self.clone())
    }

    /// Exact quotient by a variable, `None` if some monomial lacks it.
    pub fn divide_by_var(&self, var: usize) -> Option<Self> {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            let pos = m.iter().position(|&(v, _)| v == var)?;
            let mut m = m.clone();
            if m[pos].1 == 1 {
                m.remove(pos);
            } else {
                m[pos].1 -= 1;
            }
            p.add_term(m, c.clone());
        }
        Some(p)
    }

    pub fn eval(&self, point: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (m, c)| {
            let v = m.iter().fold(c.clone(), |acc, &(i, e)| {
                acc * num_traits::pow(point[i].clone(), e as usize)
            });
            acc + v
        })
    }

    /// `Σ a_i b_i` for two equal-length lists.
    pub fn dot(a: &[Self], b: &[Self]) -> Self {
        assert_eq!(a.len(), b.len(), "length mismatch");
        a.iter()
            .zip(b)
            .fold(Self::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
    }

    /// `Σ a_i²`.
    pub fn norm_sq(a: &[Self]) -> Self {
        Self::dot(a, a)
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut p = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                p.add_term(mono_mul(ma, mb), ca.clone() * cb.clone());
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Polynomial<Rational>;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn expansion_and_degree() {
        let (x, y) = (P::var(0), P::var(1));
        let p = (x.clone() + y.clone()) * (x.clone() - y.clone());
        assert_eq!(p, x.clone() * x.clone() - y.clone() * y.clone());
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!((p.clone() - p.clone()).total_degree(), None);
        assert_eq!(p.eval(&[q(3), q(2)]), q(5));
        assert_eq!(P::constant(q(4)).total_degree(), Some(0));
        assert_eq!((x.clone() * x.clone() * y.clone()).degree_in(0), 2);
    }

    #[test]
    fn exact_division_by_variable() {
        let (x, y) = (P::var(0), P::var(1));
        let p = x.clone() * x.clone() * y.clone() + x.clone().scale(&q(3));
        assert_eq!(p.divide_by_var(0).unwrap(), x.clone() * y.clone() + P::constant(q(3)));
        assert!(p.divide_by_var(1).is_none());
        assert_eq!(x.pow(3).total_degree(), Some(3));
    }
}
