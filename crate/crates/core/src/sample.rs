//! Seeded random points for property checks and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{ConeElement, GroupElement};
use crate::realization::Realization;
use crate::scalar::Scalar;

/// Draws rationals `p/q` with `|p| ≤ num_bound`, `1 ≤ q ≤ den_bound`.
#[derive(Debug, Clone)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
    pub num_bound: i64,
    pub den_bound: i64,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bounds(seed, 100, 10)
    }

    pub fn with_bounds(seed: u64, num_bound: i64, den_bound: i64) -> Self {
        assert!(num_bound >= 1 && den_bound >= 1, "bounds must be positive");
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            num_bound,
            den_bound,
        }
    }

    pub fn scalar<T: Scalar>(&mut self) -> T {
        let p = self.rng.gen_range(-self.num_bound..=self.num_bound);
        let q = self.rng.gen_range(1..=self.den_bound);
        T::from_int(p) / T::from_int(q)
    }

    pub fn nonzero<T: Scalar>(&mut self) -> T {
        loop {
            let v: T = self.scalar();
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn positive<T: Scalar>(&mut self) -> T {
        self.nonzero::<T>().abs()
    }

    fn vector<T: Scalar>(&mut self, len: usize) -> Vec<T> {
        (0..len).map(|_| self.scalar()).collect()
    }

    /// Arbitrary point of `V` (not necessarily in the cone).
    pub fn cone_element<T: Scalar>(&mut self, v: &Realization<T>) -> ConeElement<T> {
        let flat = self.vector(v.dimension());
        ConeElement::from_flat(v, &flat).expect("length matches")
    }

    /// Group element with nonzero diagonal.
    pub fn group_element<T: Scalar>(&mut self, v: &Realization<T>) -> GroupElement<T> {
        let mut h = GroupElement::identity(v);
        for t in &mut h.diag {
            *t = self.nonzero();
        }
        for (k, j, s) in v.spaces() {
            h.lower[k][j] = self.vector(s.dim());
        }
        h
    }

    /// `ρ(h) e` for random `h`: an interior point of the cone.
    pub fn interior_point<T: Scalar>(&mut self, v: &Realization<T>) -> ConeElement<T> {
        let h = self.group_element(v);
        v.rho_act(&h, &ConeElement::identity(v)).expect("closed realization")
    }

    /// `ρ(h) d` with `d` diagonal, positive except for one zero entry at
    /// `block`: a boundary point of the cone.
    pub fn boundary_point<T: Scalar>(&mut self, v: &Realization<T>, block: usize) -> ConeElement<T> {
        let diag = (0..v.rank())
            .map(|i| if i == block { T::zero() } else { self.positive() })
            .collect();
        let d = ConeElement::diagonal(v, diag).expect("rank matches");
        let h = self.group_element(v);
        v.rho_act(&h, &d).expect("closed realization")
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}
