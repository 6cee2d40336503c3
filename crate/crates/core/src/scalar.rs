//! Scalar abstraction shared by every algebraic routine in the crate.
//!
//! All cone computations are polynomial identities, so they run over any
//! ordered field. The canonical instantiation is [`crate::Rational`]
//! (arbitrary precision), which makes every check exact; `f64` also
//! satisfies the bound and is handy for quick experiments.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

use crate::error::ParseRationalError;

/// An ordered field element.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + PartialOrd + fmt::Debug + fmt::Display
{
    /// Embeds a small integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every field contains the integers")
    }

    /// `self * self`.
    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    /// Integer power, negative exponents allowed. `None` for `0^(-k)`.
    fn pow_int(&self, exp: i64) -> Option<Self> {
        if exp < 0 {
            if self.is_zero() {
                return None;
            }
            let pos = num_traits::pow(self.clone(), exp.unsigned_abs() as usize);
            return Some(Self::one() / pos);
        }
        Some(num_traits::pow(self.clone(), exp as usize))
    }
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + Clone + PartialOrd + fmt::Debug + fmt::Display
{
}

/// Parses a wire rational: `"p/q"` or an integer `"p"`. Decimal and
/// exponent notation is rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseRationalError> {
    let t = s.trim();
    let bad = || ParseRationalError(s.to_string());
    if t.is_empty() || t.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

/// Canonical wire form: reduced `p/q` with positive denominator, or `p`.
pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}

/// Display-only decimal rendering used by `--approx` output.
pub fn approx(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
