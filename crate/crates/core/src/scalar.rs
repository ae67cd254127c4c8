//! Scalar abstraction over the arithmetic used for atom weights and statistics.
//!
//! All measure computations are sums and products of weights in `[0,1]`, so the
//! whole library is generic over a [`Scalar`]: `f64`/`f32` for fast approximate
//! runs, [`BigRational`] for exact ones. Comparison tolerances collapse to zero
//! in exact mode.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Number type for weights, masses and distances.
///
/// Implementations must be closed under `+ - * /` on `[0,1]`-valued inputs and
/// must order totally on the finite values this crate produces.
pub trait Scalar:
    Num
    + Signed
    + PartialOrd
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic is exact; all tolerances are zero in that case.
    const EXACT: bool;

    /// Tight tolerance: weight preservation, dedup, identity-slice zeros.
    fn tol_tight() -> Self;

    /// Accumulation tolerance: per-slice mass and weight-sum checks.
    fn tol_mass() -> Self;

    /// `2^-t`, representable exactly in every mode.
    fn half_pow(t: u32) -> Self;

    /// `num/den` as a scalar. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Total order on the finite values produced by this crate.
    fn total_cmp(&self, other: &Self) -> Ordering;

    /// Lossy conversion used for heuristic decisions and display, never for results.
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn tol_tight() -> Self {
        1e-12
    }

    fn tol_mass() -> Self {
        1e-9
    }

    fn half_pow(t: u32) -> Self {
        0.5f64.powi(t as i32)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        f64::total_cmp(self, other)
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    // f32 carries ~7 digits; tolerances widen accordingly.
    fn tol_tight() -> Self {
        1e-5
    }

    fn tol_mass() -> Self {
        1e-4
    }

    fn half_pow(t: u32) -> Self {
        0.5f32.powi(t as i32)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f32 / den as f32
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        f32::total_cmp(self, other)
    }

    fn to_f64_lossy(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn tol_tight() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }

    fn tol_mass() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }

    fn half_pow(t: u32) -> Self {
        BigRational::new(BigInt::from(1), BigInt::from(2).pow(t))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        Ord::cmp(self, other)
    }

    fn to_f64_lossy(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// `|x - y| <= tol`, with `tol == 0` meaning exact equality.
pub fn within<S: Scalar>(x: &S, y: &S, tol: &S) -> bool {
    let diff = (x.clone() - y.clone()).abs();
    diff <= *tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_pow_matches_in_both_modes() {
        for t in 0..20u32 {
            let f = f64::half_pow(t);
            let q = BigRational::half_pow(t);
            assert_eq!(f, q.to_f64_lossy());
        }
    }

    #[test]
    fn rational_from_ratio_is_exact() {
        let third = BigRational::from_ratio(1, 3);
        let one = third.clone() + third.clone() + third;
        assert_eq!(one, BigRational::from_integer(BigInt::from(1)));
    }

    #[test]
    fn within_zero_tolerance_is_equality() {
        let tol = BigRational::tol_tight();
        let a = BigRational::from_ratio(1, 2);
        let b = BigRational::from_ratio(1, 2);
        let c = BigRational::from_ratio(1, 3);
        assert!(within(&a, &b, &tol));
        assert!(!within(&a, &c, &tol));
    }
}
