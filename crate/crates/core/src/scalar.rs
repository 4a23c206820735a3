//! Scalar types the spectral routines are generic over.
//!
//! Projections are computed exactly with [`Rational`]; the float
//! implementations exist for quick looks and for the exponential model.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Exact rational scalar.
pub type Rational = Ratio<i128>;

pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + Send + Sync + 'static {
    fn from_ratio(numer: i128, denom: i128) -> Self;

    fn from_int(v: i128) -> Self {
        Self::from_ratio(v, 1)
    }

    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn from_ratio(numer: i128, denom: i128) -> Self {
        numer as f64 / denom as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_ratio(numer: i128, denom: i128) -> Self {
        (numer as f64 / denom as f64) as f32
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for Rational {
    fn from_ratio(numer: i128, denom: i128) -> Self {
        Ratio::new(numer, denom)
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

/// Round half away from zero.
pub fn round_half_away<T: Scalar>(x: &T) -> i128 {
    let v = x.to_f64();
    v.round() as i128
}

/// Exact round-half-away for rationals (`f64::round` already rounds half away from zero).
pub fn round_rational(x: &Rational) -> i128 {
    let two = 2 * *x.denom();
    let n = *x.numer();
    if n >= 0 {
        (2 * n + x.denom()) / two
    } else {
        -((-2 * n + x.denom()) / two)
    }
}

/// Truncate toward zero to `decimals` places.
pub fn truncate_rational(x: &Rational, decimals: u32) -> f64 {
    let scale = 10i128.pow(decimals);
    let scaled = (x * Rational::from_int(scale)).trunc();
    *scaled.numer() as f64 / scale as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_half_away_from_zero() {
        assert_eq!(round_rational(&Rational::new(5, 2)), 3);
        assert_eq!(round_rational(&Rational::new(-5, 2)), -3);
        assert_eq!(round_rational(&Rational::new(7, 3)), 2);
        assert_eq!(round_rational(&Rational::new(-7, 3)), -2);
        assert_eq!(round_half_away(&-2.5f64), -3);
    }

    #[test]
    fn truncation() {
        assert_eq!(truncate_rational(&Rational::new(183513, 10000), 1), 18.3);
        assert_eq!(truncate_rational(&Rational::new(-183513, 10000), 1), -18.3);
    }
}
