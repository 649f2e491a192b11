//! Exact numeric helpers.
//!
//! Every probability and spectral value handled by the crate is a rational
//! number. Set-level quantities are dyadic (power-of-two denominator);
//! averages over `C(n, t)` subsets are not, so the common type is a general
//! reduced fraction over `i128`.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

pub type Rational = Ratio<i128>;

/// `num / 2^log2_den`, reduced.
pub fn dyadic(num: i128, log2_den: u32) -> Rational {
    Rational::new(num, 1i128 << log2_den)
}

/// Exponent `k` when the reduced denominator is `2^k`.
pub fn log2_den(value: &Rational) -> Option<u32> {
    let den = *value.denom();
    if den > 0 && den & (den - 1) == 0 {
        Some(den.trailing_zeros())
    } else {
        None
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    if value.is_zero() {
        return 0.0;
    }
    // Both parts are below 2^100 in practice, so the f64 conversions are
    // individually correctly rounded.
    let num = value.numer().to_f64().unwrap_or(f64::NAN);
    let den = value.denom().to_f64().unwrap_or(f64::NAN);
    num / den
}

/// Binomial coefficient with `C(a, b) = 0` whenever `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> u128 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

pub fn factorial(k: u32) -> u128 {
    (1..=k as u128).product()
}

pub fn popcount(x: usize) -> u32 {
    x.count_ones()
}
