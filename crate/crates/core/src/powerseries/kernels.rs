//! Elementary series generated straight from their coefficient formulas.

use num_traits::Zero;

use super::TruncatedSeries;
use crate::rational::{int, ratio, Rational};

/// `1/(1−t) = Σ t^ℓ` below `order`.
pub fn geometric(order: i64) -> TruncatedSeries {
    TruncatedSeries::from_fn(0, order, |_| int(1))
}

/// `ln(1−t) = −Σ_{m≥1} t^m/m` below `order`.
pub fn log_one_minus(order: i64) -> TruncatedSeries {
    TruncatedSeries::from_fn(0, order, |m| if m == 0 { Rational::zero() } else { ratio(-1, m) })
}

/// `ln(1+t) = Σ_{m≥1} (−1)^{m+1} t^m/m` below `order`.
pub fn log_one_plus(order: i64) -> TruncatedSeries {
    TruncatedSeries::from_fn(0, order, |m| match m {
        0 => Rational::zero(),
        m if m % 2 == 0 => ratio(-1, m),
        m => ratio(1, m),
    })
}

/// Divides a series with vanishing constant term by `t`.
pub fn divide_by_t(s: &TruncatedSeries) -> TruncatedSeries {
    assert!(
        s.terms().all(|(k, c)| k > 0 || c.is_zero()),
        "series has a nonzero coefficient that would become a pole"
    );
    let shifted = s.shift(-1);
    if shifted.lowest() < 0 {
        TruncatedSeries::new(0, shifted.coeffs()[(-shifted.lowest()) as usize..].to_vec())
    } else {
        shifted
    }
}
