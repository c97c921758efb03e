//! Generating-function identities for the average-genus sequences.
//!
//! Each check builds the series of the sequence computed by its recurrence,
//! then either plugs it into a linear ODE (the residual must vanish) or
//! compares it with the expansion of the closed-form solution.

use num_traits::Zero;

use super::kernels::{divide_by_t, geometric, log_one_minus, log_one_plus};
use super::TruncatedSeries;
use crate::closedform::{
    bouquet_avg_table, dipole_avg_table, dipole_summand_denominator, dipole_summand_numerator,
};
use crate::error::{Error, Result};
use crate::rational::{int, ratio, to_fraction_string, Rational};

fn mismatch(exponent: i64, expected: &Rational, actual: &Rational) -> Error {
    Error::IdentityViolation {
        exponent,
        expected: to_fraction_string(expected),
        actual: to_fraction_string(actual),
    }
}

/// Checks `actual` against `expected` on `range`, reporting the first
/// differing exponent.
fn ensure_equal(
    expected: &TruncatedSeries,
    actual: &TruncatedSeries,
    range: impl Iterator<Item = i64>,
) -> Result<()> {
    for k in range {
        let e = expected.coeff(k).expect("expected series known on range");
        let a = actual.coeff(k).expect("actual series known on range");
        if e != a {
            return Err(mismatch(k, &e, &a));
        }
    }
    Ok(())
}

/// `u(t) = Σ_{n≥1} γ_avg(B_n) t^n`, known below `t^order`.
pub fn bouquet_u_from_sequence(order: usize) -> TruncatedSeries {
    assert!(order >= 1, "order must be positive");
    let mut coeffs = vec![Rational::zero()];
    if order > 1 {
        coeffs.extend(bouquet_avg_table(order as u64 - 1).expect("n_max >= 1"));
    }
    TruncatedSeries::new(0, coeffs)
}

/// `u′(t)(t−t³) + u(t)(1−2t−t²) − t²/(1−t)²`.
pub fn bouquet_ode_residual_of(u: &TruncatedSeries) -> TruncatedSeries {
    let pad = u.order() + 4;
    let lhs = &(&u.derivative() * &TruncatedSeries::polynomial(1, &[1, 0, -1], pad))
        + &(u * &TruncatedSeries::polynomial(0, &[1, -2, -1], pad));
    let g = geometric(u.order());
    let rhs = (&g * &g).shift(2);
    &lhs - &rhs
}

/// Residual of the bouquet ODE for the recurrence sequence; identically
/// zero when the sequence satisfies it.
pub fn bouquet_ode_residual(order: usize) -> TruncatedSeries {
    assert!(order >= 4, "order must be at least 4");
    bouquet_ode_residual_of(&bouquet_u_from_sequence(order))
}

/// The three pieces of the closed-form bouquet solution:
/// `u₁ = 1/(2(t−1)²)`, `u₂ = −(t+1)ln(1−t)/(4(t−1)t)`, `u₃ = (t+1)ln(1+t)/(4(t−1)t)`.
pub fn bouquet_u_parts(order: usize) -> [TruncatedSeries; 3] {
    let n = order as i64;
    let g = geometric(n);
    let u1 = (&g * &g).scale(&ratio(1, 2));
    let one_plus_t = TruncatedSeries::polynomial(0, &[1, 1], n);
    let lm = divide_by_t(&log_one_minus(n + 1));
    let lp = divide_by_t(&log_one_plus(n + 1));
    let u2 = (&(&one_plus_t * &g) * &lm).scale(&ratio(1, 4));
    let u3 = (&(&one_plus_t * &g) * &lp).scale(&ratio(-1, 4));
    [u1, u2, u3]
}

/// `b_n` from the partial-sum formula for the coefficients of `u₂`.
pub fn bouquet_b_coefficient(n: i64) -> Rational {
    if n == 0 {
        return ratio(-1, 4);
    }
    let partial = |top: i64| (0..=top).fold(Rational::zero(), |acc, m| acc - ratio(1, m + 1));
    (partial(n) + partial(n - 1)) * ratio(1, 4)
}

/// `c_n` from the partial-sum formula for the coefficients of `u₃`.
pub fn bouquet_c_coefficient(n: i64) -> Rational {
    if n == 0 {
        return ratio(-1, 4);
    }
    let sign = |m: i64| if m % 2 == 0 { 1 } else { -1 };
    let partial = |top: i64| (0..=top).fold(Rational::zero(), |acc, m| acc + ratio(sign(m), m + 1));
    (partial(n) + partial(n - 1)) * ratio(-1, 4)
}

/// Sum `u₁ + u₂ + u₃`, checked coefficientwise against the recurrence
/// sequence on `t^0..t^{order−1}` and against the partial-sum formulas for
/// `b_n` and `c_n`.
pub fn bouquet_u_closed(order: usize) -> Result<TruncatedSeries> {
    assert!(order >= 2, "order must be at least 2");
    let [u1, u2, u3] = bouquet_u_parts(order);
    let n = order as i64;
    let b = TruncatedSeries::from_fn(0, n, bouquet_b_coefficient);
    let c = TruncatedSeries::from_fn(0, n, bouquet_c_coefficient);
    ensure_equal(&b, &u2, 0..n)?;
    ensure_equal(&c, &u3, 0..n)?;
    let sum = &(&u1 + &u2) + &u3;
    ensure_equal(&bouquet_u_from_sequence(order), &sum, 0..n)?;
    Ok(sum)
}

/// `u(t) = Σ_{n≥1} γ_avg(D_n) t^{n−3}`; the `n = 1, 2` terms vanish so the
/// series starts at `t^0 = γ_avg(D_3)`.
pub fn dipole_u_from_sequence(order: usize) -> TruncatedSeries {
    assert!(order >= 1, "order must be positive");
    let table = dipole_avg_table(order as u64 + 2).expect("n_max >= 3");
    debug_assert!(table[0].is_zero() && table[1].is_zero());
    TruncatedSeries::new(0, table[2..].to_vec())
}

/// `(3t−4−t²)/(t−1)³ = (4−3t+t²)/(1−t)³` below `order`.
pub fn dipole_ode_rhs(order: i64) -> TruncatedSeries {
    let g = geometric(order);
    let cube = &(&g * &g) * &g;
    &TruncatedSeries::polynomial(0, &[4, -3, 1], order) * &cube
}

/// `(t²−t⁴)u″ + (7t−2t²−9t³)u′ + (8−7t−15t²)u − (3t−4−t²)/(t−1)³`.
pub fn dipole_ode_residual_of(u: &TruncatedSeries) -> TruncatedSeries {
    let pad = u.order() + 4;
    let d1 = u.derivative();
    let d2 = d1.derivative();
    let lhs = &(&(&d2 * &TruncatedSeries::polynomial(2, &[1, 0, -1], pad))
        + &(&d1 * &TruncatedSeries::polynomial(1, &[7, -2, -9], pad)))
        + &(u * &TruncatedSeries::polynomial(0, &[8, -7, -15], pad));
    &lhs - &dipole_ode_rhs(u.order())
}

pub fn dipole_ode_residual(order: usize) -> TruncatedSeries {
    assert!(order >= 5, "order must be at least 5");
    dipole_ode_residual_of(&dipole_u_from_sequence(order))
}

/// `v(t) = −t³ + 3t² + (2t³ − 2t² − 2t + 2)ln(1+t) + (2 − 2t)ln(1−t)`,
/// expanded from the logarithm kernels.
pub fn dipole_v_series(order: i64) -> TruncatedSeries {
    let poly = |c: &[i64]| TruncatedSeries::polynomial(0, c, order);
    let plus = &poly(&[2, -2, -2, 2]) * &log_one_plus(order);
    let minus = &poly(&[2, -2]) * &log_one_minus(order);
    &(&poly(&[0, 0, 3, -1]) + &plus) + &minus
}

/// Coefficient of `t^m` in `v(t)` as given by its closed formula:
/// `1` at `t²`, `−1` at `t³`, and `2·numerator(m)/denominator(m)` for `m ≥ 4`.
pub fn dipole_v_coefficient(m: i64) -> Rational {
    match m {
        ..=1 => Rational::zero(),
        2 => int(1),
        3 => int(-1),
        m => ratio(2 * dipole_summand_numerator(m), dipole_summand_denominator(m)),
    }
}

/// The two Laurent pieces of the dipole solution: `1/(4(t−1)t²)` and
/// `v(t)/(4(t−1)²t⁴)`, each known below `t^order`.
pub fn dipole_u_pieces(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let n = order as i64;
    let first = geometric(n + 2).shift(-2).scale(&ratio(-1, 4));
    let g = geometric(n + 4);
    let kernel = (&g * &g).shift(-4).scale(&ratio(1, 4));
    let second = &kernel * &dipole_v_series(n + 4);
    (first, second)
}

/// Sum of the two Laurent pieces. Verifies that the expansion of `v`
/// matches its coefficient formula, that all four negative-exponent
/// coefficients cancel, and that `t^0..t^{order−1}` agree with the
/// recurrence sequence.
pub fn dipole_u_closed(order: usize) -> Result<TruncatedSeries> {
    assert!(order >= 1, "order must be positive");
    let n = order as i64;
    let v = dipole_v_series(n + 4);
    let v_formula = TruncatedSeries::from_fn(0, n + 4, dipole_v_coefficient);
    ensure_equal(&v_formula, &v, 0..n + 4)?;
    let (first, second) = dipole_u_pieces(order);
    let sum = &first + &second;
    debug_assert_eq!(sum.lowest(), -4);
    ensure_equal(&TruncatedSeries::zero(-4, 0), &sum, -4..0)?;
    ensure_equal(&dipole_u_from_sequence(order), &sum, 0..n)?;
    Ok(sum)
}
