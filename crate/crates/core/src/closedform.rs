//! Average genus from closed forms and first-order recurrences, plus the
//! binary64 asymptotic estimates they are compared against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::rational::{self, int, ratio, Rational};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Limit of `γ_avg(B_n) − γ_avg(D_n)`, namely `(1 − ln 2)/2`.
pub fn difference_limit() -> f64 {
    (1.0 - std::f64::consts::LN_2) / 2.0
}

fn require(n: u64, min: u64) -> Result<()> {
    if n < min {
        Err(Error::DomainTooSmall { n, min })
    } else {
        Ok(())
    }
}

/// `H_n = Σ_{k=1}^{n} 1/k`.
pub fn harmonic(n: u64) -> Rational {
    sum_reciprocals((1..=n).map(BigInt::from))
}

/// Sums `1/d` over the given denominators with a single final reduction.
fn sum_reciprocals(dens: impl Iterator<Item = BigInt>) -> Rational {
    let (num, den) = dens.fold((BigInt::zero(), BigInt::one()), |(p, q), d| {
        // p/q + 1/d
        (p * &d + &q, q * d)
    });
    Rational::new(num, den)
}

/// Closed form for `γ_avg(B_n)`:
/// `(n+1)/2 − Σ_{m=0}^{n−1} (1+(−1)^m)/(2(m+1)) − (1+(−1)^n)/(4(n+1))`.
///
/// Only even `m` contribute to the sum, each as `1/(m+1)`.
pub fn avg_genus_bouquet_closed(n: u64) -> Result<Rational> {
    require(n, 1)?;
    let odd_reciprocals = sum_reciprocals((0..n).step_by(2).map(|m| BigInt::from(m + 1)));
    let parity = if n.is_multiple_of(2) {
        Rational::new(BigInt::one(), BigInt::from(2 * (n + 1)))
    } else {
        Rational::zero()
    };
    Ok(Rational::new(BigInt::from(n + 1), BigInt::from(2)) - odd_reciprocals - parity)
}

/// `γ_avg(B_1..=B_{n_max})` by `a_n = 2/(n+1)·a_{n−1} + (n−1)/(n+1)·(a_{n−2} + 1)`,
/// with `a_n = 0` for `n ≤ 0`.
pub fn bouquet_avg_table(n_max: u64) -> Result<Vec<Rational>> {
    require(n_max, 1)?;
    let mut table = Vec::with_capacity(n_max as usize);
    let (mut older, mut old) = (Rational::zero(), Rational::zero());
    for n in 1..=n_max {
        let n_i = n as i64;
        let next = ratio(2, n_i + 1) * &old + ratio(n_i - 1, n_i + 1) * (older + int(1));
        older = std::mem::replace(&mut old, next.clone());
        table.push(next);
    }
    Ok(table)
}

pub fn avg_genus_bouquet_recurrence(n: u64) -> Result<Rational> {
    Ok(bouquet_avg_table(n)?.pop().expect("non-empty"))
}

/// Numerator `4(−1)^m m² + m² − 12(−1)^m m − 5m + 6(−1)^m + 6` shared by the
/// dipole closed form and the expansion of its generating function.
pub fn dipole_summand_numerator(m: i64) -> i64 {
    let s = if m % 2 == 0 { 1 } else { -1 };
    4 * s * m * m + m * m - 12 * s * m - 5 * m + 6 * s + 6
}

/// `(m−3)(m−2)(m−1)m`.
pub fn dipole_summand_denominator(m: i64) -> i64 {
    (m - 3) * (m - 2) * (m - 1) * m
}

/// Sums `weight(m)·numerator(m) / denominator(m)` over `m = 4..=n+1`.
fn dipole_weighted_sum(n: u64, weight: impl Fn(i64) -> i64) -> Rational {
    let (num, den) = (4..=n as i64 + 1).fold((BigInt::zero(), BigInt::one()), |(p, q), m| {
        let tn = BigInt::from(dipole_summand_numerator(m)) * weight(m);
        let td = BigInt::from(dipole_summand_denominator(m));
        (p * &td + tn * &q, q * td)
    });
    Rational::new(num, den)
}

/// Closed form for `γ_avg(D_n)`, `n ≥ 3`.
pub fn avg_genus_dipole_closed(n: u64) -> Result<Rational> {
    require(n, 3)?;
    let n_i = n as i64;
    Ok(dipole_weighted_sum(n, |m| n_i - m + 2) / int(2))
}

/// The unweighted partial sum `Σ_{m=4}^{n+1} numerator/denominator`, which
/// behaves like `1 − 1/n`.
pub fn partial_sum_d2(n: u64) -> Result<Rational> {
    require(n, 3)?;
    Ok(dipole_weighted_sum(n, |_| 1))
}

/// `γ_avg(D_1..=D_{n_max})` from `n(n+2)a_{n+1} = (2n+1)a_n + (n²−1)a_{n−1} + n²`,
/// `a_1 = a_2 = 0`.
pub fn dipole_avg_table(n_max: u64) -> Result<Vec<Rational>> {
    require(n_max, 1)?;
    let mut table = vec![Rational::zero(), Rational::zero()];
    for n in 2..n_max as i64 {
        let a_n = &table[(n - 1) as usize];
        let a_prev = &table[(n - 2) as usize];
        let rhs = int(2 * n + 1) * a_n + int(n * n - 1) * a_prev + int(n * n);
        table.push(rhs / int(n * (n + 2)));
    }
    table.truncate(n_max as usize);
    Ok(table)
}

pub fn avg_genus_dipole_recurrence(n: u64) -> Result<Rational> {
    Ok(dipole_avg_table(n)?.pop().expect("non-empty"))
}

/// Closed-form average genus for either family; the dipole values for
/// `n ∈ {1, 2}` are the stated constant 0.
pub fn avg_genus_closed(family: Family, n: u64) -> Result<Rational> {
    match family {
        Family::Bouquet => avg_genus_bouquet_closed(n),
        Family::Dipole if n == 1 || n == 2 => Ok(Rational::zero()),
        Family::Dipole => avg_genus_dipole_closed(n),
    }
}

pub fn avg_table(family: Family, n_max: u64) -> Result<Vec<Rational>> {
    match family {
        Family::Bouquet => bouquet_avg_table(n_max),
        Family::Dipole => dipole_avg_table(n_max),
    }
}

/// `(n+1)/2 − H_{2n}/2`.
pub fn stahl_estimate_bouquet(n: u64) -> Result<Rational> {
    require(n, 1)?;
    Ok((int(n as i64 + 1) - harmonic(2 * n)) / int(2))
}

/// `(n − ln n − γ + 1 − ln 2)/2`.
pub fn asymptotic_bouquet(n: u64) -> f64 {
    let n = n as f64;
    (n - n.ln() - EULER_GAMMA + 1.0 - std::f64::consts::LN_2) / 2.0
}

/// `(n − ln n − γ)/2`.
pub fn asymptotic_dipole(n: u64) -> f64 {
    let n = n as f64;
    (n - n.ln() - EULER_GAMMA) / 2.0
}

pub fn asymptotic(family: Family, n: u64) -> f64 {
    match family {
        Family::Bouquet => asymptotic_bouquet(n),
        Family::Dipole => asymptotic_dipole(n),
    }
}

/// `γ_avg(B_n) − γ_avg(D_n)` in binary64, paired with its limit.
pub fn difference_report(n: u64) -> Result<(f64, f64)> {
    require(n, 3)?;
    let diff = avg_genus_bouquet_closed(n)? - avg_genus_dipole_closed(n)?;
    Ok((rational::to_f64(&diff), difference_limit()))
}

/// One family member's exact average genus next to its asymptotic estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct AvgGenusReport {
    pub family: Family,
    pub n: u64,
    pub exact: Rational,
    pub decimal: String,
    pub asymptotic_estimate: f64,
    /// `decimal − asymptotic_estimate`.
    pub residual: f64,
}

impl AvgGenusReport {
    pub fn new(family: Family, n: u64, exact: Rational, precision: usize) -> Self {
        let decimal = rational::to_decimal(&exact, precision);
        let asymptotic_estimate = asymptotic(family, n);
        let value: f64 = decimal.parse().expect("decimal literal");
        Self {
            family,
            n,
            exact,
            decimal,
            asymptotic_estimate,
            residual: value - asymptotic_estimate,
        }
    }

    /// Closed-form value with the default precision.
    pub fn closed(family: Family, n: u64) -> Result<Self> {
        Ok(Self::new(family, n, avg_genus_closed(family, n)?, rational::DEFAULT_PRECISION))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bouquet_closed_examples() {
        assert_eq!(avg_genus_bouquet_closed(1).unwrap(), int(0));
        assert_eq!(avg_genus_bouquet_closed(2).unwrap(), ratio(1, 3));
        assert_eq!(avg_genus_bouquet_closed(3).unwrap(), ratio(2, 3));
        assert_eq!(avg_genus_bouquet_closed(4).unwrap(), ratio(16, 15));
        assert!(avg_genus_bouquet_closed(0).is_err());
    }

    #[test]
    fn bouquet_recurrence_examples() {
        assert_eq!(avg_genus_bouquet_recurrence(1).unwrap(), int(0));
        assert_eq!(avg_genus_bouquet_recurrence(2).unwrap(), ratio(1, 3));
        assert_eq!(avg_genus_bouquet_recurrence(3).unwrap(), ratio(2, 3));
        assert_eq!(avg_genus_bouquet_recurrence(4).unwrap(), ratio(16, 15));
    }

    #[test]
    fn dipole_closed_examples() {
        assert_eq!(avg_genus_dipole_closed(3).unwrap(), ratio(1, 2));
        assert_eq!(avg_genus_dipole_closed(4).unwrap(), ratio(5, 6));
        assert_eq!(avg_genus_dipole_closed(5).unwrap(), ratio(31, 24));
        assert_eq!(avg_genus_dipole_closed(2), Err(Error::DomainTooSmall { n: 2, min: 3 }));
        assert_eq!(avg_genus_closed(Family::Dipole, 1).unwrap(), int(0));
        assert_eq!(avg_genus_closed(Family::Dipole, 2).unwrap(), int(0));
    }

    #[test]
    fn dipole_recurrence_examples() {
        assert_eq!(avg_genus_dipole_recurrence(1).unwrap(), int(0));
        assert_eq!(avg_genus_dipole_recurrence(2).unwrap(), int(0));
        assert_eq!(avg_genus_dipole_recurrence(3).unwrap(), ratio(1, 2));
        assert_eq!(avg_genus_dipole_recurrence(4).unwrap(), ratio(5, 6));
        assert_eq!(avg_genus_dipole_recurrence(5).unwrap(), ratio(31, 24));
    }

    #[test]
    fn closed_matches_recurrence() {
        let b = bouquet_avg_table(300).unwrap();
        let d = dipole_avg_table(300).unwrap();
        for n in 1..=300u64 {
            assert_eq!(avg_genus_bouquet_closed(n).unwrap(), b[n as usize - 1], "B_{n}");
            assert_eq!(avg_genus_closed(Family::Dipole, n).unwrap(), d[n as usize - 1], "D_{n}");
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(1), int(1));
        assert_eq!(harmonic(2), ratio(3, 2));
        assert_eq!(harmonic(4), ratio(25, 12));
    }

    #[test]
    fn stahl_examples() {
        assert_eq!(stahl_estimate_bouquet(1).unwrap(), ratio(1, 4));
        assert_eq!(stahl_estimate_bouquet(2).unwrap(), ratio(11, 24));
        let resid = avg_genus_bouquet_closed(1).unwrap() - stahl_estimate_bouquet(1).unwrap();
        assert_eq!(resid, ratio(-1, 4));
    }

    #[test]
    fn asymptotic_examples() {
        // independent hand evaluation of the formulas
        assert!((asymptotic_bouquet(1) - 0.364_818_5).abs() < 1e-6);
        assert!((asymptotic_bouquet(10) - 3.713_526).abs() < 1e-5);
        assert!((asymptotic_dipole(3) - 0.662_086).abs() < 1e-5);
        assert!((asymptotic_dipole(1) - 0.211_392).abs() < 1e-5);
        assert!((EULER_GAMMA - 0.5772).abs() < 1e-4);
    }

    #[test]
    fn difference_examples() {
        assert!((difference_limit() - 0.153_426).abs() < 1e-6);
        let (diff, _) = difference_report(4).unwrap();
        assert!((diff - 7.0 / 30.0).abs() < 1e-15);
        assert!(difference_report(2).is_err());
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(partial_sum_d2(3).unwrap(), int(1));
        assert_eq!(partial_sum_d2(4).unwrap(), ratio(2, 3));
        assert_eq!(partial_sum_d2(5).unwrap(), ratio(11, 12));
    }

    #[test]
    fn report_fields() {
        let r = AvgGenusReport::new(Family::Bouquet, 4, ratio(16, 15), 6);
        assert_eq!(r.decimal, "1.066667");
        assert!((r.residual - (1.066667 - asymptotic_bouquet(4))).abs() < 1e-12);
        let c = AvgGenusReport::closed(Family::Dipole, 3).unwrap();
        assert_eq!(c.exact, ratio(1, 2));
    }

    #[test]
    fn summand_numerators() {
        // m = 4: 64 + 16 - 48 - 20 + 6 + 6
        assert_eq!(dipole_summand_numerator(4), 24);
        assert_eq!(dipole_summand_numerator(5), -40);
        assert_eq!(dipole_summand_denominator(4), 24);
    }
}
