//! Genus distributions of bouquets and dipoles from their integer
//! recurrences.
//!
//! Both recurrences are three-term in `n` and are seeded from the genus
//! polynomials of the two smallest members (`Γ_{B_1} = 1`, `Γ_{B_2} = 4 + 2x`,
//! `Γ_{D_1} = Γ_{D_2} = 1`). Every step ends in a division by a small
//! integer which must be exact; a remainder means the recurrence was
//! mis-implemented and is treated as a panic-level bug.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::rational::{from_biguint, Rational};

/// Number of embeddings of a family member on each orientable surface,
/// indexed by genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenusDistribution {
    family: Family,
    n: u64,
    coeffs: Vec<BigUint>,
}

impl GenusDistribution {
    /// Wraps raw coefficients, checking the length and positivity
    /// invariants (but not the total).
    pub fn new(family: Family, n: u64, coeffs: Vec<BigUint>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DomainTooSmall { n, min: 1 });
        }
        let expected = family.max_genus(n) as usize + 1;
        if coeffs.len() != expected {
            return Err(Error::Parse(format!(
                "{family} n = {n} needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(Error::Parse("top coefficient must be positive".into()));
        }
        Ok(Self { family, n, coeffs })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero outside the stored range.
    pub fn coeff(&self, k: i64) -> BigUint {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_default()
    }

    /// Highest genus with a nonzero coefficient.
    pub fn top_genus(&self) -> u64 {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0) as u64
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `Γ'(1) / Γ(1)` in lowest terms.
    pub fn average_genus(&self) -> Rational {
        let weighted: BigUint = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigUint::from(k))
            .sum();
        Rational::new(weighted.into(), self.total().into())
    }

    /// Evaluates the genus polynomial `Σ g_k x^k` by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + from_biguint(c))
    }
}

/// Total number of labeled embeddings: `(2n−1)!` for `B_n`, `((n−1)!)²`
/// for `D_n`.
pub fn expected_total(family: Family, n: u64) -> BigUint {
    match family {
        Family::Bouquet => factorial(2 * n - 1),
        Family::Dipole => {
            let f = factorial(n - 1);
            &f * &f
        }
    }
}

pub fn max_genus(family: Family, n: u64) -> u64 {
    family.max_genus(n)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn distribution(family: Family, n: u64) -> Result<GenusDistribution> {
    match family {
        Family::Bouquet => bouquet_distribution(n),
        Family::Dipole => dipole_distribution(n),
    }
}

pub fn bouquet_distribution(n: u64) -> Result<GenusDistribution> {
    Ok(bouquet_table(n)?.pop().expect("table is non-empty"))
}

pub fn dipole_distribution(n: u64) -> Result<GenusDistribution> {
    Ok(dipole_table(n)?.pop().expect("table is non-empty"))
}

/// Distributions of `B_1..=B_{n_max}`.
pub fn bouquet_table(n_max: u64) -> Result<Vec<GenusDistribution>> {
    if n_max == 0 {
        return Err(Error::DomainTooSmall { n: 0, min: 1 });
    }
    let mut table: Vec<Vec<BigUint>> = vec![vec![1u32.into()], vec![4u32.into(), 2u32.into()]];
    for n in 3..=n_max {
        let prev = &table[(n - 2) as usize];
        let prev2 = &table[(n - 3) as usize];
        let shifted_factor =
            BigUint::from(4 * (2 * n - 1) * (2 * n - 3)) * BigUint::from((n - 1) * (n - 1) * (n - 2));
        let direct_factor = BigUint::from(4 * (2 * n - 1) * (n - 1));
        let len = Family::Bouquet.max_genus(n) as usize + 1;
        let at = |v: &Vec<BigUint>, k: usize| v.get(k).cloned().unwrap_or_default();
        let row = (0..len)
            .map(|m| {
                let shifted = if m == 0 { BigUint::zero() } else { at(prev2, m - 1) };
                let numer = &shifted_factor * shifted + &direct_factor * at(prev, m);
                exact_div_unsigned(numer, n + 1)
            })
            .collect();
        table.push(row);
    }
    table.truncate(n_max as usize);
    Ok(table
        .into_iter()
        .zip(1..)
        .map(|(coeffs, n)| GenusDistribution { family: Family::Bouquet, n, coeffs })
        .collect())
}

/// Distributions of `D_1..=D_{n_max}`.
pub fn dipole_table(n_max: u64) -> Result<Vec<GenusDistribution>> {
    if n_max == 0 {
        return Err(Error::DomainTooSmall { n: 0, min: 1 });
    }
    let mut table: Vec<Vec<BigInt>> = vec![vec![BigInt::one()], vec![BigInt::one()]];
    // row for D_{n+1} from D_n and D_{n-1}
    for n in 2..n_max {
        let cur = &table[(n - 1) as usize];
        let prev = &table[(n - 2) as usize];
        let at = |v: &Vec<BigInt>, k: usize| v.get(k).cloned().unwrap_or_default();
        let a = BigInt::from(n * (2 * n + 1));
        let b = BigInt::from(n * n * n) * BigInt::from((n - 1) * (n - 1));
        let c = BigInt::from(n * (n - 1) * (n - 1));
        let len = Family::Dipole.max_genus(n + 1) as usize + 1;
        let row = (0..len)
            .map(|k| {
                let shifted = if k == 0 { BigInt::zero() } else { at(prev, k - 1) };
                let numer = &a * at(cur, k) + &b * shifted - &c * at(prev, k);
                exact_div_signed(numer, n + 2)
            })
            .collect();
        table.push(row);
    }
    table.truncate(n_max as usize);
    Ok(table
        .into_iter()
        .zip(1..)
        .map(|(coeffs, n)| GenusDistribution {
            family: Family::Dipole,
            n,
            coeffs: coeffs
                .into_iter()
                .map(|c| c.to_biguint().expect("dipole coefficient went negative"))
                .collect(),
        })
        .collect())
}

fn exact_div_unsigned(numer: BigUint, divisor: u64) -> BigUint {
    let (q, r) = numer.div_rem(&BigUint::from(divisor));
    assert!(r.is_zero(), "recurrence division by {divisor} left remainder {r}");
    q
}

fn exact_div_signed(numer: BigInt, divisor: u64) -> BigInt {
    let (q, r) = numer.div_rem(&BigInt::from(divisor));
    assert!(r.is_zero(), "recurrence division by {divisor} left remainder {r}");
    debug_assert!(!q.is_negative() || q.is_zero());
    q
}

/// Small helper for tests and reports: coefficients as `u64` where they fit.
pub fn coeffs_u64(d: &GenusDistribution) -> Option<Vec<u64>> {
    d.coeffs.iter().map(ToPrimitive::to_u64).collect()
}
