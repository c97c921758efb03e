use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// A Laurent series known exactly below a truncation order.
///
/// Coefficients cover the exponents `lowest..order`; everything at or
/// above `order` is unknown. Leading zeros are kept unless
/// [`TruncatedSeries::normalized`] is called, so that cancellation of a
/// principal part stays observable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    lowest: i64,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(lowest: i64, coeffs: Vec<Rational>) -> Self {
        Self { lowest, coeffs }
    }

    /// All-zero series on `lowest..order`.
    pub fn zero(lowest: i64, order: i64) -> Self {
        let len = (order - lowest).max(0) as usize;
        Self::new(lowest, vec![Rational::zero(); len])
    }

    /// An exact polynomial `Σ coeffs[i] t^(lowest+i)`, padded with zeros up
    /// to `order` so that it does not limit the precision of products.
    pub fn polynomial(lowest: i64, coeffs: &[i64], order: i64) -> Self {
        assert!(
            order >= lowest + coeffs.len() as i64,
            "polynomial does not fit below order {order}"
        );
        let mut s = Self::zero(lowest, order);
        for (c, slot) in coeffs.iter().zip(s.coeffs.iter_mut()) {
            *slot = int(*c);
        }
        s
    }

    pub fn from_fn(lowest: i64, order: i64, f: impl Fn(i64) -> Rational) -> Self {
        Self::new(lowest, (lowest..order).map(f).collect())
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    /// First exponent whose coefficient is unknown.
    pub fn order(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`: zero below `lowest`, `None` at or past the
    /// truncation order.
    pub fn coeff(&self, k: i64) -> Option<Rational> {
        if k >= self.order() {
            None
        } else if k < self.lowest {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[(k - self.lowest) as usize].clone())
        }
    }

    /// `(exponent, coefficient)` pairs over the known range.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        (self.lowest..).zip(self.coeffs.iter())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<i64> {
        self.terms().find(|(_, c)| !c.is_zero()).map(|(k, _)| k)
    }

    pub fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }

    /// Fails with the first nonzero exponent if any known coefficient is
    /// nonzero.
    pub fn ensure_zero(&self) -> Result<()> {
        match self.terms().find(|(_, c)| !c.is_zero()) {
            None => Ok(()),
            Some((exponent, c)) => Err(Error::IdentityViolation {
                exponent,
                expected: "0".into(),
                actual: rational::to_fraction_string(c),
            }),
        }
    }

    /// Drops leading zero coefficients.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(skip) => Self::new(self.lowest + skip as i64, self.coeffs[skip..].to_vec()),
            None => Self::zero(self.order(), self.order()),
        }
    }

    /// Keeps only exponents below `order`.
    pub fn truncated(&self, order: i64) -> Self {
        let keep = (order - self.lowest).clamp(0, self.coeffs.len() as i64) as usize;
        Self::new(self.lowest, self.coeffs[..keep].to_vec())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.lowest + k, self.coeffs.clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.lowest, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Termwise derivative; the truncation order drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self.terms().map(|(k, c)| c * int(k)).collect();
        Self::new(self.lowest - 1, coeffs)
    }

    /// Cauchy product. The result is known up to
    /// `min(order_a + lowest_b, order_b + lowest_a)`.
    pub fn cauchy_product(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !rhs.coeffs[k - i].is_zero())
                    .fold(Rational::zero(), |acc, i| acc + &self.coeffs[i] * &rhs.coeffs[k - i])
            })
            .collect();
        Self::new(self.lowest + rhs.lowest, coeffs)
    }

    fn combine(&self, other: &Self, f: impl Fn(Rational, Rational) -> Rational) -> Self {
        let lowest = self.lowest.min(other.lowest);
        let order = self.order().min(other.order());
        let at = |s: &Self, k| s.coeff(k).unwrap_or_default();
        Self::from_fn(lowest, order.max(lowest), |k| f(at(self, k), at(other, k)))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.lowest, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.cauchy_product(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: Self) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.terms().filter(|(_, c)| !c.is_zero()) {
            if wrote {
                f.write_str(" + ")?;
            }
            write!(f, "({})t^{k}", rational::to_fraction_string(c))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}
