//! Interchangeable ways of computing the exact average genus, registered by
//! name so front ends can pick one at runtime.

use crate::closedform;
use crate::distributions;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::rational::Rational;

/// Largest `n` the distribution-based method will expand.
pub const DISTRIBUTION_CAP: u64 = 60;

pub trait AverageGenusMethod: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Largest supported `n`, if the method is capped.
    fn cap(&self, _family: Family) -> Option<u64> {
        None
    }

    fn compute(&self, family: Family, n: u64) -> Result<Rational>;

    /// Values for `n = 1..=n_max`; entry `i` is for `n = i + 1`.
    fn table(&self, family: Family, n_max: u64) -> Vec<Result<Rational>> {
        (1..=n_max).map(|n| self.compute(family, n)).collect()
    }
}

fn check_cap(method: &dyn AverageGenusMethod, family: Family, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::DomainTooSmall { n, min: 1 });
    }
    match method.cap(family) {
        Some(cap) if n > cap => Err(Error::MethodCap {
            family,
            n,
            cap,
            method: method.name().to_string(),
        }),
        _ => Ok(()),
    }
}

/// Explicit summation formulas.
#[derive(Debug, Default, Clone, Copy)]
pub struct ClosedForm;

impl AverageGenusMethod for ClosedForm {
    fn name(&self) -> &'static str {
        "closed"
    }

    fn description(&self) -> &'static str {
        "explicit finite sums"
    }

    fn compute(&self, family: Family, n: u64) -> Result<Rational> {
        closedform::avg_genus_closed(family, n)
    }
}

/// Three-term rational recurrences, evaluated as a prefix table.
#[derive(Debug, Default, Clone, Copy)]
pub struct Recurrence;

impl AverageGenusMethod for Recurrence {
    fn name(&self) -> &'static str {
        "recurrence"
    }

    fn description(&self) -> &'static str {
        "first-order rational recurrence in n"
    }

    fn compute(&self, family: Family, n: u64) -> Result<Rational> {
        Ok(closedform::avg_table(family, n)?.pop().expect("non-empty"))
    }

    fn table(&self, family: Family, n_max: u64) -> Vec<Result<Rational>> {
        match closedform::avg_table(family, n_max) {
            Ok(t) => t.into_iter().map(Ok).collect(),
            Err(e) => vec![Err(e)],
        }
    }
}

/// `Γ'(1)/Γ(1)` of the full genus distribution.
#[derive(Debug, Default, Clone, Copy)]
pub struct FromDistribution;

impl AverageGenusMethod for FromDistribution {
    fn name(&self) -> &'static str {
        "distribution"
    }

    fn description(&self) -> &'static str {
        "mean of the exact genus distribution"
    }

    fn cap(&self, _family: Family) -> Option<u64> {
        Some(DISTRIBUTION_CAP)
    }

    fn compute(&self, family: Family, n: u64) -> Result<Rational> {
        check_cap(self, family, n)?;
        Ok(distributions::distribution(family, n)?.average_genus())
    }

    fn table(&self, family: Family, n_max: u64) -> Vec<Result<Rational>> {
        let reachable = n_max.min(DISTRIBUTION_CAP);
        let table = match family {
            Family::Bouquet => distributions::bouquet_table(reachable),
            Family::Dipole => distributions::dipole_table(reachable),
        };
        let mut out: Vec<Result<Rational>> = match table {
            Ok(t) => t.iter().map(|d| Ok(d.average_genus())).collect(),
            Err(e) => return vec![Err(e)],
        };
        out.extend((reachable + 1..=n_max).map(|n| check_cap(self, family, n).map(|_| unreachable!())));
        out
    }
}

/// Methods keyed by name, in registration order.
pub struct MethodRegistry {
    methods: Vec<Box<dyn AverageGenusMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> Self {
        Self { methods: Vec::new() }
    }

    /// `closed`, `recurrence` and `distribution`.
    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(ClosedForm));
        r.register(Box::new(Recurrence));
        r.register(Box::new(FromDistribution));
        r
    }

    /// Adds a method, replacing any existing one with the same name.
    pub fn register(&mut self, method: Box<dyn AverageGenusMethod>) {
        match self.methods.iter().position(|m| m.name() == method.name()) {
            Some(i) => self.methods[i] = method,
            None => self.methods.push(method),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn AverageGenusMethod> {
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn AverageGenusMethod> {
        self.methods.iter().map(|m| m.as_ref())
    }
}

impl Default for MethodRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}
