use thiserror::Error;

use crate::family::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least {min}, got {n}")]
    DomainTooSmall { n: u64, min: u64 },

    #[error("{family} n = {n} exceeds the enumeration ceiling of {ceiling}")]
    AboveCeiling { family: Family, n: u64, ceiling: u64 },

    #[error("{family} n = {n} exceeds the cap of {cap} for method '{method}'")]
    MethodCap { family: Family, n: u64, cap: u64, method: String },

    #[error("unknown method '{0}'")]
    UnknownMethod(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("invalid embedding: V = {vertices}, E = {edges}, F = {faces} violate Euler's formula")]
    InvalidEmbedding { vertices: u64, edges: u64, faces: u64 },

    #[error("identity violated at t^{exponent}: expected {expected}, got {actual}")]
    IdentityViolation { exponent: i64, expected: String, actual: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
