//! Truncated Laurent series over exact rationals, the elementary kernels
//! needed to expand the closed-form generating functions, and the ODE and
//! expansion checks built on them.

mod identities;
pub mod kernels;
mod series;

pub use identities::*;
pub use kernels::{geometric, log_one_minus, log_one_plus};
pub use series::TruncatedSeries;
