//! Exact genus distributions and average genus of the bouquets `B_n` and
//! dipoles `D_n`.
//!
//! * [`distributions`]: integer recurrences for the genus distributions.
//! * [`closedform`]: closed forms, recurrences and asymptotics for the
//!   average genus.
//! * [`powerseries`]: truncated Laurent series used to check the
//!   generating-function identities.
//! * [`oracle`]: brute-force rotation-system enumeration.
//! * [`methods`]: average-genus strategies selectable by name.

pub mod closedform;
pub mod distributions;
pub mod error;
pub mod family;
pub mod methods;
pub mod oracle;
pub mod powerseries;
pub mod rational;

pub use closedform::AvgGenusReport;
pub use distributions::GenusDistribution;
pub use error::{Error, Result};
pub use family::Family;
pub use methods::{AverageGenusMethod, MethodRegistry};
pub use oracle::{EmbeddingCensus, RotationSystem};
pub use powerseries::TruncatedSeries;
pub use rational::Rational;
