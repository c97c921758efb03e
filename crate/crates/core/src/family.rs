use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The two graph families: the bouquet `B_n` (one vertex, `n` loops) and
/// the dipole `D_n` (two vertices, `n` parallel edges).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Bouquet,
    Dipole,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Bouquet, Family::Dipole];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Bouquet => "bouquet",
            Family::Dipole => "dipole",
        }
    }

    pub fn vertices(self) -> u64 {
        match self {
            Family::Bouquet => 1,
            Family::Dipole => 2,
        }
    }

    /// Maximum genus; both families are upper-embeddable, so this is half
    /// the cycle rank rounded down.
    pub fn max_genus(self, n: u64) -> u64 {
        match self {
            Family::Bouquet => n / 2,
            Family::Dipole => n.saturating_sub(1) / 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bouquet" | "B" => Ok(Family::Bouquet),
            "dipole" | "D" => Ok(Family::Dipole),
            other => Err(Error::Parse(format!("unknown family '{other}'"))),
        }
    }
}
