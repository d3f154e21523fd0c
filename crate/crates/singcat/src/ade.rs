//! Simply-laced Dynkin types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

/// `A_n` (n ≥ 1), `D_n` (n ≥ 4) or `E_6`, `E_7`, `E_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct AdeType {
    family: Family,
    rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid Dynkin type `{0}`")]
pub struct InvalidType(pub String);

impl AdeType {
    pub fn new(family: Family, rank: u32) -> Result<Self, InvalidType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(AdeType { family, rank })
        } else {
            Err(InvalidType(format!("{family:?}{rank}")))
        }
    }

    pub fn a(n: u32) -> Self {
        Self::new(Family::A, n).expect("A_n needs n >= 1")
    }

    pub fn d(n: u32) -> Self {
        Self::new(Family::D, n).expect("D_n needs n >= 4")
    }

    pub fn e(n: u32) -> Self {
        Self::new(Family::E, n).expect("E_n needs 6 <= n <= 8")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for AdeType {
    type Err = InvalidType;
    fn from_str(s: &str) -> Result<Self, InvalidType> {
        let bad = || InvalidType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let rank = digits.parse().map_err(|_| bad())?;
        AdeType::new(family, rank).map_err(|_| bad())
    }
}

impl TryFrom<String> for AdeType {
    type Error = InvalidType;
    fn try_from(s: String) -> Result<Self, InvalidType> {
        s.parse()
    }
}

impl From<AdeType> for String {
    fn from(t: AdeType) -> String {
        t.to_string()
    }
}
