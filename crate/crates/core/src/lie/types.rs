use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

/// A simple Lie algebra of type A, B, C, D, E6 or E7.
///
/// E8, F4 and G2 cannot be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLieType", into = "RawLieType")]
pub struct LieType {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct RawLieType {
    family: Family,
    rank: usize,
}

impl TryFrom<RawLieType> for LieType {
    type Error = Error;
    fn try_from(raw: RawLieType) -> Result<Self> {
        LieType::new(raw.family, raw.rank)
    }
}

impl From<LieType> for RawLieType {
    fn from(t: LieType) -> Self {
        RawLieType {
            family: t.family,
            rank: t.rank,
        }
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => rank == 6 || rank == 7,
        };
        if ok {
            Ok(Self { family, rank })
        } else if family == Family::E && rank == 8 {
            Err(Error::InvalidType("E8 is not supported".into()))
        } else {
            Err(Error::InvalidType(format!("{family:?}{rank} is not a supported rank")))
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("A_l needs l >= 1")
    }
    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("B_l needs l >= 2")
    }
    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).expect("C_l needs l >= 3")
    }
    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("D_l needs l >= 4")
    }
    pub fn e(rank: usize) -> Self {
        Self::new(Family::E, rank).expect("E_l needs l in {6, 7}")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Parses a family letter and a rank given separately, e.g. `("A", 2)`.
    pub fn from_parts(family: &str, rank: usize) -> Result<Self> {
        let family = match family.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" | "G" => {
                return Err(Error::InvalidType(format!(
                    "{family}{rank} is not supported (types F4 and G2 are excluded)"
                )))
            }
            other => return Err(Error::InvalidType(format!("unknown family {other:?}"))),
        };
        Self::new(family, rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Accepts `A2`, `b3`, `E6`, `D_4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::InvalidType(format!("{s:?} has no rank")))?;
        let (fam, rank) = s.split_at(split);
        let rank: usize = rank
            .parse()
            .map_err(|_| Error::InvalidType(format!("{s:?} has an invalid rank")))?;
        Self::from_parts(fam.trim_end_matches('_'), rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}
