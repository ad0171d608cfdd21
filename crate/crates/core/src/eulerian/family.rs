use std::fmt;
use std::str::FromStr;


use crate::error::{Error, Result};
use crate::multipoly::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    /// The multivariate type-D polynomial obtained from the Stembridge identity.
    D,
    /// Naive extension of the type-B tops to `D_n` (`σ_0 = -σ_2`); not multiaffine.
    DStar,
    G,
    AffA,
    AffC,
    /// Affine type B, defined only through `2C̃_n - 2n x_n y_n B_{n-1}`.
    AffB,
    /// Univariate `D_n(x)` from univariate `B_n(x)` and `A_{n-2}(x)`.
    DStem,
}

/// How the `q` statistic enters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QMode {
    /// `q := 1`.
    None,
    /// One symbol `q1` for every colored entry.
    Single,
    /// `q_v` for the entry of absolute value `v`.
    Multi,
    Value(Coeff),
}

impl fmt::Display for QMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QMode::None => write!(f, "1"),
            QMode::Single => write!(f, "sym"),
            QMode::Multi => write!(f, "multisym"),
            QMode::Value(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for QMode {
    type Err = Error;

    /// `sym`, `multisym`, `none`, or a rational such as `-1`, `1/2`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "sym" => Ok(QMode::Single),
            "multisym" => Ok(QMode::Multi),
            "none" => Ok(QMode::None),
            t => t
                .parse::<Coeff>()
                .map(QMode::Value)
                .map_err(|_| Error::Parse(format!("bad q value '{t}'"))),
        }
    }
}

/// A family member: `family` at rank `n`, with `r` colors for `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub r: u8,
    pub q: QMode,
}

/// Letters are stored in 64-bit sets.
pub const MAX_RANK: usize = 62;

impl FamilySpec {
    pub fn new(family: Family, n: usize, r: u8, q: QMode) -> Result<Self> {
        let min_n = match family {
            Family::A => 0,
            Family::B | Family::G | Family::AffA | Family::AffC => 1,
            Family::D | Family::DStar | Family::AffB | Family::DStem => 2,
        };
        if n < min_n {
            return Err(Error::InvalidParameter(format!("{family} needs n >= {min_n}, got {n}")));
        }
        if n > MAX_RANK {
            return Err(Error::InvalidParameter(format!("n = {n} exceeds {MAX_RANK}")));
        }
        let r = match family {
            Family::G if r == 0 => {
                return Err(Error::InvalidParameter("G needs r >= 1".into()));
            }
            Family::G => r,
            Family::A | Family::AffA => 1,
            _ => 2,
        };
        if !matches!(family, Family::B | Family::G) && q != QMode::None {
            return Err(Error::InvalidParameter(format!("{family} takes no q parameter")));
        }
        Ok(FamilySpec { family, n, r, q })
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n, 1, QMode::None).expect("valid")
    }

    pub fn b(n: usize, q: QMode) -> Self {
        Self::new(Family::B, n, 2, q).expect("valid")
    }

    pub fn g(n: usize, r: u8, q: QMode) -> Self {
        Self::new(Family::G, n, r, q).expect("valid")
    }

    /// Whether brute force and the recurrence describe the same polynomial,
    /// so that one can serve as oracle for the other.
    pub fn has_two_constructions(&self) -> bool {
        matches!(
            self.family,
            Family::A | Family::B | Family::G | Family::AffA | Family::AffC | Family::DStem
        )
    }

    /// CLI code, e.g. `G:3`.
    pub fn code(&self) -> String {
        match self.family {
            Family::G => format!("G:{}", self.r),
            f => f.to_string(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::DStar => "Dstar",
            Family::G => "G",
            Family::AffA => "affA",
            Family::AffC => "affC",
            Family::AffB => "affB",
            Family::DStem => "Dstem",
        };
        f.write_str(s)
    }
}

/// Parses a family code; `G:r` also yields the number of colors.
pub fn parse_family(code: &str) -> Result<(Family, Option<u8>)> {
    let fam = match code {
        "A" => Family::A,
        "B" => Family::B,
        "D" => Family::D,
        "Dstar" => Family::DStar,
        "affA" => Family::AffA,
        "affC" => Family::AffC,
        "affB" => Family::AffB,
        "Dstem" => Family::DStem,
        _ => {
            let r = code
                .strip_prefix("G:")
                .and_then(|r| r.parse::<u8>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown family '{code}'")))?;
            return Ok((Family::G, Some(r)));
        }
    };
    Ok((fam, None))
}
