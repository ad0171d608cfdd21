use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Variable family. The declaration order fixes `X < Y < Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Q,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Q];

    pub fn letter(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Q => 'q',
        }
    }

    pub fn from_letter(c: char) -> Option<Axis> {
        match c {
            'x' => Some(Axis::X),
            'y' => Some(Axis::Y),
            'q' => Some(Axis::Q),
            _ => None,
        }
    }
}

/// An indexed variable such as `x3` or `q1`; indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    axis: Axis,
    index: u32,
}

impl VarId {
    pub fn new(axis: Axis, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroIndex(0));
        }
        Ok(VarId { axis, index })
    }

    /// Panics on index 0; for the many call sites where the index is known positive.
    pub fn of(axis: Axis, index: u32) -> Self {
        assert!(index >= 1, "variable index must be at least 1");
        VarId { axis, index }
    }

    pub fn x(index: u32) -> Self {
        Self::of(Axis::X, index)
    }

    pub fn y(index: u32) -> Self {
        Self::of(Axis::Y, index)
    }

    pub fn q(index: u32) -> Self {
        Self::of(Axis::Q, index)
    }

    pub fn axis(self) -> Axis {
        self.axis
    }

    pub fn index(self) -> u32 {
        self.index
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis.letter(), self.index)
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let axis = chars
            .next()
            .and_then(Axis::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{s}`")))?;
        let index: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable index in `{s}`")))?;
        VarId::new(axis, index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_axis_then_index() {
        assert!(VarId::x(9) < VarId::y(1));
        assert!(VarId::y(9) < VarId::q(1));
        assert!(VarId::x(2) < VarId::x(10));
    }

    #[test]
    fn parse_round_trip() {
        for v in [VarId::x(1), VarId::y(12), VarId::q(3)] {
            assert_eq!(v.to_string().parse::<VarId>().unwrap(), v);
        }
        assert!("x0".parse::<VarId>().is_err());
        assert!("z1".parse::<VarId>().is_err());
    }
}
