use std::fmt;

use crate::error::{Error, Result};

/// An element of the wreath product `Z_r ≀ Sym(n)` in window notation:
/// position `i` carries the letter `values[i]` with color `colors[i]`.
///
/// `r = 1` gives ordinary permutations and `r = 2` signed permutations, where
/// color 1 means a negative entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPerm {
    r: u8,
    values: Vec<u8>,
    colors: Vec<u8>,
}

impl ColoredPerm {
    pub fn new(values: Vec<u8>, colors: Vec<u8>, r: u8) -> Result<Self> {
        let n = values.len();
        if r == 0 {
            return Err(Error::InvalidParameter("number of colors must be at least 1".into()));
        }
        if colors.len() != n {
            return Err(Error::InvalidParameter("one color per position is required".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= r) {
            return Err(Error::InvalidParameter(format!("color {c} out of range for r = {r}")));
        }
        Ok(ColoredPerm { r, values, colors })
    }

    /// An ordinary permutation in one-line notation.
    pub fn perm(values: &[u8]) -> Result<Self> {
        Self::new(values.to_vec(), vec![0; values.len()], 1)
    }

    /// A signed permutation from its window, e.g. `[3, 1, -4, -5, 2]`.
    pub fn signed(window: &[i32]) -> Result<Self> {
        let values = window
            .iter()
            .map(|&w| u8::try_from(w.unsigned_abs()).map_err(|_| Error::InvalidParameter(format!("entry {w} too large"))))
            .collect::<Result<Vec<_>>>()?;
        let colors = window.iter().map(|&w| u8::from(w < 0)).collect();
        Self::new(values, colors, 2)
    }

    pub(crate) fn from_parts_unchecked(values: Vec<u8>, colors: Vec<u8>, r: u8) -> Self {
        ColoredPerm { r, values, colors }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub(crate) fn values_mut(&mut self) -> &mut Vec<u8> {
        &mut self.values
    }

    pub(crate) fn colors_mut(&mut self) -> &mut Vec<u8> {
        &mut self.colors
    }

    pub fn letter(&self, i: usize) -> Letter {
        Letter {
            value: self.values[i],
            color: self.colors[i],
        }
    }

    /// Window entries as signed integers; meaningful for `r <= 2`.
    pub fn signed_window(&self) -> Vec<i32> {
        self.values
            .iter()
            .zip(&self.colors)
            .map(|(&v, &c)| if c == 0 { v as i32 } else { -(v as i32) })
            .collect()
    }

    /// Sum of the colors; for signed permutations the number of negative entries.
    pub fn color_sum(&self) -> u32 {
        self.colors.iter().map(|&c| c as u32).sum()
    }
}

/// Window rendering: `3,-1,4` for `r <= 2`, and `3,z^2*1,z^4*5` for colored
/// letters `ζ^e v` when `r >= 3`.
impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&v, &c)) in self.values.iter().zip(&self.colors).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match (c, self.r) {
                (0, _) => write!(f, "{v}")?,
                (_, 2) => write!(f, "-{v}")?,
                _ => write!(f, "z^{c}*{v}")?,
            }
        }
        Ok(())
    }
}

/// A colored letter `ζ^color value`; `value = 0` is the letter 0 prepended
/// to every window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: u8,
    pub color: u8,
}

impl Letter {
    pub const ZERO: Letter = Letter { value: 0, color: 0 };

    pub fn plain(value: u8) -> Self {
        Letter { value, color: 0 }
    }

    pub fn colored(value: u8, color: u8) -> Self {
        Letter { value, color }
    }

    /// Position in the total order
    /// `ζ^{r-1}n < … < ζn < … < ζ^{r-1}1 < … < ζ1 < 0 < 1 < … < n`.
    /// Independent of `r` because colors never exceed 255.
    #[inline]
    pub fn rank(self) -> i32 {
        if self.color == 0 {
            self.value as i32
        } else {
            -((self.value as i32) * 256 + self.color as i32)
        }
    }
}

/// `a < b` in the colored order.
pub fn colored_less(a: Letter, b: Letter) -> bool {
    a.rank() < b.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colored_order_examples() {
        assert!(colored_less(Letter::colored(5, 4), Letter::colored(2, 1)));
        assert!(colored_less(Letter::ZERO, Letter::plain(1)));
        assert!(colored_less(Letter::colored(1, 2), Letter::colored(1, 1)));
        assert!(colored_less(Letter::colored(1, 1), Letter::ZERO));
        assert!(colored_less(Letter::colored(2, 1), Letter::colored(1, 4)));
        assert!(!colored_less(Letter::plain(3), Letter::plain(3)));
    }

    #[test]
    fn validation() {
        assert!(ColoredPerm::perm(&[1, 1]).is_err());
        assert!(ColoredPerm::new(vec![1, 2], vec![0, 2], 2).is_err());
        assert!(ColoredPerm::new(vec![1, 2], vec![0], 2).is_err());
        let s = ColoredPerm::signed(&[3, 1, -4, -5, 2]).unwrap();
        assert_eq!(s.to_string(), "3,1,-4,-5,2");
        assert_eq!(s.color_sum(), 2);
        let g = ColoredPerm::new(vec![3, 1, 2], vec![0, 2, 0], 5).unwrap();
        assert_eq!(g.to_string(), "3,z^2*1,2");
    }
}
