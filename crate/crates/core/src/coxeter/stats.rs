//! Descent-top and ascent-top statistics.
//!
//! A comparison slot between two adjacent letters contributes the larger
//! absolute value to the descent-top set when it decreases and to the
//! ascent-top set when it increases. For colored windows a letter 0 is
//! prepended and comparisons use the colored order.

use std::fmt;

use super::perm::{ColoredPerm, Letter};

/// A set of letters in `0..64`, stored as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet(u64);

impl LetterSet {
    pub fn empty() -> Self {
        LetterSet(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        LetterSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn insert(&mut self, letter: u32) {
        debug_assert!(letter < 64);
        self.0 |= 1 << letter;
    }

    pub fn contains(self, letter: u32) -> bool {
        letter < 64 && self.0 >> letter & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        LetterSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        LetterSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        LetterSet(self.0 & !o.0)
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl FromIterator<u32> for LetterSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = LetterSet::empty();
        for l in iter {
            s.insert(l);
        }
        s
    }
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Statistics of one group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRecord {
    pub dt: LetterSet,
    pub at: LetterSet,
    /// `neg_exp[v - 1]` is the color of the entry whose absolute value is `v`.
    pub neg_exp: Vec<u8>,
    /// Sum of all colors; the number of negative entries when `r = 2`.
    pub n_count: u32,
}

/// Type-A tops of a one-line permutation (no letter prepended).
#[inline]
pub fn tops_a(values: &[u8]) -> (LetterSet, LetterSet) {
    let (mut dt, mut at) = (LetterSet::empty(), LetterSet::empty());
    for w in values.windows(2) {
        if w[0] > w[1] {
            dt.insert(w[0] as u32);
        } else {
            at.insert(w[1] as u32);
        }
    }
    (dt, at)
}

/// Colored tops with the letter 0 prepended.
#[inline]
pub fn tops_colored(sigma: &ColoredPerm) -> (LetterSet, LetterSet) {
    let (mut dt, mut at) = (LetterSet::empty(), LetterSet::empty());
    let mut prev = Letter::ZERO;
    for i in 0..sigma.n() {
        let cur = sigma.letter(i);
        let top = prev.value.max(cur.value) as u32;
        if prev.rank() > cur.rank() {
            dt.insert(top);
        } else {
            at.insert(top);
        }
        prev = cur;
    }
    (dt, at)
}

fn neg_exponents(sigma: &ColoredPerm) -> Vec<u8> {
    let mut e = vec![0u8; sigma.n()];
    for (&v, &c) in sigma.values().iter().zip(sigma.colors()) {
        e[v as usize - 1] = c;
    }
    e
}

/// Type-A statistics of a permutation of `[n + 1]`.
///
/// # Panics
/// If `sigma` carries more than one color.
pub fn stats_a(sigma: &ColoredPerm) -> StatRecord {
    assert_eq!(sigma.r(), 1, "type-A statistics need an uncolored permutation");
    let (dt, at) = tops_a(sigma.values());
    StatRecord {
        dt,
        at,
        neg_exp: vec![0; sigma.n()],
        n_count: 0,
    }
}

/// Type-B / colored statistics (0 prepended, colored order).
pub fn stats_colored(sigma: &ColoredPerm) -> StatRecord {
    let (dt, at) = tops_colored(sigma);
    StatRecord {
        dt,
        at,
        neg_exp: neg_exponents(sigma),
        n_count: sigma.color_sum(),
    }
}

/// Type-A statistics plus the cyclic slot between the last and first letter.
pub fn affine_stats_a(sigma: &ColoredPerm) -> StatRecord {
    let mut s = stats_a(sigma);
    let v = sigma.values();
    let (first, last) = (v[0], v[v.len() - 1]);
    if last > first {
        s.dt.insert(last as u32);
    } else {
        s.at.insert(first as u32);
    }
    s
}

/// Type-B statistics plus the affine slot, which decreases iff `σ_n > 0`.
///
/// # Panics
/// If `sigma` is not a signed permutation.
pub fn affine_stats_c(sigma: &ColoredPerm) -> StatRecord {
    assert_eq!(sigma.r(), 2, "affine type-C statistics need a signed permutation");
    let mut s = stats_colored(sigma);
    let last = sigma.letter(sigma.n() - 1);
    if last.color == 0 {
        s.dt.insert(last.value as u32);
    } else {
        s.at.insert(last.value as u32);
    }
    s
}

/// Number of descents under the colored order with 0 prepended; for `r = 2`
/// this is `|D_B(σ)|`.
#[inline]
pub fn descent_count_colored(sigma: &ColoredPerm) -> u32 {
    let mut prev = 0i32;
    let mut d = 0;
    for i in 0..sigma.n() {
        let cur = sigma.letter(i).rank();
        d += u32::from(prev > cur);
        prev = cur;
    }
    d
}

/// `|D_B(σ)|` with `σ_0 = 0`.
pub fn descent_count_b(sigma: &ColoredPerm) -> u32 {
    assert_eq!(sigma.r(), 2, "type-B descents need a signed permutation");
    descent_count_colored(sigma)
}

/// `|D_D(σ)|` with `σ_0 = -σ_2`.
///
/// # Panics
/// If `sigma` is not signed or has rank below 2.
pub fn descent_count_d(sigma: &ColoredPerm) -> u32 {
    assert!(sigma.r() == 2 && sigma.n() >= 2, "type-D descents need a signed window of length >= 2");
    let w = sigma.signed_window();
    let mut prev = -w[1];
    let mut d = 0;
    for &cur in &w {
        d += u32::from(prev > cur);
        prev = cur;
    }
    d
}

/// `|D_A(σ)|` for a one-line permutation.
pub fn descent_count_a(values: &[u8]) -> u32 {
    values.windows(2).filter(|w| w[0] > w[1]).count() as u32
}

pub fn affine_descent_count_a(values: &[u8]) -> u32 {
    descent_count_a(values) + u32::from(values[values.len() - 1] > values[0])
}

pub fn affine_descent_count_c(sigma: &ColoredPerm) -> u32 {
    descent_count_b(sigma) + u32::from(sigma.colors()[sigma.n() - 1] == 0)
}

/// Positions `i ∈ [n]` with `σ_{i-1} > σ_i` (σ_0 = 0), as a set of positions.
pub fn descent_positions_b(sigma: &ColoredPerm) -> LetterSet {
    let mut prev = 0i32;
    let mut s = LetterSet::empty();
    for i in 0..sigma.n() {
        let cur = sigma.letter(i).rank();
        if prev > cur {
            s.insert(i as u32 + 1);
        }
        prev = cur;
    }
    s
}

/// Tops under the naive type-D extension (`σ_0 = -σ_2`, slots `0..n-1`).
/// Tops may repeat, so the result holds multiplicities: `dt[v - 1]` is how
/// often `v` is a descent top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopCounts {
    pub dt: Vec<u32>,
    pub at: Vec<u32>,
    /// Whether slot 0 (between `σ_0` and `σ_1`) is a descent.
    pub slot0_descent: bool,
}

pub fn stats_d_naive(sigma: &ColoredPerm) -> TopCounts {
    assert!(sigma.r() == 2 && sigma.n() >= 2, "type-D statistics need a signed window of length >= 2");
    let w = sigma.signed_window();
    let n = w.len();
    let mut dt = vec![0u32; n];
    let mut at = vec![0u32; n];
    let mut prev = -w[1];
    let mut slot0_descent = false;
    for (i, &cur) in w.iter().enumerate() {
        let top = prev.unsigned_abs().max(cur.unsigned_abs()) as usize;
        if prev > cur {
            dt[top - 1] += 1;
            if i == 0 {
                slot0_descent = true;
            }
        } else {
            at[top - 1] += 1;
        }
        prev = cur;
    }
    TopCounts { dt, at, slot0_descent }
}
