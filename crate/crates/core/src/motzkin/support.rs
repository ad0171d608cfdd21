use serde::Serialize;

use super::path::{MotzkinPath, Step};
use crate::coxeter::LetterSet;
use crate::error::{Error, Result};

/// How letters map to path steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// Letters `[n]` of `A_{n-1}`; letter 1 is always a valley and maps to no
    /// step, letter `j >= 2` to step `j - 1`. Paths have length `n - 1`.
    A,
    /// Letters `[n]` of `B_n`; letter `j` maps to step `j`, so the slot
    /// before the first entry plays the role of letter 1 in type A.
    B,
}

/// A candidate `(DT, AT)` pair on the letters `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPattern {
    pub n: usize,
    pub dt: LetterSet,
    pub at: LetterSet,
}

impl SupportPattern {
    pub fn new(n: usize, dt: LetterSet, at: LetterSet) -> Result<Self> {
        let all = full(n);
        if dt.difference(all).bits() != 0 || at.difference(all).bits() != 0 {
            return Err(Error::InvalidSupport(format!("letters outside 1..={n}")));
        }
        Ok(SupportPattern { n, dt, at })
    }

    pub fn peaks(&self) -> LetterSet {
        self.dt.intersection(self.at)
    }

    pub fn valleys(&self) -> LetterSet {
        full(self.n).difference(self.dt.union(self.at))
    }

    pub fn double_descents(&self) -> LetterSet {
        self.dt.difference(self.at)
    }

    pub fn double_ascents(&self) -> LetterSet {
        self.at.difference(self.dt)
    }

    fn step_of(&self, j: u32) -> Step {
        if self.peaks().contains(j) {
            Step::SE
        } else if self.valleys().contains(j) {
            Step::NE
        } else if self.dt.contains(j) {
            Step::EBar
        } else {
            Step::EUnder
        }
    }
}

fn full(n: usize) -> LetterSet {
    (1..=n as u32).collect()
}

/// Whether `sp` is the (DT, AT) pair of some group element: every prefix
/// `[i]` has more valleys than peaks (type A) or at least as many (type B),
/// and the totals close the path (`|V| = |P| + 1`, resp. `|V| = |P|`).
///
/// The prefix inequality alone is not sufficient: for `n = 2`,
/// `DT = AT = ∅` satisfies it, yet no permutation has that pair.
pub fn support_valid(sp: &SupportPattern, conv: Convention) -> bool {
    let offset = match conv {
        Convention::A => 1,
        Convention::B => 0,
    };
    let (v, p) = (sp.valleys(), sp.peaks());
    let mut h = 0i32;
    for i in 1..=sp.n as u32 {
        h += i32::from(v.contains(i)) - i32::from(p.contains(i));
        if h < offset {
            return false;
        }
    }
    h == offset
}

pub fn path_from_support(sp: &SupportPattern, conv: Convention) -> Result<MotzkinPath> {
    if !support_valid(sp, conv) {
        return Err(Error::InvalidSupport(format!(
            "n = {}, DT = {}, AT = {}",
            sp.n, sp.dt, sp.at
        )));
    }
    let first = match conv {
        Convention::A => 2,
        Convention::B => 1,
    };
    MotzkinPath::new((first..=sp.n as u32).map(|j| sp.step_of(j)).collect())
}

pub fn support_from_path(path: &MotzkinPath, conv: Convention) -> SupportPattern {
    let (n, first) = match conv {
        Convention::A => (path.len() + 1, 2),
        Convention::B => (path.len(), 1),
    };
    let (mut dt, mut at) = (LetterSet::empty(), LetterSet::empty());
    for (k, &s) in path.steps().iter().enumerate() {
        let j = first + k as u32;
        match s {
            Step::SE => {
                dt.insert(j);
                at.insert(j);
            }
            Step::NE => {}
            Step::EBar => dt.insert(j),
            Step::EUnder => at.insert(j),
        }
    }
    SupportPattern { n, dt, at }
}

/// All `(DT, AT)` pairs of subsets of `[n]`.
pub fn all_patterns(n: usize) -> impl Iterator<Item = SupportPattern> {
    let m = 1u64 << n;
    (0..m * m).map(move |k| SupportPattern {
        n,
        dt: LetterSet::from_bits((k % m) << 1),
        at: LetterSet::from_bits((k / m) << 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, dt: &[u32], at: &[u32]) -> SupportPattern {
        SupportPattern::new(n, dt.iter().copied().collect(), at.iter().copied().collect()).unwrap()
    }

    #[test]
    fn validity() {
        assert!(support_valid(&sp(3, &[3], &[3]), Convention::A));
        assert!(!support_valid(&sp(3, &[1], &[]), Convention::A));
        assert!(support_valid(&sp(1, &[], &[]), Convention::A));
        assert!(!support_valid(&sp(2, &[], &[]), Convention::A));
        assert!(SupportPattern::new(2, [3].into_iter().collect(), LetterSet::empty()).is_err());
    }

    #[test]
    fn paths() {
        let p = path_from_support(&sp(3, &[3], &[3]), Convention::A).unwrap();
        assert_eq!(p.steps(), &[Step::NE, Step::SE]);
        let p = path_from_support(&sp(2, &[2], &[]), Convention::A).unwrap();
        assert_eq!(p.steps(), &[Step::EBar]);
        let p = path_from_support(&sp(2, &[2], &[2]), Convention::B).unwrap();
        assert_eq!(p.steps(), &[Step::NE, Step::SE]);
    }

    #[test]
    fn round_trip() {
        for conv in [Convention::A, Convention::B] {
            for n in 1..=6 {
                for s in all_patterns(n).filter(|s| support_valid(s, conv)) {
                    let p = path_from_support(&s, conv).unwrap();
                    assert_eq!(support_from_path(&p, conv), s);
                }
            }
        }
    }
}
