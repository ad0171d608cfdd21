use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    NE,
    SE,
    /// East step of the first color (`F+`).
    EBar,
    /// East step of the second color (`F-`).
    EUnder,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::NE, Step::SE, Step::EBar, Step::EUnder];

    fn delta(self) -> i32 {
        match self {
            Step::NE => 1,
            Step::SE => -1,
            Step::EBar | Step::EUnder => 0,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Step::NE => "U",
            Step::SE => "D",
            Step::EBar => "F+",
            Step::EUnder => "F-",
        }
    }
}

/// A 2-colored Motzkin path: never below the axis, ending at height 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i32;
        for &s in &steps {
            h += s.delta();
            if h < 0 {
                return Err(Error::InvalidParameter("path dips below the axis".into()));
            }
        }
        if h != 0 {
            return Err(Error::InvalidParameter(format!("path ends at height {h}")));
        }
        Ok(MotzkinPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height at which each step starts.
    pub fn start_heights(&self) -> Vec<u32> {
        let mut h = 0i32;
        self.steps
            .iter()
            .map(|s| {
                let start = h;
                h += s.delta();
                start as u32
            })
            .collect()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let step = match c {
                'U' => Step::NE,
                'D' => Step::SE,
                'F' => match chars.next() {
                    Some('+') => Step::EBar,
                    Some('-') => Step::EUnder,
                    _ => return Err(Error::Parse(format!("bad east step in '{s}'"))),
                },
                _ => return Err(Error::Parse(format!("bad step '{c}' in '{s}'"))),
            };
            steps.push(step);
        }
        MotzkinPath::new(steps)
    }
}

/// All paths of the given length, in lexicographic step order.
pub fn enumerate_paths(len: usize) -> Vec<MotzkinPath> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    extend(len, 0, &mut cur, &mut out);
    out
}

fn extend(len: usize, h: i32, cur: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
    let left = (len - cur.len()) as i32;
    if left == 0 {
        out.push(MotzkinPath { steps: cur.clone() });
        return;
    }
    for s in Step::ALL {
        let nh = h + s.delta();
        if nh < 0 || nh > left - 1 {
            continue;
        }
        cur.push(s);
        extend(len, nh, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let p: MotzkinPath = "UF+D".parse().unwrap();
        assert_eq!(p.steps(), &[Step::NE, Step::EBar, Step::SE]);
        assert_eq!(p.start_heights(), vec![0, 1, 1]);
        assert_eq!(p.to_string(), "UF+D");
        assert!("DU".parse::<MotzkinPath>().is_err());
        assert!("U".parse::<MotzkinPath>().is_err());
    }

    #[test]
    fn counts() {
        let c = [1, 2, 5, 14, 42, 132];
        for (len, &cat) in c.iter().enumerate() {
            assert_eq!(enumerate_paths(len).len(), cat);
        }
    }
}
