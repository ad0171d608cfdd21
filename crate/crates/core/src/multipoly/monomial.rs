use std::cmp::Ordering;
use std::fmt;

use super::var::VarId;

/// A power product, stored as `(variable, exponent)` pairs sorted by variable
/// with every exponent positive.
///
/// `Ord` is the canonical term order used for printing: higher total degree
/// first, then lexicographic with `x1 > x2 > ... > y1 > ... > q1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn pow_of(v: VarId, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable_by_key(|&(var, _)| var);
        let mut out: Vec<(VarId, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, le)) if *last == var => *le += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(var, _)| var)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Lowers the exponent of `v` by one, returning the old exponent.
    pub fn decrement(&self, v: VarId) -> Option<(u32, Monomial)> {
        let pos = self.0.binary_search_by_key(&v, |&(var, _)| var).ok()?;
        let e = self.0[pos].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(pos);
        } else {
            out[pos].1 -= 1;
        }
        Some((e, Monomial(out)))
    }

    /// Removes `v` entirely, returning its exponent (0 if absent).
    pub fn remove(&self, v: VarId) -> (u32, Monomial) {
        match self.0.binary_search_by_key(&v, |&(var, _)| var) {
            Ok(pos) => {
                let mut out = self.0.clone();
                let (_, e) = out.remove(pos);
                (e, Monomial(out))
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                if d > e {
                    return None;
                }
                if e > d {
                    out.push((v, e - d));
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Renames every variable through `f`, merging collisions.
    pub fn map_vars<F: FnMut(VarId) -> VarId>(&self, mut f: F) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Splits into the factor over variables satisfying `keep` and the rest.
    pub fn split<F: Fn(VarId) -> bool>(&self, keep: F) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|&&(v, _)| keep(v));
        (Monomial(a), Monomial(b))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let mut i = 0;
            while i < a.len() && i < b.len() {
                let (va, ea) = a[i];
                let (vb, eb) = b[i];
                if va != vb {
                    // the smaller variable is present in one but absent in the other
                    return va.cmp(&vb);
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i += 1;
            }
            b.len().cmp(&a.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(VarId, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn canonical_order() {
        let x1 = VarId::x(1);
        let x2 = VarId::x(2);
        let y1 = VarId::y(1);
        // degree dominates
        assert!(m(&[(y1, 2)]) < m(&[(x1, 1)]));
        // x1 beats x2 at equal degree
        assert!(m(&[(x1, 1), (y1, 1)]) < m(&[(x2, 1), (y1, 1)]));
        assert!(m(&[(x1, 2)]) < m(&[(x1, 1), (x2, 1)]));
        assert!(m(&[(x2, 1)]) < m(&[(y1, 1)]));
        assert!(m(&[(x1, 1)]) < Monomial::one());
    }

    #[test]
    fn division_and_merge() {
        let a = m(&[(VarId::x(2), 2), (VarId::x(3), 1)]);
        let b = m(&[(VarId::x(2), 1)]);
        assert_eq!(a.checked_div(&b), Some(m(&[(VarId::x(2), 1), (VarId::x(3), 1)])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(m(&[(VarId::y(1), 1)]).checked_div(&m(&[(VarId::x(1), 1)])), None);
        assert_eq!(b.mul(&b), m(&[(VarId::x(2), 2)]));
        assert_eq!(a.to_string(), "x2^2*x3");
    }
}
