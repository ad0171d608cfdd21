use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, RangeInclusive, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::monomial::Monomial;
use super::upoly::UPoly;
use super::var::{Axis, VarId};
use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by [`Monomial`] in canonical order and no
/// stored coefficient is zero, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), Coeff::one())
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Sums an arbitrary stream of terms, merging equal monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(iter: I) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(e) => *e += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Product of variables, e.g. `x_n * y_n`.
    pub fn monomial_of(vars: &[VarId]) -> Self {
        Self::term(Monomial::from_pairs(vars.iter().map(|&v| (v, 1))), Coeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next()
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: VarId) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            m.decrement(v).map(|(e, rest)| (rest, c * int(e as i64)))
        }))
    }

    /// `sum_{i in range} (d/dx_i + d/dy_i)`. Variables outside the range, and
    /// indices in the range that do not occur, contribute nothing.
    pub fn del(&self, range: RangeInclusive<u32>) -> MPoly {
        let mut out: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in &self.terms {
            for (v, e) in m.iter() {
                if v.axis() == Axis::Q || !range.contains(&v.index()) {
                    continue;
                }
                let (_, rest) = m.decrement(v).expect("variable occurs in monomial");
                let add = c * int(e as i64);
                match out.get_mut(&rest) {
                    Some(acc) => *acc += add,
                    None => {
                        out.insert(rest, add);
                    }
                }
            }
        }
        MPoly {
            terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Substitutes `v := a`.
    pub fn specialize(&self, v: VarId, a: &Coeff) -> MPoly {
        self.substitute(|w| (w == v).then(|| a.clone()))
    }

    /// Substitutes a value for every variable on which `value` returns `Some`.
    pub fn substitute<F: Fn(VarId) -> Option<Coeff>>(&self, value: F) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for (v, e) in m.iter() {
                match value(v) {
                    Some(a) => coeff *= Pow::pow(&a, e),
                    None => kept.push((v, e)),
                }
            }
            (Monomial::from_pairs(kept), coeff)
        }))
    }

    /// Substitutes `a` for every variable of `axis`.
    pub fn specialize_axis(&self, axis: Axis, a: &Coeff) -> MPoly {
        self.substitute(|v| (v.axis() == axis).then(|| a.clone()))
    }

    /// Identifies every variable of `axis` with the index-1 variable of that axis.
    pub fn diagonalize(&self, axis: Axis) -> MPoly {
        self.rename(|v| if v.axis() == axis { VarId::of(axis, 1) } else { v })
    }

    /// Renames variables through `f`; colliding monomials are merged.
    pub fn rename<F: Fn(VarId) -> VarId>(&self, f: F) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Adds `delta` to every index; fails if any index would drop below 1.
    pub fn shift_indices(&self, delta: i64) -> Result<MPoly> {
        if delta == 0 {
            return Ok(self.clone());
        }
        for v in self.variables() {
            if v.index() as i64 + delta < 1 {
                return Err(Error::IndexUnderflow { var: v, delta });
            }
        }
        Ok(self.rename(|v| VarId::of(v.axis(), (v.index() as i64 + delta) as u32)))
    }

    /// True iff every exponent is at most one.
    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|m| m.max_exponent() <= 1)
    }

    /// Multiaffineness ignoring the listed axes (e.g. treating `q` as a parameter).
    pub fn is_multiaffine_in(&self, axes: &[Axis]) -> bool {
        self.terms.keys().all(|m| {
            m.iter()
                .all(|(v, e)| e <= 1 || !axes.contains(&v.axis()))
        })
    }

    /// Exact evaluation at a full rational assignment.
    pub fn eval(&self, assignment: &BTreeMap<VarId, Coeff>) -> Result<Coeff> {
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let a = assignment.get(&v).ok_or(Error::MissingAssignment(v))?;
                t *= Pow::pow(a, e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Groups terms by their part over variables satisfying `outer`; the value
    /// is the coefficient polynomial in the remaining variables.
    pub fn collect_by<F: Fn(VarId) -> bool>(&self, outer: F) -> BTreeMap<Monomial, MPoly> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, Coeff)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (o, inner) = m.split(&outer);
            groups.entry(o).or_default().push((inner, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, v)| (k, MPoly::from_terms(v)))
            .collect()
    }

    /// Exact division; errors unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly> {
        let (lead_m, lead_c) = divisor.leading().ok_or(Error::InexactDivision)?;
        let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.checked_div(&lead_m).ok_or(Error::InexactDivision)?;
            let qc = c / &lead_c;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.push((qm, qc));
        }
        Ok(MPoly::from_terms(quot))
    }

    /// Converts to a dense univariate polynomial in `v`; any other variable is an error.
    pub fn to_upoly(&self, v: VarId) -> Result<UPoly> {
        let mut coeffs: Vec<Coeff> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.remove(v);
            if let Some((w, _)) = rest.iter().next() {
                return Err(Error::NotUnivariate(w));
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Coeff::zero());
            }
            coeffs[e] += c;
        }
        Ok(UPoly::new(coeffs))
    }

    /// Specializes all `y := 1`, identifies all `x` variables, and returns the
    /// result as a polynomial in that single variable.
    pub fn univariate(&self) -> Result<UPoly> {
        self.specialize_axis(Axis::Y, &Coeff::one())
            .diagonalize(Axis::X)
            .to_upoly(VarId::x(1))
    }

    /// Identifies every variable of every axis with one variable.
    pub fn diagonalize_all(&self) -> UPoly {
        self.rename(|_| VarId::x(1))
            .to_upoly(VarId::x(1))
            .expect("only x1 remains")
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Largest absolute coefficient numerator, used for reporting.
    pub fn max_abs_coeff(&self) -> Coeff {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Coeff::zero)
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(e) => {
                    *e += c;
                    if e.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        MPoly { terms }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        MPoly::from_terms(self.terms.iter().flat_map(|(a, ca)| {
            rhs.terms.iter().map(move |(b, cb)| (a.mul(b), ca * cb))
        }))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        MPoly::from_terms(iter.flat_map(|p| p.terms.into_iter()))
    }
}

impl From<VarId> for MPoly {
    fn from(v: VarId) -> Self {
        MPoly::var(v)
    }
}
