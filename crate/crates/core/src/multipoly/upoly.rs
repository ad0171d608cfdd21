use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::mpoly::{int, Coeff};

/// Dense univariate polynomial over Q; `coeffs[k]` is the coefficient of `x^k`.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Coeff>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&k| int(k)).collect())
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(c: I) -> Self {
        Self::new(c.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(k: usize, c: Coeff) -> Self {
        let mut v = vec![Coeff::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading(&self) -> Option<&Coeff> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Coeff) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        self.coeffs
            .iter()
            .rev()
            .fold(Coeff::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dl = d.leading().expect("division by the zero polynomial").clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Coeff::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(l) => self.scale(&(Coeff::one() / l)),
            None => UPoly::zero(),
        }
    }

    /// Divides out a positive rational so the coefficients become coprime
    /// integers; the sign of every coefficient is preserved.
    pub fn primitive_positive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        use num_integer::Integer;
        let lcm_den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm_den.clone())).to_integer())
            .collect();
        let g = nums
            .iter()
            .fold(BigInt::zero(), |acc, n| acc.gcd(n));
        UPoly::from_bigints(nums.into_iter().map(|n| n / &g))
    }

    /// Squarefree part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> UPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Value at x = 1, i.e. the sum of the coefficients.
    pub fn coefficient_sum(&self) -> Coeff {
        self.coeffs.iter().fold(Coeff::zero(), |a, c| a + c)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Coeff::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for UPoly {
            type Output = UPoly;
            fn $f(self, rhs: UPoly) -> UPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&UPoly> for UPoly {
            type Output = UPoly;
            fn $f(self, rhs: &UPoly) -> UPoly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = UPoly::from_ints(&[1, 1]);
        assert_eq!(&a * &a, UPoly::from_ints(&[1, 2, 1]));
        assert_eq!(&(&a * &a) - &(&a * &a), UPoly::zero());
        assert_eq!(UPoly::from_ints(&[1, 4, 1]).derivative(), UPoly::from_ints(&[4, 2]));
        assert_eq!(UPoly::from_ints(&[1, 4, 1]).to_string(), "1 + 4*x + x^2");
        assert_eq!(UPoly::from_ints(&[0, -1, 0, 2]).to_string(), "-x + 2*x^3");
    }

    #[test]
    fn division_and_gcd() {
        let a = UPoly::from_ints(&[1, 1]);
        let b = UPoly::from_ints(&[-2, 1]);
        let p = &(&a * &a) * &b;
        let (q, r) = p.div_rem(&a);
        assert!(r.is_zero());
        assert_eq!(q, &a * &b);
        assert_eq!(p.gcd(&(&a * &UPoly::from_ints(&[5, 1]))), a);
        assert_eq!(p.squarefree().monic(), (&a * &b).monic());
    }

    #[test]
    fn primitive_keeps_signs() {
        let p = UPoly::new(vec![int(-6), BigRational::new(9.into(), 2.into())]);
        assert_eq!(p.primitive_positive(), UPoly::from_ints(&[-4, 3]));
    }
}
