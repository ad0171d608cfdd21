//! Viennot-style valuations: the coefficient of a monomial is the product
//! of its path's step weights, each depending on the step's starting height.

use num_bigint::BigInt;
use num_traits::One;

use super::path::{MotzkinPath, Step};
use crate::multipoly::{int, Coeff, MPoly, VarId};

#[derive(Clone, Debug, PartialEq)]
pub enum WeightScheme {
    /// Every step starting at height `k` weighs `k + 1`.
    A,
    /// `B_n(x, y; q)` with `q` a symbol (`q1`) or a rational value.
    /// NE: `(k+1)(1+q)`, F+: `q + k(1+q)`, F-: `1 + k(1+q)`, SE: `k(1+q)`.
    Bq(Option<Coeff>),
    /// Experimental extension to `G_n^r(x, y; q)`, symbolic `q`, with
    /// `s = q + … + q^{r-1}`, `t = 1 + s`:
    /// NE: `(k+1)t`, F+: `s + kt`, F-: `1 + kt`, SE: `kt`.
    Colored(u8),
}

impl WeightScheme {
    /// Type B at `q = 1`: NE `2(k+1)`, east steps `2k+1` each, SE `2k`.
    pub fn b() -> Self {
        WeightScheme::Bq(Some(Coeff::one()))
    }
}

fn step_weight(step: Step, k: i64, s: &MPoly, t: &MPoly) -> MPoly {
    let kt = t.scale(&int(k));
    match step {
        Step::NE => t.scale(&int(k + 1)),
        Step::EBar => s + &kt,
        Step::EUnder => &MPoly::one() + &kt,
        Step::SE => kt,
    }
}

/// Product of step weights, as a polynomial in `q1` (constant for A and numeric B).
pub fn weight(path: &MotzkinPath, scheme: &WeightScheme) -> MPoly {
    let (s, t) = match scheme {
        WeightScheme::A => {
            let w: i64 = path
                .start_heights()
                .iter()
                .map(|&h| h as i64 + 1)
                .product();
            return MPoly::integer(w);
        }
        WeightScheme::Bq(Some(q)) => (MPoly::constant(q.clone()), MPoly::constant(q + Coeff::one())),
        WeightScheme::Bq(None) => {
            let q = MPoly::var(VarId::q(1));
            (q.clone(), &MPoly::one() + &q)
        }
        WeightScheme::Colored(r) => {
            let q = MPoly::var(VarId::q(1));
            let s: MPoly = (1..*r as u32).map(|e| q.pow(e)).sum();
            let t = &MPoly::one() + &s;
            (s, t)
        }
    };
    path.steps()
        .iter()
        .zip(path.start_heights())
        .fold(MPoly::one(), |acc, (&st, h)| &acc * &step_weight(st, h as i64, &s, &t))
}

/// Integer weight for the numeric schemes.
pub fn integer_weight(path: &MotzkinPath, scheme: &WeightScheme) -> Option<BigInt> {
    let w = weight(path, scheme).as_constant()?;
    w.is_integer().then(|| w.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let ud: MotzkinPath = "UD".parse().unwrap();
        assert_eq!(weight(&ud, &WeightScheme::A), MPoly::integer(2));
        assert_eq!(weight(&ud, &WeightScheme::b()), MPoly::integer(4));
        let e: MotzkinPath = "F+".parse().unwrap();
        assert_eq!(weight(&e, &WeightScheme::A), MPoly::one());
        assert_eq!(weight(&e, &WeightScheme::Bq(None)), MPoly::var(VarId::q(1)));
        let e: MotzkinPath = "F-".parse().unwrap();
        assert_eq!(weight(&e, &WeightScheme::Bq(None)), MPoly::one());
    }
}
