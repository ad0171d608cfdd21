//! Floating-point evaluation.
//!
//! Values are direct sums of terms in double precision; term counts in this
//! crate are small enough that no compensated summation is used.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::mpoly::MPoly;
use super::var::VarId;
use crate::error::{Error, Result};

/// Evaluates `p` at a complex assignment covering all of its variables.
pub fn eval_complex(p: &MPoly, assignment: &BTreeMap<VarId, Complex64>) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for (m, c) in p.terms() {
        let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        for (v, e) in m.iter() {
            let z = assignment.get(&v).ok_or(Error::MissingAssignment(v))?;
            t *= z.powu(e);
        }
        total += t;
    }
    Ok(total)
}

/// A polynomial flattened for repeated numeric evaluation. Variables are
/// addressed by slot in [`CompiledPoly::vars`].
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    vars: Vec<VarId>,
    terms: Vec<(f64, Vec<(usize, u32)>)>,
}

impl CompiledPoly {
    pub fn new(p: &MPoly) -> Self {
        Self::with_vars(p, p.variables().into_iter().collect())
    }

    /// Compiles against a given variable list, which must contain every variable of `p`.
    pub fn with_vars(p: &MPoly, vars: Vec<VarId>) -> Self {
        let slot = |v: VarId| {
            vars.iter()
                .position(|&w| w == v)
                .expect("variable list covers the polynomial")
        };
        let terms = p
            .terms()
            .map(|(m, c)| {
                (
                    c.to_f64().unwrap_or(f64::NAN),
                    m.iter().map(|(v, e)| (slot(v), e)).collect(),
                )
            })
            .collect();
        CompiledPoly { vars, terms }
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn eval_real(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, m)| m.iter().fold(*c, |acc, &(s, e)| acc * point[s].powi(e as i32)))
            .sum()
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(c, m)| {
                m.iter()
                    .fold(Complex64::new(*c, 0.0), |acc, &(s, e)| acc * point[s].powu(e))
            })
            .sum()
    }

    /// Sum of absolute term values, a scale for relative error estimates.
    pub fn magnitude(&self, point: &[Complex64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, m)| {
                m.iter()
                    .fold(c.abs(), |acc, &(s, e)| acc * point[s].norm().powi(e as i32))
            })
            .sum()
    }

    /// Coefficients (lowest degree first) of the univariate polynomial obtained
    /// by fixing every slot except `slot` at `point`.
    pub fn restrict(&self, slot: usize, point: &[Complex64]) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = Vec::new();
        for (c, m) in &self.terms {
            let mut val = Complex64::new(*c, 0.0);
            let mut deg = 0usize;
            for &(s, e) in m {
                if s == slot {
                    deg = e as usize;
                } else {
                    val *= point[s].powu(e);
                }
            }
            if out.len() <= deg {
                out.resize(deg + 1, Complex64::new(0.0, 0.0));
            }
            out[deg] += val;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let one = MPoly::one();
        let z = Complex64::new(3.0, -2.0);
        let a: BTreeMap<_, _> = [(VarId::x(1), z)].into();
        assert_eq!(eval_complex(&one, &a).unwrap(), Complex64::new(1.0, 0.0));

        let p: MPoly = "x1 + y1".parse().unwrap();
        let i = Complex64::new(0.0, 1.0);
        let a: BTreeMap<_, _> = [(VarId::x(1), i), (VarId::y(1), i)].into();
        assert_eq!(eval_complex(&p, &a).unwrap(), Complex64::new(0.0, 2.0));

        let a: BTreeMap<_, _> = [(VarId::x(1), i)].into();
        assert!(matches!(
            eval_complex(&p, &a),
            Err(Error::MissingAssignment(v)) if v == VarId::y(1)
        ));
    }

    #[test]
    fn compiled_matches_direct() {
        let p: MPoly = "x1^2*y2 - 3*x1 + 1/2".parse().unwrap();
        let c = CompiledPoly::new(&p);
        let pt = [Complex64::new(0.5, 1.0), Complex64::new(-2.0, 0.25)];
        let a: BTreeMap<_, _> = c.vars().iter().copied().zip(pt).collect();
        assert!((c.eval_complex(&pt) - eval_complex(&p, &a).unwrap()).norm() < 1e-12);
        let r = c.restrict(0, &pt);
        assert_eq!(r.len(), 3);
        assert!((r[2] - pt[1]).norm() < 1e-15);
    }
}
