//! The Rayleigh difference `∂_i f ∂_j f - ∂_i∂_j f · f` of a multiaffine
//! polynomial, and a randomized search for a real point where it is negative.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

use super::witness::{StabilityWitness, WitnessKind};
use super::{chunk_seed, SEARCH_CHUNKS};
use crate::error::{Error, Result};
use crate::multipoly::{CompiledPoly, MPoly, VarId};

pub fn rayleigh_delta(p: &MPoly, i: VarId, j: VarId) -> Result<MPoly> {
    if !p.is_multiaffine() {
        return Err(Error::NotMultiaffine(format!("{p}")));
    }
    if i == j {
        return Err(Error::InvalidParameter("the two variables must differ".into()));
    }
    let pi = p.partial(i);
    let pj = p.partial(j);
    let pij = pi.partial(j);
    Ok(&(&pi * &pj) - &(&pij * p))
}

/// Coordinates of grid samples.
const GRID: [i64; 5] = [-2, -1, 0, 1, 2];
/// Random samples are multiples of `1/DYADIC` in `[-RANGE, RANGE]`.
const DYADIC: i64 = 1024;
const RANGE: i64 = 10;

/// Searches `budget` real points for a pair `(i, j)` with negative Rayleigh
/// difference. The first half of each chunk samples the integer grid
/// `{-2..2}^k`, the rest dyadic points in `[-10, 10]`. Negative floating-point
/// values are confirmed exactly before being reported.
pub fn falsify_rayleigh(p: &MPoly, budget: u64, seed: u64) -> Result<Option<StabilityWitness>> {
    if !p.is_multiaffine() {
        return Err(Error::NotMultiaffine(format!("{p}")));
    }
    let vars: Vec<VarId> = p.variables().into_iter().collect();
    let k = vars.len();
    let mut deltas = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let d = rayleigh_delta(p, vars[a], vars[b])?;
            if !d.is_zero() {
                deltas.push((vars[a], vars[b], CompiledPoly::with_vars(&d, vars.clone()), d));
            }
        }
    }
    if deltas.is_empty() || budget == 0 {
        return Ok(None);
    }
    let per_chunk = budget.div_ceil(SEARCH_CHUNKS as u64);
    let found = (0..SEARCH_CHUNKS)
        .into_par_iter()
        .map(|c| {
            let start = c as u64 * per_chunk;
            let count = per_chunk.min(budget.saturating_sub(start));
            search_chunk(&vars, &deltas, count, chunk_seed(seed, c)).map(|w| (c, w))
        })
        .collect::<Vec<_>>();
    Ok(found.into_iter().flatten().min_by_key(|(c, _)| *c).map(|(c, mut w)| {
        w.chunk = Some(c);
        w
    }))
}

type Delta = (VarId, VarId, CompiledPoly, MPoly);

fn search_chunk(vars: &[VarId], deltas: &[Delta], count: u64, seed: u64) -> Option<StabilityWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = vars.len();
    let mut num = vec![0i64; k];
    let mut pt = vec![0.0f64; k];
    for s in 0..count {
        let den = if s < count / 2 {
            num.iter_mut().for_each(|a| *a = GRID[rng.gen_range(0..GRID.len())]);
            1
        } else {
            num.iter_mut().for_each(|a| *a = rng.gen_range(-RANGE * DYADIC..=RANGE * DYADIC));
            DYADIC
        };
        for (x, a) in pt.iter_mut().zip(&num) {
            *x = *a as f64 / den as f64;
        }
        for (i, j, compiled, exact) in deltas {
            let v = compiled.eval_real(&pt);
            if v < 0.0 {
                if let Some(w) = confirm(vars, &num, den, *i, *j, exact) {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn confirm(vars: &[VarId], num: &[i64], den: i64, i: VarId, j: VarId, delta: &MPoly) -> Option<StabilityWitness> {
    let assignment: BTreeMap<VarId, BigRational> = vars
        .iter()
        .zip(num)
        .map(|(&v, &a)| (v, BigRational::new(a.into(), den.into())))
        .collect();
    let value = delta.eval(&assignment).ok()?;
    value.is_negative().then(|| StabilityWitness {
        kind: WitnessKind::RayleighNegative,
        point: vars
            .iter()
            .zip(num)
            .map(|(&v, &a)| (v, Complex64::new(a as f64 / den as f64, 0.0)))
            .collect(),
        value: Complex64::new(value.to_f64().unwrap_or(f64::NEG_INFINITY), 0.0),
        pair: Some((i, j)),
        chunk: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn delta_examples() {
        let (x1, x2) = (VarId::x(1), VarId::x(2));
        assert_eq!(rayleigh_delta(&p("x1 + x2"), x1, x2).unwrap(), MPoly::one());
        assert_eq!(rayleigh_delta(&p("x1*x2"), x1, x2).unwrap(), MPoly::zero());
        assert!(rayleigh_delta(&p("x1^2"), x1, x2).is_err());
        let f = p("1 + x1 + x1*x2 + x1*x2*x3 + 5*(x2 + x3 + x1*x3 + x2*x3)");
        assert_eq!(rayleigh_delta(&f, x1, VarId::x(3)).unwrap(), p("-16*x2"));
    }

    #[test]
    fn search() {
        let f = p("1 + x1 + x1*x2 + x1*x2*x3 + 5*(x2 + x3 + x1*x3 + x2*x3)");
        let w = falsify_rayleigh(&f, 1000, 0).unwrap().expect("witness");
        assert!(w.value.re < 0.0);
        assert!(falsify_rayleigh(&p("(x1 + y1)*(x2 + y2)"), 2000, 0).unwrap().is_none());
        assert_eq!(
            falsify_rayleigh(&f, 500, 7).unwrap(),
            falsify_rayleigh(&f, 500, 7).unwrap()
        );
    }
}
