//! Search for zeros with every coordinate in the open upper half-plane.
//!
//! Each sample draws a point in the half-plane, fixes all coordinates but
//! one, and solves the resulting univariate polynomial. A root with positive
//! imaginary part completes a zero of `p` inside the half-plane. Linear
//! restrictions (always the case for multiaffine `p`) are confirmed in exact
//! rational complex arithmetic; higher-degree roots are Newton-refined and
//! accepted on a residual test.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::witness::{StabilityWitness, WitnessKind};
use super::{chunk_seed, SEARCH_CHUNKS};
use crate::multipoly::{CompiledPoly, MPoly, VarId};

/// Witnesses must satisfy `|p(z)| < ZERO_TOL`.
pub const ZERO_TOL: f64 = 1e-6;
/// Target residual after refinement, relative to the term magnitude.
pub const REFINE_TOL: f64 = 1e-9;
/// A root counts as inside the half-plane only if `Im z > IM_MARGIN (1 + |z|)`.
pub const IM_MARGIN: f64 = 1e-8;

pub type ExactComplex = Complex<BigRational>;

pub fn exact(z: Complex64) -> ExactComplex {
    Complex::new(
        BigRational::from_float(z.re).expect("finite"),
        BigRational::from_float(z.im).expect("finite"),
    )
}

pub fn to_f64(z: &ExactComplex) -> Complex64 {
    Complex64::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
}

fn pow(z: &ExactComplex, e: u32) -> ExactComplex {
    let mut out = Complex::new(BigRational::from_integer(1.into()), BigRational::zero());
    for _ in 0..e {
        out = &out * z;
    }
    out
}

/// Exact value of `p` at a complex rational point.
pub fn eval_exact(p: &MPoly, point: &BTreeMap<VarId, ExactComplex>) -> Option<ExactComplex> {
    let mut total = Complex::new(BigRational::zero(), BigRational::zero());
    for (m, c) in p.terms() {
        let mut t = Complex::new(c.clone(), BigRational::zero());
        for (v, e) in m.iter() {
            t = &t * &pow(point.get(&v)?, e);
        }
        total = &total + &t;
    }
    Some(total)
}

/// Univariate coefficients in `var`, other variables fixed exactly.
fn restrict_exact(p: &MPoly, var: VarId, point: &BTreeMap<VarId, ExactComplex>) -> Vec<ExactComplex> {
    let mut out: Vec<ExactComplex> = Vec::new();
    for (m, c) in p.terms() {
        let (d, rest) = m.remove(var);
        let mut t = Complex::new(c.clone(), BigRational::zero());
        for (v, e) in rest.iter() {
            t = &t * &pow(&point[&v], e);
        }
        let d = d as usize;
        if out.len() <= d {
            out.resize(d + 1, Complex::new(BigRational::zero(), BigRational::zero()));
        }
        out[d] = &out[d] + &t;
    }
    out
}

/// Roots of `c[0] + c[1] z + …`, closed form up to degree 2 and
/// Durand–Kerner iteration beyond.
pub fn roots(c: &[Complex64]) -> Vec<Complex64> {
    let mut c = c.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    match c.len() {
        0 | 1 => vec![],
        2 => vec![-c[0] / c[1]],
        3 => {
            let disc = (c[1] * c[1] - 4.0 * c[2] * c[0]).sqrt();
            // pick the sign that avoids cancellation
            let q = if (c[1].conj() * disc).re >= 0.0 {
                -0.5 * (c[1] + disc)
            } else {
                -0.5 * (c[1] - disc)
            };
            if q.norm() == 0.0 {
                vec![Complex64::new(0.0, 0.0); 2]
            } else {
                vec![q / c[2], c[0] / q]
            }
        }
        _ => durand_kerner(&c),
    }
}

fn durand_kerner(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let radius = 1.0 + monic[..d].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-300, 0.0);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm() / (1.0 + z[i].norm()));
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

fn newton(c: &[Complex64], mut z: Complex64) -> Complex64 {
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let deriv: Vec<Complex64> = c.iter().enumerate().skip(1).map(|(k, a)| a * k as f64).collect();
    let evald = |z: Complex64| deriv.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    for _ in 0..50 {
        let d = evald(z);
        if d.norm() == 0.0 {
            break;
        }
        let step = eval(z) / d;
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

fn in_upper(z: Complex64) -> bool {
    z.im > IM_MARGIN * (1.0 + z.norm())
}

/// Searches for a zero of `p` in the open upper half-plane, trying the
/// `preloaded` points first, then `budget` random samples split over
/// deterministic chunks; the lowest chunk with a witness wins.
pub fn falsify_halfplane(
    p: &MPoly,
    budget: u64,
    seed: u64,
    preloaded: &[Vec<(VarId, Complex64)>],
) -> Option<StabilityWitness> {
    let vars: Vec<VarId> = p.variables().into_iter().collect();
    if vars.is_empty() || p.is_zero() {
        return None;
    }
    let compiled = CompiledPoly::with_vars(p, vars.clone());
    for pre in preloaded {
        let pt: Option<Vec<Complex64>> = vars
            .iter()
            .map(|v| pre.iter().find(|(w, _)| w == v).map(|(_, z)| *z))
            .collect();
        let Some(pt) = pt else { continue };
        let value = compiled.eval_complex(&pt);
        if pt.iter().all(|z| z.im > 0.0) && value.norm() < ZERO_TOL {
            return Some(StabilityWitness {
                kind: WitnessKind::HalfPlaneZero,
                point: vars.iter().copied().zip(pt).collect(),
                value,
                pair: None,
                chunk: None,
            });
        }
    }
    if budget == 0 {
        return None;
    }
    let per_chunk = budget.div_ceil(SEARCH_CHUNKS as u64);
    let found: Vec<_> = (0..SEARCH_CHUNKS)
        .into_par_iter()
        .map(|c| {
            let start = c as u64 * per_chunk;
            let count = per_chunk.min(budget.saturating_sub(start));
            search_chunk(p, &vars, &compiled, count, chunk_seed(seed, c)).map(|w| (c, w))
        })
        .collect();
    found.into_iter().flatten().min_by_key(|(c, _)| *c).map(|(c, mut w)| {
        w.chunk = Some(c);
        w
    })
}

fn sample(rng: &mut ChaCha8Rng) -> Complex64 {
    // real parts spread over [-6, 6], imaginary parts log-uniform in [1e-3, 10]
    let re = rng.gen_range(-6.0..6.0);
    let im = 10f64.powf(rng.gen_range(-3.0..1.0));
    Complex64::new(re, im)
}

fn search_chunk(
    p: &MPoly,
    vars: &[VarId],
    compiled: &CompiledPoly,
    count: u64,
    seed: u64,
) -> Option<StabilityWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = vars.len();
    let mut pt = vec![Complex64::new(0.0, 0.0); k];
    for _ in 0..count {
        pt.iter_mut().for_each(|z| *z = sample(&mut rng));
        let slot = rng.gen_range(0..k);
        let coeffs = compiled.restrict(slot, &pt);
        let linear = coeffs.len() == 2;
        for root in roots(&coeffs) {
            if !in_upper(root) {
                continue;
            }
            let root = if linear { root } else { newton(&coeffs, root) };
            if !in_upper(root) {
                continue;
            }
            pt[slot] = root;
            let value = compiled.eval_complex(&pt);
            let ok = if linear {
                confirm_linear(p, vars, &pt, slot)
            } else {
                value.norm() < ZERO_TOL && value.norm() <= REFINE_TOL * compiled.magnitude(&pt).max(1.0)
            };
            if ok {
                return Some(StabilityWitness {
                    kind: WitnessKind::HalfPlaneZero,
                    point: vars.iter().copied().zip(pt.iter().copied()).collect(),
                    value,
                    pair: None,
                    chunk: None,
                });
            }
        }
    }
    None
}

/// Exact check that the linear restriction has its root strictly inside the
/// upper half-plane at the sampled (exactly represented) other coordinates.
fn confirm_linear(p: &MPoly, vars: &[VarId], pt: &[Complex64], slot: usize) -> bool {
    let point: BTreeMap<VarId, ExactComplex> = vars
        .iter()
        .zip(pt)
        .enumerate()
        .filter(|(i, _)| *i != slot)
        .map(|(_, (&v, &z))| (v, exact(z)))
        .collect();
    let c = restrict_exact(p, vars[slot], &point);
    if c.len() != 2 || c[1].is_zero() {
        return false;
    }
    // root = -c0/c1, Im(root) = -Im(c0 * conj(c1)) / |c1|^2
    let num = &c[0] * &c[1].conj();
    (-num.im).is_positive()
}

/// The non-stability point `y2 = y3 = x3 = 2 + i`, `x2 = (-1 + 2i)(2i + √3)`.
pub fn d3star_point() -> Vec<(VarId, Complex64)> {
    let w = Complex64::new(2.0, 1.0);
    let x2 = Complex64::new(-1.0, 2.0) * Complex64::new(3f64.sqrt(), 2.0);
    vec![(VarId::x(2), x2), (VarId::x(3), w), (VarId::y(2), w), (VarId::y(3), w)]
}

/// `|p|` at the point above with `√3` replaced by a rational within
/// `2^-bits`, evaluated exactly.
pub fn d3star_high_precision(p: &MPoly, bits: u32) -> f64 {
    let scale = BigInt::from(1) << bits;
    let s = BigRational::new((BigInt::from(3) * &scale * &scale).sqrt(), scale);
    let r = |n: i64| BigRational::from_integer(n.into());
    let w = Complex::new(r(2), r(1));
    let x2 = &Complex::new(r(-1), r(2)) * &Complex::new(s, r(2));
    let point: BTreeMap<VarId, ExactComplex> = [
        (VarId::x(2), x2),
        (VarId::x(3), w.clone()),
        (VarId::y(2), w.clone()),
        (VarId::y(3), w),
    ]
    .into_iter()
    .collect();
    eval_exact(p, &point).map_or(f64::NAN, |v| to_f64(&v).norm())
}
