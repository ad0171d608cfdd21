//! Generating polynomials by enumerating group elements.

use std::collections::HashMap;

use num_traits::{One, Pow};

use super::family::{Family, FamilySpec, QMode};
use crate::coxeter::{
    affine_stats_a, affine_stats_c, group_order, par_fold, stats_a, stats_colored, stats_d_naive,
    descent_count_d, ColoredPerm, LetterSet, StatRecord, Subset,
};
use crate::error::{Error, Result};
use crate::multipoly::{int, Coeff, MPoly, Monomial, UPoly, VarId};

/// Refuse enumerations beyond this many elements.
pub const MAX_ELEMENTS: u64 = 2_000_000_000;

type Key = (u64, u64, u64);
type Histogram = HashMap<Key, u64>;

fn merge(mut a: Histogram, b: Histogram) -> Histogram {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Colors packed four bits per value (value 1 in the lowest nibble).
fn pack_colors(neg_exp: &[u8]) -> u64 {
    neg_exp
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &c)| acc | (c as u64) << (4 * i))
}

fn q_key(s: &StatRecord, q: &QMode) -> u64 {
    match q {
        QMode::None => 0,
        QMode::Single | QMode::Value(_) => s.n_count as u64,
        QMode::Multi => pack_colors(&s.neg_exp),
    }
}

fn set_monomial(dt: LetterSet, at: LetterSet) -> Vec<(VarId, u32)> {
    dt.iter()
        .map(|l| (VarId::x(l), 1))
        .chain(at.iter().map(|l| (VarId::y(l), 1)))
        .collect()
}

fn q_factor(key: u64, q: &QMode, n: usize) -> (Vec<(VarId, u32)>, Coeff) {
    match q {
        QMode::None => (vec![], Coeff::one()),
        QMode::Single => {
            let e = key as u32;
            (if e > 0 { vec![(VarId::q(1), e)] } else { vec![] }, Coeff::one())
        }
        QMode::Value(c) => (vec![], Pow::pow(c, key as u32)),
        QMode::Multi => {
            let pairs = (0..n)
                .filter_map(|i| {
                    let e = (key >> (4 * i) & 0xf) as u32;
                    (e > 0).then(|| (VarId::q(i as u32 + 1), e))
                })
                .collect();
            (pairs, Coeff::one())
        }
    }
}

fn check_size(n: usize, r: u8) -> Result<()> {
    let order = (r as u128).pow(n as u32) * (1..=n as u128).product::<u128>();
    if order > MAX_ELEMENTS as u128 {
        return Err(Error::InvalidParameter(format!(
            "enumerating {order} elements is out of reach"
        )));
    }
    Ok(())
}

/// Exact generating polynomial by enumeration.
///
/// `D` enumerates `D_n` with the type-B statistics (`σ_0 = 0`); this is not the
/// polynomial built from the Stembridge identity, which has no element-wise
/// model. `DStem` enumerates type-D descents and returns `D_n(x)` in `x1`.
/// `AffB` has no element-wise model and is rejected.
pub fn brute_force(spec: &FamilySpec) -> Result<MPoly> {
    let n = spec.n;
    match spec.family {
        Family::A => {
            check_size(n + 1, 1)?;
            Ok(collect(n + 1, 1, Subset::All, &QMode::None, stats_a))
        }
        Family::AffA => {
            check_size(n + 1, 1)?;
            Ok(collect(n + 1, 1, Subset::All, &QMode::None, affine_stats_a))
        }
        Family::B | Family::G => {
            if spec.q == QMode::Multi && (n > 16 || spec.r > 16) {
                return Err(Error::InvalidParameter("multi-q enumeration needs n, r <= 16".into()));
            }
            check_size(n, spec.r)?;
            Ok(collect(n, spec.r, Subset::All, &spec.q, stats_colored))
        }
        Family::D => {
            check_size(n, 2)?;
            Ok(collect(n, 2, Subset::EvenNegatives, &spec.q, stats_colored))
        }
        Family::AffC => {
            check_size(n, 2)?;
            Ok(collect(n, 2, Subset::All, &QMode::None, affine_stats_c))
        }
        Family::DStar => {
            check_size(n, 2)?;
            Ok(d_star(n))
        }
        Family::DStem => {
            check_size(n, 2)?;
            Ok(upoly_in_x1(&descent_poly(n, 2, Subset::EvenNegatives, descent_count_d)))
        }
        Family::AffB => Err(Error::Unsupported(
            "affB has no element-wise statistic; it is defined only through affine C and B".into(),
        )),
    }
}

fn collect<S>(n: usize, r: u8, subset: Subset, q: &QMode, stats: S) -> MPoly
where
    S: Fn(&ColoredPerm) -> StatRecord + Sync + Send,
{
    let hist = par_fold(
        n,
        r,
        subset,
        Histogram::new,
        |acc, sigma| {
            let s = stats(sigma);
            *acc.entry((s.dt.bits(), s.at.bits(), q_key(&s, q))).or_insert(0) += 1;
        },
        merge,
    );
    MPoly::from_terms(hist.into_iter().map(|((dt, at, qk), count)| {
        let mut pairs = set_monomial(LetterSet::from_bits(dt), LetterSet::from_bits(at));
        let (qp, qc) = q_factor(qk, q, n);
        pairs.extend(qp);
        (Monomial::from_pairs(pairs), qc * int(count as i64))
    }))
}

fn d_star(n: usize) -> MPoly {
    let pack = |counts: &[u32]| {
        counts
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &c)| acc | (c as u64) << (4 * i))
    };
    let hist = par_fold(
        n,
        2,
        Subset::EvenNegatives,
        Histogram::new,
        |acc, sigma| {
            let t = stats_d_naive(sigma);
            *acc.entry((pack(&t.dt), pack(&t.at), 0)).or_insert(0) += 1;
        },
        merge,
    );
    let unpack = |bits: u64, var: fn(u32) -> VarId| -> Vec<(VarId, u32)> {
        (0..n)
            .filter_map(|i| {
                let e = (bits >> (4 * i) & 0xf) as u32;
                (e > 0).then(|| (var(i as u32 + 1), e))
            })
            .collect()
    };
    MPoly::from_terms(hist.into_iter().map(|((dt, at, _), count)| {
        let mut pairs = unpack(dt, VarId::x);
        pairs.extend(unpack(at, VarId::y));
        (Monomial::from_pairs(pairs), int(count as i64))
    }))
}

pub(crate) fn upoly_in_x1(p: &UPoly) -> MPoly {
    MPoly::from_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::pow_of(VarId::x(1), k as u32), c.clone())),
    )
}

/// `Σ x^{count(σ)}` over the chosen elements of `G(n, r)`.
pub fn descent_poly<F>(n: usize, r: u8, subset: Subset, count: F) -> UPoly
where
    F: Fn(&ColoredPerm) -> u32 + Sync + Send,
{
    let hist = par_fold(
        n,
        r,
        subset,
        || vec![0u64; n + 2],
        |acc, sigma| acc[count(sigma) as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    UPoly::from_ints(&hist.iter().map(|&c| c as i64).collect::<Vec<_>>())
}

/// Number of elements enumerated by `brute_force(spec)`.
pub fn element_count(spec: &FamilySpec) -> u64 {
    match spec.family {
        Family::A | Family::AffA => group_order(spec.n + 1, 1),
        Family::D | Family::DStar | Family::DStem => group_order(spec.n, 2) / 2,
        _ => group_order(spec.n, spec.r),
    }
}
