//! Deterministic enumeration of `G(n, r)` and `D_n`.
//!
//! Order is lexicographic on the value window, then on the color vector
//! (first position most significant). The permutation part can be split into
//! index ranges so chunks are consumed independently.

use std::ops::Range;

use rayon::prelude::*;

use super::perm::ColoredPerm;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Group order `r^n * n!`.
pub fn group_order(n: usize, r: u8) -> u64 {
    (r as u64).pow(n as u32) * factorial(n)
}

/// The `k`-th permutation of `1..=n` in lexicographic order.
pub fn nth_permutation(n: usize, mut k: u64) -> Vec<u8> {
    let mut pool: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (k / f) as usize;
        k %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Advances to the next permutation in lexicographic order; false at the last one.
pub fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Which elements of `G(n, r)` to visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subset {
    All,
    /// Signed permutations with an even number of negative entries (`r = 2`).
    EvenNegatives,
}

/// Calls `f` on every element whose permutation part has lexicographic index in
/// `perms`, reusing one buffer.
pub fn visit_range<F: FnMut(&ColoredPerm)>(
    n: usize,
    r: u8,
    subset: Subset,
    perms: Range<u64>,
    mut f: F,
) {
    if perms.is_empty() {
        return;
    }
    let mut sigma = ColoredPerm::from_parts_unchecked(nth_permutation(n, perms.start), vec![0; n], r);
    for k in perms.clone() {
        if k > perms.start && !next_permutation(sigma.values_mut()) {
            break;
        }
        sigma.colors_mut().iter_mut().for_each(|c| *c = 0);
        loop {
            if subset == Subset::All || sigma.color_sum().is_multiple_of(2) {
                f(&sigma);
            }
            if !advance_colors(sigma.colors_mut(), r) {
                break;
            }
        }
    }
}

fn advance_colors(colors: &mut [u8], r: u8) -> bool {
    for c in colors.iter_mut().rev() {
        *c += 1;
        if *c < r {
            return true;
        }
        *c = 0;
    }
    false
}

/// All `r^n * n!` elements of `G(n, r)` in canonical order.
pub fn enumerate(n: usize, r: u8) -> impl Iterator<Item = ColoredPerm> {
    collect_range(n, r, Subset::All).into_iter()
}

/// The `2^(n-1) * n!` elements of `D_n`.
pub fn enumerate_d(n: usize) -> impl Iterator<Item = ColoredPerm> {
    collect_range(n, 2, Subset::EvenNegatives).into_iter()
}

fn collect_range(n: usize, r: u8, subset: Subset) -> Vec<ColoredPerm> {
    let mut out = Vec::new();
    visit_range(n, r, subset, 0..factorial(n), |s| out.push(s.clone()));
    out
}

/// Parallel fold over the group: each chunk of permutations is folded into
/// its own accumulator and the accumulators are merged. The result is
/// independent of chunking whenever `merge` is associative and commutative.
pub fn par_fold<T, I, F, M>(n: usize, r: u8, subset: Subset, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &ColoredPerm) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let total = factorial(n);
    let chunks = total.min(256);
    let size = total.div_ceil(chunks);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * size;
            let end = ((c + 1) * size).min(total);
            let mut acc = init();
            visit_range(n, r, subset, start..end, |s| fold(&mut acc, s));
            acc
        })
        .reduce(&init, &merge)
}
