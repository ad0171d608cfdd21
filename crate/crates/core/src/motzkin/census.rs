use serde::Serialize;

use super::path::enumerate_paths;
use super::weights::{integer_weight, WeightScheme};
use crate::coxeter::group_order;
use crate::eulerian::{rec_a, rec_g, QMode};

/// `C_n = binom(2n, n) / (n + 1)`, for `n <= 60`.
pub fn catalan(n: usize) -> u128 {
    assert!(n <= 60, "catalan({n}) overflows");
    let mut c = 1u128;
    for k in 0..n as u128 {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CensusFamily {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    pub n: usize,
    pub family: CensusFamily,
    /// Distinct monomials of `A_{n-1}(x, y)` resp. `B_n(x, y; 1)`.
    pub support_count: usize,
    pub catalan: u128,
    /// `C_{n+1}`, the count that type B actually attains.
    pub catalan_next: u128,
    /// Sum of path weights over all paths of length `n - 1` (A) or `n` (B).
    pub weighted_total: u128,
    pub group_order: u128,
}

pub fn catalan_census(family: CensusFamily, n: usize) -> Census {
    assert!(n >= 1, "census needs n >= 1");
    let (support_count, len, scheme, order) = match family {
        CensusFamily::A => (rec_a(n - 1).len(), n - 1, WeightScheme::A, group_order(n, 1)),
        CensusFamily::B => (
            rec_g(n, 2, &QMode::None).len(),
            n,
            WeightScheme::b(),
            group_order(n, 2),
        ),
    };
    let weighted_total = enumerate_paths(len)
        .iter()
        .map(|p| {
            let w = integer_weight(p, &scheme).expect("numeric scheme");
            u128::try_from(w).expect("weight fits")
        })
        .sum();
    Census {
        n,
        family,
        support_count,
        catalan: catalan(n),
        catalan_next: catalan(n + 1),
        weighted_total,
        group_order: order as u128,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c: Vec<u128> = (0..8).map(catalan).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn small_censuses() {
        let a = catalan_census(CensusFamily::A, 3);
        assert_eq!((a.support_count, a.catalan), (5, 5));
        let a = catalan_census(CensusFamily::A, 2);
        assert_eq!(a.weighted_total, 2);
        let b = catalan_census(CensusFamily::B, 2);
        assert_eq!(b.support_count, 5);
        assert_eq!(b.weighted_total, 8);
        assert_eq!(b.catalan_next, 5);
    }
}
