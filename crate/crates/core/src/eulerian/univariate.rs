//! Univariate descent polynomials by direct enumeration, kept independent of
//! the multivariate constructions.

use super::brute::descent_poly;
use crate::coxeter::{
    affine_descent_count_a, affine_descent_count_c, descent_count_a, descent_count_b,
    descent_count_colored, descent_count_d, Subset,
};
use crate::multipoly::UPoly;

/// `A_n(x)` over `Sym(n + 1)`.
pub fn a_poly(n: usize) -> UPoly {
    if n == 0 {
        return UPoly::one();
    }
    descent_poly(n + 1, 1, Subset::All, |s| descent_count_a(s.values()))
}

/// `B_n(x)`.
pub fn b_poly(n: usize) -> UPoly {
    if n == 0 {
        return UPoly::one();
    }
    descent_poly(n, 2, Subset::All, descent_count_b)
}

/// `D_n(x)` with `σ_0 = -σ_2`; `n >= 2`.
pub fn d_poly(n: usize) -> UPoly {
    descent_poly(n, 2, Subset::EvenNegatives, descent_count_d)
}

/// `G_n^r(x)` under the colored order.
pub fn g_poly(n: usize, r: u8) -> UPoly {
    descent_poly(n, r, Subset::All, descent_count_colored)
}

/// `Ã_n(x)` over `Sym(n + 1)`.
pub fn affine_a_poly(n: usize) -> UPoly {
    descent_poly(n + 1, 1, Subset::All, |s| affine_descent_count_a(s.values()))
}

/// `C̃_n(x)`.
pub fn affine_c_poly(n: usize) -> UPoly {
    descent_poly(n, 2, Subset::All, affine_descent_count_c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(a_poly(2), UPoly::from_ints(&[1, 4, 1]));
        assert_eq!(a_poly(3), UPoly::from_ints(&[1, 11, 11, 1]));
        assert_eq!(b_poly(2), UPoly::from_ints(&[1, 6, 1]));
        assert_eq!(d_poly(2), UPoly::from_ints(&[1, 2, 1]));
        assert_eq!(affine_a_poly(1), UPoly::from_ints(&[0, 2]));
        assert_eq!(affine_c_poly(1), UPoly::from_ints(&[0, 2]));
        assert_eq!(g_poly(2, 2), b_poly(2));
    }
}
