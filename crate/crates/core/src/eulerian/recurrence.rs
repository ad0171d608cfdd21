//! The stability-preserving recurrences and the identities built on them.

use num_traits::{One, Pow};

use super::brute::upoly_in_x1;
use super::family::{Family, FamilySpec, QMode};
use crate::error::{Error, Result};
use crate::multipoly::{int, Coeff, MPoly, Monomial, UPoly, VarId};

fn x(i: usize) -> MPoly {
    MPoly::var(VarId::x(i as u32))
}

fn y(i: usize) -> MPoly {
    MPoly::var(VarId::y(i as u32))
}

fn xy(i: usize) -> MPoly {
    MPoly::monomial_of(&[VarId::x(i as u32), VarId::y(i as u32)])
}

/// `A_n(x, y)` over `Sym(n + 1)`, variables indexed `2..=n+1`.
pub fn rec_a(n: usize) -> MPoly {
    let mut a = MPoly::one();
    for k in 1..=n {
        let i = k + 1;
        a = &(&(&x(i) + &y(i)) * &a) + &(&xy(i) * &a.del(2..=k as u32));
    }
    a
}

/// `q_n + … + q_n^{r-1}` under the given mode.
fn color_sum(i: usize, r: u8, q: &QMode) -> MPoly {
    (1..r as u32)
        .map(|e| match q {
            QMode::None => MPoly::one(),
            QMode::Single => MPoly::term(Monomial::pow_of(VarId::q(1), e), Coeff::one()),
            QMode::Multi => MPoly::term(Monomial::pow_of(VarId::q(i as u32), e), Coeff::one()),
            QMode::Value(c) => MPoly::constant(Pow::pow(c, e)),
        })
        .sum()
}

/// `G_n^r(x, y; q)`; `r = 2` gives `B_n(x, y; q)`.
pub fn rec_g(n: usize, r: u8, q: &QMode) -> MPoly {
    let mut g = MPoly::one();
    for i in 1..=n {
        let s = color_sum(i, r, q);
        let linear = &(&s * &x(i)) + &y(i);
        let t = &MPoly::one() + &s;
        g = &(&linear * &g) + &(&(&t * &xy(i)) * &g.del(1..=(i - 1) as u32));
    }
    g
}

/// `Ã_n = (n + 1) x_{n+1} y_{n+1} A_{n-1}`.
pub fn affine_a(n: usize) -> MPoly {
    assert!(n >= 1, "affine type A needs n >= 1");
    (&xy(n + 1) * &rec_a(n - 1)).scale(&int(n as i64 + 1))
}

/// `C̃_n` by `C̃_1 = 2x_1y_1`, `C̃_n = 2x_ny_n ∂C̃_{n-1}`.
pub fn rec_affine_c(n: usize) -> MPoly {
    assert!(n >= 1, "affine type C needs n >= 1");
    let mut c = xy(1).scale(&int(2));
    for i in 2..=n {
        c = (&xy(i) * &c.del(1..=(i - 1) as u32)).scale(&int(2));
    }
    c
}

/// `C̃_n = 2^n x_n y_n A_{n-1}` with the variables of `A_{n-1}` shifted down by one.
pub fn affine_c_closed(n: usize) -> MPoly {
    assert!(n >= 1, "affine type C needs n >= 1");
    let a = rec_a(n - 1).shift_indices(-1).expect("indices of A start at 2");
    (&xy(n) * &a).scale(&int(1 << n))
}

/// `D_n(x, y) = B_n(x, y; 1) - n 2^{n-1} x_n y_n A_{n-2}(x, y)`, with
/// `A_{n-2}` in its own variables `2..=n-1`.
pub fn d_multivariate(n: usize) -> MPoly {
    assert!(n >= 2, "type D needs n >= 2");
    let sub = (&xy(n) * &rec_a(n - 2)).scale(&int(n as i64 * (1 << (n - 1))));
    &rec_g(n, 2, &QMode::None) - &sub
}

/// `B̃_n(x, y) = 2C̃_n - 2n x_n y_n B_{n-1}(x, y; 1)`.
pub fn affine_b(n: usize) -> MPoly {
    assert!(n >= 2, "affine type B needs n >= 2");
    let sub = (&xy(n) * &rec_g(n - 1, 2, &QMode::None)).scale(&int(2 * n as i64));
    &rec_affine_c(n).scale(&int(2)) - &sub
}

/// `D_n(x) = B_n(x) - n 2^{n-1} x A_{n-2}(x)` from the recurrences.
pub fn d_stembridge(n: usize) -> UPoly {
    assert!(n >= 2, "type D needs n >= 2");
    let b = rec_g(n, 2, &QMode::None).univariate().expect("B_n is in x, y");
    let a = rec_a(n - 2).univariate().expect("A_n is in x, y");
    &b - &(&UPoly::x() * &a).scale(&int(n as i64 * (1 << (n - 1))))
}

/// The recurrence-side construction of a family member.
pub fn recurrence(spec: &FamilySpec) -> Result<MPoly> {
    let n = spec.n;
    Ok(match spec.family {
        Family::A => rec_a(n),
        Family::B | Family::G => rec_g(n, spec.r, &spec.q),
        Family::D => d_multivariate(n),
        Family::AffA => affine_a(n),
        Family::AffC => rec_affine_c(n),
        Family::AffB => affine_b(n),
        Family::DStem => upoly_in_x1(&d_stembridge(n)),
        Family::DStar => {
            return Err(Error::Unsupported(
                "Dstar has no recurrence; use brute force".into(),
            ))
        }
    })
}

/// `∏ (y_i - x_i)` for `i in 1..=n`.
pub fn y_minus_x_product(n: usize) -> MPoly {
    (1..=n).fold(MPoly::one(), |acc, i| &acc * &(&y(i) - &x(i)))
}
