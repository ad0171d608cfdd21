//! Chow's recurrence for the type-D Eulerian polynomials, with the sign of
//! the `4n(n-1)(n-2)x²(1+x)` term corrected to `+`.

use crate::multipoly::{int, UPoly};

fn poly(c: &[i64]) -> UPoly {
    UPoly::from_ints(c)
}

/// `D_n(x)` for `n >= -1`, with `D_{-1} = D_0 = D_1 = 1`.
pub fn chow_d(n: i64) -> UPoly {
    assert!(n >= -1, "defined for n >= -1");
    // window holds D_{m-1}, D_m, D_{m+1}
    let (mut dm1, mut d0, mut d1) = (UPoly::one(), UPoly::one(), UPoly::one());
    if n <= 1 {
        return UPoly::one();
    }
    for m in 0..=n - 2 {
        let next = chow_step(m, &dm1, &d0, &d1);
        (dm1, d0, d1) = (d0, d1, next);
    }
    d1
}

/// `D_{m+2}` from `D_{m-1}`, `D_m`, `D_{m+1}`.
fn chow_step(m: i64, dm1: &UPoly, d0: &UPoly, d1: &UPoly) -> UPoly {
    let s = |p: &UPoly, k: i64| p.scale(&int(k));
    let one_minus_x = poly(&[1, -1]);
    let omx2 = &one_minus_x * &one_minus_x;
    let x = UPoly::x();
    let x2 = poly(&[0, 0, 1]);
    let one_plus_x = poly(&[1, 1]);

    // (m(1 + 5x) + 4x) D_{m+1}
    let t1 = &(&s(&poly(&[1, 5]), m) + &poly(&[0, 4])) * d1;
    // 4x(1 - x) D'_{m+1}
    let t2 = &s(&(&x * &one_minus_x), 4) * &d1.derivative();
    // ((1-x)^2 - m(1+3x)^2 - 4m(m-1)x(1+2x)) D_m
    let c3 = &(&omx2 - &s(&poly(&[1, 6, 9]), m)) - &s(&poly(&[0, 1, 2]), 4 * m * (m - 1));
    let t3 = &c3 * d0;
    // -(4m x(1-x)(1+3x) + 4x(1-x)^2) D'_m
    let c4 = &s(&(&(&x * &one_minus_x) * &poly(&[1, 3])), 4 * m) + &s(&(&x * &omx2), 4);
    let t4 = &c4 * &d0.derivative();
    // -4x^2(1-x)^2 D''_m
    let t5 = &s(&(&x2 * &omx2), 4) * &d0.derivative().derivative();
    // (2m(m-1)x(3 + 2x + 3x^2) + 4m(m-1)(m-2)x^2(1+x)) D_{m-1}
    let c6 = &s(&poly(&[0, 3, 2, 3]), 2 * m * (m - 1)) + &s(&(&x2 * &one_plus_x), 4 * m * (m - 1) * (m - 2));
    let t6 = &c6 * dm1;
    // (2m x(1-x)^2(3+x) + 8m(m-1)x^2(1-x)(1+x)) D'_{m-1}
    let c7 = &s(&(&(&x * &omx2) * &poly(&[3, 1])), 2 * m)
        + &s(&(&(&x2 * &one_minus_x) * &one_plus_x), 8 * m * (m - 1));
    let t7 = &c7 * &dm1.derivative();
    // 4m x^2(1-x)^2(1+x) D''_{m-1}
    let t8 = &s(&(&(&x2 * &omx2) * &one_plus_x), 4 * m) * &dm1.derivative().derivative();

    let pos = &(&(&(&t1 + &t2) + &t3) + &t6) + &(&t7 + &t8);
    &(&pos - &t4) - &t5
}
