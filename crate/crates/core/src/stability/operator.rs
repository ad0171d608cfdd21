//! Symbolic check of the operator-symbol factorizations behind the
//! stability-preservation arguments.
//!
//! For `T = (c_y x_{n+1} + c_x y_{n+1}) + c x_{n+1} y_{n+1} ∂` and
//! `P = ∏_{i ≤ n} (x_i + u_i)(y_i + v_i)` we expand `T(P)` and compare with
//! `x_{n+1} y_{n+1} [c_y/y_{n+1} + c_x/x_{n+1} + Σ c (1/(x_i+u_i) + 1/(y_i+v_i))] P`,
//! where each quotient `P/(x_i + u_i)` is computed by exact division.

use num_traits::{One, Pow};

use crate::error::Result;
use crate::multipoly::{Coeff, MPoly, VarId};

#[derive(Clone, Debug, PartialEq)]
pub enum OperatorKind {
    TypeA,
    /// `(q x + y) + (1 + q) x y ∂`.
    TypeB(Coeff),
    /// `(s x + y) + (1 + s) x y ∂` with `s = q + … + q^{r-1}`.
    Colored { r: u8, q: Coeff },
}

impl OperatorKind {
    /// `(c_x, c_y, c)`.
    pub fn coefficients(&self) -> (Coeff, Coeff, Coeff) {
        let one = Coeff::one();
        match self {
            OperatorKind::TypeA => (one.clone(), one.clone(), one),
            OperatorKind::TypeB(q) => (one.clone(), q.clone(), one + q),
            OperatorKind::Colored { r, q } => {
                let s: Coeff = (1..*r as u32).map(|e| Pow::pow(q, e)).sum();
                (one.clone(), s.clone(), one + s)
            }
        }
    }
}

// The auxiliary variables u_i, v_i live on the q axis (q_i and q_{n+i});
// the operator never differentiates in q.
fn u(i: usize) -> MPoly {
    MPoly::var(VarId::q(i as u32))
}

fn v(i: usize, n: usize) -> MPoly {
    MPoly::var(VarId::q((n + i) as u32))
}

pub fn verify_operator_symbol(op: &OperatorKind, n: usize) -> Result<bool> {
    let (cx, cy, c) = op.coefficients();
    let x = |i: usize| MPoly::var(VarId::x(i as u32));
    let y = |i: usize| MPoly::var(VarId::y(i as u32));
    let factors: Vec<MPoly> = (1..=n)
        .flat_map(|i| [&x(i) + &u(i), &y(i) + &v(i, n)])
        .collect();
    let p = factors.iter().fold(MPoly::one(), |acc, f| &acc * f);
    let xn = x(n + 1);
    let yn = y(n + 1);
    let xy = &xn * &yn;

    let linear = &xn.scale(&cy) + &yn.scale(&cx);
    let lhs = &(&linear * &p) + &(&xy * &p.del(1..=n as u32)).scale(&c);

    let mut bracket = MPoly::zero();
    for f in &factors {
        bracket = &bracket + &p.div_exact(f)?;
    }
    let rhs = &(&(&xn * &p).scale(&cy) + &(&yn * &p).scale(&cx)) + &(&xy * &bracket).scale(&c);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::int;

    #[test]
    fn identities_hold() {
        assert!(verify_operator_symbol(&OperatorKind::TypeA, 1).unwrap());
        for n in 1..=3 {
            assert!(verify_operator_symbol(&OperatorKind::TypeB(int(1)), n).unwrap());
        }
        assert!(verify_operator_symbol(&OperatorKind::TypeB(int(0)), 2).unwrap());
        assert!(verify_operator_symbol(&OperatorKind::Colored { r: 3, q: int(2) }, 2).unwrap());
    }
}
