//! Exact polynomial arithmetic over the variable families `x`, `y`, `q`.

mod eval;
mod format;
mod monomial;
mod mpoly;
mod upoly;
mod var;

pub use eval::{eval_complex, CompiledPoly};
pub use monomial::Monomial;
pub use mpoly::{int, Coeff, MPoly};
pub use upoly::UPoly;
pub use var::{Axis, VarId};

/// Exact rational from a numerator and denominator.
pub fn rat(n: i64, d: i64) -> Coeff {
    Coeff::new(n.into(), d.into())
}
