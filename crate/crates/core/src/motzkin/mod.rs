//! Supports of the type A/B polynomials, their bijection with 2-colored
//! Motzkin paths, and path valuations that recover the coefficients.

mod census;
mod path;
mod support;
mod weights;

pub use census::{catalan, catalan_census, Census, CensusFamily};
pub use path::{enumerate_paths, MotzkinPath, Step};
pub use support::{
    all_patterns, path_from_support, support_from_path, support_valid, Convention, SupportPattern,
};
pub use weights::{integer_weight, weight, WeightScheme};

use crate::coxeter::LetterSet;
use crate::multipoly::{Axis, Monomial};

/// The `(DT, AT)` pair of a monomial `x^DT y^AT`, ignoring `q`.
pub fn pattern_of(n: usize, m: &Monomial) -> SupportPattern {
    let (mut dt, mut at) = (LetterSet::empty(), LetterSet::empty());
    for (v, _) in m.iter() {
        match v.axis() {
            Axis::X => dt.insert(v.index()),
            Axis::Y => at.insert(v.index()),
            Axis::Q => {}
        }
    }
    SupportPattern { n, dt, at }
}
