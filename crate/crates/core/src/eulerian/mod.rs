//! The Eulerian polynomial families, built by enumeration and by recurrence.

mod brute;
mod chow;
mod family;
mod identities;
mod recurrence;
mod table;
mod univariate;

pub use brute::{brute_force, descent_poly, element_count, MAX_ELEMENTS};
pub use chow::chow_d;
pub use family::{parse_family, Family, FamilySpec, QMode, MAX_RANK};
pub use identities::{
    affine_bc, chow_vs_enumeration, derived_affine_d, identity_suite, q_minus_one, root_of_unity,
    signed_descent_sum, stembridge, IdentityBounds, ROOT_OF_UNITY_TOL,
};
pub use recurrence::{
    affine_a, affine_b, affine_c_closed, d_multivariate, d_stembridge, rec_a, rec_affine_c, rec_g,
    recurrence, y_minus_x_product,
};
pub use table::{table1, table_row, TableRow};
pub use univariate::{a_poly, affine_a_poly, affine_c_poly, b_poly, d_poly, g_poly};

use crate::error::Result;
use crate::multipoly::{MPoly, UPoly};

/// `y := 1`, all `x` identified; for `G`/`B` any `q` symbols are set to 1.
pub fn univariate(p: &MPoly) -> Result<UPoly> {
    p.specialize_axis(crate::multipoly::Axis::Q, &num_traits::One::one())
        .univariate()
}
