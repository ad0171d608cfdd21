//! Exact construction and verification of multivariate Eulerian polynomials.
//!
//! The crate builds the descent-top / ascent-top refinements of the Eulerian
//! polynomials of types A, B, D, the colored groups `G(n, r)` and the affine
//! types Ã and C̃, each by brute-force enumeration of group elements and by the
//! stability-preserving recurrences, and checks the identities, real-rootedness
//! and (non-)stability claims that surround them.
//!
//! Modules:
//! - [`multipoly`]: sparse multivariate and dense univariate polynomials over Q.
//! - [`coxeter`]: colored/signed permutations and their statistics.
//! - [`eulerian`]: the polynomial families, recurrences and identity checks.
//! - [`stability`]: Sturm sequences, Rayleigh differences, half-plane search.
//! - [`motzkin`]: supports, 2-colored Motzkin paths and Viennot weights.
//! - [`suites`]: the named verification suites driven by the CLI.

pub mod coxeter;
pub mod error;
pub mod eulerian;
pub mod motzkin;
pub mod multipoly;
pub mod report;
pub mod stability;
pub mod suites;

pub use error::{Error, Result};
pub use multipoly::{Axis, MPoly, Monomial, UPoly, VarId};
