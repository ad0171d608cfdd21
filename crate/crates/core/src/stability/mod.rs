//! Real-rootedness and real-stability testing.
//!
//! Univariate claims are decided exactly by Sturm sequences. Multivariate
//! stability is only ever refuted, by an explicit witness; a search that
//! finds nothing is reported as such and never as a proof.

mod halfplane;
mod operator;
mod rayleigh;
mod sturm;
mod witness;

pub use halfplane::{
    d3star_high_precision, d3star_point, eval_exact, falsify_halfplane, roots, ExactComplex,
    IM_MARGIN, REFINE_TOL, ZERO_TOL,
};
pub use operator::{verify_operator_symbol, OperatorKind};
pub use rayleigh::{falsify_rayleigh, rayleigh_delta};
pub use sturm::{sturm, sturm_chain, SturmReport};
pub use witness::{StabilityWitness, WitnessKind};

/// Searches are split into this many chunks regardless of thread count, so
/// results do not depend on parallelism.
pub const SEARCH_CHUNKS: usize = 64;

/// Default number of sample points per search.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// Per-chunk seed derived from the master seed (splitmix64 finalizer).
pub(crate) fn chunk_seed(seed: u64, chunk: usize) -> u64 {
    let mut z = seed
        .wrapping_add((chunk as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
