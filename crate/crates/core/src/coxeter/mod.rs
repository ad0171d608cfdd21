//! Signed and colored permutations, their enumeration and statistics.

mod enumerate;
mod perm;
mod stats;

pub use enumerate::{
    enumerate, enumerate_d, factorial, group_order, next_permutation, nth_permutation, par_fold,
    visit_range, Subset,
};
pub use perm::{colored_less, ColoredPerm, Letter};
pub use stats::{
    affine_descent_count_a, affine_descent_count_c, affine_stats_a, affine_stats_c,
    descent_count_a, descent_count_b, descent_count_colored, descent_count_d,
    descent_positions_b, stats_a, stats_colored, stats_d_naive, tops_a, tops_colored, LetterSet,
    StatRecord, TopCounts,
};
