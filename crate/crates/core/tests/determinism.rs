//! Results must not depend on the number of worker threads.

use eulerstab::eulerian::{brute_force, FamilySpec, QMode};
use eulerstab::stability::{falsify_halfplane, falsify_rayleigh};
use eulerstab::suites::{d3_star, d3_x};

fn with_threads<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap().install(f)
}

#[test]
fn enumeration() {
    let spec = FamilySpec::g(4, 3, QMode::Multi);
    let a = with_threads(1, || brute_force(&spec).unwrap());
    let b = with_threads(4, || brute_force(&spec).unwrap());
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn stability_witnesses() {
    let run = || {
        let h = falsify_halfplane(&d3_star(), 20_000, 7, &[]).map(|w| w.to_json());
        let r = falsify_rayleigh(&d3_x(), 20_000, 7).unwrap().map(|w| w.to_json());
        (h, r)
    };
    let one = with_threads(1, run);
    let four = with_threads(4, run);
    assert!(one.0.is_some() && one.1.is_some());
    assert_eq!(one, four);
}
