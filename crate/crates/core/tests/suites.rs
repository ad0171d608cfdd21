use std::time::Instant;

use eulerstab::report::{render_text, Severity, Status};
use eulerstab::suites::{run_suite, Suite, SuiteConfig};

fn run(suite: Suite) {
    let t = Instant::now();
    let checks = run_suite(suite, &SuiteConfig::default());
    eprintln!("{suite}: {} checks in {:.1?}", checks.len(), t.elapsed());
    let failures: Vec<_> = checks.iter().filter(|c| c.is_failure()).collect();
    if !failures.is_empty() {
        eprintln!("{}", render_text(&checks));
    }
    assert!(failures.is_empty(), "{} asserted failures", failures.len());
}

#[test]
fn oracles() {
    run(Suite::Oracles);
}

#[test]
fn identities() {
    run(Suite::Identities);
}

#[test]
fn realroots() {
    run(Suite::RealRoots);
}

#[test]
fn stability() {
    run(Suite::Stability);
}

#[test]
fn motzkin() {
    run(Suite::Motzkin);
}

#[test]
fn conjectures() {
    let checks = run_suite(Suite::Conjectures, &SuiteConfig::default());
    assert!(checks.iter().all(|c| c.severity == Severity::Informational));
    let positivity = checks.iter().filter(|c| c.check == "conjecture.type-d-positivity");
    assert!(positivity.clone().count() == 10 && positivity.clone().all(|c| c.status == Status::Pass));
}
