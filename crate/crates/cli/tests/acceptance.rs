//! One PASS/FAIL line per acceptance criterion.
//!
//! Exits non-zero if any criterion fails, except for the entries of
//! `KNOWN_FAILURES`, whose exact failure mode is re-verified instead (a
//! failure that changes shape is still fatal).

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use eulerstab::eulerian::{
    affine_b, brute_force, chow_vs_enumeration, d_multivariate, q_minus_one, recurrence, root_of_unity, stembridge,
    Family, FamilySpec, QMode,
};
use eulerstab::multipoly::{eval_complex, rat, VarId};
use eulerstab::report::{Check, Severity, Status};
use eulerstab::stability::{
    d3star_point, falsify_halfplane, falsify_rayleigh, rayleigh_delta, verify_operator_symbol, OperatorKind,
};
use eulerstab::suites::{self, appendix, d3_star, d3_x, golden_appendix, SuiteConfig, REFERENCE_DISCREPANCIES};
use eulerstab::MPoly;

const ROOT_OF_UNITY_TOL: f64 = 1e-8;
const D3STAR_TOL: f64 = 1e-6;
const BUDGET: u64 = 100_000;
const SEED: u64 = 0;

/// Criteria expected to fail, with the reason recorded alongside the build.
const KNOWN_FAILURES: [u32; 1] = [1];

struct Outcome {
    pass: bool,
    detail: String,
    /// For a known failure: whether it failed in exactly the documented way.
    expected_shape: bool,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
        expected_shape: false,
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let el = t.elapsed();
    o.detail = format!("{} [{:.2?}, limit {:?}]", o.detail, el, limit);
    if el > limit {
        o.pass = false;
        o.detail.push_str(" TOO SLOW");
    }
    o
}

fn all_pass(checks: &[Check]) -> (bool, usize) {
    let ok = checks.iter().filter(|c| c.status == Status::Pass).count();
    (ok == checks.len(), ok)
}

fn c1_golden() -> Outcome {
    timed(Duration::from_secs(1), || {
        let checks = golden_appendix();
        let (pass, ok) = all_pass(&checks);
        let failed: Vec<String> = checks
            .iter()
            .filter(|c| c.status != Status::Pass)
            .map(|c| c.parameters["polynomial"].as_str().unwrap_or("?").to_string())
            .collect();
        // the only mismatches are the two reference affine-A polynomials, off by the factor 2/(n+1)
        let shape = failed == REFERENCE_DISCREPANCIES
            && appendix().iter().filter(|(n, _, _)| REFERENCE_DISCREPANCIES.contains(n)).all(|(_, spec, reference)| {
                let rec = recurrence(spec).unwrap();
                rec == brute_force(spec).unwrap() && *reference == rec.scale(&rat(2, spec.n as i64 + 1))
            });
        let mut o = outcome(
            pass,
            format!("{ok}/{} reference polynomials reproduced by both constructions; differing: {failed:?}", checks.len()),
        );
        o.expected_shape = shape;
        o
    })
}

fn c2_oracles() -> Outcome {
    timed(Duration::from_secs(60), || {
        let mut specs = Vec::new();
        specs.extend((0..=7).map(FamilySpec::a));
        specs.extend((1..=6).map(|n| FamilySpec::b(n, QMode::Single)));
        for r in 1..=6u8 {
            for n in 1.. {
                if (r as u64).pow(n as u32) * (1..=n as u64).product::<u64>() > 1_000_000 {
                    break;
                }
                specs.push(FamilySpec::g(n, r, QMode::Multi));
            }
        }
        for n in 1..=6 {
            specs.push(FamilySpec::new(Family::AffA, n, 1, QMode::None).unwrap());
            specs.push(FamilySpec::new(Family::AffC, n, 2, QMode::None).unwrap());
        }
        let bad: Vec<String> = specs
            .iter()
            .filter(|s| brute_force(s).ok() != recurrence(s).ok())
            .map(|s| format!("{}:{}", s.code(), s.n))
            .collect();
        outcome(bad.is_empty(), format!("{} family members, mismatches {bad:?}", specs.len()))
    })
}

fn c3_stembridge() -> Outcome {
    timed(Duration::from_secs(120), || {
        let checks: Vec<_> = (2..=8).map(stembridge).collect();
        let (pass, ok) = all_pass(&checks);
        outcome(pass, format!("{ok}/7 ranks 2..=8 exact"))
    })
}

fn c4_chow() -> Outcome {
    let checks: Vec<_> = (2..=8).map(chow_vs_enumeration).collect();
    let (pass, ok) = all_pass(&checks);
    outcome(pass, format!("{ok}/7 ranks 2..=8 exact"))
}

fn c5_q_identities() -> Outcome {
    let mut checks: Vec<_> = (1..=7).map(q_minus_one).collect();
    let qm = checks.len();
    for n in 1..=5 {
        for r in 2..=5u8 {
            checks.push(root_of_unity(n, r, 10, SEED));
        }
    }
    let (pass, ok) = all_pass(&checks);
    outcome(
        pass,
        format!("{ok}/{} (q=-1 for n<=7: {qm}; roots of unity n<=5, r<=5 at 10 points, tol {ROOT_OF_UNITY_TOL:e})", checks.len()),
    )
}

fn c6_real_roots() -> Outcome {
    let checks: Vec<_> = suites::realroots(&SuiteConfig::default())
        .into_iter()
        .filter(|c| c.check != "realroot.derived-affD")
        .collect();
    let (pass, ok) = all_pass(&checks);
    let not: Vec<String> = checks.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{} {}", c.check, c.parameters)).collect();
    outcome(pass, format!("{ok}/{} real-rooted by Sturm count; not: {not:?}", checks.len()))
}

fn c7_witnesses() -> Outcome {
    let p = d3_star();
    let point: BTreeMap<VarId, _> = d3star_point().into_iter().collect();
    let value = eval_complex(&p, &point).map(|z| z.norm()).unwrap_or(f64::INFINITY);
    let delta = rayleigh_delta(&d3_x(), VarId::x(1), VarId::x(3)).ok();
    let expected: MPoly = "-16*x2".parse().unwrap();
    outcome(
        value < D3STAR_TOL && delta.as_ref() == Some(&expected),
        format!(
            "|D*_3(point)| = {value:.2e} (tol {D3STAR_TOL:e}); Rayleigh difference = {}",
            delta.map(|d| d.to_string()).unwrap_or_else(|| "error".into())
        ),
    )
}

fn c8_positivity() -> Outcome {
    timed(Duration::from_secs(30), || {
        let bad: Vec<usize> = (2..=11).filter(|&n| !d_multivariate(n).has_nonnegative_coefficients()).collect();
        outcome(bad.is_empty(), format!("ranks 2..=11, negative coefficients at {bad:?}"))
    })
}

fn c9_affine_b_probe() -> Outcome {
    let mut found = Vec::new();
    for n in 2..=4 {
        let p = affine_b(n);
        if falsify_halfplane(&p, BUDGET, SEED, &[]).is_some() {
            found.push(format!("half-plane n={n}"));
        }
        match falsify_rayleigh(&p, BUDGET, SEED) {
            Ok(None) => {}
            Ok(Some(_)) => found.push(format!("Rayleigh n={n}")),
            Err(e) => found.push(format!("Rayleigh n={n}: {e}")),
        }
    }
    outcome(
        found.is_empty(),
        format!("n=2..=4, budget {BUDGET}, seed {SEED}: witnesses {found:?} (absence is not a proof)"),
    )
}

fn c10_motzkin() -> Outcome {
    let checks = suites::motzkin(&SuiteConfig::default());
    let (asserted, flagged): (Vec<_>, Vec<_>) = checks.iter().partition(|c| c.check != "motzkin.census-as-stated");
    let asserted: Vec<_> = asserted.into_iter().filter(|c| c.check != "motzkin.colored-weights").collect();
    let ok = asserted.iter().filter(|c| c.status == Status::Pass).count();
    let flagged_ok = flagged.len() == 8 && flagged.iter().all(|c| c.severity == Severity::Informational && c.status == Status::Fail);
    outcome(
        ok == asserted.len() && flagged_ok,
        format!("{ok}/{} checks; type-B count = C_(n+1), the C_n statement flagged for n=1..=8: {flagged_ok}", asserted.len()),
    )
}

fn c11_operator_symbols() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=5 {
        let mut ops = vec![("A".to_string(), OperatorKind::TypeA)];
        ops.extend((0..=2).map(|q| (format!("B(q={q})"), OperatorKind::TypeB(rat(q, 1)))));
        for (name, op) in ops {
            total += 1;
            if !verify_operator_symbol(&op, n).unwrap_or(false) {
                bad.push(format!("{name} n={n}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{}/{total} exact; failing {bad:?}", total - bad.len()))
}

fn c12_verify_all() -> Outcome {
    timed(Duration::from_secs(300), || {
        let out = Command::new(env!("CARGO_BIN_EXE_eulerstab")).args(["verify", "all"]).output();
        match out {
            Ok(o) => {
                let text = String::from_utf8_lossy(&o.stdout);
                let summary = text.lines().last().unwrap_or("").to_string();
                outcome(o.status.success(), format!("exit {:?}; {summary}", o.status.code()))
            }
            Err(e) => outcome(false, format!("could not run: {e}")),
        }
    })
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "golden appendix", c1_golden),
        (2, "oracle equivalence", c2_oracles),
        (3, "Stembridge identity", c3_stembridge),
        (4, "Chow recurrence", c4_chow),
        (5, "q = -1 and root-of-unity identities", c5_q_identities),
        (6, "real-rootedness", c6_real_roots),
        (7, "non-stability witnesses", c7_witnesses),
        (8, "type-D positivity", c8_positivity),
        (9, "affine-B stability probe", c9_affine_b_probe),
        (10, "Motzkin suite", c10_motzkin),
        (11, "operator symbols", c11_operator_symbols),
        (12, "verify all", c12_verify_all),
    ];
    let mut fatal = 0;
    for (id, name, run) in criteria {
        let o = run();
        let known = KNOWN_FAILURES.contains(&id);
        let tag = match (o.pass, known) {
            (true, _) => "PASS",
            (false, true) if o.expected_shape => "FAIL (known discrepancy, see notes)",
            (false, _) => "FAIL",
        };
        if !o.pass && !(known && o.expected_shape) {
            fatal += 1;
        }
        println!("criterion {id:>2} {tag}: {name} - {}", o.detail);
    }
    if fatal > 0 {
        println!("{fatal} criteria failed unexpectedly");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
