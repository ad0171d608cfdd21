//! Enumeration and recurrence agree exactly.

use eulerstab::coxeter::group_order;
use eulerstab::eulerian::{
    brute_force, recurrence, Family, FamilySpec, QMode,
};
use eulerstab::MPoly;

fn agree(spec: FamilySpec) {
    let b = brute_force(&spec).unwrap();
    let r = recurrence(&spec).unwrap();
    assert_eq!(b, r, "{} n={} q={}", spec.code(), spec.n, spec.q);
}

#[test]
fn type_a_up_to_7() {
    for n in 0..=7 {
        agree(FamilySpec::a(n));
    }
}

#[test]
fn type_b_symbolic_q_up_to_6() {
    for n in 1..=6 {
        agree(FamilySpec::b(n, QMode::Single));
        agree(FamilySpec::b(n, QMode::None));
    }
}

#[test]
fn colored_multi_q() {
    for r in 1..=6u8 {
        for n in 1..=8 {
            if group_order(n, r) > 1_000_000 {
                break;
            }
            agree(FamilySpec::g(n, r, QMode::Multi));
        }
    }
}

#[test]
fn affine_types_up_to_6() {
    for n in 1..=6 {
        agree(FamilySpec::new(Family::AffA, n, 1, QMode::None).unwrap());
        agree(FamilySpec::new(Family::AffC, n, 2, QMode::None).unwrap());
    }
}

#[test]
fn stembridge_family_up_to_7() {
    for n in 2..=7 {
        agree(FamilySpec::new(Family::DStem, n, 2, QMode::None).unwrap());
    }
}

#[test]
fn naive_type_d_rank_3() {
    let d = brute_force(&FamilySpec::new(Family::DStar, 3, 2, QMode::None).unwrap()).unwrap();
    let expected: MPoly = "x2^2*x3 + 2*x2*x3*y2 + x3*y2^2 + x2^2*y3 + 4*x2*x3*y3 + 4*x3^2*y3 \
                          + 2*x2*y2*y3 + 4*x3*y2*y3 + y2^2*y3 + 4*x3*y3^2"
        .parse()
        .unwrap();
    assert_eq!(d, expected);
    assert!(!d.is_multiaffine());
}

#[test]
fn affine_b_has_no_enumeration() {
    let spec = FamilySpec::new(Family::AffB, 3, 2, QMode::None).unwrap();
    assert!(brute_force(&spec).is_err());
    assert!(recurrence(&spec).is_ok());
}
