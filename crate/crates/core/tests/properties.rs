use std::collections::BTreeMap;

use eulerstab::multipoly::{int, Coeff};
use eulerstab::motzkin::{enumerate_paths, path_from_support, support_from_path, support_valid, Convention};
use eulerstab::stability::sturm;
use eulerstab::{MPoly, Monomial, UPoly, VarId};
use proptest::prelude::*;

fn var() -> impl Strategy<Value = VarId> {
    (0..3u8, 1..4u32).prop_map(|(a, i)| match a {
        0 => VarId::x(i),
        1 => VarId::y(i),
        _ => VarId::q(i),
    })
}

fn poly() -> impl Strategy<Value = MPoly> {
    let term = (prop::collection::vec((var(), 0..3u32), 0..3), -5i64..6, 1i64..4);
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        MPoly::from_terms(
            ts.into_iter()
                .map(|(m, a, b)| (Monomial::from_pairs(m), Coeff::new(a.into(), b.into()))),
        )
    })
}

fn point() -> impl Strategy<Value = BTreeMap<VarId, Coeff>> {
    prop::collection::vec(-4i64..5, 9).prop_map(|v| {
        let mut m = BTreeMap::new();
        for i in 1..=3u32 {
            m.insert(VarId::x(i), int(v[i as usize - 1]));
            m.insert(VarId::y(i), int(v[i as usize + 2]));
            m.insert(VarId::q(i), int(v[i as usize + 5]));
        }
        m
    })
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), pt in point()) {
        let ea = a.eval(&pt).unwrap();
        let eb = b.eval(&pt).unwrap();
        prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&pt).unwrap(), ea + eb);
    }

    #[test]
    fn product_rule(a in poly(), b in poly(), v in var()) {
        let lhs = (&a * &b).partial(v);
        let rhs = &(&a.partial(v) * &b) + &(&a * &b.partial(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<MPoly>().unwrap(), a.clone());
        prop_assert_eq!(MPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn sturm_counts_distinct_rational_roots(roots in prop::collection::vec(-6i64..7, 1..7), lead in 1i64..4) {
        let p = roots
            .iter()
            .fold(UPoly::from_ints(&[lead]), |acc, &r| &acc * &UPoly::from_ints(&[-r, 1]));
        let distinct = roots.iter().collect::<std::collections::BTreeSet<_>>().len();
        let rep = sturm(&p).unwrap();
        prop_assert_eq!(rep.distinct_real_roots, distinct);
        prop_assert!(rep.is_real_rooted);
        // an irreducible quadratic factor takes real-rootedness away
        let q = &p * &UPoly::from_ints(&[1, 0, 1]);
        prop_assert!(!sturm(&q).unwrap().is_real_rooted);
    }
}

#[test]
fn paths_and_supports_are_in_bijection() {
    for len in 0..=7 {
        for path in enumerate_paths(len) {
            for conv in [Convention::A, Convention::B] {
                let n = if conv == Convention::A { len + 1 } else { len };
                let sp = support_from_path(&path, conv);
                assert_eq!(sp.n, n);
                assert!(support_valid(&sp, conv));
                assert_eq!(path_from_support(&sp, conv).unwrap(), path);
            }
        }
    }
}
