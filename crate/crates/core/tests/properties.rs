//! Randomized laws over small generated rings.

mod common;

use common::naive_decompositions;
use nilring::classes::{
    compute_class, jacobson_radical, prime_radical, setwise_nilpotency, ClassRole,
};
use nilring::cleanness::{
    element_verdict, ring_predicate, CleanContext, ElementMode, Flavor, RingMode,
};
use nilring::construct::RingFactory;
use nilring::expr::{eval_expr, parse_expr, RingExpr};
use nilring::ideal::quotient;
use nilring::iso::find_isomorphism;
use nilring::ring::validate_axioms;
use nilring::tablefile::{parse_table, render_table};
use proptest::prelude::*;

fn order_of(e: &RingExpr) -> usize {
    match e {
        RingExpr::Zn(n) => *n,
        RingExpr::Bool(k) => 1 << k,
        RingExpr::Product(a, b) => order_of(a) * order_of(b),
        RingExpr::Triangular(r, 2) => order_of(r).pow(3),
        RingExpr::Matrix(r, 2) => order_of(r).pow(4),
        _ => unreachable!("not generated"),
    }
}

fn leaf() -> impl Strategy<Value = RingExpr> {
    prop_oneof![
        (1usize..=12).prop_map(RingExpr::Zn),
        (1u32..=3).prop_map(RingExpr::Bool),
        (2usize..=3).prop_map(|n| RingExpr::Triangular(Box::new(RingExpr::Zn(n)), 2)),
    ]
}

/// Ring expressions of order at most 48.
fn small_ring() -> impl Strategy<Value = RingExpr> {
    prop_oneof![
        leaf(),
        (leaf(), leaf()).prop_map(|(a, b)| RingExpr::Product(Box::new(a), Box::new(b))),
    ]
    .prop_filter("order at most 48", |e| order_of(e) <= 48)
}

fn build(e: &RingExpr) -> nilring::FiniteRing {
    eval_expr(e, &RingFactory::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_tables_satisfy_the_axioms(e in small_ring()) {
        let r = build(&e);
        prop_assert_eq!(r.order(), order_of(&e));
        prop_assert!(validate_axioms(&r.to_raw()).is_ok());
    }

    #[test]
    fn rendering_round_trips(e in small_ring()) {
        let text = e.to_string();
        let back = parse_expr(&text).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), text.clone());
        prop_assert_eq!(build(&e).provenance().to_string(), text);
    }

    #[test]
    fn table_files_round_trip(e in small_ring()) {
        let r = build(&e);
        let raw = r.to_raw();
        prop_assert_eq!(parse_table(&render_table(&raw)).unwrap(), raw);
    }

    #[test]
    fn partition_and_radicals(e in small_ring()) {
        let r = build(&e);
        prop_assume!(!r.is_trivial());
        let units = compute_class(&r, &ClassRole::Units).unwrap();
        let zd = compute_class(&r, &ClassRole::ZeroDivisors).unwrap();
        prop_assert_eq!(units.len() + zd.len(), r.order());
        prop_assert!(units.iter().all(|x| !zd.contains(x)));

        let j = jacobson_radical(&r).unwrap();
        let p = prime_radical(&r).unwrap();
        prop_assert!(p.is_subset(&j));
        if r.is_commutative() {
            let nil = compute_class(&r, &ClassRole::Nilpotents).unwrap();
            prop_assert!(p.same_members(&nil));
        }
        prop_assert!(setwise_nilpotency(&r, &j).unwrap() <= r.order());
        let (q, _) = quotient(&r, &j).unwrap();
        prop_assert_eq!(jacobson_radical(&q).unwrap().len(), 1);
    }

    #[test]
    fn decomposition_lists(e in small_ring()) {
        let r = build(&e);
        let ctx = CleanContext::new(&r);
        for a in r.elements() {
            let weak = ctx.decompositions(a, Flavor::WeaklyNilClean);
            let plain = ctx.decompositions(a, Flavor::NilClean);
            prop_assert!(plain.iter().all(|d| weak.contains(d)));
            let pairs: Vec<(usize, usize)> =
                weak.iter().map(|d| (d.very_idempotent, d.nilpotent)).collect();
            prop_assert_eq!(pairs, naive_decompositions(&r, a, true));
            for d in &weak {
                prop_assert_eq!(r.add(d.very_idempotent, d.nilpotent), a);
            }
            let uw = element_verdict(&r, a, ElementMode::UniquelyWeaklyNilClean).unwrap();
            let w = element_verdict(&r, a, ElementMode::WeaklyNilClean).unwrap();
            prop_assert!(!uw.holds || w.holds);
            let un = element_verdict(&r, a, ElementMode::UniquelyNilClean).unwrap();
            let n = element_verdict(&r, a, ElementMode::NilClean).unwrap();
            prop_assert!(!un.holds || n.holds);
        }
    }

    #[test]
    fn unique_nil_cleanness_bridge(e in small_ring()) {
        let r = build(&e);
        prop_assume!(!r.is_trivial());
        let unc = ring_predicate(&r, RingMode::UniquelyNilClean).unwrap().holds;
        let uwnc = ring_predicate(&r, RingMode::UniquelyWeaklyNilClean).unwrap().holds;
        let two = r.add(r.one(), r.one());
        let nil = compute_class(&r, &ClassRole::Nilpotents).unwrap();
        prop_assert_eq!(unc, nil.contains(two) && uwnc);
    }

    #[test]
    fn products_commute_up_to_isomorphism(a in leaf(), b in leaf()) {
        let ab = RingExpr::Product(Box::new(a.clone()), Box::new(b.clone()));
        let ba = RingExpr::Product(Box::new(b), Box::new(a));
        prop_assume!(order_of(&ab) <= 32);
        let (x, y) = (build(&ab), build(&ba));
        prop_assert!(find_isomorphism(&x, &y).unwrap().is_some());
        if !x.is_trivial() {
            for mode in RingMode::ALL {
                prop_assert_eq!(
                    ring_predicate(&x, mode).unwrap().holds,
                    ring_predicate(&y, mode).unwrap().holds
                );
            }
        }
    }
}
