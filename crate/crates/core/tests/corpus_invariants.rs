//! Laws that must hold on every ring of the built-in corpus.

mod common;

use common::*;
use nilring::classes::{
    basic_profile, compute_class, jacobson_radical, prime_radical, setwise_nilpotency, ClassRole,
};
use nilring::cleanness::{ring_predicate, RingMode};
use nilring::ideal::quotient;
use nilring::iso::find_isomorphism;
use nilring::ring::validate_axioms;
use nilring::structure::{classify, peirce_split, ClassTag};

#[test]
fn corpus_has_the_expected_size() {
    let c = corpus();
    assert_eq!(c.len(), 29);
    assert_eq!(c.iter().filter(|e| e.group_ring.is_some()).count(), 4);
}

#[test]
fn every_corpus_ring_satisfies_the_axioms() {
    for input in corpus() {
        validate_axioms(&input.ring.to_raw()).unwrap();
    }
}

#[test]
fn units_and_zero_divisors_partition() {
    for input in corpus() {
        let r = &input.ring;
        let units = compute_class(r, &ClassRole::Units).unwrap();
        let zd = compute_class(r, &ClassRole::ZeroDivisors).unwrap();
        for x in r.elements() {
            assert!(
                units.contains(x) ^ zd.contains(x),
                "{} at {x}",
                r.provenance()
            );
        }
    }
}

#[test]
fn radical_laws() {
    for input in corpus() {
        let r = &input.ring;
        let p = prime_radical(r).unwrap();
        let j = jacobson_radical(r).unwrap();
        assert!(p.is_subset(&j));
        if r.is_commutative() {
            let nil = compute_class(r, &ClassRole::Nilpotents).unwrap();
            assert!(p.same_members(&nil), "{}", r.provenance());
        }
        let k = setwise_nilpotency(r, &j).expect("J is nilpotent");
        assert!(k <= r.order());
        let (q, _) = quotient(r, &j).unwrap();
        assert_eq!(jacobson_radical(&q).unwrap().members(), [q.zero()]);
    }
}

#[test]
fn unique_nil_cleanness_bridge() {
    for input in corpus() {
        let r = &input.ring;
        let unc = ring_predicate(r, RingMode::UniquelyNilClean).unwrap().holds;
        let uwnc = ring_predicate(r, RingMode::UniquelyWeaklyNilClean)
            .unwrap()
            .holds;
        let two = basic_profile(r).unwrap().two_nilpotent;
        assert_eq!(unc, two && uwnc, "{}", r.provenance());
    }
}

#[test]
fn predicate_implications() {
    for input in corpus() {
        let r = &input.ring;
        let holds = |m| ring_predicate(r, m).unwrap().holds;
        if holds(RingMode::UniquelyDNilClean) {
            assert!(
                holds(RingMode::UniquelyWeaklyDNilClean),
                "{}",
                r.provenance()
            );
        }
        if holds(RingMode::UniquelyWeaklyNilClean) {
            assert!(holds(RingMode::WeaklyNilClean));
            assert!(holds(RingMode::UniquelyWeaklyDNilClean));
        }
        if holds(RingMode::UniquelyNilClean) {
            assert!(holds(RingMode::NilClean));
        }
        if classify(r).unwrap().has(ClassTag::Boolean) {
            assert!(holds(RingMode::UniquelyNilClean));
        }
    }
}

#[test]
fn decompositions_reassemble() {
    for input in corpus() {
        let r = &input.ring;
        let ctx = nilring::cleanness::CleanContext::new(r);
        for a in r.elements() {
            for d in ctx.decompositions(a, nilring::cleanness::Flavor::WeaklyNilClean) {
                assert_eq!(r.add(d.very_idempotent, d.nilpotent), a);
                assert_eq!(r.pow(d.nilpotent, d.nil_index), r.zero());
                if d.nil_index > 1 {
                    assert_ne!(r.pow(d.nilpotent, d.nil_index - 1), r.zero());
                }
            }
        }
    }
}

#[test]
fn product_tags_are_recertified() {
    let z3 = ring("Z3");
    for input in corpus() {
        let r = &input.ring;
        let c = classify(r).unwrap();
        if let Some(&f) = c.witnesses.get("z3_x_boolean") {
            let s = peirce_split(r, f).unwrap();
            assert!(find_isomorphism(&s.corner_f, &z3).unwrap().is_some());
            let cof = &s.corner_cof;
            assert!(cof.elements().all(|x| cof.mul(x, x) == x));
        }
        if let Some(&f) = c.witnesses.get("z3_x_z3") {
            let s = peirce_split(r, f).unwrap();
            assert!(find_isomorphism(&s.corner_f, &z3).unwrap().is_some());
            assert!(find_isomorphism(&s.corner_cof, &z3).unwrap().is_some());
        }
    }
}

#[test]
fn isomorphic_pairs_agree_on_everything() {
    let pairs = [
        ("Z6", "Z2 x Z3"),
        ("Z6", "Z3 x Bool(1)"),
        ("Z12", "Z3 x Z4"),
        ("Z2 x Z4", "Z4 x Z2"),
        ("Bool(2)", "Z2 x Z2"),
        ("Z3 x Bool(2)", "Bool(1) x Z3 x Bool(1)"),
    ];
    for (a, b) in pairs {
        let (ra, rb) = (ring(a), ring(b));
        let map = find_isomorphism(&ra, &rb).unwrap();
        assert!(map.is_some(), "{a} and {b} should be isomorphic");
        for mode in RingMode::ALL {
            assert_eq!(
                ring_predicate(&ra, mode).unwrap().holds,
                ring_predicate(&rb, mode).unwrap().holds,
                "{mode} on {a} / {b}"
            );
        }
        assert_eq!(classify(&ra).unwrap().tags, classify(&rb).unwrap().tags);
        assert_eq!(
            basic_profile(&ra).unwrap().abelian,
            basic_profile(&rb).unwrap().abelian
        );
    }
}
