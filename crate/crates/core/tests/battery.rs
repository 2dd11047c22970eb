//! Battery behavior over the built-in corpus.

mod common;

use common::*;
use nilring::battery::{
    check_result, evaluate_lhs, evaluate_rhs, render_json_lines, run_battery, BatteryOptions,
    ResultId, DEFAULT_CORPUS,
};
use nilring::classes::{nilpotent_mask, very_idempotent_mask, zero_divisor_mask};
use nilring::cleanness::enumeration_count;
use nilring::structure::classification_count;

/// Results whose right-hand side names no cleanness property of any ring.
const STRUCTURAL_RHS: [ResultId; 16] = [
    ResultId::Lem2_1,
    ResultId::Thm2_2,
    ResultId::Cor2_3,
    ResultId::RemLocal,
    ResultId::Lem3_1,
    ResultId::Lem3_3,
    ResultId::Thm3_4,
    ResultId::Lem3_5,
    ResultId::Lem3_6,
    ResultId::Thm3_7,
    ResultId::Cor3_8,
    ResultId::RemT2z2,
    ResultId::Lem4_1,
    ResultId::Prop4_2,
    ResultId::Thm4_4,
    ResultId::Lem4_5,
];

fn corpus_lines() -> Vec<(usize, String)> {
    DEFAULT_CORPUS
        .iter()
        .enumerate()
        .map(|(i, e)| (i + 1, e.to_string()))
        .collect()
}

#[test]
fn left_sides_never_classify() {
    for input in corpus() {
        for id in ResultId::ALL {
            let before = classification_count();
            // Group-ring inputs only matter for the statements about RG.
            let _ = evaluate_lhs(id, &input);
            assert_eq!(
                classification_count(),
                before,
                "{id} on {}",
                input.ring.provenance()
            );
        }
    }
}

#[test]
fn structural_right_sides_never_enumerate_decompositions() {
    for input in corpus() {
        for id in STRUCTURAL_RHS {
            let before = enumeration_count();
            evaluate_rhs(id, &input).unwrap();
            assert_eq!(
                enumeration_count(),
                before,
                "{id} on {}",
                input.ring.provenance()
            );
        }
    }
}

#[test]
fn report_is_identical_across_worker_counts() {
    let corpus = corpus_lines();
    let render = |jobs| {
        let options = BatteryOptions {
            jobs,
            ..Default::default()
        };
        render_json_lines(&run_battery(&corpus, &options).unwrap())
    };
    let one = render(1);
    assert_eq!(one, render(8));
    assert_eq!(one, render(1));
}

#[test]
fn every_result_applies_somewhere() {
    let report = run_battery(&corpus_lines(), &BatteryOptions::default()).unwrap();
    for id in ResultId::ALL {
        let applied = report
            .verdicts
            .iter()
            .filter(|v| v.result_id == id && v.skipped.is_none())
            .count();
        assert!(applied > 0, "{id} never applied");
    }
    let group_rings = report
        .verdicts
        .iter()
        .filter(|v| v.result_id == ResultId::Cor4_8 && v.skipped.is_none())
        .count();
    assert_eq!(group_rings, 4);
}

/// The statement that 2 non-nilpotent makes the two D-variants coincide
/// fails on rings with a `Z3` factor next to a non-field factor: 2 is a
/// zero-divisor in `Z6` and neither nilpotent nor idempotent, yet `2² = −2`,
/// so `2 = 2 + 0` is its only weak decomposition and no nil-clean one exists.
#[test]
fn d_variant_coincidence_has_corpus_counterexamples() {
    let report = run_battery(&corpus_lines(), &BatteryOptions::default()).unwrap();
    let bad: Vec<&str> = report.inconsistent().map(|v| v.ring.as_str()).collect();
    assert_eq!(
        bad,
        [
            "Z6",
            "Z12",
            "Z3 x Z3",
            "Z3 x Bool(1)",
            "Z3 x Bool(2)",
            "Z3 x Z4"
        ]
    );
    assert!(report
        .inconsistent()
        .all(|v| v.result_id == ResultId::Cor4_9));

    let z6 = ring("Z6");
    let zd = zero_divisor_mask(&z6);
    let nil = nilpotent_mask(&z6);
    assert!(zd[2] && !nil[2] && z6.mul(2, 2) != 2);
    assert!(very_idempotent_mask(&z6)[2]);
    assert_eq!(z6.mul(2, 2), z6.neg(2));
}

#[test]
fn only_the_coincidence_statement_is_inconsistent() {
    let report = run_battery(&corpus_lines(), &BatteryOptions::default()).unwrap();
    let s = report.summary();
    assert_eq!(s.inconsistent, 6);
    assert_eq!(s.corpus_errors, 0);
    assert_eq!(s.consistent + s.inconsistent + s.skipped, 29 * 28);
}

#[test]
fn idempotent_cover_conditions_agree() {
    // R = N ∪ Id ∪ −Id and R = J ∪ Id ∪ −Id are recorded side by side.
    for input in corpus() {
        let v = check_result(ResultId::Lem3_6, &input).unwrap();
        assert_eq!(
            v.witnesses["rhs.j_id_neg_id_cover"],
            serde_json::json!(v.lhs.unwrap()),
            "{}",
            input.ring.provenance()
        );
    }
}

#[test]
fn documented_single_checks() {
    let f = Default::default();
    let z3z3 = nilring::expr::build("Z3 x Z3", &f).unwrap();
    let v = check_result(ResultId::Thm2_2, &z3z3).unwrap();
    assert_eq!((v.lhs, v.rhs), (Some(false), Some(false)));
    let v = check_result(ResultId::Thm3_4, &z3z3).unwrap();
    assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));

    let z6 = nilring::expr::build("Z6", &f).unwrap();
    let v = check_result(ResultId::Thm2_2, &z6).unwrap();
    assert_eq!(v.consistent, Some(true));
    assert_eq!(v.lhs, Some(true));

    let gr = nilring::expr::build("GR(Z3, C3)", &f).unwrap();
    let v = check_result(ResultId::RemZ3g, &gr).unwrap();
    assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));
}
