//! One left-hand side, right-hand side and applicability test per result.
//!
//! Left-hand sides are brute-force element predicates and never call the
//! structural classifier. Right-hand sides are built from the classifier,
//! radicals, quotients and ring-level flags; they use decomposition
//! enumeration only where the statement itself names a cleanness property
//! of some ring (a quotient, a corner, the base ring of a group ring).

use serde_json::{json, Value};

use crate::classes::{
    basic_profile, center_mask, idempotent_mask, jacobson_radical, neg_idempotent_mask,
    nilpotent_mask, prime_radical, setwise_nilpotency, very_idempotent_mask, zero_divisor_mask,
};
use crate::cleanness::{ring_predicate, unit_form_check, RingMode};
use crate::construct::make_zn;
use crate::error::{Error, Result};
use crate::expr::{Evaluated, GroupRingParts};
use crate::ideal::quotient;
use crate::iso::find_isomorphism;
use crate::ring::{Elem, FiniteRing};
use crate::structure::{
    classify, classify_mod_j, nontrivial_central_idempotents, peirce_split, ClassTag,
    StructureClass,
};

use super::ResultId;

/// One evaluated side of a statement.
pub struct Side {
    pub value: bool,
    pub witnesses: Vec<(String, Value)>,
}

impl Side {
    fn new(value: bool) -> Self {
        Side {
            value,
            witnesses: Vec::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.witnesses.push((key.to_string(), value));
        self
    }
}

fn label(r: &FiniteRing, x: Elem) -> Value {
    Value::String(r.label(x).to_string())
}

/// A ring-level cleanness predicate with its counterexample, if any.
fn predicate(r: &FiniteRing, mode: RingMode, key: &str) -> Result<Side> {
    let v = ring_predicate(r, mode)?;
    let mut side = Side::new(v.holds);
    if let Some(c) = v.counterexample {
        side = side.with(&format!("{key}_counterexample"), label(r, c));
    }
    if let Some((d1, d2)) = v.counterexample_verdict.and_then(|e| e.uniqueness_witness) {
        let pair = |e: Elem, w: Elem| json!({ "e": r.label(e), "w": r.label(w) });
        side = side.with(
            &format!("{key}_decompositions"),
            json!([
                pair(d1.very_idempotent, d1.nilpotent),
                pair(d2.very_idempotent, d2.nilpotent)
            ]),
        );
    }
    Ok(side)
}

fn parts(input: &Evaluated) -> Result<&GroupRingParts> {
    input.group_ring.as_ref().ok_or_else(|| {
        Error::InvalidArgument(format!("{} is not a group ring", input.ring.provenance()))
    })
}

/// Every element of `R` satisfies `keep`; the first failure is recorded.
fn all_elements(r: &FiniteRing, key: &str, keep: impl Fn(Elem) -> bool) -> Side {
    match r.elements().find(|&x| !keep(x)) {
        None => Side::new(true),
        Some(x) => Side::new(false).with(key, label(r, x)),
    }
}

fn tags(c: &StructureClass) -> Value {
    json!(c.tag_names())
}

fn lists(class: &StructureClass, key: &str, allowed: &[ClassTag], any_field: bool) -> Side {
    let value = class.any_of(allowed) || (any_field && class.is_field());
    Side::new(value).with(key, tags(class))
}

const VERY_IDEMPOTENT_LIST: [ClassTag; 3] = [ClassTag::Z3, ClassTag::Boolean, ClassTag::Z3xBoolean];
const ZERO_DIVISOR_LIST: [ClassTag; 3] = [ClassTag::Z3xZ3, ClassTag::Z3xBoolean, ClassTag::Boolean];

fn iso_to_zn(r: &FiniteRing, n: usize) -> Result<bool> {
    Ok(r.order() == n && find_isomorphism(r, &make_zn(n)?)?.is_some())
}

fn j_is_nil(r: &FiniteRing) -> Result<(bool, Option<usize>)> {
    let j = jacobson_radical(r)?;
    let k = setwise_nilpotency(r, &j);
    Ok((k.is_some(), k))
}

fn augmentation_is_nil(input: &Evaluated) -> Result<bool> {
    let p = parts(input)?;
    let nil = nilpotent_mask(&input.ring);
    Ok(p.augmentation.kernel().iter().all(|x| nil[x]))
}

fn periodic(r: &FiniteRing) -> Result<Side> {
    let profile = basic_profile(r)?;
    let exps: Vec<u32> = profile.periodic_witnesses.iter().map(|w| w.0).collect();
    let min = exps.iter().copied().min().unwrap_or(0);
    Ok(Side::new(profile.witnesses_hold(r))
        .with("periodic_min_exponent", json!(min))
        .with("periodic_max_exponent", json!(profile.max_exponent())))
}

fn and(parts: Vec<Side>) -> Side {
    let mut out = Side::new(true);
    for p in parts {
        out.value &= p.value;
        out.witnesses.extend(p.witnesses);
    }
    out
}

fn or(parts: Vec<Side>) -> Side {
    let mut out = Side::new(false);
    for p in parts {
        out.value |= p.value;
        out.witnesses.extend(p.witnesses);
    }
    out
}

fn flag(key: &str, value: bool) -> Side {
    Side::new(value).with(key, json!(value))
}

/// Reason the result does not apply to this input, if any.
pub fn inapplicable(id: ResultId, input: &Evaluated) -> Result<Option<String>> {
    let r = &input.ring;
    if r.is_trivial() {
        return Ok(Some("trivial ring".into()));
    }
    if id.needs_group() && input.group_ring.is_none() {
        return Ok(Some("needs a group ring input".into()));
    }
    let reason = match id {
        ResultId::Thm2_7 if !augmentation_is_nil(input)? => Some("I(R,G) is not nil".to_string()),
        ResultId::Cor2_8 => {
            let p = parts(input)?;
            match p.group.prime_power_base() {
                None => Some(format!("|G| = {} is not a prime power", p.group.order())),
                Some(q) => {
                    let j = jacobson_radical(&p.base)?;
                    let image = p.base.integer(q);
                    (!j.contains(image)).then(|| format!("{q} is not in J(R)"))
                }
            }
        }
        ResultId::RemLocal if !basic_profile(r)?.local => Some("ring is not local".into()),
        ResultId::Cor4_9 if basic_profile(r)?.two_nilpotent => Some("2 is nilpotent".into()),
        _ => None,
    };
    Ok(reason)
}

pub fn lhs(id: ResultId, input: &Evaluated) -> Result<Side> {
    use ResultId::*;
    let r = &input.ring;
    let side = match id {
        Lem2_1 => {
            let vi = very_idempotent_mask(r);
            all_elements(r, "not_very_idempotent", |x| vi[x])
        }
        Thm2_2 | Cor2_3 | Cor2_4 | Prop2_5 | RemLocal | Lem2_6 | Thm2_7 | Cor2_8 => predicate(
            r,
            RingMode::UniquelyWeaklyNilClean,
            "uniquely_weakly_nil_clean",
        )?,
        Lem3_1 | Thm3_2 | Thm3_4 => predicate(
            r,
            RingMode::UniquelyWeaklyDNilClean,
            "uniquely_weakly_D_nil_clean",
        )?,
        Lem3_3 => {
            let vi = very_idempotent_mask(r);
            let zd = zero_divisor_mask(r);
            all_elements(r, "zero_divisor_not_very_idempotent", |x| !zd[x] || vi[x])
        }
        Lem3_5 => {
            let vi = very_idempotent_mask(r);
            let nil = nilpotent_mask(r);
            all_elements(r, "neither_very_idempotent_nor_nilpotent", |x| {
                vi[x] || nil[x]
            })
        }
        Lem3_6 => {
            let nil = nilpotent_mask(r);
            let id = idempotent_mask(r);
            let neg = neg_idempotent_mask(r);
            all_elements(r, "outside_n_id_neg_id", |x| nil[x] || id[x] || neg[x])
        }
        Thm3_7 => {
            let abelian = basic_profile(r)?.abelian;
            let vi = very_idempotent_mask(r);
            let nil = nilpotent_mask(r);
            let zd = zero_divisor_mask(r);
            and(vec![
                flag("abelian", abelian),
                all_elements(r, "zero_divisor_outside_vi_n", |x| {
                    !zd[x] || vi[x] || nil[x]
                }),
            ])
        }
        Cor3_8 => {
            let abelian = basic_profile(r)?.abelian;
            and(vec![
                flag("abelian", abelian),
                zero_divisors_idempotent_or_nilpotent(r),
            ])
        }
        RemT2z2 => {
            let profile = basic_profile(r)?;
            and(vec![
                zero_divisors_idempotent_or_nilpotent(r),
                flag("boolean", profile.boolean).negated(),
                flag("d_ring", profile.d_ring).negated(),
            ])
        }
        Lem4_1 | Prop4_2 | Lem4_3 | Thm4_4 | Cor4_9 => {
            predicate(r, RingMode::UniquelyDNilClean, "uniquely_D_nil_clean")?
        }
        Lem4_5 | Thm4_6 | Cor4_7 | Cor4_8 => {
            predicate(r, RingMode::UniquelyNilClean, "uniquely_nil_clean")?
        }
        RemZ3g => {
            let p = parts(input)?;
            let base_is_z3 = iso_to_zn(&p.base, 3)?;
            let three_group = p.group.prime_power_base() == Some(3);
            and(vec![
                flag("base_is_z3", base_is_z3),
                flag("three_group", three_group),
            ])
        }
    };
    Ok(side)
}

fn zero_divisors_idempotent_or_nilpotent(r: &FiniteRing) -> Side {
    let id = idempotent_mask(r);
    let nil = nilpotent_mask(r);
    let zd = zero_divisor_mask(r);
    all_elements(r, "zero_divisor_outside_id_n", |x| {
        !zd[x] || id[x] || nil[x]
    })
}

impl Side {
    fn negated(mut self) -> Self {
        self.value = !self.value;
        self
    }
}

pub fn rhs(id: ResultId, input: &Evaluated) -> Result<Side> {
    use ResultId::*;
    let r = &input.ring;
    let side = match id {
        Lem2_1 => lists(
            &classify(r)?,
            "classification",
            &VERY_IDEMPOTENT_LIST,
            false,
        ),
        Thm2_2 => {
            let profile = basic_profile(r)?;
            and(vec![
                flag("abelian", profile.abelian),
                periodic(r)?,
                lists(
                    &classify_mod_j(r)?,
                    "mod_j_classification",
                    &VERY_IDEMPOTENT_LIST,
                    false,
                ),
            ])
        }
        Cor2_3 => {
            let profile = basic_profile(r)?;
            let (nil, k) = j_is_nil(r)?;
            and(vec![
                flag("abelian", profile.abelian),
                Side::new(nil).with("j_nilpotency", json!(k)),
                lists(
                    &classify_mod_j(r)?,
                    "mod_j_classification",
                    &VERY_IDEMPOTENT_LIST,
                    false,
                ),
            ])
        }
        Cor2_4 => {
            let units = unit_form_check(r)?;
            let mut form = Side::new(units.holds);
            if let Some(u) = units.stray_unit {
                form = form.with("unit_not_of_form", label(r, u));
            }
            if let Some(u) = units.stray_form {
                form = form.with("non_unit_of_form", label(r, u));
            }
            and(vec![
                periodic(r)?,
                predicate(
                    r,
                    RingMode::UniquelyWeaklyDNilClean,
                    "uniquely_weakly_D_nil_clean",
                )?,
                form,
            ])
        }
        Prop2_5 => {
            let profile = basic_profile(r)?;
            let (q, _) = quotient(r, &prime_radical(r)?)?;
            and(vec![
                flag("abelian", profile.abelian),
                Side::new(true).with("mod_p_order", json!(q.order())),
                predicate(
                    &q,
                    RingMode::UniquelyWeaklyNilClean,
                    "mod_p_uniquely_weakly_nil_clean",
                )?,
            ])
        }
        Lem2_6 | Thm2_7 | Cor2_8 => predicate(
            &parts(input)?.base,
            RingMode::UniquelyWeaklyNilClean,
            "base_uniquely_weakly_nil_clean",
        )?,
        RemLocal => {
            let (nil, k) = j_is_nil(r)?;
            let (q, _) = quotient(r, &jacobson_radical(r)?)?;
            let small = iso_to_zn(&q, 2)? || iso_to_zn(&q, 3)?;
            and(vec![
                Side::new(nil).with("j_nilpotency", json!(k)),
                Side::new(small).with("mod_j_order", json!(q.order())),
            ])
        }
        Lem3_1 | Lem3_5 | Lem4_1 => flag("abelian", basic_profile(r)?.abelian),
        Thm3_2 => {
            let d_ring = basic_profile(r)?.d_ring;
            let mut split = Side::new(false);
            for f in nontrivial_central_idempotents(r) {
                let s = peirce_split(r, f)?;
                let a = ring_predicate(&s.corner_f, RingMode::UniquelyWeaklyNilClean)?.holds;
                let b = ring_predicate(&s.corner_cof, RingMode::UniquelyWeaklyNilClean)?.holds;
                if a && b {
                    split = Side::new(true).with("split_idempotent", label(r, f));
                    break;
                }
            }
            or(vec![flag("d_ring", d_ring), split])
        }
        Lem3_3 => lists(&classify(r)?, "classification", &ZERO_DIVISOR_LIST, true),
        Thm3_4 => {
            let profile = basic_profile(r)?;
            let structural = and(vec![
                flag("abelian", profile.abelian),
                periodic(r)?,
                lists(
                    &classify_mod_j(r)?,
                    "mod_j_classification",
                    &ZERO_DIVISOR_LIST,
                    true,
                ),
            ]);
            or(vec![flag("d_ring", profile.d_ring), structural])
        }
        Lem3_6 => {
            let listed = lists(
                &classify(r)?,
                "classification",
                &VERY_IDEMPOTENT_LIST,
                false,
            );
            let z4 = iso_to_zn(r, 4)?;
            let side = or(vec![
                listed,
                Side::new(z4).with("isomorphic_to_z4", json!(z4)),
            ]);
            // Condition (2), R = J ∪ Id ∪ −Id, is recorded alongside.
            let j = jacobson_radical(r)?;
            let id = idempotent_mask(r);
            let neg = neg_idempotent_mask(r);
            let cond2 = r.elements().all(|x| j.contains(x) || id[x] || neg[x]);
            side.with("j_id_neg_id_cover", json!(cond2))
        }
        Thm3_7 => {
            let c = classify(r)?;
            lists(
                &c,
                "classification",
                &[
                    ClassTag::DRing,
                    ClassTag::Boolean,
                    ClassTag::Z3xZ3,
                    ClassTag::Z3xBoolean,
                ],
                false,
            )
        }
        Cor3_8 => lists(
            &classify(r)?,
            "classification",
            &[ClassTag::DRing, ClassTag::Boolean],
            false,
        ),
        RemT2z2 => flag("abelian", basic_profile(r)?.abelian).negated(),
        Prop4_2 => central_idempotent_lift(r),
        Lem4_3 => or(vec![
            flag("d_ring", basic_profile(r)?.d_ring),
            predicate(r, RingMode::UniquelyNilClean, "uniquely_nil_clean")?,
        ]),
        Thm4_4 => {
            let profile = basic_profile(r)?;
            let structural = and(vec![
                flag("abelian", profile.abelian),
                periodic(r)?,
                lists(
                    &classify_mod_j(r)?,
                    "mod_j_classification",
                    &[ClassTag::Boolean],
                    false,
                ),
            ]);
            or(vec![flag("d_ring", profile.d_ring), structural])
        }
        Lem4_5 => {
            let profile = basic_profile(r)?;
            let (nil, k) = j_is_nil(r)?;
            and(vec![
                flag("abelian", profile.abelian),
                lists(
                    &classify_mod_j(r)?,
                    "mod_j_classification",
                    &[ClassTag::Boolean],
                    false,
                ),
                Side::new(nil).with("j_nilpotency", json!(k)),
            ])
        }
        Thm4_6 => and(vec![
            flag("two_nilpotent", basic_profile(r)?.two_nilpotent),
            predicate(
                r,
                RingMode::UniquelyWeaklyNilClean,
                "uniquely_weakly_nil_clean",
            )?,
        ]),
        Cor4_7 => {
            let profile = basic_profile(r)?;
            let (q, _) = quotient(r, &prime_radical(r)?)?;
            and(vec![
                flag("abelian", profile.abelian),
                Side::new(true).with("mod_p_order", json!(q.order())),
                predicate(&q, RingMode::UniquelyNilClean, "mod_p_uniquely_nil_clean")?,
            ])
        }
        Cor4_8 => {
            let nil = augmentation_is_nil(input)?;
            and(vec![
                predicate(
                    &parts(input)?.base,
                    RingMode::UniquelyNilClean,
                    "base_uniquely_nil_clean",
                )?,
                flag("augmentation_ideal_nil", nil),
            ])
        }
        Cor4_9 => predicate(
            r,
            RingMode::UniquelyWeaklyDNilClean,
            "uniquely_weakly_D_nil_clean",
        )?,
        RemZ3g => and(vec![
            predicate(
                r,
                RingMode::UniquelyWeaklyNilClean,
                "uniquely_weakly_nil_clean",
            )?,
            predicate(r, RingMode::UniquelyNilClean, "uniquely_nil_clean")?.negated(),
        ]),
    };
    Ok(side)
}

/// Every zero-divisor `a` has a central idempotent `e` with `a − e` nilpotent.
fn central_idempotent_lift(r: &FiniteRing) -> Side {
    let id = idempotent_mask(r);
    let center = center_mask(r);
    let nil = nilpotent_mask(r);
    let zd = zero_divisor_mask(r);
    let central: Vec<Elem> = r.elements().filter(|&e| id[e] && center[e]).collect();
    all_elements(r, "zero_divisor_without_central_lift", |a| {
        !zd[a] || central.iter().any(|&e| nil[r.sub(a, e)])
    })
}
