//! Nil-clean and weakly nil-clean decompositions, and the element- and
//! ring-level cleanness predicates built on them.
//!
//! A decomposition of `a` is a pair `(e, w)` with `a = e + w`, `w`
//! nilpotent, and `e` an idempotent (nil-clean) or a very idempotent,
//! i.e. `e² = e` or `e² = −e` (weakly nil-clean). No commutation between
//! `e` and `w` is required.
//!
//! Uniqueness differs between the two flavors: a weakly nil-clean element
//! is unique when every decomposition has the same `e²`, a nil-clean one
//! when every decomposition has the same `e`.

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classes::{nilpotency_indices, nilpotent_mask, unit_mask, zero_divisor_mask};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

thread_local! {
    static ENUMERATIONS: Cell<u64> = const { Cell::new(0) };
}

/// Number of decomposition enumerations run on this thread so far.
#[doc(hidden)]
pub fn enumeration_count() -> u64 {
    ENUMERATIONS.with(|c| c.get())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    NilClean,
    WeaklyNilClean,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nil_clean" => Ok(Flavor::NilClean),
            "weakly_nil_clean" => Ok(Flavor::WeaklyNilClean),
            _ => Err(Error::InvalidArgument(format!("unknown flavor `{s}`"))),
        }
    }
}

/// Which of `e`, `−e` is idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub element: Elem,
    pub very_idempotent: Elem,
    pub sign: Sign,
    pub nilpotent: Elem,
    pub nil_index: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementMode {
    WeaklyNilClean,
    UniquelyWeaklyNilClean,
    NilClean,
    UniquelyNilClean,
}

impl ElementMode {
    fn flavor(self) -> Flavor {
        match self {
            ElementMode::WeaklyNilClean | ElementMode::UniquelyWeaklyNilClean => {
                Flavor::WeaklyNilClean
            }
            ElementMode::NilClean | ElementMode::UniquelyNilClean => Flavor::NilClean,
        }
    }

    fn unique(self) -> bool {
        matches!(
            self,
            ElementMode::UniquelyWeaklyNilClean | ElementMode::UniquelyNilClean
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementVerdict {
    pub element: Elem,
    pub mode: ElementMode,
    pub decompositions: Vec<Decomposition>,
    pub holds: bool,
    /// Two decompositions that break uniqueness, when that is why
    /// `holds` is false.
    pub uniqueness_witness: Option<(Decomposition, Decomposition)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingMode {
    NilClean,
    WeaklyNilClean,
    UniquelyNilClean,
    UniquelyWeaklyNilClean,
    #[serde(rename = "uniquely_weakly_D_nil_clean")]
    UniquelyWeaklyDNilClean,
    #[serde(rename = "uniquely_D_nil_clean")]
    UniquelyDNilClean,
    ZerodivVeryIdemOrNilpotent,
}

impl RingMode {
    pub const ALL: [RingMode; 7] = [
        RingMode::NilClean,
        RingMode::WeaklyNilClean,
        RingMode::UniquelyNilClean,
        RingMode::UniquelyWeaklyNilClean,
        RingMode::UniquelyWeaklyDNilClean,
        RingMode::UniquelyDNilClean,
        RingMode::ZerodivVeryIdemOrNilpotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RingMode::NilClean => "nil_clean",
            RingMode::WeaklyNilClean => "weakly_nil_clean",
            RingMode::UniquelyNilClean => "uniquely_nil_clean",
            RingMode::UniquelyWeaklyNilClean => "uniquely_weakly_nil_clean",
            RingMode::UniquelyWeaklyDNilClean => "uniquely_weakly_D_nil_clean",
            RingMode::UniquelyDNilClean => "uniquely_D_nil_clean",
            RingMode::ZerodivVeryIdemOrNilpotent => "zerodiv_very_idem_or_nilpotent",
        }
    }

    /// The element predicate quantified over, and whether the quantifier
    /// ranges over zero-divisors only.
    fn element_mode(self) -> Option<(ElementMode, bool)> {
        match self {
            RingMode::NilClean => Some((ElementMode::NilClean, false)),
            RingMode::WeaklyNilClean => Some((ElementMode::WeaklyNilClean, false)),
            RingMode::UniquelyNilClean => Some((ElementMode::UniquelyNilClean, false)),
            RingMode::UniquelyWeaklyNilClean => Some((ElementMode::UniquelyWeaklyNilClean, false)),
            RingMode::UniquelyWeaklyDNilClean => Some((ElementMode::UniquelyWeaklyNilClean, true)),
            RingMode::UniquelyDNilClean => Some((ElementMode::UniquelyNilClean, true)),
            RingMode::ZerodivVeryIdemOrNilpotent => None,
        }
    }
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown ring predicate `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingVerdict {
    pub mode: RingMode,
    pub holds: bool,
    /// Smallest element at which the predicate fails.
    pub counterexample: Option<Elem>,
    /// The failing element's verdict, for the decomposition-based modes.
    pub counterexample_verdict: Option<ElementVerdict>,
}

/// Precomputed very idempotents and nilpotency data for one ring.
pub struct CleanContext<'r> {
    ring: &'r FiniteRing,
    very_idempotents: Vec<(Elem, Sign)>,
    nil_index: Vec<Option<u32>>,
}

impl<'r> CleanContext<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        let very_idempotents = ring
            .elements()
            .filter_map(|e| {
                let sq = ring.mul(e, e);
                let plus = sq == e;
                let minus = sq == ring.neg(e);
                match (plus, minus) {
                    (true, true) => Some((e, Sign::Both)),
                    (true, false) => Some((e, Sign::Plus)),
                    (false, true) => Some((e, Sign::Minus)),
                    (false, false) => None,
                }
            })
            .collect();
        CleanContext {
            ring,
            very_idempotents,
            nil_index: nilpotency_indices(ring),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    /// All decompositions of `a`, sorted by `(e, w)`.
    pub fn decompositions(&self, a: Elem, flavor: Flavor) -> Vec<Decomposition> {
        ENUMERATIONS.with(|c| c.set(c.get() + 1));
        let r = self.ring;
        self.very_idempotents
            .iter()
            .filter(|(_, sign)| flavor == Flavor::WeaklyNilClean || *sign != Sign::Minus)
            .filter_map(|&(e, sign)| {
                let w = r.sub(a, e);
                self.nil_index[w].map(|k| Decomposition {
                    element: a,
                    very_idempotent: e,
                    sign,
                    nilpotent: w,
                    nil_index: k,
                })
            })
            .collect()
    }

    pub fn element_verdict(&self, a: Elem, mode: ElementMode) -> ElementVerdict {
        let r = self.ring;
        let decompositions = self.decompositions(a, mode.flavor());
        let key = |d: &Decomposition| match mode.flavor() {
            Flavor::WeaklyNilClean => r.mul(d.very_idempotent, d.very_idempotent),
            Flavor::NilClean => d.very_idempotent,
        };
        let uniqueness_witness = if mode.unique() {
            decompositions.split_first().and_then(|(first, rest)| {
                rest.iter()
                    .find(|d| key(d) != key(first))
                    .map(|d| (first.clone(), d.clone()))
            })
        } else {
            None
        };
        let holds = !decompositions.is_empty() && uniqueness_witness.is_none();
        ElementVerdict {
            element: a,
            mode,
            decompositions,
            holds,
            uniqueness_witness,
        }
    }

    pub fn ring_predicate(&self, mode: RingMode) -> Result<RingVerdict> {
        let r = self.ring;
        if r.is_trivial() {
            return Err(Error::TrivialRing);
        }
        let zd = zero_divisor_mask(r);
        let Some((element_mode, zero_divisors_only)) = mode.element_mode() else {
            let counterexample = r
                .elements()
                .find(|&a| zd[a] && self.nil_index[a].is_none() && !self.is_very_idempotent(a));
            return Ok(RingVerdict {
                mode,
                holds: counterexample.is_none(),
                counterexample,
                counterexample_verdict: None,
            });
        };
        for a in r.elements() {
            if zero_divisors_only && !zd[a] {
                continue;
            }
            let verdict = self.element_verdict(a, element_mode);
            if !verdict.holds {
                return Ok(RingVerdict {
                    mode,
                    holds: false,
                    counterexample: Some(a),
                    counterexample_verdict: Some(verdict),
                });
            }
        }
        Ok(RingVerdict {
            mode,
            holds: true,
            counterexample: None,
            counterexample_verdict: None,
        })
    }

    fn is_very_idempotent(&self, a: Elem) -> bool {
        self.very_idempotents
            .binary_search_by_key(&a, |&(e, _)| e)
            .is_ok()
    }
}

pub fn decompositions(r: &FiniteRing, a: Elem, flavor: Flavor) -> Result<Vec<Decomposition>> {
    r.check_element(a)?;
    Ok(CleanContext::new(r).decompositions(a, flavor))
}

pub fn element_verdict(r: &FiniteRing, a: Elem, mode: ElementMode) -> Result<ElementVerdict> {
    r.check_element(a)?;
    Ok(CleanContext::new(r).element_verdict(a, mode))
}

pub fn ring_predicate(r: &FiniteRing, mode: RingMode) -> Result<RingVerdict> {
    CleanContext::new(r).ring_predicate(mode)
}

/// Outcome of comparing `U(R)` with `{x ± 1 : x nilpotent}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitFormCheck {
    pub holds: bool,
    /// A unit not of the form `x ± 1`.
    pub stray_unit: Option<Elem>,
    /// A non-unit of the form `x ± 1`.
    pub stray_form: Option<Elem>,
}

pub fn unit_form_check(r: &FiniteRing) -> Result<UnitFormCheck> {
    if r.is_trivial() {
        return Err(Error::TrivialRing);
    }
    let units = unit_mask(r);
    let nil = nilpotent_mask(r);
    let mut form = vec![false; r.order()];
    for x in r.elements().filter(|&x| nil[x]) {
        form[r.add(x, r.one())] = true;
        form[r.sub(x, r.one())] = true;
    }
    let stray_unit = r.elements().find(|&u| units[u] && !form[u]);
    let stray_form = r.elements().find(|&f| form[f] && !units[f]);
    Ok(UnitFormCheck {
        holds: stray_unit.is_none() && stray_form.is_none(),
        stray_unit,
        stray_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean_ring, direct_product, make_zn, matrix_ring, MatrixShape};

    fn pairs(ds: &[Decomposition]) -> Vec<(Elem, Elem)> {
        ds.iter()
            .map(|d| (d.very_idempotent, d.nilpotent))
            .collect()
    }

    #[test]
    fn minus_one_in_z4_has_two_presentations() {
        let z4 = make_zn(4).unwrap();
        let ds = decompositions(&z4, 3, Flavor::WeaklyNilClean).unwrap();
        assert_eq!(pairs(&ds), [(1, 2), (3, 0)]);
        assert!(ds
            .iter()
            .all(|d| z4.mul(d.very_idempotent, d.very_idempotent) == 1));
        assert_eq!(ds[1].sign, Sign::Minus);
        assert_eq!(ds[0].nil_index, 2);
        let v = element_verdict(&z4, 3, ElementMode::UniquelyWeaklyNilClean).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn small_examples() {
        let z2 = make_zn(2).unwrap();
        let ds = decompositions(&z2, 0, Flavor::WeaklyNilClean).unwrap();
        assert_eq!(pairs(&ds), [(0, 0)]);
        assert_eq!(ds[0].sign, Sign::Both);

        let z5 = make_zn(5).unwrap();
        assert!(decompositions(&z5, 2, Flavor::WeaklyNilClean)
            .unwrap()
            .is_empty());
        assert!(decompositions(&z5, 7, Flavor::WeaklyNilClean).is_err());
    }

    #[test]
    fn z3_squared_discriminates_the_d_variant() {
        let z3 = make_zn(3).unwrap();
        let r = direct_product(&z3, &z3).unwrap();
        let a = r.lookup("(1,2)").unwrap();
        let v = element_verdict(&r, a, ElementMode::WeaklyNilClean).unwrap();
        assert!(!v.holds);

        let uw = ring_predicate(&r, RingMode::UniquelyWeaklyNilClean).unwrap();
        assert!(!uw.holds);
        assert_eq!(uw.counterexample, Some(a));
        assert!(
            ring_predicate(&r, RingMode::UniquelyWeaklyDNilClean)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn boolean_elements_are_uniquely_nil_clean() {
        let b2 = boolean_ring(2).unwrap();
        for x in b2.elements() {
            let v = element_verdict(&b2, x, ElementMode::UniquelyNilClean).unwrap();
            assert!(v.holds);
            assert_eq!(pairs(&v.decompositions), [(x, 0)]);
        }
    }

    #[test]
    fn nil_clean_uniqueness_compares_idempotents() {
        // In Z4, 1 = 1 + 0 and 1 = 3 + 2, but 3 is not idempotent, so the
        // nil-clean list has a single entry.
        let z4 = make_zn(4).unwrap();
        let v = element_verdict(&z4, 1, ElementMode::UniquelyNilClean).unwrap();
        assert!(v.holds);
        assert_eq!(pairs(&v.decompositions), [(1, 0)]);
    }

    #[test]
    fn t2z2_zero_divisors_are_idempotent_or_nilpotent() {
        let z2 = make_zn(2).unwrap();
        let t2 = matrix_ring(&z2, 2, MatrixShape::UpperTriangular).unwrap();
        assert!(
            ring_predicate(&t2, RingMode::ZerodivVeryIdemOrNilpotent)
                .unwrap()
                .holds
        );
        let v = ring_predicate(&t2, RingMode::UniquelyWeaklyDNilClean).unwrap();
        assert!(!v.holds);
        let witness = v.counterexample_verdict.unwrap().uniqueness_witness;
        assert!(witness.is_some());
    }

    #[test]
    fn unit_forms() {
        assert!(unit_form_check(&make_zn(4).unwrap()).unwrap().holds);
        assert!(unit_form_check(&make_zn(3).unwrap()).unwrap().holds);
        let z5 = unit_form_check(&make_zn(5).unwrap()).unwrap();
        assert!(!z5.holds);
        assert_eq!(z5.stray_unit, Some(2));
        assert!(unit_form_check(&make_zn(1).unwrap()).is_err());
    }

    #[test]
    fn modes_parse() {
        for m in RingMode::ALL {
            assert_eq!(m.name().parse::<RingMode>().unwrap(), m);
        }
        assert_eq!("nil_clean".parse::<Flavor>().unwrap(), Flavor::NilClean);
    }
}
