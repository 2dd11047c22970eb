//! Structural classification: fields, Boolean rings, and products with
//! `Z3` factors, detected through Peirce splits along central idempotents.

use std::cell::Cell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::classes::{basic_profile, center_mask, idempotent_mask, jacobson_radical};
use crate::construct::{direct_product, make_zn};
use crate::error::{Error, Result};
use crate::ideal::quotient;
use crate::iso::find_isomorphism;
use crate::map::RingMap;
use crate::ring::{Elem, FiniteRing};

thread_local! {
    static CLASSIFICATIONS: Cell<u64> = const { Cell::new(0) };
}

/// Number of `classify` calls made on this thread so far.
#[doc(hidden)]
pub fn classification_count() -> u64 {
    CLASSIFICATIONS.with(|c| c.get())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Field(usize),
    Boolean,
    Z3,
    Z3xBoolean,
    Z3xZ3,
    Z3xZ3xBoolean,
    DRing,
    Other,
}

impl ClassTag {
    pub fn name(&self) -> String {
        match self {
            ClassTag::Field(q) => format!("field({q})"),
            ClassTag::Boolean => "boolean".into(),
            ClassTag::Z3 => "z3".into(),
            ClassTag::Z3xBoolean => "z3_x_boolean".into(),
            ClassTag::Z3xZ3 => "z3_x_z3".into(),
            ClassTag::Z3xZ3xBoolean => "z3_x_z3_x_boolean".into(),
            ClassTag::DRing => "d_ring".into(),
            ClassTag::Other => "other".into(),
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for ClassTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureClass {
    pub tags: BTreeSet<ClassTag>,
    /// Central idempotent realizing each product tag, keyed by tag name.
    pub witnesses: BTreeMap<String, Elem>,
}

impl StructureClass {
    pub fn has(&self, tag: ClassTag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn is_field(&self) -> bool {
        self.tags.iter().any(|t| matches!(t, ClassTag::Field(_)))
    }

    /// True when any of `tags` was reported.
    pub fn any_of(&self, tags: &[ClassTag]) -> bool {
        tags.iter().any(|t| self.tags.contains(t))
    }

    pub fn tag_names(&self) -> Vec<String> {
        self.tags.iter().map(ClassTag::name).collect()
    }
}

/// `R ≅ fR × (1−f)R` for a central idempotent `f`.
#[derive(Debug, Clone)]
pub struct PeirceSplit {
    pub idempotent: Elem,
    pub corner_f: FiniteRing,
    pub corner_cof: FiniteRing,
    /// Elements of `R` making up each corner, in corner index order.
    pub elements_f: Vec<Elem>,
    pub elements_cof: Vec<Elem>,
    /// The verified isomorphism `R → corner_f × corner_cof`.
    pub pairing: RingMap,
}

fn is_central_idempotent(r: &FiniteRing, f: Elem) -> bool {
    r.mul(f, f) == f && r.elements().all(|x| r.mul(f, x) == r.mul(x, f))
}

/// The subring `eR` with identity `e`, for a central idempotent `e`.
fn corner(r: &FiniteRing, e: Elem, name: &str) -> Result<(FiniteRing, Vec<Elem>)> {
    let mut members: Vec<Elem> = r.elements().map(|x| r.mul(e, x)).collect();
    members.sort_unstable();
    members.dedup();
    let m = members.len();
    let index = |x: Elem| members.binary_search(&x).expect("corner is closed");
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &members {
        for &b in &members {
            add.push(index(r.add(a, b)) as u16);
            mul.push(index(r.mul(a, b)) as u16);
        }
    }
    let labels = members.iter().map(|&x| r.label(x).to_string()).collect();
    let provenance = format!("{name}({})", r.provenance());
    let ring = FiniteRing::assemble(m, add, mul, index(r.zero()), index(e), labels, provenance)?;
    Ok((ring, members))
}

pub fn peirce_split(r: &FiniteRing, f: Elem) -> Result<PeirceSplit> {
    r.check_element(f)?;
    if r.mul(f, f) != f {
        return Err(Error::InvalidSplit(format!(
            "{} is not idempotent",
            r.label(f)
        )));
    }
    if !is_central_idempotent(r, f) {
        return Err(Error::InvalidSplit(format!(
            "{} is not central",
            r.label(f)
        )));
    }
    if f == r.zero() || f == r.one() {
        return Err(Error::InvalidSplit(format!(
            "{} is a trivial idempotent",
            r.label(f)
        )));
    }
    let cof = r.sub(r.one(), f);
    let (corner_f, elements_f) = corner(r, f, &format!("{}R", r.label(f)))?;
    let (corner_cof, elements_cof) = corner(r, cof, &format!("{}R", r.label(cof)))?;
    let product = direct_product(&corner_f, &corner_cof)?;
    let width = corner_cof.order();
    let image = r
        .elements()
        .map(|x| {
            let a = elements_f.binary_search(&r.mul(f, x)).expect("in corner");
            let b = elements_cof
                .binary_search(&r.mul(cof, x))
                .expect("in corner");
            a * width + b
        })
        .collect();
    let pairing = RingMap::new(r, &product, image)?;
    if !pairing.is_bijective() {
        return Err(Error::Internal(format!(
            "Peirce pairing at {} is not bijective",
            r.label(f)
        )));
    }
    Ok(PeirceSplit {
        idempotent: f,
        corner_f,
        corner_cof,
        elements_f,
        elements_cof,
        pairing,
    })
}

/// Nontrivial central idempotents of `r` in index order.
pub fn nontrivial_central_idempotents(r: &FiniteRing) -> Vec<Elem> {
    let idem = idempotent_mask(r);
    let center = center_mask(r);
    r.elements()
        .filter(|&f| idem[f] && center[f] && f != r.zero() && f != r.one())
        .collect()
}

fn corner_order(r: &FiniteRing, f: Elem) -> usize {
    let mut seen = vec![false; r.order()];
    r.elements()
        .filter(|&x| !std::mem::replace(&mut seen[r.mul(f, x)], true))
        .count()
}

fn is_boolean(r: &FiniteRing) -> bool {
    r.elements().all(|x| r.mul(x, x) == x)
}

fn is_z3(r: &FiniteRing, z3: &FiniteRing) -> Result<bool> {
    Ok(r.order() == 3 && find_isomorphism(r, z3)?.is_some())
}

pub fn classify(r: &FiniteRing) -> Result<StructureClass> {
    CLASSIFICATIONS.with(|c| c.set(c.get() + 1));
    let profile = basic_profile(r)?;
    let mut tags = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    if profile.field {
        tags.insert(ClassTag::Field(r.order()));
    }
    if profile.boolean {
        tags.insert(ClassTag::Boolean);
    }
    if profile.field && r.order() == 3 {
        tags.insert(ClassTag::Z3);
    }
    if profile.d_ring {
        tags.insert(ClassTag::DRing);
    }

    let z3 = make_zn(3)?;
    let n = r.order();
    for f in nontrivial_central_idempotents(r) {
        let a = corner_order(r, f);
        let candidate = (a == 3 && n % 3 == 0) || (a == 9 && n % 9 == 0 && n > 9);
        if !candidate {
            continue;
        }
        let split = peirce_split(r, f)?;
        let mut found = Vec::new();
        if a == 3 && is_z3(&split.corner_f, &z3)? {
            if is_boolean(&split.corner_cof) {
                found.push(ClassTag::Z3xBoolean);
            }
            if is_z3(&split.corner_cof, &z3)? {
                found.push(ClassTag::Z3xZ3);
            }
        }
        if a == 9
            && is_boolean(&split.corner_cof)
            && classify(&split.corner_f)?.has(ClassTag::Z3xZ3)
        {
            found.push(ClassTag::Z3xZ3xBoolean);
        }
        for tag in found {
            tags.insert(tag);
            witnesses.entry(tag.name()).or_insert(f);
        }
    }
    if tags.is_empty() {
        tags.insert(ClassTag::Other);
    }
    Ok(StructureClass { tags, witnesses })
}

/// Classification of `R / J(R)`.
pub fn classify_mod_j(r: &FiniteRing) -> Result<StructureClass> {
    let j = jacobson_radical(r)?;
    let (q, _) = quotient(r, &j)?;
    classify(&q)
}
