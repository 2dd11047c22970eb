//! Element classes, radicals and ring-level profile flags.
//!
//! All classes are computed by exhaustive scans of the operation tables.
//! Nilpotency searches stop at exponent `n`, which is enough because the
//! power sequence of any element cycles within `n` steps.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::tarjan_scc;
use crate::ideal::ideal_violation;
use crate::ring::{Elem, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassRole {
    Idempotents,
    NegIdempotents,
    VeryIdempotents,
    Nilpotents,
    Units,
    ZeroDivisors,
    Center,
    Jacobson,
    PrimeRadical,
    Custom(String),
}

impl ClassRole {
    pub const BUILTIN: [ClassRole; 9] = [
        ClassRole::Idempotents,
        ClassRole::NegIdempotents,
        ClassRole::VeryIdempotents,
        ClassRole::Nilpotents,
        ClassRole::Units,
        ClassRole::ZeroDivisors,
        ClassRole::Center,
        ClassRole::Jacobson,
        ClassRole::PrimeRadical,
    ];

    pub fn name(&self) -> String {
        match self {
            ClassRole::Idempotents => "idempotents".into(),
            ClassRole::NegIdempotents => "neg_idempotents".into(),
            ClassRole::VeryIdempotents => "very_idempotents".into(),
            ClassRole::Nilpotents => "nilpotents".into(),
            ClassRole::Units => "units".into(),
            ClassRole::ZeroDivisors => "zero_divisors".into(),
            ClassRole::Center => "center".into(),
            ClassRole::Jacobson => "jacobson".into(),
            ClassRole::PrimeRadical => "prime_radical".into(),
            ClassRole::Custom(s) => s.clone(),
        }
    }
}

impl fmt::Display for ClassRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for ClassRole {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl FromStr for ClassRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassRole::BUILTIN
            .iter()
            .find(|r| r.name() == s)
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("unknown element class `{s}`")))
    }
}

/// Extra data recorded per member of a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    None,
    /// Minimal `k` with `x^k = 0`.
    NilpotencyIndex(Vec<u32>),
    /// Two-sided inverse.
    Inverse(Vec<Elem>),
}

/// A subset of a ring's elements, sorted ascending without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementSet {
    ring: String,
    role: ClassRole,
    members: Vec<Elem>,
    payload: Payload,
}

impl ElementSet {
    pub fn new(ring: &str, role: ClassRole, mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        ElementSet {
            ring: ring.to_string(),
            role,
            members,
            payload: Payload::None,
        }
    }

    pub fn from_mask(r: &FiniteRing, role: ClassRole, mask: &[bool]) -> Self {
        let members = r.elements().filter(|&x| mask[x]).collect();
        ElementSet::new(r.provenance(), role, members)
    }

    pub fn ring(&self) -> &str {
        &self.ring
    }

    pub fn role(&self) -> &ClassRole {
        &self.role
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    pub fn mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for &x in &self.members {
            mask[x] = true;
        }
        mask
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn same_members(&self, other: &ElementSet) -> bool {
        self.members == other.members
    }

    /// `{a, b, ...}` using the ring's element labels.
    pub fn render(&self, r: &FiniteRing) -> String {
        let parts: Vec<&str> = self.members.iter().map(|&x| r.label(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

pub fn idempotent_mask(r: &FiniteRing) -> Vec<bool> {
    r.elements().map(|x| r.mul(x, x) == x).collect()
}

/// Elements with `e² = −e`.
pub fn neg_idempotent_mask(r: &FiniteRing) -> Vec<bool> {
    r.elements().map(|x| r.mul(x, x) == r.neg(x)).collect()
}

pub fn very_idempotent_mask(r: &FiniteRing) -> Vec<bool> {
    r.elements()
        .map(|x| {
            let sq = r.mul(x, x);
            sq == x || sq == r.neg(x)
        })
        .collect()
}

/// Minimal nilpotency index per element, `None` for non-nilpotents.
pub fn nilpotency_indices(r: &FiniteRing) -> Vec<Option<u32>> {
    let n = r.order();
    r.elements()
        .map(|x| {
            let mut p = x;
            for k in 1..=n as u32 {
                if p == r.zero() {
                    return Some(k);
                }
                p = r.mul(p, x);
            }
            None
        })
        .collect()
}

pub fn nilpotent_mask(r: &FiniteRing) -> Vec<bool> {
    nilpotency_indices(r)
        .into_iter()
        .map(|k| k.is_some())
        .collect()
}

/// Two-sided inverse per element, `None` for non-units.
pub fn unit_inverses(r: &FiniteRing) -> Vec<Option<Elem>> {
    r.elements()
        .map(|x| {
            r.elements()
                .find(|&y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
        })
        .collect()
}

pub fn unit_mask(r: &FiniteRing) -> Vec<bool> {
    unit_inverses(r).into_iter().map(|y| y.is_some()).collect()
}

/// `a` with `ab = 0 = ca` for some nonzero `b` and `c`; zero qualifies
/// whenever the ring is nontrivial.
pub fn zero_divisor_mask(r: &FiniteRing) -> Vec<bool> {
    let z = r.zero();
    r.elements()
        .map(|a| {
            let right = r.elements().any(|b| b != z && r.mul(a, b) == z);
            right && r.elements().any(|c| c != z && r.mul(c, a) == z)
        })
        .collect()
}

pub fn center_mask(r: &FiniteRing) -> Vec<bool> {
    r.elements()
        .map(|x| r.elements().all(|y| r.mul(x, y) == r.mul(y, x)))
        .collect()
}

pub fn compute_class(r: &FiniteRing, role: &ClassRole) -> Result<ElementSet> {
    let set = match role {
        ClassRole::Idempotents => ElementSet::from_mask(r, role.clone(), &idempotent_mask(r)),
        ClassRole::NegIdempotents => {
            ElementSet::from_mask(r, role.clone(), &neg_idempotent_mask(r))
        }
        ClassRole::VeryIdempotents => {
            ElementSet::from_mask(r, role.clone(), &very_idempotent_mask(r))
        }
        ClassRole::Nilpotents => {
            let idx = nilpotency_indices(r);
            let members: Vec<Elem> = r.elements().filter(|&x| idx[x].is_some()).collect();
            let payload = members.iter().map(|&x| idx[x].unwrap_or(0)).collect();
            let mut set = ElementSet::new(r.provenance(), role.clone(), members);
            set.payload = Payload::NilpotencyIndex(payload);
            set
        }
        ClassRole::Units => {
            let inv = unit_inverses(r);
            let members: Vec<Elem> = r.elements().filter(|&x| inv[x].is_some()).collect();
            let payload = members.iter().map(|&x| inv[x].unwrap_or(0)).collect();
            let mut set = ElementSet::new(r.provenance(), role.clone(), members);
            set.payload = Payload::Inverse(payload);
            set
        }
        ClassRole::ZeroDivisors => ElementSet::from_mask(r, role.clone(), &zero_divisor_mask(r)),
        ClassRole::Center => ElementSet::from_mask(r, role.clone(), &center_mask(r)),
        ClassRole::Jacobson => jacobson_radical(r)?,
        ClassRole::PrimeRadical => prime_radical(r)?,
        ClassRole::Custom(name) => {
            return Err(Error::InvalidArgument(format!(
                "`{name}` is not a computable class"
            )))
        }
    };
    Ok(set)
}

/// `J(R) = {x : 1 − a·x is a unit for every a}`.
pub fn jacobson_radical(r: &FiniteRing) -> Result<ElementSet> {
    let units = unit_mask(r);
    let mask: Vec<bool> = r
        .elements()
        .map(|x| r.elements().all(|a| units[r.sub(r.one(), r.mul(a, x))]))
        .collect();
    if let Some(why) = ideal_violation(r, &mask) {
        return Err(Error::Internal(format!(
            "computed Jacobson radical of {} is not an ideal: {why}",
            r.provenance()
        )));
    }
    Ok(ElementSet::from_mask(r, ClassRole::Jacobson, &mask))
}

/// The successor lists `x → x·r·x` over all `r`, deduplicated.
pub(crate) fn strong_nilpotence_graph(r: &FiniteRing) -> Vec<Vec<Elem>> {
    let n = r.order();
    let mut seen = vec![usize::MAX; n];
    r.elements()
        .map(|x| {
            let mut succ = Vec::new();
            for a in r.elements() {
                let y = r.mul(r.mul(x, a), x);
                if seen[y] != x {
                    seen[y] = x;
                    succ.push(y);
                }
            }
            succ
        })
        .collect()
}

/// The prime radical as the set of strongly nilpotent elements.
///
/// `x` is strongly nilpotent when every sequence `x, x r₀ x, ...` reaches
/// zero. Over a finite ring that fails exactly when some path from `x`
/// reaches a cycle of nonzero elements, so we find the cyclic components of
/// the graph on nonzero elements and mark everything that can reach them.
pub fn prime_radical(r: &FiniteRing) -> Result<ElementSet> {
    let n = r.order();
    let z = r.zero();
    let full = strong_nilpotence_graph(r);
    let adj: Vec<Vec<Elem>> = full
        .iter()
        .enumerate()
        .map(|(x, succ)| {
            if x == z {
                Vec::new()
            } else {
                succ.iter().copied().filter(|&y| y != z).collect()
            }
        })
        .collect();

    let mut escapes = vec![false; n];
    for comp in tarjan_scc(&adj) {
        let cyclic = comp.len() > 1 || adj[comp[0]].contains(&comp[0]);
        if cyclic {
            for &x in &comp {
                escapes[x] = true;
            }
        }
    }
    let mut rev = vec![Vec::new(); n];
    for (x, succ) in adj.iter().enumerate() {
        for &y in succ {
            rev[y].push(x);
        }
    }
    let mut queue: Vec<Elem> = (0..n).filter(|&x| escapes[x]).collect();
    while let Some(y) = queue.pop() {
        for &x in &rev[y] {
            if !escapes[x] {
                escapes[x] = true;
                queue.push(x);
            }
        }
    }

    let mask: Vec<bool> = escapes.iter().map(|&e| !e).collect();
    if let Some(why) = ideal_violation(r, &mask) {
        return Err(Error::Internal(format!(
            "computed prime radical of {} is not an ideal: {why}",
            r.provenance()
        )));
    }
    let set = ElementSet::from_mask(r, ClassRole::PrimeRadical, &mask);
    let jacobson = jacobson_radical(r)?;
    if !set.is_subset(&jacobson) {
        return Err(Error::Internal(format!(
            "prime radical of {} is not contained in the Jacobson radical",
            r.provenance()
        )));
    }
    Ok(set)
}

/// Least `k ≤ |R|` with every `k`-fold product of members equal to zero.
pub fn setwise_nilpotency(r: &FiniteRing, set: &ElementSet) -> Option<usize> {
    let n = r.order();
    let mut current = set.mask(n);
    for k in 1..=n {
        if r.elements().all(|x| !current[x] || x == r.zero()) {
            return Some(k);
        }
        let mut next = vec![false; n];
        for p in r.elements().filter(|&p| current[p]) {
            for &s in set.members() {
                next[r.mul(p, s)] = true;
            }
        }
        current = next;
    }
    None
}

/// Ring-level flags derived from the element classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicProfile {
    pub abelian: bool,
    pub boolean: bool,
    pub field: bool,
    pub local: bool,
    pub d_ring: bool,
    pub two_nilpotent: bool,
    pub commutative: bool,
    /// Per element `(m, n)` with `m > n ≥ 1` and `x^m = x^n`.
    pub periodic_witnesses: Vec<(u32, u32)>,
}

impl BasicProfile {
    /// Re-evaluates every stored periodicity witness.
    pub fn witnesses_hold(&self, r: &FiniteRing) -> bool {
        self.periodic_witnesses.len() == r.order()
            && self
                .periodic_witnesses
                .iter()
                .enumerate()
                .all(|(x, &(m, n))| m > n && n >= 1 && r.pow(x, m) == r.pow(x, n))
    }

    pub fn max_exponent(&self) -> u32 {
        self.periodic_witnesses
            .iter()
            .map(|w| w.0)
            .max()
            .unwrap_or(0)
    }
}

/// First repeat `(m, n)`, `m > n`, in the sequence `x, x², x³, ...`.
pub fn first_power_repeat(r: &FiniteRing, x: Elem) -> (u32, u32) {
    let mut seen = std::collections::HashMap::new();
    let mut p = x;
    let mut k = 1u32;
    loop {
        if let Some(&first) = seen.get(&p) {
            return (k, first);
        }
        seen.insert(p, k);
        p = r.mul(p, x);
        k += 1;
    }
}

pub fn basic_profile(r: &FiniteRing) -> Result<BasicProfile> {
    if r.is_trivial() {
        return Err(Error::TrivialRing);
    }
    let idem = idempotent_mask(r);
    let center = center_mask(r);
    let nil = nilpotent_mask(r);
    let units = unit_mask(r);
    let zd = zero_divisor_mask(r);
    let commutative = r.is_commutative();

    let abelian = r.elements().all(|x| !idem[x] || center[x]);
    let boolean = idem.iter().all(|&b| b);
    let field = commutative && r.elements().all(|x| x == r.zero() || units[x]);
    let non_units: Vec<bool> = units.iter().map(|&u| !u).collect();
    let local = ideal_violation(r, &non_units).is_none();
    let d_ring = r.elements().all(|x| !zd[x] || nil[x]);
    let two_nilpotent = nil[r.add(r.one(), r.one())];
    let periodic_witnesses = r.elements().map(|x| first_power_repeat(r, x)).collect();
    Ok(BasicProfile {
        abelian,
        boolean,
        field,
        local,
        d_ring,
        two_nilpotent,
        commutative,
        periodic_witnesses,
    })
}
