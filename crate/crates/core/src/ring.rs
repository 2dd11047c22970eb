//! Finite unital rings stored as dense operation tables.
//!
//! Elements are the indices `0..n`. Both tables are row-major `n × n`
//! arrays of element indices, so every ring operation is a single lookup.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};

/// Index of a ring (or group) element.
pub type Elem = usize;

/// Default upper bound on the order of any constructed ring.
pub const DEFAULT_CAP: usize = 4096;

/// Hard ceiling imposed by the `u16` table storage.
pub const MAX_ORDER: usize = 1 << 16;

/// Constructor-built rings up to this order are re-validated in full.
pub const FULL_VALIDATION_LIMIT: usize = 512;

/// The ring axioms, in the order `validate_axioms` checks them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    ZeroDistinctFromOne,
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MultiplicativeIdentity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::ZeroDistinctFromOne => "zero distinct from one",
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
        };
        f.write_str(name)
    }
}

/// Unvalidated operation tables, as read from a file or typed by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    pub order: usize,
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Elem>>,
    pub zero: Elem,
    pub one: Elem,
}

/// A validated finite ring with identity.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Elem,
    labels: Vec<String>,
    provenance: String,
}

/// Checks every ring axiom on raw tables and returns the validated ring.
///
/// Labels default to the element indices and the provenance is `Table`.
pub fn validate_axioms(candidate: &RawTables) -> Result<FiniteRing> {
    let n = candidate.order;
    if n == 0 {
        return Err(Error::MalformedTable("order must be positive".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::MalformedTable(format!(
            "order {n} exceeds the storage limit {MAX_ORDER}"
        )));
    }
    let add = flatten(n, &candidate.add, "add")?;
    let mul = flatten(n, &candidate.mul, "mul")?;
    if candidate.zero >= n || candidate.one >= n {
        return Err(Error::MalformedTable(format!(
            "zero {} / one {} out of range for order {n}",
            candidate.zero, candidate.one
        )));
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    let tables = Tables {
        n,
        add: &add,
        mul: &mul,
        zero: candidate.zero,
        one: candidate.one,
    };
    if let Some((axiom, witness)) = tables.first_violation() {
        return Err(Error::AxiomViolation { axiom, witness });
    }
    Ok(FiniteRing::finish(
        n,
        add,
        mul,
        candidate.zero,
        candidate.one,
        labels,
        "Table".into(),
    ))
}

fn flatten(n: usize, rows: &[Vec<Elem>], which: &str) -> Result<Vec<u16>> {
    if rows.len() != n {
        return Err(Error::MalformedTable(format!(
            "{which} table has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "{which} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for &x in row {
            if x >= n {
                return Err(Error::MalformedTable(format!(
                    "{which} row {i} contains {x}, outside 0..{n}"
                )));
            }
            flat.push(x as u16);
        }
    }
    Ok(flat)
}

struct Tables<'a> {
    n: usize,
    add: &'a [u16],
    mul: &'a [u16],
    zero: Elem,
    one: Elem,
}

impl Tables<'_> {
    #[inline]
    fn a(&self, x: Elem, y: Elem) -> Elem {
        self.add[x * self.n + y] as Elem
    }

    #[inline]
    fn m(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.n + y] as Elem
    }

    fn first_violation(&self) -> Option<(Axiom, Vec<Elem>)> {
        let n = self.n;
        if n >= 2 && self.zero == self.one {
            return Some((Axiom::ZeroDistinctFromOne, vec![self.zero]));
        }
        for x in 0..n {
            if self.a(self.zero, x) != x || self.a(x, self.zero) != x {
                return Some((Axiom::AdditiveIdentity, vec![x]));
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if self.a(x, y) != self.a(y, x) {
                    return Some((Axiom::AdditiveCommutativity, vec![x, y]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.a(x, y);
                for z in 0..n {
                    if self.a(xy, z) != self.a(x, self.a(y, z)) {
                        return Some((Axiom::AdditiveAssociativity, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..n {
            if !(0..n).any(|y| self.a(x, y) == self.zero) {
                return Some((Axiom::AdditiveInverse, vec![x]));
            }
        }
        for x in 0..n {
            if self.m(self.one, x) != x || self.m(x, self.one) != x {
                return Some((Axiom::MultiplicativeIdentity, vec![x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.m(x, y);
                for z in 0..n {
                    if self.m(xy, z) != self.m(x, self.m(y, z)) {
                        return Some((Axiom::MultiplicativeAssociativity, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.m(x, self.a(y, z)) != self.a(self.m(x, y), self.m(x, z)) {
                        return Some((Axiom::LeftDistributivity, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.a(x, y);
                for z in 0..n {
                    if self.m(xy, z) != self.a(self.m(x, z), self.m(y, z)) {
                        return Some((Axiom::RightDistributivity, vec![x, y, z]));
                    }
                }
            }
        }
        None
    }

    /// Identity laws only.
    fn cheap_violation(&self) -> Option<(Axiom, Vec<Elem>)> {
        let n = self.n;
        if n >= 2 && self.zero == self.one {
            return Some((Axiom::ZeroDistinctFromOne, vec![self.zero]));
        }
        for x in 0..n {
            if self.a(self.zero, x) != x || self.a(x, self.zero) != x {
                return Some((Axiom::AdditiveIdentity, vec![x]));
            }
            if self.m(self.one, x) != x || self.m(x, self.one) != x {
                return Some((Axiom::MultiplicativeIdentity, vec![x]));
            }
        }
        None
    }
}

impl FiniteRing {
    /// Builds a ring from flat tables produced by an in-crate constructor.
    ///
    /// Rings up to [`FULL_VALIDATION_LIMIT`] are fully re-validated; larger
    /// ones get the identity-law checks only.
    pub(crate) fn assemble(
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: Elem,
        one: Elem,
        labels: Vec<String>,
        provenance: String,
    ) -> Result<Self> {
        debug_assert_eq!(add.len(), n * n);
        debug_assert_eq!(mul.len(), n * n);
        debug_assert_eq!(labels.len(), n);
        let tables = Tables {
            n,
            add: &add,
            mul: &mul,
            zero,
            one,
        };
        let violation = if n <= FULL_VALIDATION_LIMIT {
            tables.first_violation()
        } else {
            tables.cheap_violation()
        };
        if let Some((axiom, witness)) = violation {
            return Err(Error::Internal(format!(
                "constructor for {provenance} produced tables violating {axiom} at {witness:?}"
            )));
        }
        Ok(Self::finish(n, add, mul, zero, one, labels, provenance))
    }

    fn finish(
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: Elem,
        one: Elem,
        labels: Vec<String>,
        provenance: String,
    ) -> Self {
        let mut neg = vec![0u16; n];
        for x in 0..n {
            let row = &add[x * n..(x + 1) * n];
            let y = row
                .iter()
                .position(|&s| s as Elem == zero)
                .expect("validated additive inverse");
            neg[x] = y as u16;
        }
        FiniteRing {
            order: n,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            provenance,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.order
    }

    /// The order-1 ring, where zero equals one.
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        let mut acc = self.one;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The element `k · 1`.
    pub fn integer(&self, k: usize) -> Elem {
        let mut acc = self.zero;
        for _ in 0..k % self.additive_order(self.one) {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub fn additive_order(&self, a: Elem) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The canonical construction expression that produced this ring.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    /// Resolves an element token: an exact label first, then a bare index.
    pub fn lookup(&self, token: &str) -> Option<Elem> {
        let squeezed: String = token.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(i) = self.labels.iter().position(|l| *l == squeezed) {
            return Some(i);
        }
        squeezed.parse::<usize>().ok().filter(|&i| i < self.order)
    }

    pub fn check_element(&self, a: Elem) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                order: self.order,
            })
        }
    }

    pub fn to_raw(&self) -> RawTables {
        let n = self.order;
        let rows = |t: &[u16]| {
            (0..n)
                .map(|i| t[i * n..(i + 1) * n].iter().map(|&x| x as Elem).collect())
                .collect()
        };
        RawTables {
            order: n,
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero,
            one: self.one,
        }
    }
}
