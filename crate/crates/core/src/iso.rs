//! Brute-force ring isomorphism search.
//!
//! Backtracking over element assignments with two kinds of pruning: an
//! element may only be sent to a target element with an identical
//! [`ElementProfile`], and every assignment is closed under the ring
//! operations immediately, so the search only branches on elements that
//! are not yet forced by earlier choices.

use crate::classes::{nilpotency_indices, unit_mask};
use crate::error::{Error, Result};
use crate::map::RingMap;
use crate::ring::{Elem, FiniteRing};

/// Default order limit for the search.
pub const DEFAULT_ISO_CAP: usize = 64;

/// Isomorphism-invariant data attached to each element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementProfile {
    pub additive_order: usize,
    pub idempotent: bool,
    pub nilpotency_index: u32,
    pub unit: bool,
    pub right_annihilator: usize,
    pub left_annihilator: usize,
    pub square_is_zero: bool,
}

pub fn element_profiles(r: &FiniteRing) -> Vec<ElementProfile> {
    let nil = nilpotency_indices(r);
    let units = unit_mask(r);
    r.elements()
        .map(|x| ElementProfile {
            additive_order: r.additive_order(x),
            idempotent: r.mul(x, x) == x,
            nilpotency_index: nil[x].unwrap_or(0),
            unit: units[x],
            right_annihilator: r.elements().filter(|&b| r.mul(x, b) == r.zero()).count(),
            left_annihilator: r.elements().filter(|&c| r.mul(c, x) == r.zero()).count(),
            square_is_zero: r.mul(x, x) == r.zero(),
        })
        .collect()
}

pub fn find_isomorphism(r: &FiniteRing, s: &FiniteRing) -> Result<Option<RingMap>> {
    find_isomorphism_capped(r, s, DEFAULT_ISO_CAP)
}

pub fn find_isomorphism_capped(
    r: &FiniteRing,
    s: &FiniteRing,
    cap: usize,
) -> Result<Option<RingMap>> {
    if r.order() != s.order() {
        return Ok(None);
    }
    if r.order() > cap {
        return Err(Error::IsoCapExceeded {
            order: r.order(),
            cap,
        });
    }
    let pr = element_profiles(r);
    let ps = element_profiles(s);
    let mut sorted_r = pr.clone();
    let mut sorted_s = ps.clone();
    sorted_r.sort_unstable();
    sorted_s.sort_unstable();
    if sorted_r != sorted_s {
        return Ok(None);
    }

    let search = Search {
        r,
        s,
        pr: &pr,
        ps: &ps,
    };
    let mut state = State::new(r.order());
    if !search.assign(&mut state, r.zero(), s.zero())
        || !search.assign(&mut state, r.one(), s.one())
    {
        return Ok(None);
    }
    match search.extend(state) {
        Some(image) => RingMap::new(r, s, image).map(Some),
        None => Ok(None),
    }
}

const NONE: usize = usize::MAX;

#[derive(Clone)]
struct State {
    fwd: Vec<Elem>,
    bwd: Vec<Elem>,
    assigned: Vec<Elem>,
}

impl State {
    fn new(n: usize) -> Self {
        State {
            fwd: vec![NONE; n],
            bwd: vec![NONE; n],
            assigned: Vec::with_capacity(n),
        }
    }
}

struct Search<'a> {
    r: &'a FiniteRing,
    s: &'a FiniteRing,
    pr: &'a [ElementProfile],
    ps: &'a [ElementProfile],
}

impl Search<'_> {
    fn bind(&self, st: &mut State, x: Elem, y: Elem, queue: &mut Vec<Elem>) -> bool {
        match (st.fwd[x], st.bwd[y]) {
            (NONE, NONE) => {
                if self.pr[x] != self.ps[y] {
                    return false;
                }
                st.fwd[x] = y;
                st.bwd[y] = x;
                st.assigned.push(x);
                queue.push(x);
                true
            }
            (fx, _) => fx == y,
        }
    }

    /// Assigns `x ↦ y` and closes the partial map under `+` and `·`.
    fn assign(&self, st: &mut State, x: Elem, y: Elem) -> bool {
        let mut queue = Vec::new();
        if !self.bind(st, x, y, &mut queue) {
            return false;
        }
        while let Some(a) = queue.pop() {
            let fa = st.fwd[a];
            let mut i = 0;
            while i < st.assigned.len() {
                let b = st.assigned[i];
                let fb = st.fwd[b];
                let derived = [
                    (self.r.add(a, b), self.s.add(fa, fb)),
                    (self.r.mul(a, b), self.s.mul(fa, fb)),
                    (self.r.mul(b, a), self.s.mul(fb, fa)),
                ];
                for (u, v) in derived {
                    if !self.bind(st, u, v, &mut queue) {
                        return false;
                    }
                }
                i += 1;
            }
        }
        true
    }

    fn extend(&self, st: State) -> Option<Vec<Elem>> {
        let n = self.r.order();
        if st.assigned.len() == n {
            return Some(st.fwd);
        }
        // Branch on the unassigned element with the fewest candidates.
        let candidates = |x: Elem| -> Vec<Elem> {
            (0..n)
                .filter(|&y| st.bwd[y] == NONE && self.pr[x] == self.ps[y])
                .collect()
        };
        let (x, options) = (0..n)
            .filter(|&x| st.fwd[x] == NONE)
            .map(|x| (x, candidates(x)))
            .min_by_key(|(_, c)| c.len())?;
        for y in options {
            let mut next = st.clone();
            if self.assign(&mut next, x, y) {
                if let Some(found) = self.extend(next) {
                    return Some(found);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean_ring, direct_product, make_zn};

    #[test]
    fn z6_is_z2_times_z3() {
        let z6 = make_zn(6).unwrap();
        let z2 = make_zn(2).unwrap();
        let z3 = make_zn(3).unwrap();
        let p = direct_product(&z2, &z3).unwrap();
        let map = find_isomorphism(&z6, &p).unwrap().expect("CRT isomorphism");
        assert!(map.is_bijective());
        // A unital map out of Z6 is forced: r ↦ (r mod 2, r mod 3).
        for r in 0..6 {
            assert_eq!(map.apply(r), (r % 2) * 3 + r % 3);
        }
    }

    #[test]
    fn z4_is_not_z2_squared() {
        let z4 = make_zn(4).unwrap();
        let z2 = make_zn(2).unwrap();
        let v = direct_product(&z2, &z2).unwrap();
        assert!(find_isomorphism(&z4, &v).unwrap().is_none());
        assert!(find_isomorphism(&z4, &boolean_ring(2).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn identity_on_z3() {
        let z3 = make_zn(3).unwrap();
        let map = find_isomorphism(&z3, &z3).unwrap().unwrap();
        assert_eq!(map.image(), &[0, 1, 2]);
    }

    #[test]
    fn cap_is_enforced() {
        let a = make_zn(70).unwrap();
        assert!(matches!(
            find_isomorphism(&a, &a),
            Err(Error::IsoCapExceeded { order: 70, cap: 64 })
        ));
        // Different orders need no search.
        assert!(find_isomorphism(&a, &make_zn(71).unwrap())
            .unwrap()
            .is_none());
    }
}
