//! Two-sided ideal checks and quotient rings.

use crate::classes::ElementSet;
use crate::error::{Error, Result};
use crate::map::RingMap;
use crate::ring::{Elem, FiniteRing};

/// Describes the first way `mask` fails to be a two-sided ideal, if any.
pub fn ideal_violation(r: &FiniteRing, mask: &[bool]) -> Option<String> {
    let members: Vec<Elem> = r.elements().filter(|&x| mask[x]).collect();
    if !mask[r.zero()] {
        return Some("does not contain zero".into());
    }
    for &x in &members {
        for &y in &members {
            if !mask[r.sub(x, y)] {
                return Some(format!("{} - {} leaves the set", r.label(x), r.label(y)));
            }
        }
    }
    for &x in &members {
        for a in r.elements() {
            if !mask[r.mul(a, x)] {
                return Some(format!("{} * {} leaves the set", r.label(a), r.label(x)));
            }
            if !mask[r.mul(x, a)] {
                return Some(format!("{} * {} leaves the set", r.label(x), r.label(a)));
            }
        }
    }
    None
}

pub fn is_ideal(r: &FiniteRing, set: &ElementSet) -> bool {
    ideal_violation(r, &set.mask(r.order())).is_none()
}

/// The quotient `R / I` with the projection `R → R / I`.
///
/// Each coset is represented by its smallest element index, and quotient
/// elements are numbered in ascending order of those representatives.
pub fn quotient(r: &FiniteRing, ideal: &ElementSet) -> Result<(FiniteRing, RingMap)> {
    let n = r.order();
    if let Some(&bad) = ideal.members().iter().find(|&&x| x >= n) {
        return Err(Error::ElementOutOfRange {
            element: bad,
            order: n,
        });
    }
    let mask = ideal.mask(n);
    if let Some(why) = ideal_violation(r, &mask) {
        return Err(Error::NotAnIdeal(why));
    }

    const NONE: usize = usize::MAX;
    let mut class_of = vec![NONE; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if class_of[x] != NONE {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &i in ideal.members() {
            class_of[r.add(x, i)] = id;
        }
    }
    let m = reps.len();
    debug_assert_eq!(m * ideal.len(), n);

    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(class_of[r.add(a, b)] as u16);
            mul.push(class_of[r.mul(a, b)] as u16);
        }
    }
    let labels = reps.iter().map(|&x| format!("[{}]", r.label(x))).collect();
    let provenance = format!("({}) / {}", r.provenance(), ideal.role().name());
    let q = FiniteRing::assemble(
        m,
        add,
        mul,
        class_of[r.zero()],
        class_of[r.one()],
        labels,
        provenance,
    )?;
    let projection = RingMap::new(r, &q, class_of)?;
    Ok((q, projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassRole;
    use crate::construct::make_zn;

    #[test]
    fn z4_mod_two() {
        let z4 = make_zn(4).unwrap();
        let i = ElementSet::new("Z4", ClassRole::Custom("2Z4".into()), vec![0, 2]);
        let (q, p) = quotient(&z4, &i).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.image(), &[0, 1, 0, 1]);
        assert_eq!(q.label(1), "[1]");
    }

    #[test]
    fn z6_mod_zero_is_z6() {
        let z6 = make_zn(6).unwrap();
        let i = ElementSet::new("Z6", ClassRole::Custom("0".into()), vec![0]);
        let (q, p) = quotient(&z6, &i).unwrap();
        assert_eq!(q.order(), 6);
        assert!(p.is_bijective());
        assert_eq!(p.image(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn non_ideal_is_rejected() {
        let z6 = make_zn(6).unwrap();
        let i = ElementSet::new("Z6", ClassRole::Custom("bad".into()), vec![0, 1]);
        assert!(matches!(quotient(&z6, &i), Err(Error::NotAnIdeal(_))));
    }
}
