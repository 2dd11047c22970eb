use serde::Serialize;

use crate::classes::{ClassRole, ElementSet};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// A verified unital ring homomorphism between two table rings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingMap {
    source: String,
    target: String,
    source_order: usize,
    target_order: usize,
    target_zero: Elem,
    image: Vec<Elem>,
    bijective: bool,
}

impl RingMap {
    /// Checks that `image` preserves zero, one, addition and multiplication
    /// on every pair of source elements.
    pub fn new(source: &FiniteRing, target: &FiniteRing, image: Vec<Elem>) -> Result<Self> {
        let n = source.order();
        if image.len() != n {
            return Err(Error::NotAHomomorphism(format!(
                "image has {} entries for a source of order {n}",
                image.len()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= target.order()) {
            return Err(Error::NotAHomomorphism(format!(
                "image entry {bad} is outside the target"
            )));
        }
        if image[source.zero()] != target.zero() {
            return Err(Error::NotAHomomorphism("zero is not preserved".into()));
        }
        if image[source.one()] != target.one() {
            return Err(Error::NotAHomomorphism("one is not preserved".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if image[source.add(a, b)] != target.add(image[a], image[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "addition fails at ({a}, {b})"
                    )));
                }
                if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "multiplication fails at ({a}, {b})"
                    )));
                }
            }
        }
        let mut hit = vec![false; target.order()];
        for &y in &image {
            hit[y] = true;
        }
        let bijective = n == target.order() && hit.iter().all(|&h| h);
        Ok(RingMap {
            source: source.provenance().to_string(),
            target: target.provenance().to_string(),
            source_order: n,
            target_order: target.order(),
            target_zero: target.zero(),
            image,
            bijective,
        })
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn target(&self) -> &str {
        &self.target
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Elements of the source sent to zero.
    pub fn kernel(&self) -> ElementSet {
        let members = (0..self.source_order)
            .filter(|&x| self.image[x] == self.target_zero)
            .collect();
        ElementSet::new(
            &self.source,
            ClassRole::Custom(format!("ker({} -> {})", self.source, self.target)),
            members,
        )
    }

    /// The inverse of a bijective map, re-verified against both rings.
    pub fn inverse(&self, source: &FiniteRing, target: &FiniteRing) -> Result<RingMap> {
        if !self.bijective {
            return Err(Error::InvalidArgument("map is not bijective".into()));
        }
        let mut inv = vec![0; self.source_order];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        RingMap::new(target, source, inv)
    }
}
