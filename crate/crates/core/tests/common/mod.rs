#![allow(dead_code)]

use nilring::battery::DEFAULT_CORPUS;
use nilring::construct::RingFactory;
use nilring::expr::{build, Evaluated};
use nilring::FiniteRing;

pub fn corpus() -> Vec<Evaluated> {
    let f = RingFactory::default();
    DEFAULT_CORPUS
        .iter()
        .map(|e| build(e, &f).unwrap_or_else(|err| panic!("{e}: {err}")))
        .collect()
}

pub fn ring(expr: &str) -> FiniteRing {
    build(expr, &RingFactory::default()).unwrap().ring
}

/// Nilpotence by walking powers, without the library's index table.
pub fn naive_nilpotent(r: &FiniteRing, x: usize) -> bool {
    let mut p = x;
    for _ in 0..=r.order() {
        if p == r.zero() {
            return true;
        }
        p = r.mul(p, x);
    }
    false
}

pub fn naive_unit(r: &FiniteRing, x: usize) -> bool {
    r.elements()
        .any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
}

/// Every two-sided ideal, as sorted member lists.
pub fn all_ideals(r: &FiniteRing) -> Vec<Vec<usize>> {
    let n = r.order();
    let close = |seed: &[bool]| -> Vec<bool> {
        let mut mask = seed.to_vec();
        mask[r.zero()] = true;
        loop {
            let members: Vec<usize> = (0..n).filter(|&x| mask[x]).collect();
            let mut grew = false;
            for &x in &members {
                for y in 0..n {
                    let candidates = if mask[y] {
                        vec![r.add(x, y), r.mul(x, y), r.mul(y, x), r.neg(x)]
                    } else {
                        vec![r.mul(x, y), r.mul(y, x), r.neg(x)]
                    };
                    for c in candidates {
                        if !mask[c] {
                            mask[c] = true;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return mask;
            }
        }
    };
    let principal: Vec<Vec<bool>> = (0..n)
        .map(|x| {
            let mut seed = vec![false; n];
            seed[x] = true;
            close(&seed)
        })
        .collect();
    let mut found: Vec<Vec<bool>> = Vec::new();
    let mut frontier = vec![close(&vec![false; n])];
    while let Some(ideal) = frontier.pop() {
        if found.contains(&ideal) {
            continue;
        }
        for p in &principal {
            let sum: Vec<bool> = ideal.iter().zip(p).map(|(a, b)| *a || *b).collect();
            let closed = close(&sum);
            if !found.contains(&closed) {
                frontier.push(closed);
            }
        }
        found.push(ideal);
    }
    found
        .into_iter()
        .map(|m| (0..n).filter(|&x| m[x]).collect())
        .collect()
}

/// `I` is prime when `a R b ⊆ I` forces `a ∈ I` or `b ∈ I`.
pub fn is_prime_ideal(r: &FiniteRing, ideal: &[usize]) -> bool {
    if ideal.len() == r.order() {
        return false;
    }
    let inside = |x: usize| ideal.binary_search(&x).is_ok();
    r.elements().filter(|&a| !inside(a)).all(|a| {
        r.elements()
            .filter(|&b| !inside(b))
            .all(|b| r.elements().any(|t| !inside(r.mul(r.mul(a, t), b))))
    })
}

pub fn intersection(sets: &[Vec<usize>], n: usize) -> Vec<usize> {
    (0..n)
        .filter(|x| sets.iter().all(|s| s.binary_search(x).is_ok()))
        .collect()
}

/// Intersection of all prime ideals.
pub fn prime_radical_oracle(r: &FiniteRing) -> Vec<usize> {
    let primes: Vec<Vec<usize>> = all_ideals(r)
        .into_iter()
        .filter(|i| is_prime_ideal(r, i))
        .collect();
    intersection(&primes, r.order())
}

/// Intersection of the maximal two-sided ideals; equals `J` for finite
/// rings, whose primitive ideals are maximal.
pub fn jacobson_oracle(r: &FiniteRing) -> Vec<usize> {
    let proper: Vec<Vec<usize>> = all_ideals(r)
        .into_iter()
        .filter(|i| i.len() < r.order())
        .collect();
    let maximal: Vec<Vec<usize>> = proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.iter().all(|x| j.binary_search(x).is_ok()))
        })
        .cloned()
        .collect();
    intersection(&maximal, r.order())
}

/// All `(e, w)` with `a = e + w`, by scanning every pair of elements.
pub fn naive_decompositions(r: &FiniteRing, a: usize, weak: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for e in r.elements() {
        let sq = r.mul(e, e);
        let ok = sq == e || (weak && r.add(sq, e) == r.zero());
        if !ok {
            continue;
        }
        for w in r.elements() {
            if r.add(e, w) == a && naive_nilpotent(r, w) {
                out.push((e, w));
            }
        }
    }
    out
}
