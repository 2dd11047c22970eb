//! Finite groups given by Cayley tables: cyclic groups, direct products,
//! and the symmetric group on three letters.

use crate::error::{Error, Result};
use crate::ring::Elem;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<Elem>,
    identity: Elem,
    labels: Vec<String>,
    name: String,
}

/// Largest group order accepted by the constructors.
pub const MAX_GROUP_ORDER: usize = 4096;

impl FiniteGroup {
    /// Validates a Cayley table: closure, associativity, identity, inverses.
    pub fn from_table(
        cayley: Vec<Vec<Elem>>,
        identity: Elem,
        labels: Vec<String>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let n = cayley.len();
        if n == 0 || labels.len() != n || identity >= n {
            return Err(Error::InvalidArgument("malformed group table".into()));
        }
        if cayley
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidArgument("malformed group table".into()));
        }
        let flat: Vec<Elem> = cayley.into_iter().flatten().collect();
        let g = FiniteGroup {
            order: n,
            cayley: flat,
            identity,
            labels,
            name: name.into(),
        };
        for a in 0..n {
            if g.op(identity, a) != a || g.op(a, identity) != a {
                return Err(Error::InvalidArgument(format!("identity law fails at {a}")));
            }
            if !(0..n).any(|b| g.op(a, b) == identity && g.op(b, a) == identity) {
                return Err(Error::InvalidArgument(format!("{a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if g.op(g.op(a, b), c) != g.op(a, g.op(b, c)) {
                        return Err(Error::InvalidArgument(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    /// The cyclic group `C_n`; element `i` is `g^i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GROUP_ORDER {
            return Err(Error::InvalidArgument(format!(
                "cyclic group order must be in 1..={MAX_GROUP_ORDER}, got {n}"
            )));
        }
        let cayley = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Ok(FiniteGroup {
            order: n,
            cayley,
            identity: 0,
            labels,
            name: format!("C{n}"),
        })
    }

    /// Direct product; element `(a, b)` has index `a * |H| + b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let n = g.order * h.order;
        if n > MAX_GROUP_ORDER {
            return Err(Error::InvalidArgument(format!(
                "group product of order {n} exceeds {MAX_GROUP_ORDER}"
            )));
        }
        let m = h.order;
        let mut cayley = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                cayley.push(g.op(a, c) * m + h.op(b, d));
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", g.label(x / m), h.label(x % m)))
            .collect();
        let name = if h.name.contains(" x ") {
            format!("{} x ({})", g.name, h.name)
        } else {
            format!("{} x {}", g.name, h.name)
        };
        Ok(FiniteGroup {
            order: n,
            cayley,
            identity: g.identity * m + h.identity,
            labels,
            name,
        })
    }

    /// The symmetric group on three letters, with `r` a 3-cycle and `s` a
    /// transposition. Elements are `e, r, r^2, s, sr, sr^2`.
    pub fn s3() -> Self {
        type Perm = [usize; 3];
        let compose = |a: &Perm, b: &Perm| -> Perm { [a[b[0]], a[b[1]], a[b[2]]] };
        let e: Perm = [0, 1, 2];
        let r: Perm = [1, 2, 0];
        let s: Perm = [0, 2, 1];
        let r2 = compose(&r, &r);
        let perms = [e, r, r2, s, compose(&s, &r), compose(&s, &r2)];
        let index = |p: &Perm| perms.iter().position(|q| q == p).expect("closed");
        let cayley = perms
            .iter()
            .flat_map(|a| perms.iter().map(move |b| (a, b)))
            .map(|(a, b)| index(&compose(a, b)))
            .collect();
        let labels = ["e", "r", "r^2", "s", "sr", "sr^2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup {
            order: 6,
            cayley,
            identity: 0,
            labels,
            name: "S3".into(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.cayley[a * self.order + b]
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    /// Canonical expression for the group, e.g. `C2 x C2`.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// The prime `p` when the order is `p^k` with `k ≥ 1`.
    pub fn prime_power_base(&self) -> Option<usize> {
        prime_power_base(self.order)
    }
}

/// The prime `p` with `n = p^k`, `k ≥ 1`, if there is one.
pub fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p)
}
