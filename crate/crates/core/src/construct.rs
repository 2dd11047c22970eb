//! Constructors for the ring families used throughout the crate.
//!
//! Composite rings encode their elements in mixed radix: the first
//! component (pair entry, matrix entry, group coefficient) is the most
//! significant digit.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::map::RingMap;
use crate::ring::{Elem, FiniteRing, DEFAULT_CAP, MAX_ORDER};

/// Shape of a matrix ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixShape {
    Full,
    UpperTriangular,
}

/// Ring constructors sharing a size cap.
#[derive(Debug, Clone, Copy)]
pub struct RingFactory {
    pub cap: usize,
}

impl Default for RingFactory {
    fn default() -> Self {
        RingFactory { cap: DEFAULT_CAP }
    }
}

pub fn make_zn(n: usize) -> Result<FiniteRing> {
    RingFactory::default().zn(n)
}

pub fn boolean_ring(atoms: u32) -> Result<FiniteRing> {
    RingFactory::default().boolean(atoms)
}

pub fn direct_product(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing> {
    RingFactory::default().product(r, s)
}

pub fn matrix_ring(r: &FiniteRing, k: usize, shape: MatrixShape) -> Result<FiniteRing> {
    RingFactory::default().matrix(r, k, shape)
}

pub fn group_ring(r: &FiniteRing, g: &FiniteGroup) -> Result<(FiniteRing, RingMap)> {
    RingFactory::default().group_ring(r, g)
}

/// True when a canonical expression is a product at its top level, so it
/// needs parentheses as the right operand of another product.
pub(crate) fn is_top_level_product(expr: &str) -> bool {
    let mut depth = 0i32;
    let bytes = expr.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'x' if depth == 0 && i > 0 && bytes[i - 1] == b' ' => {
                if bytes.get(i + 1) == Some(&b' ') {
                    return true;
                }
            }
            _ => {}
        }
    }
    false
}

fn checked_power(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = match acc.checked_mul(base as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

fn encode(digits: &[Elem], radix: usize) -> Elem {
    digits.iter().fold(0, |acc, &d| acc * radix + d)
}

fn decode_all(n: usize, width: usize, radix: usize) -> Vec<Elem> {
    let mut out = vec![0; n * width];
    for x in 0..n {
        let mut v = x;
        for p in (0..width).rev() {
            out[x * width + p] = v % radix;
            v /= radix;
        }
    }
    out
}

impl RingFactory {
    pub fn with_cap(cap: usize) -> Self {
        RingFactory { cap }
    }

    fn check(&self, what: impl FnOnce() -> String, size: u128) -> Result<usize> {
        let limit = self.cap.min(MAX_ORDER) as u128;
        if size > limit {
            return Err(Error::CapExceeded {
                what: what(),
                size,
                cap: self.cap,
            });
        }
        Ok(size as usize)
    }

    /// Integers modulo `n`; index `i` is the residue `i`.
    pub fn zn(&self, n: usize) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::InvalidArgument("Z0 is not a finite ring".into()));
        }
        self.check(|| format!("Z{n}"), n as u128)?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as u16);
                mul.push(((a * b) % n) as u16);
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        FiniteRing::assemble(n, add, mul, 0, 1 % n, labels, format!("Z{n}"))
    }

    /// Power set of a `k`-element set under symmetric difference and
    /// intersection. Index bit `i` marks atom `i`; labels are the index in
    /// binary, `k` digits wide.
    pub fn boolean(&self, k: u32) -> Result<FiniteRing> {
        let size = if k >= 127 { u128::MAX } else { 1u128 << k };
        let n = self.check(|| format!("Bool({k})"), size)?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((a ^ b) as u16);
                mul.push((a & b) as u16);
            }
        }
        let width = k.max(1) as usize;
        let labels = (0..n).map(|i| format!("{i:0width$b}")).collect();
        FiniteRing::assemble(n, add, mul, 0, n - 1, labels, format!("Bool({k})"))
    }

    /// Componentwise product; `(r, s)` has index `r * |S| + s`.
    pub fn product(&self, r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing> {
        let right = if is_top_level_product(s.provenance()) {
            format!("({})", s.provenance())
        } else {
            s.provenance().to_string()
        };
        let name = format!("{} x {}", r.provenance(), right);
        let n = self.check(|| name.clone(), r.order() as u128 * s.order() as u128)?;
        let m = s.order();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a, b) = (x / m, x % m);
            for y in 0..n {
                let (c, d) = (y / m, y % m);
                add.push((r.add(a, c) * m + s.add(b, d)) as u16);
                mul.push((r.mul(a, c) * m + s.mul(b, d)) as u16);
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", r.label(x / m), s.label(x % m)))
            .collect();
        FiniteRing::assemble(
            n,
            add,
            mul,
            r.zero() * m + s.zero(),
            r.one() * m + s.one(),
            labels,
            name,
        )
    }

    /// `k × k` matrices over `r`, full or upper triangular. Entries are
    /// stored row-major; the triangular shape stores only `i ≤ j`.
    pub fn matrix(&self, r: &FiniteRing, k: usize, shape: MatrixShape) -> Result<FiniteRing> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimension must be positive".into(),
            ));
        }
        let name = match shape {
            MatrixShape::Full => format!("M{k}({})", r.provenance()),
            MatrixShape::UpperTriangular => format!("T{k}({})", r.provenance()),
        };
        let mut slot = vec![None; k * k];
        let mut positions = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if shape == MatrixShape::Full || i <= j {
                    slot[i * k + j] = Some(positions.len());
                    positions.push((i, j));
                }
            }
        }
        let width = positions.len();
        let q = r.order();
        let n = self.check(|| name.clone(), checked_power(q, width))?;
        let digits = decode_all(n, width, q);
        let entry = |x: Elem, i: usize, j: usize| -> Elem {
            match slot[i * k + j] {
                Some(p) => digits[x * width + p],
                None => r.zero(),
            }
        };

        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut buf = vec![0; width];
        for x in 0..n {
            for y in 0..n {
                for p in 0..width {
                    buf[p] = r.add(digits[x * width + p], digits[y * width + p]);
                }
                add.push(encode(&buf, q) as u16);
                for (p, &(i, j)) in positions.iter().enumerate() {
                    let mut acc = r.zero();
                    for l in 0..k {
                        acc = r.add(acc, r.mul(entry(x, i, l), entry(y, l, j)));
                    }
                    buf[p] = acc;
                }
                mul.push(encode(&buf, q) as u16);
            }
        }

        let identity: Vec<Elem> = positions
            .iter()
            .map(|&(i, j)| if i == j { r.one() } else { r.zero() })
            .collect();
        let zero: Vec<Elem> = vec![r.zero(); width];
        let labels = (0..n)
            .map(|x| {
                let rows: Vec<String> = (0..k)
                    .map(|i| {
                        let cells: Vec<&str> = (0..k).map(|j| r.label(entry(x, i, j))).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            })
            .collect();
        FiniteRing::assemble(
            n,
            add,
            mul,
            encode(&zero, q),
            encode(&identity, q),
            labels,
            name,
        )
    }

    /// The group ring `RG` together with its augmentation map `ω: RG → R`,
    /// `Σ r_g g ↦ Σ r_g`. Elements are coefficient vectors indexed by the
    /// group elements in order.
    pub fn group_ring(&self, r: &FiniteRing, g: &FiniteGroup) -> Result<(FiniteRing, RingMap)> {
        let name = format!("GR({}, {})", r.provenance(), g.name());
        let m = g.order();
        let q = r.order();
        let n = self.check(|| name.clone(), checked_power(q, m))?;
        let digits = decode_all(n, m, q);

        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut buf = vec![0; m];
        for x in 0..n {
            let xs = &digits[x * m..(x + 1) * m];
            for y in 0..n {
                let ys = &digits[y * m..(y + 1) * m];
                for p in 0..m {
                    buf[p] = r.add(xs[p], ys[p]);
                }
                add.push(encode(&buf, q) as u16);
                buf.fill(r.zero());
                for (a, &ca) in xs.iter().enumerate() {
                    if ca == r.zero() {
                        continue;
                    }
                    for (b, &cb) in ys.iter().enumerate() {
                        let ab = g.op(a, b);
                        buf[ab] = r.add(buf[ab], r.mul(ca, cb));
                    }
                }
                mul.push(encode(&buf, q) as u16);
            }
        }

        let mut zero = vec![r.zero(); m];
        let zero_idx = encode(&zero, q);
        zero[g.identity()] = r.one();
        let one_idx = encode(&zero, q);
        let labels = (0..n)
            .map(|x| {
                let terms: Vec<String> = (0..m)
                    .filter(|&a| digits[x * m + a] != r.zero())
                    .map(|a| {
                        let c = r.label(digits[x * m + a]);
                        if a == g.identity() {
                            c.to_string()
                        } else if digits[x * m + a] == r.one() {
                            g.label(a).to_string()
                        } else {
                            format!("{c}{}", g.label(a))
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    r.label(r.zero()).to_string()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        let ring = FiniteRing::assemble(n, add, mul, zero_idx, one_idx, labels, name)?;

        let augmentation: Vec<Elem> = (0..n)
            .map(|x| {
                digits[x * m..(x + 1) * m]
                    .iter()
                    .fold(r.zero(), |acc, &c| r.add(acc, c))
            })
            .collect();
        let omega = RingMap::new(&ring, r, augmentation)?;
        if !omega.is_surjective() {
            return Err(Error::Internal("augmentation map is not surjective".into()));
        }
        Ok((ring, omega))
    }
}

/// The embedding `r ↦ r·e` of the coefficient ring into its group ring.
pub fn group_ring_embedding(r: &FiniteRing, g: &FiniteGroup, rg: &FiniteRing) -> Result<RingMap> {
    let m = g.order();
    let image = r
        .elements()
        .map(|c| {
            let mut digits = vec![r.zero(); m];
            digits[g.identity()] = c;
            encode(&digits, r.order())
        })
        .collect();
    RingMap::new(r, rg, image)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_addition() {
        let z4 = make_zn(4).unwrap();
        assert_eq!(z4.add(1, 2), 3);
        assert_eq!(z4.provenance(), "Z4");
        let z1 = make_zn(1).unwrap();
        assert!(z1.is_trivial());
    }

    #[test]
    fn product_encoding_and_labels() {
        let z3 = make_zn(3).unwrap();
        let p = direct_product(&z3, &z3).unwrap();
        assert_eq!(p.order(), 9);
        assert_eq!(p.one(), 4);
        assert_eq!(p.label(p.one()), "(1,1)");
        assert_eq!(p.lookup("(1, 2)"), Some(5));
        assert_eq!(p.provenance(), "Z3 x Z3");
        let nested = direct_product(&z3, &p).unwrap();
        assert_eq!(nested.provenance(), "Z3 x (Z3 x Z3)");
    }

    #[test]
    fn triangular_and_full_orders() {
        let z2 = make_zn(2).unwrap();
        let t2 = matrix_ring(&z2, 2, MatrixShape::UpperTriangular).unwrap();
        assert_eq!(t2.order(), 8);
        assert_eq!(t2.label(t2.one()), "[[1,0],[0,1]]");
        assert_eq!(t2.provenance(), "T2(Z2)");
        let m2 = matrix_ring(&z2, 2, MatrixShape::Full).unwrap();
        assert_eq!(m2.order(), 16);
        assert!(!m2.is_commutative());
        let z3 = make_zn(3).unwrap();
        assert_eq!(
            matrix_ring(&z3, 2, MatrixShape::UpperTriangular)
                .unwrap()
                .order(),
            27
        );
    }

    #[test]
    fn boolean_rings() {
        let b0 = boolean_ring(0).unwrap();
        assert!(b0.is_trivial());
        let b2 = boolean_ring(2).unwrap();
        assert_eq!(b2.order(), 4);
        assert!(b2.elements().all(|x| b2.mul(x, x) == x));
        assert_eq!(b2.label(1), "01");
    }

    #[test]
    fn z2_c2_augmentation_kernel() {
        let z2 = make_zn(2).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let (rg, omega) = group_ring(&z2, &c2).unwrap();
        assert_eq!(rg.order(), 4);
        let ker = omega.kernel();
        let one_plus_g = rg.lookup("1+g").unwrap();
        assert_eq!(ker.members(), &[rg.zero(), one_plus_g]);
        assert_eq!(rg.mul(one_plus_g, one_plus_g), rg.zero());
    }

    #[test]
    fn z3_c3_and_z4_c2() {
        let z3 = make_zn(3).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let (rg, omega) = group_ring(&z3, &c3).unwrap();
        assert_eq!(rg.order(), 27);
        assert_eq!(omega.apply(rg.lookup("g").unwrap()), 1);
        let emb = group_ring_embedding(&z3, &c3, &rg).unwrap();
        for r in z3.elements() {
            assert_eq!(omega.apply(emb.apply(r)), r);
        }

        let z4 = make_zn(4).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let (rg, omega) = group_ring(&z4, &c2).unwrap();
        assert_eq!(rg.order(), 16);
        assert!(omega.is_surjective());
        assert_eq!(omega.kernel().len(), 4);
    }

    #[test]
    fn cap_is_enforced_before_allocation() {
        let z3 = make_zn(3).unwrap();
        let c9 = FiniteGroup::cyclic(9).unwrap();
        match group_ring(&z3, &c9) {
            Err(Error::CapExceeded { size, cap, .. }) => {
                assert_eq!(size, 19683);
                assert_eq!(cap, 4096);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
        assert!(RingFactory::with_cap(8).zn(9).is_err());
        assert!(boolean_ring(13).is_err());
    }

    #[test]
    fn top_level_product_detection() {
        assert!(is_top_level_product("Z2 x Z3"));
        assert!(!is_top_level_product("GR(Z2 x Z2, C2)"));
        assert!(!is_top_level_product("Bool(2)"));
    }
}
