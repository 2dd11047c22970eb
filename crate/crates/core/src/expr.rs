//! The ring construction language.
//!
//! ```text
//! expr  := term { "x" term }
//! term  := "Z" int | "Bool(" int ")" | "T" int "(" expr ")" | "M" int "(" expr ")"
//!        | "GR(" expr "," group ")" | "Table(" path ")" | "(" expr ")"
//! group := gterm { "x" gterm }
//! gterm := "C" int | "S3" | "(" group ")"
//! ```
//!
//! Whitespace is ignored outside table paths and `x` is left-associative.

use std::fmt;
use std::path::Path;

use crate::construct::{MatrixShape, RingFactory};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::map::RingMap;
use crate::ring::FiniteRing;
use crate::tablefile::load_table;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zn(usize),
    Bool(u32),
    Product(Box<RingExpr>, Box<RingExpr>),
    Matrix(Box<RingExpr>, usize),
    Triangular(Box<RingExpr>, usize),
    GroupRing(Box<RingExpr>, GroupExpr),
    Table(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    S3,
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::Bool(k) => write!(f, "Bool({k})"),
            RingExpr::Product(a, b) => match **b {
                RingExpr::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
            RingExpr::Matrix(r, k) => write!(f, "M{k}({r})"),
            RingExpr::Triangular(r, k) => write!(f, "T{k}({r})"),
            RingExpr::GroupRing(r, g) => write!(f, "GR({r}, {g})"),
            RingExpr::Table(p) => write!(f, "Table({p})"),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::S3 => f.write_str("S3"),
            GroupExpr::Product(a, b) => match **b {
                GroupExpr::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn describe_next(&self) -> String {
        match self.rest().chars().next() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            let found = self.describe_next();
            self.err(format!("expected `{token}`, found {found}"))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.rest().len()
            - self
                .rest()
                .trim_start_matches(|c: char| c.is_ascii_digit())
                .len();
        if digits == 0 {
            let found = self.describe_next();
            return self.err(format!("expected an integer, found {found}"));
        }
        let text = &self.rest()[..digits];
        match text.parse::<usize>() {
            Ok(v) => {
                self.pos += digits;
                Ok(v)
            }
            Err(_) => self.err(format!("integer {text} is out of range")),
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            let found = self.describe_next();
            self.err(format!("unexpected {found} after expression"))
        }
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let mut left = self.term()?;
        while self.eat("x") {
            let right = self.term()?;
            left = RingExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<RingExpr> {
        self.skip_ws();
        if self.eat("Bool(") {
            let k = self.int()?;
            let k = u32::try_from(k).or_else(|_| self.err("integer is out of range"))?;
            self.expect(")")?;
            return Ok(RingExpr::Bool(k));
        }
        if self.eat("GR(") {
            let base = self.expr()?;
            self.expect(",")?;
            let group = self.group()?;
            self.expect(")")?;
            return Ok(RingExpr::GroupRing(Box::new(base), group));
        }
        if self.eat("Table(") {
            let Some(close) = self.rest().find(')') else {
                self.pos = self.src.len();
                return self.err("expected `)`, found end of input");
            };
            let path = self.rest()[..close].trim().to_string();
            if path.is_empty() {
                return self.err("empty table path");
            }
            self.pos += close + 1;
            return Ok(RingExpr::Table(path));
        }
        if self.eat("Z") {
            return Ok(RingExpr::Zn(self.int()?));
        }
        for (prefix, triangular) in [("T", true), ("M", false)] {
            if self.eat(prefix) {
                let k = self.int()?;
                self.expect("(")?;
                let base = Box::new(self.expr()?);
                self.expect(")")?;
                return Ok(if triangular {
                    RingExpr::Triangular(base, k)
                } else {
                    RingExpr::Matrix(base, k)
                });
            }
        }
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        let found = self.describe_next();
        self.err(format!("expected a ring, found {found}"))
    }

    fn group(&mut self) -> Result<GroupExpr> {
        let mut left = self.gterm()?;
        while self.eat("x") {
            let right = self.gterm()?;
            left = GroupExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn gterm(&mut self) -> Result<GroupExpr> {
        if self.eat("S3") {
            return Ok(GroupExpr::S3);
        }
        if self.eat("C") {
            return Ok(GroupExpr::Cyclic(self.int()?));
        }
        if self.eat("(") {
            let inner = self.group()?;
            self.expect(")")?;
            return Ok(inner);
        }
        let found = self.describe_next();
        self.err(format!("expected a group, found {found}"))
    }
}

pub fn parse_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.end()?;
    Ok(e)
}

pub fn parse_group(text: &str) -> Result<GroupExpr> {
    let mut p = Parser::new(text);
    let g = p.group()?;
    p.end()?;
    Ok(g)
}

pub fn eval_group(g: &GroupExpr) -> Result<FiniteGroup> {
    match g {
        GroupExpr::Cyclic(n) => FiniteGroup::cyclic(*n),
        GroupExpr::S3 => Ok(FiniteGroup::s3()),
        GroupExpr::Product(a, b) => FiniteGroup::product(&eval_group(a)?, &eval_group(b)?),
    }
}

/// A top-level group ring keeps its ingredients for the group-ring results.
#[derive(Debug, Clone)]
pub struct GroupRingParts {
    pub base: FiniteRing,
    pub group: FiniteGroup,
    pub augmentation: RingMap,
}

/// An evaluated expression.
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub ring: FiniteRing,
    pub group_ring: Option<GroupRingParts>,
}

pub fn eval_expr(e: &RingExpr, factory: &RingFactory) -> Result<FiniteRing> {
    Ok(eval_full(e, factory)?.ring)
}

/// Evaluates `e`, keeping the base ring, group and augmentation map when
/// `e` is a group ring.
pub fn eval_full(e: &RingExpr, factory: &RingFactory) -> Result<Evaluated> {
    let mut group_ring = None;
    let ring = match e {
        RingExpr::Zn(n) => factory.zn(*n)?,
        RingExpr::Bool(k) => factory.boolean(*k)?,
        RingExpr::Product(a, b) => {
            factory.product(&eval_expr(a, factory)?, &eval_expr(b, factory)?)?
        }
        RingExpr::Matrix(r, k) => factory.matrix(&eval_expr(r, factory)?, *k, MatrixShape::Full)?,
        RingExpr::Triangular(r, k) => {
            factory.matrix(&eval_expr(r, factory)?, *k, MatrixShape::UpperTriangular)?
        }
        RingExpr::GroupRing(r, g) => {
            let base = eval_expr(r, factory)?;
            let group = eval_group(g)?;
            let (rg, augmentation) = factory.group_ring(&base, &group)?;
            group_ring = Some(GroupRingParts {
                base,
                group,
                augmentation,
            });
            rg
        }
        RingExpr::Table(path) => {
            let ring = load_table(Path::new(path))?;
            if ring.order() > factory.cap {
                return Err(Error::CapExceeded {
                    what: e.to_string(),
                    size: ring.order() as u128,
                    cap: factory.cap,
                });
            }
            ring
        }
    };
    Ok(Evaluated {
        ring: ring.with_provenance(e.to_string()),
        group_ring,
    })
}

/// Parses and evaluates in one step.
pub fn build(text: &str, factory: &RingFactory) -> Result<Evaluated> {
    eval_full(&parse_expr(text)?, factory)
}
