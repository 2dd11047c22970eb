//! Plain-text table format for rings given by explicit operation tables.
//!
//! ```text
//! ring <n>
//! zero <i>
//! one <i>
//! <n rows of n indices: addition>
//! <n rows of n indices: multiplication>
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Blank lines are
//! ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ring::{validate_axioms, Elem, FiniteRing, RawTables};

pub fn parse_table(text: &str) -> Result<RawTables> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut header = |key: &str| -> Result<usize> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::MalformedTable(format!("missing `{key}` line")))?;
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(v), None) if k == key => v.parse().map_err(|_| {
                Error::MalformedTable(format!("line {no}: `{v}` is not a valid index"))
            }),
            _ => Err(Error::MalformedTable(format!(
                "line {no}: expected `{key} <int>`, found `{line}`"
            ))),
        }
    };
    let order = header("ring")?;
    let zero = header("zero")?;
    let one = header("one")?;

    let mut rows = Vec::with_capacity(2 * order);
    for (no, line) in lines {
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<Elem>().map_err(|_| {
                    Error::MalformedTable(format!("line {no}: `{t}` is not a valid index"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != 2 * order {
        return Err(Error::MalformedTable(format!(
            "expected {} table rows, found {}",
            2 * order,
            rows.len()
        )));
    }
    let mul = rows.split_off(order);
    Ok(RawTables {
        order,
        add: rows,
        mul,
        zero,
        one,
    })
}

/// Renders raw tables in the canonical layout (no comments, single spaces).
pub fn render_table(raw: &RawTables) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring {}", raw.order);
    let _ = writeln!(out, "zero {}", raw.zero);
    let _ = writeln!(out, "one {}", raw.one);
    for row in raw.add.iter().chain(raw.mul.iter()) {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Loads and fully validates a ring from a table file.
pub fn load_table(path: &Path) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let ring = validate_axioms(&parse_table(&text)?)?;
    Ok(ring.with_provenance(format!("Table({})", path.display())))
}

pub fn save_table(ring: &FiniteRing, path: &Path) -> Result<()> {
    std::fs::write(path, render_table(&ring.to_raw())).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}
