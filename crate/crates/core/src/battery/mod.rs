//! The theorem battery: every characterization result as a pair of
//! independently computed flags, checked over a corpus of rings.

mod report;
mod results;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::RingFactory;
use crate::error::{Error, Result};
use crate::expr::{build, Evaluated};

pub use report::{render_human, render_json_lines, Summary};
pub use results::Side;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResultId {
    Lem2_1,
    Thm2_2,
    Cor2_3,
    Cor2_4,
    Prop2_5,
    Lem2_6,
    Thm2_7,
    Cor2_8,
    RemLocal,
    Lem3_1,
    Thm3_2,
    Lem3_3,
    Thm3_4,
    Lem3_5,
    Lem3_6,
    Thm3_7,
    Cor3_8,
    RemT2z2,
    Lem4_1,
    Prop4_2,
    Lem4_3,
    Thm4_4,
    Lem4_5,
    Thm4_6,
    Cor4_7,
    Cor4_8,
    Cor4_9,
    RemZ3g,
}

impl ResultId {
    pub const ALL: [ResultId; 28] = [
        ResultId::Lem2_1,
        ResultId::Thm2_2,
        ResultId::Cor2_3,
        ResultId::Cor2_4,
        ResultId::Prop2_5,
        ResultId::Lem2_6,
        ResultId::Thm2_7,
        ResultId::Cor2_8,
        ResultId::RemLocal,
        ResultId::Lem3_1,
        ResultId::Thm3_2,
        ResultId::Lem3_3,
        ResultId::Thm3_4,
        ResultId::Lem3_5,
        ResultId::Lem3_6,
        ResultId::Thm3_7,
        ResultId::Cor3_8,
        ResultId::RemT2z2,
        ResultId::Lem4_1,
        ResultId::Prop4_2,
        ResultId::Lem4_3,
        ResultId::Thm4_4,
        ResultId::Lem4_5,
        ResultId::Thm4_6,
        ResultId::Cor4_7,
        ResultId::Cor4_8,
        ResultId::Cor4_9,
        ResultId::RemZ3g,
    ];

    pub fn as_str(self) -> &'static str {
        use ResultId::*;
        match self {
            Lem2_1 => "lem-2.1",
            Thm2_2 => "thm-2.2",
            Cor2_3 => "cor-2.3",
            Cor2_4 => "cor-2.4",
            Prop2_5 => "prop-2.5",
            Lem2_6 => "lem-2.6",
            Thm2_7 => "thm-2.7",
            Cor2_8 => "cor-2.8",
            RemLocal => "rem-local",
            Lem3_1 => "lem-3.1",
            Thm3_2 => "thm-3.2",
            Lem3_3 => "lem-3.3",
            Thm3_4 => "thm-3.4",
            Lem3_5 => "lem-3.5",
            Lem3_6 => "lem-3.6",
            Thm3_7 => "thm-3.7",
            Cor3_8 => "cor-3.8",
            RemT2z2 => "rem-t2z2",
            Lem4_1 => "lem-4.1",
            Prop4_2 => "prop-4.2",
            Lem4_3 => "lem-4.3",
            Thm4_4 => "thm-4.4",
            Lem4_5 => "lem-4.5",
            Thm4_6 => "thm-4.6",
            Cor4_7 => "cor-4.7",
            Cor4_8 => "cor-4.8",
            Cor4_9 => "cor-4.9",
            RemZ3g => "rem-z3g",
        }
    }

    pub fn kind(self) -> Kind {
        use ResultId::*;
        match self {
            Lem2_6 | Lem3_1 | Thm3_2 | Lem3_5 | RemT2z2 | Lem4_1 | RemZ3g => Kind::Implication,
            _ => Kind::Iff,
        }
    }

    /// Results about a group ring `RG` that also need `R` and `G`.
    pub fn needs_group(self) -> bool {
        use ResultId::*;
        matches!(self, Lem2_6 | Thm2_7 | Cor2_8 | Cor4_8 | RemZ3g)
    }
}

impl fmt::Display for ResultId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ResultId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ResultId::ALL
            .into_iter()
            .find(|id| id.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownResult(s.to_string()))
    }
}

impl Serialize for ResultId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Iff,
    Implication,
}

impl Kind {
    pub fn consistent(self, lhs: bool, rhs: bool) -> bool {
        match self {
            Kind::Iff => lhs == rhs,
            Kind::Implication => !lhs || rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub result_id: ResultId,
    pub ring: String,
    pub lhs: Option<bool>,
    pub rhs: Option<bool>,
    pub kind: Kind,
    /// `None` when the result was skipped.
    pub consistent: Option<bool>,
    pub skipped: Option<String>,
    pub witnesses: BTreeMap<String, serde_json::Value>,
    /// Seconds spent, only recorded when timing is requested.
    pub elapsed: Option<f64>,
}

impl TheoremVerdict {
    pub fn is_inconsistent(&self) -> bool {
        self.consistent == Some(false)
    }
}

/// Evaluates only the left-hand side of `id` on `input`.
pub fn evaluate_lhs(id: ResultId, input: &Evaluated) -> Result<Side> {
    results::lhs(id, input)
}

/// Evaluates only the right-hand side of `id` on `input`.
pub fn evaluate_rhs(id: ResultId, input: &Evaluated) -> Result<Side> {
    results::rhs(id, input)
}

pub fn check_result(id: ResultId, input: &Evaluated) -> Result<TheoremVerdict> {
    check_result_timed(id, input, false)
}

pub fn check_result_timed(id: ResultId, input: &Evaluated, timing: bool) -> Result<TheoremVerdict> {
    let start = Instant::now();
    let mut verdict = TheoremVerdict {
        result_id: id,
        ring: input.ring.provenance().to_string(),
        lhs: None,
        rhs: None,
        kind: id.kind(),
        consistent: None,
        skipped: None,
        witnesses: BTreeMap::new(),
        elapsed: None,
    };
    if let Some(reason) = results::inapplicable(id, input)? {
        verdict.skipped = Some(reason);
    } else {
        let lhs = results::lhs(id, input)?;
        let rhs = results::rhs(id, input)?;
        for (key, value) in lhs.witnesses {
            verdict.witnesses.insert(format!("lhs.{key}"), value);
        }
        for (key, value) in rhs.witnesses {
            verdict.witnesses.insert(format!("rhs.{key}"), value);
        }
        verdict.lhs = Some(lhs.value);
        verdict.rhs = Some(rhs.value);
        verdict.consistent = Some(id.kind().consistent(lhs.value, rhs.value));
    }
    if timing {
        verdict.elapsed = Some(start.elapsed().as_secs_f64());
    }
    Ok(verdict)
}

/// The built-in corpus.
pub const DEFAULT_CORPUS: [&str; 29] = [
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z10",
    "Z11",
    "Z12",
    "Z16",
    "Z3 x Z3",
    "Z3 x Bool(1)",
    "Z3 x Bool(2)",
    "Bool(1)",
    "Bool(2)",
    "Bool(3)",
    "Bool(4)",
    "Z3 x Z4",
    "Z2 x Z4",
    "Z4 x Z4",
    "T2(Z2)",
    "T2(Z3)",
    "M2(Z2)",
    "GR(Z2, C2)",
    "GR(Z3, C3)",
    "GR(Z4, C2)",
    "GR(Z2, C2 x C2)",
];

/// Expressions in a corpus file with their 1-based line numbers.
pub fn parse_corpus(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| (i + 1, body.to_string()))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct BatteryOptions {
    pub results: Vec<ResultId>,
    pub jobs: usize,
    pub timing: bool,
    pub factory: RingFactory,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions {
            results: ResultId::ALL.to_vec(),
            jobs: 1,
            timing: false,
            factory: RingFactory::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusError {
    pub line: usize,
    pub expr: String,
    pub message: String,
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: `{}`: {}", self.line, self.expr, self.message)
    }
}

#[derive(Debug, Clone)]
pub struct BatteryReport {
    pub verdicts: Vec<TheoremVerdict>,
    pub errors: Vec<CorpusError>,
}

impl BatteryReport {
    pub fn summary(&self) -> Summary {
        Summary::of(self)
    }

    pub fn inconsistent(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts.iter().filter(|v| v.is_inconsistent())
    }
}

/// Runs every requested result over every buildable corpus entry.
///
/// Output order is corpus order, then result order, whatever the number
/// of worker threads.
pub fn run_battery(corpus: &[(usize, String)], options: &BatteryOptions) -> Result<BatteryReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("worker pool: {e}")))?;

    pool.install(|| {
        let built: Vec<std::result::Result<Evaluated, CorpusError>> = corpus
            .par_iter()
            .map(|(line, expr)| {
                build(expr, &options.factory).map_err(|e| CorpusError {
                    line: *line,
                    expr: expr.clone(),
                    message: e.to_string(),
                })
            })
            .collect();

        let mut rings = Vec::new();
        let mut errors = Vec::new();
        for b in built {
            match b {
                Ok(ring) => rings.push(ring),
                Err(e) => errors.push(e),
            }
        }

        let pairs: Vec<(&Evaluated, ResultId)> = rings
            .iter()
            .flat_map(|r| options.results.iter().map(move |&id| (r, id)))
            .collect();
        let verdicts = pairs
            .par_iter()
            .map(|&(input, id)| check_result_timed(id, input, options.timing))
            .collect::<Result<Vec<_>>>()?;
        Ok(BatteryReport { verdicts, errors })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input(text: &str) -> Evaluated {
        build(text, &RingFactory::default()).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in ResultId::ALL {
            assert_eq!(id.as_str().parse::<ResultId>().unwrap(), id);
        }
        assert!(matches!(
            "thm-9.9".parse::<ResultId>(),
            Err(Error::UnknownResult(_))
        ));
    }

    #[test]
    fn documented_examples() {
        let v = check_result(ResultId::Thm2_2, &input("Z4")).unwrap();
        assert_eq!(
            (v.lhs, v.rhs, v.consistent),
            (Some(true), Some(true), Some(true))
        );

        let v = check_result(ResultId::Thm3_4, &input("Z5")).unwrap();
        assert_eq!(
            (v.lhs, v.rhs, v.consistent),
            (Some(true), Some(true), Some(true))
        );

        let v = check_result(ResultId::Cor4_8, &input("GR(Z3, C3)")).unwrap();
        assert_eq!(
            (v.lhs, v.rhs, v.consistent),
            (Some(false), Some(false), Some(true))
        );

        let v = check_result(ResultId::Lem3_1, &input("T2(Z2)")).unwrap();
        assert_eq!(v.lhs, Some(false));
        assert_eq!(v.rhs, Some(false));
        assert_eq!(v.consistent, Some(true));
        assert_eq!(v.witnesses["rhs.abelian"], serde_json::json!(false));
    }

    #[test]
    fn z3_squared_pair() {
        let r = input("Z3 x Z3");
        let v = check_result(ResultId::Thm2_2, &r).unwrap();
        assert_eq!((v.lhs, v.rhs), (Some(false), Some(false)));
        let v = check_result(ResultId::Thm3_4, &r).unwrap();
        assert_eq!((v.lhs, v.rhs), (Some(true), Some(true)));
    }

    #[test]
    fn skips_are_reported_not_failed() {
        let v = check_result(ResultId::Lem2_6, &input("Z4")).unwrap();
        assert!(v.skipped.is_some());
        assert_eq!(v.consistent, None);
        let v = check_result(ResultId::Cor4_9, &input("Z4")).unwrap();
        assert_eq!(v.skipped.as_deref(), Some("2 is nilpotent"));
        let v = check_result(ResultId::RemLocal, &input("Z6")).unwrap();
        assert_eq!(v.skipped.as_deref(), Some("ring is not local"));
        let v = check_result(ResultId::Thm2_2, &input("Z1")).unwrap();
        assert_eq!(v.skipped.as_deref(), Some("trivial ring"));
    }

    #[test]
    fn corpus_parsing() {
        let c = parse_corpus("# header\nZ2\n\n  Z3 x Z3  # comment\n");
        assert_eq!(c, [(2, "Z2".to_string()), (4, "Z3 x Z3".to_string())]);
    }

    #[test]
    fn malformed_lines_do_not_stop_the_run() {
        let corpus = parse_corpus("Z2\nZ(\nZ3");
        let options = BatteryOptions {
            results: vec![ResultId::Thm2_2],
            ..Default::default()
        };
        let report = run_battery(&corpus, &options).unwrap();
        assert_eq!(report.verdicts.len(), 2);
        assert_eq!(report.errors.len(), 1);
        assert_eq!(report.errors[0].line, 2);
    }
}
