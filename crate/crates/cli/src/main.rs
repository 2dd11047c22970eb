//! Command-line front end: build rings from expressions and inspect them.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use nilring::battery::{
    check_result, parse_corpus, render_human, render_json_lines, run_battery, BatteryOptions,
    ResultId, DEFAULT_CORPUS,
};
use nilring::classes::{basic_profile, compute_class, ClassRole, Payload};
use nilring::cleanness::{decompositions, ring_predicate, Flavor, RingMode};
use nilring::construct::RingFactory;
use nilring::expr::{eval_full, parse_expr, parse_group, Evaluated, RingExpr};
use nilring::iso::{find_isomorphism_capped, DEFAULT_ISO_CAP};
use nilring::ring::DEFAULT_CAP;
use nilring::structure::{classify, classify_mod_j};
use nilring::{Error, FiniteRing, Result};

#[derive(Parser)]
#[command(
    name = "nilring",
    version,
    about = "Finite ring analysis and theorem battery"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Largest ring order any construction may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring flags, structural classification and every cleanness predicate.
    Analyze { expr: String },
    /// One element class.
    Classes {
        expr: String,
        #[arg(long = "set")]
        role: String,
    },
    /// All decompositions of one element.
    Decomp {
        expr: String,
        element: String,
        #[arg(long, default_value = "weakly_nil_clean")]
        flavor: String,
    },
    /// Check one result on one ring, or on the group ring of a ring and a group.
    Verify {
        result_id: String,
        expr: String,
        group: Option<String>,
    },
    /// Check results over a corpus of rings.
    Battery {
        /// One expression per line; the built-in corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated result ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        results: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall-clock time per verdict (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Search for a ring isomorphism.
    Iso {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_ISO_CAP)]
        iso_cap: usize,
    },
}

/// A successful run either found an inconsistency or did not.
enum Outcome {
    Clean,
    Inconsistent,
    CorpusErrors,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Inconsistent) => ExitCode::from(1),
        Ok(Outcome::CorpusErrors) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let factory = RingFactory::with_cap(cli.cap);
    match &cli.command {
        Command::Analyze { expr } => {
            let ring = build(expr, &factory)?.ring;
            emit(cli.json, analyze(&ring)?);
        }
        Command::Classes { expr, role } => {
            let ring = build(expr, &factory)?.ring;
            let role: ClassRole = role.parse()?;
            emit(cli.json, classes(&ring, &role)?);
        }
        Command::Decomp {
            expr,
            element,
            flavor,
        } => {
            let ring = build(expr, &factory)?.ring;
            let flavor: Flavor = flavor.parse()?;
            let a = ring.lookup(element).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "`{element}` is not an element of {}",
                    ring.provenance()
                ))
            })?;
            emit(cli.json, decomp(&ring, a, flavor)?);
        }
        Command::Verify {
            result_id,
            expr,
            group,
        } => {
            let id: ResultId = result_id.parse()?;
            let mut e = parse_expr(expr)?;
            if let Some(g) = group {
                e = RingExpr::GroupRing(Box::new(e), parse_group(g)?);
            }
            let input = eval_full(&e, &factory)?;
            let verdict = check_result(id, &input)?;
            let value = serde_json::to_value(&verdict).expect("verdict serializes");
            emit(cli.json, value);
            if verdict.is_inconsistent() {
                return Ok(Outcome::Inconsistent);
            }
        }
        Command::Battery {
            corpus,
            results,
            jobs,
            out,
            timing,
        } => {
            let corpus = match corpus {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|source| Error::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    parse_corpus(&text)
                }
                None => DEFAULT_CORPUS
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (i + 1, e.to_string()))
                    .collect(),
            };
            let results = if results.is_empty() {
                ResultId::ALL.to_vec()
            } else {
                results
                    .iter()
                    .map(|r| r.parse())
                    .collect::<Result<Vec<_>>>()?
            };
            let options = BatteryOptions {
                results,
                jobs: *jobs,
                timing: *timing,
                factory,
            };
            let report = run_battery(&corpus, &options)?;
            for e in &report.errors {
                eprintln!("error: {e}");
            }
            let text = if cli.json {
                render_json_lines(&report)
            } else {
                render_human(&report)
            };
            match out {
                Some(path) => fs::write(path, text).map_err(|source| Error::Io {
                    path: path.display().to_string(),
                    source,
                })?,
                None => print!("{text}"),
            }
            if report.inconsistent().next().is_some() {
                return Ok(Outcome::Inconsistent);
            }
            if !report.errors.is_empty() {
                return Ok(Outcome::CorpusErrors);
            }
        }
        Command::Iso {
            left,
            right,
            iso_cap,
        } => {
            let a = build(left, &factory)?.ring;
            let b = build(right, &factory)?.ring;
            emit(cli.json, iso(&a, &b, *iso_cap)?);
        }
    }
    Ok(Outcome::Clean)
}

fn build(expr: &str, factory: &RingFactory) -> Result<Evaluated> {
    eval_full(&parse_expr(expr)?, factory)
}

/// Prints `value` as one JSON line, or as `key: value` lines.
fn emit(json: bool, value: Value) {
    if json {
        println!("{value}");
        return;
    }
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                match v {
                    Value::String(s) => println!("{key}: {s}"),
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        println!("{key}:");
                        for item in items {
                            println!("  {}", human_inline(&item));
                        }
                    }
                    other => println!("{key}: {}", human_inline(&other)),
                }
            }
        }
        other => println!("{}", human_inline(&other)),
    }
}

fn human_inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(human_inline).collect();
            format!("[{}]", inner.join(", "))
        }
        Value::Object(map) => {
            let inner: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{k}={}", human_inline(v)))
                .collect();
            inner.join(" ")
        }
        other => other.to_string(),
    }
}

fn analyze(r: &FiniteRing) -> Result<Value> {
    let profile = basic_profile(r)?;
    let mut out = Map::new();
    out.insert("ring".into(), json!(r.provenance()));
    out.insert("order".into(), json!(r.order()));
    out.insert("commutative".into(), json!(profile.commutative));
    out.insert("abelian".into(), json!(profile.abelian));
    out.insert("boolean".into(), json!(profile.boolean));
    out.insert("field".into(), json!(profile.field));
    out.insert("local".into(), json!(profile.local));
    out.insert("d_ring".into(), json!(profile.d_ring));
    out.insert("two_nilpotent".into(), json!(profile.two_nilpotent));
    out.insert("periodic".into(), json!(profile.witnesses_hold(r)));
    out.insert("max_power_exponent".into(), json!(profile.max_exponent()));
    out.insert("classification".into(), json!(classify(r)?.tag_names()));
    out.insert(
        "mod_j_classification".into(),
        json!(classify_mod_j(r)?.tag_names()),
    );
    let mut counterexamples = Map::new();
    for mode in RingMode::ALL {
        let v = ring_predicate(r, mode)?;
        out.insert(mode.name().into(), json!(v.holds));
        if let Some(c) = v.counterexample {
            counterexamples.insert(mode.name().into(), json!(r.label(c)));
        }
    }
    out.insert("counterexamples".into(), Value::Object(counterexamples));
    Ok(Value::Object(out))
}

fn classes(r: &FiniteRing, role: &ClassRole) -> Result<Value> {
    let set = compute_class(r, role)?;
    let labels: Vec<&str> = set.iter().map(|x| r.label(x)).collect();
    let mut out = json!({
        "ring": r.provenance(),
        "set": role.name(),
        "size": set.len(),
        "members": labels,
        "indices": set.members(),
    });
    match set.payload() {
        Payload::None => {}
        Payload::NilpotencyIndex(k) => out["nilpotency_index"] = json!(k),
        Payload::Inverse(inv) => {
            let inv: Vec<&str> = inv.iter().map(|&x| r.label(x)).collect();
            out["inverse"] = json!(inv);
        }
    }
    Ok(out)
}

fn decomp(r: &FiniteRing, a: usize, flavor: Flavor) -> Result<Value> {
    let list: Vec<Value> = decompositions(r, a, flavor)?
        .iter()
        .map(|d| {
            json!({
                "e": r.label(d.very_idempotent),
                "w": r.label(d.nilpotent),
                "e_squared": r.label(r.mul(d.very_idempotent, d.very_idempotent)),
                "sign": d.sign,
                "nil_index": d.nil_index,
            })
        })
        .collect();
    Ok(json!({
        "ring": r.provenance(),
        "element": r.label(a),
        "flavor": flavor,
        "decompositions": list,
    }))
}

fn iso(a: &FiniteRing, b: &FiniteRing, cap: usize) -> Result<Value> {
    let found = find_isomorphism_capped(a, b, cap)?;
    let mut out = json!({
        "left": a.provenance(),
        "right": b.provenance(),
        "isomorphic": found.is_some(),
    });
    if let Some(map) = found {
        let pairs: Vec<Value> = a
            .elements()
            .map(|x| json!({ "from": a.label(x), "to": b.label(map.apply(x)) }))
            .collect();
        out["map"] = json!(map.image());
        out["pairs"] = json!(pairs);
    }
    Ok(out)
}
