//! Runs each command and renders its result in the requested format.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use pebbling_core::domination::{total_domination_number_with, DominationError};
use pebbling_core::families::{
    enumerate_family, reproduce as run_reproduce, FamilyOptions, FamilyRecord, MultisetCheck,
    ReproduceOptions, Reproduction,
};
use pebbling_core::graph::Graph;
use pebbling_core::optimal::{search, upper_bound_report, Cap, ResultDocument};
use pebbling_core::pebbling::{reachable_to, Certificate, Configuration, PebblingError, Solver};
use pebbling_core::symmetry::{automorphisms, distinguishing_number};

use crate::input::{load_graph, parse_config};
use crate::{CliError, Common, Format};

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output serializes");
    text.push('\n');
    text
}

fn cap_text(cap: Cap) -> String {
    match cap {
        Cap::AtMost(t) => t.to_string(),
        Cap::Unbounded => "unbounded".to_string(),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn certificates_for(
    g: &Graph,
    f: &Configuration,
    budget: u64,
) -> Result<Vec<Certificate>, CliError> {
    (0..g.n())
        .map(|target| {
            reachable_to(g, f, target, budget, true)?
                .certificate
                .ok_or_else(|| CliError::Usage(format!("target {target} is unreachable")))
        })
        .collect()
}

fn certificate_text(c: &Certificate) -> String {
    if c.moves.is_empty() {
        format!("target {}: (already occupied)", c.target)
    } else {
        format!("target {}: {}", c.target, join(&c.moves, " "))
    }
}

pub fn solve(source: &str, cap: Cap, common: &Common) -> Result<String, CliError> {
    let g = load_graph(source)?;
    let result = search(&g, cap, &common.search())?;
    let certificates = match (common.certificates, result.witnesses.first()) {
        (true, Some(f)) => Some(certificates_for(&g, f, common.budget)?),
        _ => None,
    };
    Ok(match common.format {
        Format::Json => {
            let mut doc = serde_json::to_value(ResultDocument {
                graph: source,
                result: &result,
            })
            .expect("result serializes");
            if let Some(certs) = &certificates {
                doc["certificates"] = json!(certs);
            }
            to_json(&doc)
        }
        Format::Csv => {
            let mut out = join((0..g.n()).map(|v| format!("v{v}")), ",");
            out.push('\n');
            for f in &result.witnesses {
                out.push_str(&join(f.counts(), ","));
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "graph: {source}").unwrap();
            writeln!(out, "t: {}", cap_text(cap)).unwrap();
            writeln!(out, "value: {}", result.value).unwrap();
            writeln!(out, "count: {}", result.count).unwrap();
            if result.truncated {
                writeln!(out, "witnesses (truncated to {}):", result.witnesses.len()).unwrap();
            } else {
                writeln!(out, "witnesses:").unwrap();
            }
            for f in &result.witnesses {
                writeln!(out, "  {f}").unwrap();
            }
            if let Some(certs) = &certificates {
                writeln!(out, "certificates for {}:", result.witnesses[0]).unwrap();
                for c in certs {
                    writeln!(out, "  {}", certificate_text(c)).unwrap();
                }
            }
            out
        }
    })
}

/// `value` and `count` share everything but the reported field.
pub fn value(source: &str, cap: Cap, common: &Common, count: bool) -> Result<String, CliError> {
    let g = load_graph(source)?;
    let result = search(&g, cap, &common.search())?;
    let (key, number) = if count {
        ("count", result.count)
    } else {
        ("value", result.value)
    };
    Ok(match common.format {
        Format::Text => format!("{number}\n"),
        Format::Json => to_json(&json!({"graph": source, "t": cap, key: number})),
        Format::Csv => format!(
            "graph,t,{key}\n{},{},{number}\n",
            csv_quote(source),
            cap_text(cap)
        ),
    })
}

pub fn bounds(source: &str, common: &Common) -> Result<String, CliError> {
    let g = load_graph(source)?;
    let report = upper_bound_report(&g)?;
    let gamma_t = match total_domination_number_with(&g, &common.domination()) {
        Ok((k, _)) => Some(k as u64),
        Err(DominationError::IsolatedVertex(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let fields: Vec<(&str, Option<u64>)> = vec![
        ("gamma", Some(report.gamma)),
        ("gamma_R", Some(report.roman)),
        ("gamma_t", gamma_t),
        ("two_gamma", Some(report.two_gamma)),
        ("n_minus_l_plus_1", report.tree_n_minus_l_plus_1),
        ("five_n_over_7", report.five_n_over_7),
    ];
    Ok(match common.format {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("graph".into(), json!(source));
            for (k, v) in &fields {
                doc.insert((*k).into(), json!(v));
            }
            to_json(&Value::Object(doc))
        }
        Format::Csv => {
            let header = join(fields.iter().map(|(k, _)| *k), ",");
            let row = join(
                fields
                    .iter()
                    .map(|(_, v)| v.map(|x| x.to_string()).unwrap_or_default()),
                ",",
            );
            format!("graph,{header}\n{},{row}\n", csv_quote(source))
        }
        Format::Text => {
            let mut out = String::new();
            for (k, v) in &fields {
                match v {
                    Some(x) => writeln!(out, "{k}: {x}").unwrap(),
                    None => writeln!(out, "{k}: n/a").unwrap(),
                }
            }
            out
        }
    })
}

pub fn sym(source: &str, common: &Common) -> Result<String, CliError> {
    let g = load_graph(source)?;
    let group = automorphisms(&g);
    let distinguishing = distinguishing_number(&g)?;
    Ok(match common.format {
        Format::Json => to_json(&json!({
            "graph": source,
            "order": group.order.to_string(),
            "orbits": group.orbits,
            "generators": group.generators,
            "d": distinguishing.d,
            "witness": distinguishing.witness,
        })),
        Format::Csv => format!(
            "graph,order,orbits,D\n{},{},{},{}\n",
            csv_quote(source),
            group.order,
            group.orbits.len(),
            distinguishing.d
        ),
        Format::Text => {
            let orbits = join(
                group.orbits.iter().map(|o| format!("{{{}}}", join(o, ","))),
                " ",
            );
            format!(
                "order: {}\norbits: {orbits}\nD: {}\nwitness: {}\n",
                group.order,
                distinguishing.d,
                join(&distinguishing.witness, ",")
            )
        }
    })
}

pub fn verify(
    source: &str,
    config: &str,
    target: Option<usize>,
    common: &Common,
) -> Result<String, CliError> {
    let g = load_graph(source)?;
    let f = parse_config(config, g.n())?;
    let targets: Vec<usize> = match target {
        Some(t) if t >= g.n() => {
            return Err(PebblingError::InvalidVertex {
                vertex: t,
                n: g.n(),
            }
            .into());
        }
        Some(t) => vec![t],
        None => (0..g.n()).collect(),
    };
    // Build the solver first so disconnected input is rejected up front.
    Solver::new(&g, common.search().solve)?;
    let mut certificates = Vec::new();
    let mut unreachable = Vec::new();
    for &t in &targets {
        let r = reachable_to(&g, &f, t, common.budget, true)?;
        match r.certificate {
            Some(c) => certificates.push(c),
            None => unreachable.push(t),
        }
    }
    let solvable = unreachable.is_empty();
    Ok(match common.format {
        Format::Json => to_json(&json!({
            "graph": source,
            "configuration": f,
            "targets": targets,
            "solvable": solvable,
            "unreachable": unreachable,
            "certificates": certificates,
        })),
        Format::Csv => {
            let mut out = String::from("target,reachable,moves\n");
            for &t in &targets {
                match certificates.iter().find(|c| c.target == t) {
                    Some(c) => writeln!(out, "{t},true,{}", join(&c.moves, " ")).unwrap(),
                    None => writeln!(out, "{t},false,").unwrap(),
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            if solvable {
                writeln!(out, "solvable").unwrap();
            } else {
                writeln!(out, "unsolvable").unwrap();
                writeln!(out, "unreachable: {}", join(&unreachable, ",")).unwrap();
            }
            for c in &certificates {
                writeln!(out, "{}", certificate_text(c)).unwrap();
            }
            out
        }
    })
}

fn record_table(records: &[FamilyRecord]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:<22} {:>3} {:>3} {:>2} {:>3} {:>3} {:>3} {:>4}",
        "tree", "n", "l", "D", "pi*", "pi2", "p2", "g_R"
    )
    .unwrap();
    for r in records {
        let v = &r.invariants;
        writeln!(
            out,
            "{:<22} {:>3} {:>3} {:>2} {:>3} {:>3} {:>3} {:>4}",
            r.name, v.n, v.leaves, v.d, v.pi_star, v.pi2, v.p2, v.bounds.roman
        )
        .unwrap();
    }
    out
}

fn check_text(check: &MultisetCheck) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "family size {} (expected {}); multiset {}; bounds {}",
        check.computed_size,
        check.expected_size,
        if check.multiset_agrees {
            "agrees"
        } else {
            "differs"
        },
        if check.bounds_hold {
            "hold"
        } else {
            "violated"
        },
    )
    .unwrap();
    for v in check.extra() {
        writeln!(
            out,
            "  p2 = {}: {} computed, {} expected; trees {}",
            v.p2,
            v.computed,
            v.expected,
            join(&v.trees, " ")
        )
        .unwrap();
    }
    for v in check.missing() {
        writeln!(
            out,
            "  p2 = {}: {} computed, {} expected; trees {}",
            v.p2,
            v.computed,
            v.expected,
            join(&v.trees, " ")
        )
        .unwrap();
    }
    for v in &check.violations {
        writeln!(out, "  {}: {}", v.tree, v.reason).unwrap();
    }
    out
}

pub fn family(options: &FamilyOptions, common: &Common) -> Result<String, CliError> {
    let records = enumerate_family(options)?;
    Ok(match common.format {
        Format::Json => to_json(&records),
        Format::Csv => Reproduction {
            format_version: pebbling_core::families::FORMAT_VERSION,
            alkanes: None,
            family: Some(pebbling_core::families::FamilyReport {
                check: pebbling_core::families::family_multiset_check(&records)?,
                records,
            }),
        }
        .to_csv(),
        Format::Text => record_table(&records),
    })
}

pub fn reproduce(options: &ReproduceOptions, common: &Common) -> Result<String, CliError> {
    let report = run_reproduce(options)?;
    Ok(match common.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut out = String::new();
            if let Some(rows) = &report.alkanes {
                writeln!(
                    out,
                    "{:<11} {:>9} {:>9} {:>7} {:>8}  status",
                    "alkane", "expected", "computed", "recount", "pi*"
                )
                .unwrap();
                for r in rows {
                    let expected = format!(
                        "({},{})",
                        r.expected_value.map_or("-".into(), |x| x.to_string()),
                        r.expected_count.map_or("-".into(), |x| x.to_string())
                    );
                    let mut line = format!(
                        "{:<11} {:>9} {:>9} {:>7} {:>8}  {}",
                        r.name,
                        expected,
                        format!("({},{})", r.computed_value, r.computed_count),
                        r.recount,
                        r.invariants.pi_star,
                        r.status
                    );
                    if let (Some(alt), Some(verdict)) = (r.alternative_count, r.claim_confirmed) {
                        write!(
                            line,
                            " (conflicting counts {} and {alt}; confirmed: {verdict})",
                            r.expected_count.unwrap_or(0)
                        )
                        .unwrap();
                    }
                    writeln!(out, "{}", line.trim_end()).unwrap();
                }
            }
            if let Some(family) = &report.family {
                if report.alkanes.is_some() {
                    out.push('\n');
                }
                out.push_str(&record_table(&family.records));
                out.push_str(&check_text(&family.check));
            }
            out
        }
    })
}
