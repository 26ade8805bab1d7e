//! `oracle-verify`: every applicable cross-check against the brute-force
//! oracle, as a pass/fail table.

use std::collections::BTreeMap;

use negset::acyclic::{acyclic_negation, AcyclicOutcome};
use negset::balance::is_balanced;
use negset::corpus::random_corpus;
use negset::format::{parse_sg, to_sg};
use negset::minimality::{is_complete, is_minimal, triangle_certificate_for_complete, unique_minimum_by_size, verify_disjoint_circle_certificate};
use negset::negation::disjoint_partner;
use negset::oracle::{brute_is_minimal, brute_is_unique_minimum, brute_packing_number, enumerate_negation_sets_capped, frustration_index};
use negset::packing::packing_number;
use negset::{is_negation_set, EdgeSet, Error, SignedGraph};
use serde::Serialize;
use serde_json::json;

use crate::{edge_list, Report, EXIT_FAILS, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    status: Status,
    detail: String,
}

fn check(name: &'static str, result: Result<Option<String>, String>) -> Check {
    match result {
        Ok(Some(detail)) => Check { name, status: Status::Pass, detail },
        Ok(None) => Check { name, status: Status::Skip, detail: "not applicable".into() },
        Err(detail) => Check { name, status: Status::Fail, detail },
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// The checks for one graph, in a fixed order.
fn checks(g: &SignedGraph, max_n: usize) -> Vec<Check> {
    let mut out = vec![check("format round trip", round_trip(g))];
    if g.vertex_count() > max_n {
        out.push(Check { name: "oracle", status: Status::Skip, detail: format!("{} vertices, above --max-n {max_n}", g.vertex_count()) });
        return out;
    }
    let sets = match enumerate_negation_sets_capped(g, max_n) {
        Ok(e) => e.sets,
        Err(e) => {
            out.push(Check { name: "oracle", status: Status::Skip, detail: e.to_string() });
            return out;
        }
    };
    let connected = g.is_connected();
    out.push(check("negation sets", negation_sets(g, &sets)));
    out.push(check("minimality", if connected { minimality(g, &sets) } else { Ok(None) }));
    out.push(check("disjoint sets are bipartite", disjoint_bipartite(g, &sets)));
    out.push(check("disjoint partner", if connected { partner(g) } else { Ok(None) }));
    out.push(check("acyclic negation set", if connected { acyclic(g) } else { Ok(None) }));
    out.push(check("packing number", if connected { packing(g) } else { Ok(None) }));
    out.push(check("complete-graph certificates", complete(g)));
    out
}

fn round_trip(g: &SignedGraph) -> Result<Option<String>, String> {
    let text = to_sg(g);
    let back = parse_sg(&text).map_err(err)?;
    if back == *g && to_sg(&back) == text {
        Ok(Some("identical".into()))
    } else {
        Err("serialization changed the graph".into())
    }
}

fn negation_sets(g: &SignedGraph, sets: &[EdgeSet]) -> Result<Option<String>, String> {
    for s in sets {
        if !is_negation_set(g, s).map_err(err)? {
            return Err(format!("enumerated set {} rejected", edge_list(s)));
        }
    }
    // every single-edge change of a negation set flips the parity of some
    // circle through that edge, unless the edge lies on no circle
    let mut probes = 0;
    for s in sets.iter().take(64) {
        for (e, _) in g.edges() {
            let t = s.symmetric_difference(&EdgeSet::new(g, [e]).map_err(err)?);
            let member = sets.binary_search_by(|x| (x.len(), x.to_vec()).cmp(&(t.len(), t.to_vec()))).is_ok();
            if is_negation_set(g, &t).map_err(err)? != member {
                return Err(format!("membership of {} disagrees", edge_list(&t)));
            }
            probes += 1;
        }
    }
    Ok(Some(format!("{} sets, {probes} mutations", sets.len())))
}

fn minimality(g: &SignedGraph, sets: &[EdgeSet]) -> Result<Option<String>, String> {
    let mut minimal = 0;
    for s in sets {
        let fast = is_minimal(g, s).map_err(err)?;
        if fast != brute_is_minimal(g, s).map_err(err)? {
            return Err(format!("{}: is_minimal says {fast}", edge_list(s)));
        }
        minimal += usize::from(fast);
    }
    Ok(Some(format!("{minimal} of {} minimal", sets.len())))
}

fn disjoint_bipartite(g: &SignedGraph, sets: &[EdgeSet]) -> Result<Option<String>, String> {
    let mut pairs = 0;
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if a.is_disjoint(b) {
                pairs += 1;
                if !a.is_bipartite(g) || !b.is_bipartite(g) {
                    return Err(format!("{} and {} are disjoint but not both bipartite", edge_list(a), edge_list(b)));
                }
            }
        }
    }
    Ok(Some(format!("{pairs} disjoint pairs")))
}

fn partner(g: &SignedGraph) -> Result<Option<String>, String> {
    let b = g.negative_edges();
    match disjoint_partner(g) {
        Ok(p) if b.is_bipartite(g) && p.is_disjoint(&b) && is_negation_set(g, &p).map_err(err)? => Ok(Some(edge_list(&p))),
        Ok(p) => Err(format!("invalid partner {}", edge_list(&p))),
        Err(Error::Precondition(_)) if !b.is_bipartite(g) => Ok(Some("none: negative edges not bipartite".into())),
        Err(e) => Err(e.to_string()),
    }
}

fn acyclic(g: &SignedGraph) -> Result<Option<String>, String> {
    match acyclic_negation(g) {
        Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(e.to_string()),
        Ok(AcyclicOutcome::MinusK5(k)) => Ok(Some(format!("antibalanced K5 block {:?}", k.block))),
        Ok(AcyclicOutcome::Acyclic(r)) => {
            let b = r.negation_set;
            let valid = b.is_forest(g) && is_balanced(&g.negate_edges(&b).map_err(err)?);
            let fi = frustration_index(g).map_err(err)?;
            if valid && b.len() >= fi {
                Ok(Some(format!("{} edges, frustration index {fi}", b.len())))
            } else {
                Err(format!("{} invalid or below frustration index {fi}", edge_list(&b)))
            }
        }
    }
}

fn packing(g: &SignedGraph) -> Result<Option<String>, String> {
    let r = match packing_number(g) {
        Err(Error::Precondition(_)) => return Ok(None),
        Err(e) => return Err(e.to_string()),
        Ok(r) => r,
    };
    let (brute, _) = brute_packing_number(g, &g.negative_edges()).map_err(err)?;
    if r.packing_number == brute {
        Ok(Some(format!("π = {brute}")))
    } else {
        Err(format!("computed {}, exhaustive search finds {brute}", r.packing_number))
    }
}

fn complete(g: &SignedGraph) -> Result<Option<String>, String> {
    if !is_complete(g) {
        return Ok(None);
    }
    let b = g.negative_edges();
    let mut notes = Vec::new();
    if let Some(cert) = triangle_certificate_for_complete(g, &b).map_err(err)? {
        let fi = frustration_index(g).map_err(err)?;
        if !verify_disjoint_circle_certificate(g, &b, &cert).map_err(err)? || fi != b.len() {
            return Err(format!("triangle certificate for {} edges, frustration index {fi}", b.len()));
        }
        notes.push("triangle certificate confirmed");
    }
    if unique_minimum_by_size(g, &b).map_err(err)? {
        if !brute_is_unique_minimum(g, &b).map_err(err)? {
            return Err("size bound claims a unique minimum that is not".into());
        }
        notes.push("unique minimum confirmed");
    }
    Ok(Some(if notes.is_empty() { "no certificate applies".into() } else { notes.join(", ") }))
}

fn table(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        s.push_str(&format!("{status}  {:width$}  {}\n", c.name, c.detail));
    }
    s
}

pub(crate) fn single(g: &SignedGraph, max_n: usize) -> Report {
    let checks = checks(g, max_n);
    let failed = checks.iter().any(|c| c.status == Status::Fail);
    let mut r = Report::new(if failed { EXIT_FAILS } else { EXIT_OK }, json!({ "command": "oracle-verify", "checks": checks }));
    r.text = table(&checks);
    r
}

#[derive(Default, Serialize)]
struct Tally {
    pass: usize,
    fail: usize,
    skip: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<String>,
}

pub(crate) fn corpus(seed: u64, count: usize, max_n: usize) -> Report {
    let mut tallies: BTreeMap<&'static str, Tally> = BTreeMap::new();
    let mut order = Vec::new();
    for c in random_corpus(seed, count, max_n) {
        for ch in checks(&c.graph, max_n) {
            let t = tallies.entry(ch.name).or_insert_with(|| {
                order.push(ch.name);
                Tally::default()
            });
            match ch.status {
                Status::Pass => t.pass += 1,
                Status::Skip => t.skip += 1,
                Status::Fail => {
                    t.fail += 1;
                    t.first_failure.get_or_insert_with(|| format!("{}: {} [{}]", c.name, ch.detail, to_sg(&c.graph).replace('\n', " | ")));
                }
            }
        }
    }
    let failed = tallies.values().any(|t| t.fail > 0);
    let mut text = format!("corpus: {count} random graphs, seed {seed}, at most {max_n} vertices\n");
    let width = order.iter().map(|n| n.len()).max().unwrap_or(0);
    for name in &order {
        let t = &tallies[name];
        let status = if t.fail > 0 { "FAIL" } else { "PASS" };
        text.push_str(&format!("{status}  {name:width$}  {} passed, {} failed, {} skipped\n", t.pass, t.fail, t.skip));
        if let Some(f) = &t.first_failure {
            text.push_str(&format!("      first failure: {f}\n"));
        }
    }
    let mut r = Report::new(
        if failed { EXIT_FAILS } else { EXIT_OK },
        json!({ "command": "oracle-verify", "seed": seed, "count": count, "max_n": max_n, "checks": tallies }),
    );
    r.text = text;
    r
}
