//! Command-line driver for the `negset` library.
//!
//! Exit codes: 0 property holds, 1 property fails, 2 usage or parse error,
//! 3 precondition error, 4 the acyclic algorithm met an antibalanced `K_5`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use negset::acyclic::{acyclic_negation, AcyclicOutcome};
use negset::minimality::{
    is_complete, is_minimal, triangle_certificate_for_complete, unique_minimum_by_size,
    verify_disjoint_circle_certificate, verify_two_circle_certificate, DisjointCircleCertificate,
    TwoCirclePerEdgeCertificate,
};
use negset::oracle::{brute_is_unique_minimum, minimum_negation_sets};
use negset::packing::packing_number;
use negset::{check_balance, is_negation_set, BalanceWitness, Edge, EdgeSet, Error, SignedGraph, Subgraph};
use serde::Serialize;
use serde_json::{json, Value};

mod dot;
mod verify;

pub use dot::{export_dot, Annotations};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_MINUS_K5: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "negset", version, about = "Negation sets of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Graph in `.sg` format
    input: PathBuf,
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
    /// Write the report here instead of standard output
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct SetArg {
    /// Edge set as `u-v,u-v,…`; defaults to the negative edges
    #[arg(long)]
    set: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct OracleCap {
    /// Largest vertex count handed to the brute-force oracle
    #[arg(long, default_value_t = negset::oracle::DEFAULT_CAP)]
    max_n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Balance check with a Harary bipartition or a negative circle
    Balance(Common),
    /// Is the given edge set a negation set?
    NegationCheck {
        #[command(flatten)]
        common: Common,
        /// Edge set as `u-v,u-v,…`
        #[arg(long)]
        set: String,
    },
    /// Is the negation set minimal (no proper subset is one)?
    Minimal {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        set: SetArg,
    },
    /// Certify that the negation set has minimum size
    CertifyMinimum {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        set: SetArg,
        /// JSON file `{"circles": [[…], …]}` of edge-disjoint negative circles
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        cap: OracleCap,
    },
    /// Certify that the negation set is the unique minimum
    CertifyUnique {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        set: SetArg,
        /// JSON file `{"pairs": [{"edge": [u, v], "c1": […], "c2": […]}, …]}`
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        cap: OracleCap,
    },
    /// Acyclic negation set for graphs whose 4-core has maximum degree 4
    Acyclic {
        #[command(flatten)]
        common: Common,
        /// Log every move of the algorithm
        #[arg(long)]
        trace: bool,
    },
    /// Packing number of the negative edge set and a maximum disjoint family
    Packing(Common),
    /// Frustration index by exhaustive switching
    Frustration {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        cap: OracleCap,
    },
    /// Cross-check every algorithm against the brute-force oracle
    OracleVerify {
        /// Graph in `.sg` format; without it a seeded random corpus is checked
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Seed of the random corpus
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Size of the random corpus
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Graphviz rendering, optionally highlighting a set or a family
    ExportDot {
        #[command(flatten)]
        common: Common,
        /// Highlight this edge set (`u-v,u-v,…`)
        #[arg(long, conflicts_with_all = ["packing", "acyclic"])]
        set: Option<String>,
        /// Color each member of a maximum packing family
        #[arg(long, conflicts_with = "acyclic")]
        packing: bool,
        /// Highlight the acyclic negation set
        #[arg(long)]
        acyclic: bool,
    },
}

/// Everything that ends a command early, with its exit code.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Graph(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io { .. } => EXIT_USAGE,
            Failure::Graph(e) => match e {
                Error::Parse { .. }
                | Error::VertexOutOfRange { .. }
                | Error::Loop(_)
                | Error::DuplicateEdge(_)
                | Error::EdgeNotInHost(_)
                | Error::NotACircle(_)
                | Error::MalformedCertificate(_) => EXIT_USAGE,
                _ => EXIT_PRECONDITION,
            },
        }
    }
}

/// The text and JSON forms of a report plus its exit code.
struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn new(code: i32, json: Value) -> Report {
        Report { text: String::new(), json, code }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

/// Runs one invocation, writing the report to standard output and
/// diagnostics to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (json, output) = match &cli.command {
        Command::OracleVerify { json, output, .. } => (*json, output.clone()),
        Command::Balance(c) | Command::Packing(c) => (c.json, c.output.clone()),
        Command::NegationCheck { common, .. }
        | Command::Minimal { common, .. }
        | Command::CertifyMinimum { common, .. }
        | Command::CertifyUnique { common, .. }
        | Command::Acyclic { common, .. }
        | Command::Frustration { common, .. }
        | Command::ExportDot { common, .. } => (common.json, common.output.clone()),
    };
    let report = match execute(cli.command) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            return f.exit_code();
        }
    };
    let body = if json {
        let mut s = serde_json::to_string_pretty(&report.json).expect("reports serialize");
        s.push('\n');
        s
    } else {
        report.text
    };
    let written = match output {
        Some(path) => std::fs::write(&path, body).map_err(|source| Failure::Io { path, source }),
        None => out.write_all(body.as_bytes()).map_err(|source| Failure::Io { path: "<stdout>".into(), source }),
    };
    if let Err(f) = written {
        let _ = writeln!(err, "error: {f}");
        return f.exit_code();
    }
    report.code
}

fn read_graph(path: &Path) -> Result<SignedGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|source| Failure::Io { path: path.into(), source })?;
    Ok(negset::format::parse_sg(&text)?)
}

fn parse_edges(g: &SignedGraph, text: &str) -> Result<EdgeSet, Failure> {
    let mut edges = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item.split_once('-').ok_or_else(|| Failure::Usage(format!("bad edge `{item}`, expected u-v")))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad vertex `{s}` in `{item}`")));
        edges.push((parse(a)?, parse(b)?));
    }
    Ok(EdgeSet::new(g, edges)?)
}

fn chosen_set(g: &SignedGraph, set: &SetArg) -> Result<EdgeSet, Failure> {
    match &set.set {
        Some(s) => parse_edges(g, s),
        None => Ok(g.negative_edges()),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|source| Failure::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub(crate) fn edge_list(set: &EdgeSet) -> String {
    let v: Vec<String> = set.iter().map(|e| e.to_string()).collect();
    if v.is_empty() {
        "(none)".into()
    } else {
        v.join(" ")
    }
}

fn vertex_list(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// `.sg`-style lines for an edge set, signs taken from `g`.
fn sg_lines(g: &SignedGraph, set: &EdgeSet) -> String {
    let mut s = String::new();
    for e in set.iter() {
        let sign = g.sign(e.u(), e.v()).expect("edge of g");
        let _ = writeln!(s, "e {} {} {}", e.u(), e.v(), sign);
    }
    s
}

/// A connected component with maps in both directions.
struct Part {
    sub: Subgraph,
}

impl Part {
    fn graph(&self) -> &SignedGraph {
        &self.sub.graph
    }

    fn restrict(&self, host: &SignedGraph, set: &EdgeSet) -> EdgeSet {
        let mut local = vec![usize::MAX; host.vertex_count()];
        for (i, &v) in self.sub.to_host.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<(usize, usize)> = set
            .iter()
            .filter(|e| local[e.u()] != usize::MAX)
            .map(|e| (local[e.u()], local[e.v()]))
            .collect();
        EdgeSet::new(self.graph(), edges).expect("component edges")
    }

    fn lift(&self, set: &EdgeSet) -> Vec<Edge> {
        set.iter().map(|e| self.sub.lift_edge(e)).collect()
    }

    fn lift_vertices(&self, vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut out: Vec<usize> = vs.into_iter().map(|v| self.sub.lift(v)).collect();
        out.sort_unstable();
        out
    }

    fn label(&self) -> String {
        format!("component {{{}}}", vertex_list(self.sub.to_host.iter().copied()))
    }
}

/// Components with at least one edge; isolated vertices carry no signs.
fn parts(g: &SignedGraph) -> Vec<Part> {
    g.connected_components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| Part { sub: g.induced_subgraph(&c) })
        .collect()
}

fn host_set(g: &SignedGraph, edges: impl IntoIterator<Item = Edge>) -> EdgeSet {
    EdgeSet::new(g, edges).expect("lifted edges lie in the host")
}

fn execute(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Balance(c) => balance(&read_graph(&c.input)?),
        Command::NegationCheck { common, set } => {
            let g = read_graph(&common.input)?;
            let b = parse_edges(&g, &set)?;
            negation_check(&g, &b)
        }
        Command::Minimal { common, set } => {
            let g = read_graph(&common.input)?;
            let b = chosen_set(&g, &set)?;
            minimal(&g, &b)
        }
        Command::CertifyMinimum { common, set, certificate, cap } => {
            let g = read_graph(&common.input)?;
            let b = chosen_set(&g, &set)?;
            match certificate {
                Some(path) => verify_minimum_certificate(&g, &b, &read_json(&path)?),
                None => certify_minimum(&g, &b, cap.max_n),
            }
        }
        Command::CertifyUnique { common, set, certificate, cap } => {
            let g = read_graph(&common.input)?;
            let b = chosen_set(&g, &set)?;
            match certificate {
                Some(path) => verify_unique_certificate(&g, &b, &read_json(&path)?),
                None => certify_unique(&g, &b, cap.max_n),
            }
        }
        Command::Acyclic { common, trace } => acyclic(&read_graph(&common.input)?, trace),
        Command::Packing(c) => packing(&read_graph(&c.input)?),
        Command::Frustration { common, cap } => frustration(&read_graph(&common.input)?, cap.max_n),
        Command::OracleVerify { input, seed, count, max_n, .. } => match input {
            Some(path) => Ok(verify::single(&read_graph(&path)?, max_n)),
            None => Ok(verify::corpus(seed, count, max_n)),
        },
        Command::ExportDot { common, set, packing, acyclic } => {
            let g = read_graph(&common.input)?;
            let annotations = if let Some(s) = set {
                Annotations::Set(parse_edges(&g, &s)?)
            } else if packing {
                Annotations::Family(packing_family(&g)?)
            } else if acyclic {
                Annotations::Set(acyclic_set(&g)?)
            } else {
                Annotations::None
            };
            let text = export_dot(&g, &annotations);
            let mut r = Report::new(EXIT_OK, json!({ "command": "export-dot", "dot": text }));
            r.text = text;
            Ok(r)
        }
    }
}

fn balance(g: &SignedGraph) -> Result<Report, Failure> {
    let witness = check_balance(g);
    let mut r = Report::new(
        if witness.is_balanced() { EXIT_OK } else { EXIT_FAILS },
        json!({ "command": "balance", "balanced": witness.is_balanced(), "witness": witness }),
    );
    match &witness {
        BalanceWitness::Balanced(h) => {
            r.line("balanced");
            r.line(format!("X: {}", vertex_list(h.x_side())));
            r.line(format!("Y: {}", vertex_list(h.y_side())));
        }
        BalanceWitness::Unbalanced { circle } => {
            r.line("unbalanced");
            r.line(format!("negative circle: {}", vertex_list(circle.iter().copied())));
        }
    }
    Ok(r)
}

fn negation_check(g: &SignedGraph, b: &EdgeSet) -> Result<Report, Failure> {
    let ok = is_negation_set(g, b)?;
    let switching = negset::balance::switching_to(g, b)?;
    let mut r = Report::new(
        if ok { EXIT_OK } else { EXIT_FAILS },
        json!({ "command": "negation-check", "set": b, "negation_set": ok, "switching": switching }),
    );
    r.line(format!("set: {}", edge_list(b)));
    match switching {
        Some(x) => r.line(format!("negation set: switching {{{}}} makes it the negative edge set", vertex_list(x.iter()))),
        None => r.line("not a negation set"),
    }
    Ok(r)
}

fn require_negation_set(g: &SignedGraph, b: &EdgeSet) -> Result<(), Failure> {
    if is_negation_set(g, b)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{{{}}} is not a negation set", edge_list(b))).into())
    }
}

fn minimal(g: &SignedGraph, b: &EdgeSet) -> Result<Report, Failure> {
    require_negation_set(g, b)?;
    let mut all = true;
    let mut sections = Vec::new();
    let mut text = String::new();
    for part in parts(g) {
        let local = part.restrict(g, b);
        let ok = is_minimal(part.graph(), &local)?;
        all &= ok;
        let _ = writeln!(text, "{}: {}", part.label(), if ok { "minimal" } else { "not minimal" });
        sections.push(json!({ "vertices": part.sub.to_host, "minimal": ok }));
    }
    let mut r = Report::new(
        if all { EXIT_OK } else { EXIT_FAILS },
        json!({ "command": "minimal", "set": b, "minimal": all, "components": sections }),
    );
    r.line(format!("set: {}", edge_list(b)));
    r.text.push_str(&text);
    r.line(if all { "minimal" } else { "not minimal: removing the set disconnects a component" });
    Ok(r)
}

/// `g` switched so that `b` is its negative edge set; circle signs, and with
/// them every certificate, are unchanged.
fn with_negative_set(g: &SignedGraph, b: &EdgeSet) -> Result<SignedGraph, Failure> {
    let x = negset::balance::switching_to(g, b)?
        .ok_or_else(|| Error::Precondition(format!("{{{}}} is not a negation set", edge_list(b))))?;
    Ok(g.switch(&x)?)
}

fn too_big(n: usize, max_n: usize) -> bool {
    n > max_n
}

fn certify_minimum(g: &SignedGraph, b: &EdgeSet, max_n: usize) -> Result<Report, Failure> {
    require_negation_set(g, b)?;
    let (mut certified, mut refuted) = (true, false);
    let mut sections = Vec::new();
    let mut text = String::new();
    for part in parts(g) {
        let local = part.restrict(g, b);
        let h = with_negative_set(part.graph(), &local)?;
        let mut section = json!({ "vertices": part.sub.to_host, "size": local.len() });
        let certificate = if is_complete(&h) { triangle_certificate_for_complete(&h, &local)? } else { None };
        if let Some(cert) = certificate {
            debug_assert!(verify_disjoint_circle_certificate(&h, &local, &cert)?);
            let circles: Vec<Vec<usize>> = cert.circles.iter().map(|c| part.lift_vertices(c.iter().copied())).collect();
            let _ = writeln!(text, "{}: minimum by {} edge-disjoint negative triangles", part.label(), circles.len());
            for c in &circles {
                let _ = writeln!(text, "  circle {}", vertex_list(c.iter().copied()));
            }
            section["method"] = json!("triangles");
            section["circles"] = json!(circles);
            section["minimum"] = json!(true);
        } else if !too_big(h.vertex_count(), max_n) {
            let min = minimum_negation_sets(&h)?;
            let fi = min.first().map_or(0, EdgeSet::len);
            let ok = fi == local.len();
            refuted |= !ok;
            certified &= ok;
            let _ = writeln!(
                text,
                "{}: frustration index {fi}, set has {} edges: {}",
                part.label(),
                local.len(),
                if ok { "minimum" } else { "not minimum" }
            );
            section["method"] = json!("exhaustive");
            section["frustration_index"] = json!(fi);
            section["minimum"] = json!(ok);
        } else {
            certified = false;
            let _ = writeln!(text, "{}: inconclusive (no triangle certificate, above --max-n {max_n})", part.label());
            section["method"] = json!("none");
            section["minimum"] = Value::Null;
        }
        sections.push(section);
    }
    let verdict = if certified {
        "minimum"
    } else if refuted {
        "not minimum"
    } else {
        "inconclusive"
    };
    let mut r = Report::new(
        if certified { EXIT_OK } else { EXIT_FAILS },
        json!({ "command": "certify-minimum", "set": b, "verdict": verdict, "components": sections }),
    );
    r.line(format!("set: {}", edge_list(b)));
    r.text.push_str(&text);
    r.line(verdict);
    Ok(r)
}

fn verify_minimum_certificate(g: &SignedGraph, b: &EdgeSet, cert: &DisjointCircleCertificate) -> Result<Report, Failure> {
    let ok = verify_disjoint_circle_certificate(g, b, cert)?;
    let mut r = Report::new(
        if ok { EXIT_OK } else { EXIT_FAILS },
        json!({ "command": "certify-minimum", "set": b, "method": "certificate", "verdict": if ok { "minimum" } else { "rejected" } }),
    );
    r.line(format!("set: {}", edge_list(b)));
    r.line(if ok {
        format!("certificate accepted: {} edge-disjoint negative circles, the set is minimum", cert.circles.len())
    } else {
        "certificate rejected (this does not show the set is not minimum)".to_string()
    });
    Ok(r)
}

fn certify_unique(g: &SignedGraph, b: &EdgeSet, max_n: usize) -> Result<Report, Failure> {
    require_negation_set(g, b)?;
    let (mut certified, mut refuted) = (true, false);
    let mut sections = Vec::new();
    let mut text = String::new();
    for part in parts(g) {
        let local = part.restrict(g, b);
        let h = with_negative_set(part.graph(), &local)?;
        let mut section = json!({ "vertices": part.sub.to_host, "size": local.len() });
        if is_complete(&h) && unique_minimum_by_size(&h, &local)? {
            let _ = writeln!(text, "{}: unique minimum ({} edges on K{}, at most n/2 − 1)", part.label(), local.len(), h.vertex_count());
            section["method"] = json!("size bound");
            section["unique_minimum"] = json!(true);
        } else if !too_big(h.vertex_count(), max_n) {
            let ok = brute_is_unique_minimum(&h, &local)?;
            refuted |= !ok;
            certified &= ok;
            let _ = writeln!(text, "{}: {}", part.label(), if ok { "unique minimum" } else { "not the unique minimum" });
            section["method"] = json!("exhaustive");
            section["unique_minimum"] = json!(ok);
        } else {
            certified = false;
            let _ = writeln!(text, "{}: inconclusive (above --max-n {max_n})", part.label());
            section["method"] = json!("none");
            section["unique_minimum"] = Value::Null;
        }
        sections.push(section);
    }
    let verdict = if certified {
        "unique minimum"
    } else if refuted {
        "not the unique minimum"
    } else {
        "inconclusive"
    };
    let mut r = Report::new(
        if certified { EXIT_OK } else { EXIT_FAILS },
        json!({ "command": "certify-unique", "set": b, "verdict": verdict, "components": sections }),
    );
    r.line(format!("set: {}", edge_list(b)));
    r.text.push_str(&text);
    r.line(verdict);
    Ok(r)
}

fn verify_unique_certificate(g: &SignedGraph, b: &EdgeSet, cert: &TwoCirclePerEdgeCertificate) -> Result<Report, Failure> {
    let h = with_negative_set(g, b)?;
    let ok = verify_two_circle_certificate(&h, b, cert)?;
    let mut r = Report::new(
        if ok { EXIT_OK } else { EXIT_FAILS },
        json!({ "command": "certify-unique", "set": b, "method": "certificate", "verdict": if ok { "unique minimum if minimum" } else { "rejected" } }),
    );
    r.line(format!("set: {}", edge_list(b)));
    r.line(if ok {
        "certificate accepted: if the set is minimum, it is the unique minimum"
    } else {
        "certificate rejected"
    });
    Ok(r)
}

#[derive(Serialize)]
struct AcyclicSection {
    vertices: Vec<usize>,
    switching: Vec<usize>,
    negation_set: Vec<Edge>,
    iterations: usize,
    trace: Vec<TraceLine>,
}

#[derive(Serialize)]
struct TraceLine {
    step: u8,
    switched: Vec<usize>,
    normalized: Vec<usize>,
    circles_before: usize,
    circles_after: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn acyclic(g: &SignedGraph, trace: bool) -> Result<Report, Failure> {
    let mut sections = Vec::new();
    let mut switching = Vec::new();
    let mut negation = Vec::new();
    let mut text = String::new();
    for part in parts(g) {
        match acyclic_negation(part.graph())? {
            AcyclicOutcome::MinusK5(k5) => {
                let block = part.lift_vertices(k5.block.iter().copied());
                let mut r = Report::new(EXIT_MINUS_K5, json!({ "command": "acyclic", "kind": "minus_k5", "block": block }));
                r.line(format!("block {{{}}} is switching equivalent to −K5; it has no acyclic negation set", vertex_list(block)));
                return Ok(r);
            }
            AcyclicOutcome::Acyclic(res) => {
                let section = AcyclicSection {
                    vertices: part.sub.to_host.clone(),
                    switching: part.lift_vertices(res.switching.iter()),
                    negation_set: part.lift(&res.negation_set),
                    iterations: res.stats.iterations,
                    trace: if trace {
                        res.trace
                            .iter()
                            .map(|t| TraceLine {
                                step: t.step,
                                switched: part.lift_vertices(t.switched.iter().copied()),
                                normalized: part.lift_vertices(t.normalized.iter().copied()),
                                circles_before: t.circles_before,
                                circles_after: t.circles_after,
                                note: t.note.clone(),
                            })
                            .collect()
                    } else {
                        Vec::new()
                    },
                };
                for t in &section.trace {
                    let _ = write!(
                        text,
                        "step {:>2} switch {{{}}} normalize {{{}}} circles {} -> {}",
                        t.step,
                        vertex_list(t.switched.iter().copied()),
                        vertex_list(t.normalized.iter().copied()),
                        t.circles_before,
                        t.circles_after
                    );
                    match &t.note {
                        Some(n) => {
                            let _ = writeln!(text, " ({n})");
                        }
                        None => text.push('\n'),
                    }
                }
                switching.extend(section.switching.iter().copied());
                negation.extend(section.negation_set.iter().copied());
                sections.push(section);
            }
        }
    }
    switching.sort_unstable();
    let negation = host_set(g, negation);
    let mut r = Report::new(
        EXIT_OK,
        json!({ "command": "acyclic", "kind": "acyclic", "switching": switching, "negation_set": negation, "components": sections }),
    );
    r.text.push_str(&text);
    r.line(format!("switching: {{{}}}", vertex_list(switching.iter().copied())));
    r.line(format!("negation set ({} edges, a forest): {}", negation.len(), edge_list(&negation)));
    Ok(r)
}

fn acyclic_set(g: &SignedGraph) -> Result<EdgeSet, Failure> {
    let mut edges = Vec::new();
    for part in parts(g) {
        match acyclic_negation(part.graph())? {
            AcyclicOutcome::Acyclic(res) => edges.extend(part.lift(&res.negation_set)),
            AcyclicOutcome::MinusK5(k5) => {
                return Err(Error::Precondition(format!(
                    "block {{{}}} is switching equivalent to −K5",
                    vertex_list(part.lift_vertices(k5.block.iter().copied()))
                ))
                .into())
            }
        }
    }
    Ok(host_set(g, edges))
}

fn packing(g: &SignedGraph) -> Result<Report, Failure> {
    let components = parts(g);
    let mut sections = Vec::new();
    let mut text = String::new();
    let mut code = EXIT_OK;
    for part in &components {
        let label = if components.len() > 1 { format!("{}: ", part.label()) } else { String::new() };
        match packing_number(part.graph()) {
            Err(e @ Error::Precondition(_)) => {
                code = EXIT_PRECONDITION;
                let _ = writeln!(text, "{label}{e}");
                sections.push(json!({ "vertices": part.sub.to_host, "error": e.to_string() }));
            }
            Err(e) => return Err(e.into()),
            Ok(res) => {
                let family: Vec<Vec<Edge>> = res.family.iter().map(|s| part.lift(s)).collect();
                let sides = res
                    .realizing_bipartition
                    .as_ref()
                    .map(|bp| (part.lift_vertices(bp.b1.iter().copied()), part.lift_vertices(bp.b2.iter().copied())));
                let _ = writeln!(text, "{label}π = {}", res.packing_number);
                match (&sides, res.distance) {
                    (Some((b1, b2)), Some(w)) => {
                        let _ = writeln!(text, "B1: {}", vertex_list(b1.iter().copied()));
                        let _ = writeln!(text, "B2: {}", vertex_list(b2.iter().copied()));
                        let _ = writeln!(text, "positive distance between the sides: {w}");
                    }
                    _ => {
                        let _ = writeln!(text, "negative edges are not bipartite, so no negation set is disjoint from them");
                    }
                }
                for (i, member) in family.iter().enumerate() {
                    let set = host_set(g, member.iter().copied());
                    let _ = writeln!(text, "c member {i}{}", if i == 0 { " (negative edges)" } else { "" });
                    text.push_str(&sg_lines(g, &set));
                }
                sections.push(json!({
                    "vertices": part.sub.to_host,
                    "packing_number": res.packing_number,
                    "realizing_bipartition": sides.map(|(b1, b2)| json!({ "b1": b1, "b2": b2 })),
                    "distance": res.distance,
                    "thresholds": res.thresholds,
                    "family": family,
                }));
            }
        }
    }
    let mut r = Report::new(code, json!({ "command": "packing", "components": sections }));
    r.text = text;
    Ok(r)
}

fn packing_family(g: &SignedGraph) -> Result<Vec<EdgeSet>, Failure> {
    let mut members: Vec<Vec<Edge>> = Vec::new();
    for part in parts(g) {
        let res = packing_number(part.graph())?;
        for (i, s) in res.family.iter().enumerate() {
            if members.len() <= i {
                members.push(Vec::new());
            }
            members[i].extend(part.lift(s));
        }
    }
    Ok(members.into_iter().map(|m| host_set(g, m)).collect())
}

fn frustration(g: &SignedGraph, max_n: usize) -> Result<Report, Failure> {
    if too_big(g.vertex_count(), max_n) {
        return Err(Error::CapExceeded { vertex_count: g.vertex_count(), cap: max_n }.into());
    }
    let min = minimum_negation_sets(g)?;
    let fi = min.first().map_or(0, EdgeSet::len);
    let mut r = Report::new(
        EXIT_OK,
        json!({ "command": "frustration", "frustration_index": fi, "minimum_sets": min.len(), "example": min.first() }),
    );
    r.line(format!("frustration index: {fi}"));
    r.line(format!("minimum negation sets: {}", min.len()));
    if let Some(first) = min.first() {
        r.line(format!("first: {}", edge_list(first)));
    }
    Ok(r)
}
