//! Embedded reference formulas and the suites that recheck them.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde_json::json;
use zetagraph::graphzeta::{cotree, kite_parse, w_minus, Composition, SimpleGraph};
use zetagraph::hypergraph::Hypergraph;
use zetagraph::oracle::{verify_series, ModuleSpec};
use zetagraph::zetacore::{w_hypergraph, Route};
use zetagraph::ZetaRat;

use crate::expr::{parse_den, parse_poly};

const DATA: &str = include_str!("../data/fixtures.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    WMinus,
    WPlus,
    WHyper,
}

impl FromStr for FixtureKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "w_minus" => Ok(FixtureKind::WMinus),
            "w_plus" => Ok(FixtureKind::WPlus),
            "w_hyper" => Ok(FixtureKind::WHyper),
            other => Err(format!("unknown kind {other:?}")),
        }
    }
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureKind::WMinus => "w_minus",
            FixtureKind::WPlus => "w_plus",
            FixtureKind::WHyper => "w_hyper",
        })
    }
}

/// What a fixture's formula is attached to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    Graph(SimpleGraph),
    Hypergraph(Hypergraph),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub kind: FixtureKind,
    pub value: ZetaRat,
    pub subject: Subject,
    pub cograph: bool,
    pub kite: Option<Composition>,
}

impl Fixture {
    /// Table or equation group: the id up to the first dot.
    pub fn suite(&self) -> &str {
        self.id.split('.').next().unwrap_or("")
    }

    pub fn graph(&self) -> Option<&SimpleGraph> {
        match &self.subject {
            Subject::Graph(g) => Some(g),
            Subject::Hypergraph(_) => None,
        }
    }

    /// Matrix module whose average kernel sizes the formula should count.
    pub fn module(&self) -> ModuleSpec {
        match (&self.subject, self.kind) {
            (Subject::Hypergraph(h), _) => ModuleSpec::incidence(h),
            (Subject::Graph(g), FixtureKind::WPlus) => ModuleSpec::adj_plus(g, &[]),
            (Subject::Graph(g), _) => ModuleSpec::adj_minus(g),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let subject = match &self.subject {
            Subject::Graph(g) => g.to_json(),
            Subject::Hypergraph(h) => h.to_json(),
        };
        json!({
            "id": self.id,
            "n": self.n,
            "m": self.m,
            "kind": self.kind.to_string(),
            "value": zetagraph::exactalg::JsonZeta::from(&self.value),
            "pretty": self.value.to_string(),
            "cograph": self.cograph,
            "kite": self.kite.as_ref().map(|k| k.to_string()),
            "subject": subject,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("fixture line {line}: {msg}")]
pub struct FixtureError {
    pub line: usize,
    pub msg: String,
}

fn parse_graph(n: usize, text: &str) -> Result<SimpleGraph, String> {
    let mut edges = Vec::new();
    for tok in text.split_whitespace() {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| format!("bad edge {tok:?}"))?;
        let a = a.parse().map_err(|_| format!("bad vertex in {tok:?}"))?;
        let b = b.parse().map_err(|_| format!("bad vertex in {tok:?}"))?;
        edges.push((a, b));
    }
    SimpleGraph::from_edges(n, &edges).map_err(|e| e.to_string())
}

fn parse_hyperedges(n: usize, text: &str) -> Result<Hypergraph, String> {
    let mut edges = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('[')
            .ok_or_else(|| format!("expected '[' in {rest:?}"))?;
        let close = body.find(']').ok_or("unclosed '['")?;
        let verts = body[..close]
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| format!("bad vertex {s:?}")))
            .collect::<Result<Vec<usize>, _>>()?;
        edges.push(verts);
        rest = body[close + 1..].trim_start();
    }
    Hypergraph::from_hyperedges(n, &edges).map_err(|e| e.to_string())
}

/// Parses one record `id | n | m | kind | numerator | denominator | subject`.
pub fn parse_record(line: &str) -> Result<Fixture, String> {
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    if fields.len() != 7 {
        return Err(format!("expected 7 fields, found {}", fields.len()));
    }
    let id = fields[0].to_string();
    let n: usize = fields[1].parse().map_err(|_| "bad vertex count")?;
    let m: usize = fields[2].parse().map_err(|_| "bad edge count")?;
    let kind: FixtureKind = fields[3].parse()?;
    let num = parse_poly(fields[4]).map_err(|e| e.to_string())?;
    let den = parse_den(fields[5]).map_err(|e| e.to_string())?;
    let value = ZetaRat::new(num, den);
    let subject = match kind {
        FixtureKind::WHyper => Subject::Hypergraph(parse_hyperedges(n, fields[6])?),
        _ => Subject::Graph(parse_graph(n, fields[6])?),
    };
    let actual_m = match &subject {
        Subject::Graph(g) => g.m(),
        Subject::Hypergraph(h) => h.m(),
    };
    if actual_m != m {
        return Err(format!("declared m = {m}, subject has {actual_m}"));
    }
    let (cograph, kite) = match &subject {
        Subject::Graph(g) if n > 0 => (cotree(g).is_ok(), kite_parse(g).ok()),
        _ => (false, None),
    };
    Ok(Fixture {
        id,
        n,
        m,
        kind,
        value,
        subject,
        cograph,
        kite,
    })
}

pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>, FixtureError> {
    let mut out: Vec<Fixture> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f = parse_record(line).map_err(|msg| FixtureError { line: i + 1, msg })?;
        if out.iter().any(|g| g.id == f.id) {
            return Err(FixtureError {
                line: i + 1,
                msg: format!("duplicate id {}", f.id),
            });
        }
        out.push(f);
    }
    Ok(out)
}

/// The embedded fixture set, parsed once.
pub fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| parse_fixtures(DATA).expect("embedded fixture file parses"))
}

pub fn fixture(id: &str) -> Option<&'static Fixture> {
    fixtures().iter().find(|f| f.id == id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Table2,
    Table3,
    Table4,
    Eq,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table1" => Ok(Suite::Table1),
            "table2" => Ok(Suite::Table2),
            "table3" => Ok(Suite::Table3),
            "table4" => Ok(Suite::Table4),
            "eq" => Ok(Suite::Eq),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

impl Suite {
    fn prefix(self) -> Option<&'static str> {
        match self {
            Suite::Table1 => Some("table1"),
            Suite::Table2 => Some("table2"),
            Suite::Table3 => Some("table3"),
            Suite::Table4 => Some("table4"),
            Suite::Eq => Some("eq"),
            Suite::All => None,
        }
    }

    pub fn members(self) -> Vec<&'static Fixture> {
        fixtures()
            .iter()
            .filter(|f| self.prefix().is_none_or(|p| f.suite() == p))
            .collect()
    }
}

/// One comparison made for a fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub method: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct FixtureReport {
    pub id: String,
    pub checks: Vec<Check>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.ok)
    }
}

fn oracle_check(f: &Fixture, p: u64, budget: u128) -> Check {
    let method = format!("oracle p={p} k<=1");
    match verify_series(&f.value, &f.module(), p, 1, budget) {
        Ok(vals) => Check {
            method,
            ok: true,
            detail: format!("T^1 = {}", vals[1]),
        },
        Err(e) => Check {
            method,
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn exact_check(f: &Fixture, got: ZetaRat, route: &str) -> Check {
    let ok = got == f.value;
    Check {
        method: format!("exact via {route}"),
        ok,
        detail: if ok {
            "equal".into()
        } else {
            format!("computed {got}")
        },
    }
}

fn fits(p: u64, free: usize, budget: u128) -> bool {
    (p as u128)
        .checked_pow(free as u32)
        .is_some_and(|c| c <= budget)
}

/// Rechecks one fixture: exact recomputation where the pipeline applies,
/// finite-ring enumeration otherwise.
pub fn check_fixture(f: &Fixture, budget: u128) -> FixtureReport {
    let mut checks = Vec::new();
    match (f.kind, &f.subject) {
        (FixtureKind::WMinus, Subject::Graph(g)) if f.cograph => {
            let got = w_minus(g).expect("cograph");
            checks.push(exact_check(f, got, "model"));
        }
        (FixtureKind::WMinus, Subject::Graph(_)) => {
            checks.push(oracle_check(f, 2, budget));
            if fits(3, f.m, budget) {
                checks.push(oracle_check(f, 3, budget));
            }
        }
        (FixtureKind::WPlus, _) => checks.push(oracle_check(f, 3, budget)),
        (FixtureKind::WHyper, Subject::Hypergraph(h)) => {
            checks.push(exact_check(
                f,
                w_hypergraph(h, 0, Route::Auto),
                "weak orders",
            ));
            checks.push(oracle_check(f, 2, budget));
        }
        (_, _) => checks.push(Check {
            method: "none".into(),
            ok: false,
            detail: "kind and subject disagree".into(),
        }),
    }
    FixtureReport {
        id: f.id.clone(),
        checks,
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub reports: Vec<FixtureReport>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    /// True iff the suite had records and every one passed.
    pub fn passed(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(FixtureReport::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let reports: Vec<_> = self
            .reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "passed": r.passed(),
                    "checks": r.checks.iter().map(|c| json!({
                        "method": c.method, "ok": c.ok, "detail": c.detail
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "passed": self.passed(),
            "records": self.reports.len(),
            "failures": self.reports.iter().filter(|r| !r.passed()).count(),
            "notes": self.notes,
            "reports": reports,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let tag = if r.passed() { "ok  " } else { "FAIL" };
            let checks: Vec<String> = r
                .checks
                .iter()
                .map(|c| format!("{}: {}", c.method, c.detail))
                .collect();
            out.push_str(&format!("{tag} {:<28} {}\n", r.id, checks.join("; ")));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        let bad = self.reports.iter().filter(|r| !r.passed()).count();
        out.push_str(&format!("{} records, {} failed\n", self.reports.len(), bad));
        out
    }
}

const TABLE2_NOTE: &str =
    "table2 has no records: no five-vertex reference values are bundled";

pub fn run_suite(suite: Suite, budget: u128) -> SuiteReport {
    let reports = suite
        .members()
        .into_iter()
        .map(|f| check_fixture(f, budget))
        .collect();
    let notes = match suite {
        Suite::Table2 | Suite::All => vec![TABLE2_NOTE.to_string()],
        _ => Vec::new(),
    };
    SuiteReport {
        suite,
        reports,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_file_parses() {
        let all = fixtures();
        assert_eq!(all.len(), 54);
        let minus1 = all
            .iter()
            .filter(|f| f.suite() == "table1" && f.kind == FixtureKind::WMinus)
            .count();
        assert_eq!(minus1, 18);
        assert_eq!(Suite::Table3.members().len(), 9);
        assert_eq!(Suite::Table4.members().len(), 7);
        assert!(Suite::Table2.members().is_empty());
    }

    #[test]
    fn derived_flags() {
        let p4 = fixture("table1.P4.minus").unwrap();
        assert!(!p4.cograph);
        assert!(p4.kite.is_none());
        let k3 = fixture("table1.K3.minus").unwrap();
        assert!(k3.cograph);
        assert!(k3.kite.is_some());
        let k2k2 = fixture("table1.K2+K2.minus").unwrap();
        assert!(k2k2.cograph && k2k2.kite.is_none());
        assert!(!fixture("eq.ninja").unwrap().cograph);
        assert!(fixture("eq.H332").unwrap().cograph);
    }

    #[test]
    fn bad_records() {
        assert!(parse_record("a | 2 | 1 | w_minus | 1 | (1-T) ").is_err());
        assert!(parse_record("a | 2 | 2 | w_minus | 1 | (1-T) | 0-1").is_err());
        assert!(parse_record("a | 2 | 1 | w_odd | 1 | (1-T) | 0-1").is_err());
        assert!(parse_record("a | 2 | 1 | w_minus | 1 | (1+T) | 0-1").is_err());
        assert!(parse_record("a | 2 | 1 | w_minus | 1 | (1-T) | 0-2").is_err());
        let h = parse_record("h | 2 | 2 | w_hyper | 1 | (1-T) | [0,1] []").unwrap();
        assert_eq!(
            h.subject,
            Subject::Hypergraph(Hypergraph::new(2, [(3, 1), (0, 1)]).unwrap())
        );
        let dup = "a | 1 | 0 | w_minus | 1 | (1-XT) | \na | 1 | 0 | w_minus | 1 | (1-XT) | ";
        assert_eq!(parse_fixtures(dup).unwrap_err().line, 2);
    }

    #[test]
    fn small_suite_rows() {
        let r = check_fixture(fixture("table1.K2.minus").unwrap(), 1_000_000);
        assert!(r.passed(), "{r:?}");
        let r = check_fixture(fixture("table1.K3.plus").unwrap(), 1_000_000);
        assert!(r.passed(), "{r:?}");
        let table2 = run_suite(Suite::Table2, 1_000_000);
        assert!(!table2.passed());
        assert_eq!(table2.notes.len(), 1);
    }
}
