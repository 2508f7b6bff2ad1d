use std::io::Read;

use num_bigint::BigInt;
use serde_json::{json, Value};
use zetagraph::exactalg::{latex, JsonZeta};
use zetagraph::graphzeta::{
    cc_zeta, cotree, kite_parse, model, w_minus, w_minus_join_route, GraphError, SimpleGraph,
};
use zetagraph::hypergraph::Hypergraph;
use zetagraph::oracle::{conjugacy_count, verify_series, ModuleSpec, OracleError, DEFAULT_BUDGET};
use zetagraph::zetacore::{w_hypergraph, Route};
use zetagraph::{Rational, ZetaRat};

use crate::fixtures::{self, Fixture, FixtureKind, Subject, Suite};
use crate::{Cli, CliError, Command, Format, GraphRoute, HyperRoute, SeriesKind, VerifyMode};

/// Oracle budget from `ZETAGRAPH_BUDGET`, else the library default.
pub fn budget() -> Result<u128, CliError> {
    match std::env::var("ZETAGRAPH_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("ZETAGRAPH_BUDGET={s:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// A loaded input argument.
pub enum Input {
    Graph(SimpleGraph),
    Hyper(Hypergraph),
    Fixture(&'static Fixture),
}

fn read_text(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::Input(format!("{arg}: {e}")))
}

pub fn load_input(arg: &str) -> Result<Input, CliError> {
    if let Some(id) = arg.strip_prefix("fixture:") {
        return fixtures::fixture(id)
            .map(Input::Fixture)
            .ok_or_else(|| CliError::Input(format!("no fixture {id:?}")));
    }
    let text = read_text(arg)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("JSON: {e}")))?;
    // `{"vertices": n}` alone is read as a hypergraph without hyperedges.
    if v.get("edges").is_none() {
        Hypergraph::from_json(&text)
            .map(Input::Hyper)
            .map_err(|e| CliError::Input(e.to_string()))
    } else {
        SimpleGraph::from_value(&v)
            .map(Input::Graph)
            .map_err(|e| CliError::Input(e.to_string()))
    }
}

fn load_graph(arg: &str) -> Result<SimpleGraph, CliError> {
    match load_input(arg)? {
        Input::Graph(g) => Ok(g),
        Input::Fixture(f) => f
            .graph()
            .cloned()
            .ok_or_else(|| CliError::Input(format!("fixture {} is not a graph", f.id))),
        Input::Hyper(h) if h.m() == 0 => Ok(SimpleGraph::discrete(h.n())),
        Input::Hyper(_) => Err(CliError::Input("expected a graph, got a hypergraph".into())),
    }
}

fn load_hyper(arg: &str) -> Result<Hypergraph, CliError> {
    match load_input(arg)? {
        Input::Hyper(h) => Ok(h),
        Input::Fixture(Fixture {
            subject: Subject::Hypergraph(h),
            ..
        }) => Ok(h.clone()),
        Input::Fixture(f) => Err(CliError::Input(format!(
            "fixture {} is not a hypergraph",
            f.id
        ))),
        Input::Graph(_) => Err(CliError::Input("expected a hypergraph, got a graph".into())),
    }
}

fn graph_error(e: GraphError) -> CliError {
    match e {
        GraphError::NotCograph { .. } | GraphError::NotKite => CliError::Structure(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::Mismatch { .. } => CliError::Mismatch(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

pub fn zeta_output(w: &ZetaRat, format: Format) -> String {
    match format {
        Format::Json => {
            let v = json!({ "zeta": JsonZeta::from(w), "pretty": w.to_string() });
            serde_json::to_string_pretty(&v).unwrap()
        }
        Format::Pretty => w.to_string(),
        Format::Latex => latex(w),
    }
}

fn json_or(format: Format, v: Value, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&v).unwrap(),
        _ => text,
    }
}

/// `W⁻` of a graph input: the pipeline for cographs, the stored formula for
/// fixtures the pipeline cannot reach.
fn minus_of(input: &Input) -> Result<(ZetaRat, usize), CliError> {
    match input {
        Input::Graph(g) => Ok((w_minus(g).map_err(graph_error)?, g.m())),
        Input::Fixture(f) if f.kind == FixtureKind::WMinus => Ok((f.value.clone(), f.m)),
        Input::Fixture(f) => Err(CliError::Input(format!(
            "fixture {} is not a W⁻ record",
            f.id
        ))),
        Input::Hyper(h) if h.m() == 0 => Ok((
            w_minus(&SimpleGraph::discrete(h.n())).map_err(graph_error)?,
            0,
        )),
        Input::Hyper(_) => Err(CliError::Input("expected a graph, got a hypergraph".into())),
    }
}

fn cmd_model(g: &SimpleGraph, format: Format) -> Result<String, CliError> {
    let m = model(g).map_err(graph_error)?;
    let mat = m.hypergraph.to_incidence();
    let rows: Vec<String> = mat
        .entries
        .iter()
        .map(|r| r.iter().map(u8::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    Ok(match format {
        Format::Json => {
            let mut v = m.hypergraph.to_json();
            v["matrix"] = json!(mat.entries);
            v["components"] = json!(m.components);
            serde_json::to_string_pretty(&v).unwrap()
        }
        Format::Pretty => rows.join("\n"),
        Format::Latex => {
            let body: Vec<String> = rows.iter().map(|r| r.replace(' ', " & ")).collect();
            format!(
                "\\begin{{bmatrix}}\n{}\n\\end{{bmatrix}}",
                body.join(" \\\\\n")
            )
        }
    })
}

fn cmd_kite(g: &SimpleGraph, format: Format) -> Result<String, CliError> {
    // Report a P4 witness when the graph is not even a cograph.
    if let Err(e @ GraphError::NotCograph { .. }) = cotree(g) {
        return Err(CliError::Structure(format!("not a kite graph; {e}")));
    }
    let k = kite_parse(g).map_err(graph_error)?;
    Ok(json_or(
        format,
        json!({ "composition": k.parts() }),
        k.to_string(),
    ))
}

fn cmd_series(
    input: &Input,
    kind: SeriesKind,
    terms: usize,
    at_q: Option<u64>,
    format: Format,
) -> Result<String, CliError> {
    let w = match kind {
        SeriesKind::Minus => minus_of(input)?.0,
        SeriesKind::Cc => {
            let (w, m) = minus_of(input)?;
            w.subst_t_scale(m as i64)
        }
        SeriesKind::Hyper => match input {
            Input::Hyper(h) => w_hypergraph(h, 0, Route::Auto),
            Input::Fixture(f) => f.value.clone(),
            Input::Graph(_) => return Err(CliError::Input("expected a hypergraph".into())),
        },
    };
    let series = w.series(terms);
    let coeffs: Vec<String> = match at_q {
        Some(q) => {
            let x = Rational::from_integer(BigInt::from(q));
            series.eval_x(&x).iter().map(ToString::to_string).collect()
        }
        None => series.coeffs().iter().map(ToString::to_string).collect(),
    };
    let text = format!("[{}]", coeffs.join(", "));
    Ok(json_or(format, json!({ "coefficients": coeffs }), text))
}

struct VerifyLine {
    what: String,
    ok: bool,
}

fn verify_oracle(input: &Input, p: u64, kmax: u32, budget: u128) -> Result<VerifyLine, CliError> {
    let (w, spec) = match input {
        Input::Graph(g) => (w_minus(g).map_err(graph_error)?, ModuleSpec::adj_minus(g)),
        Input::Hyper(h) => (w_hypergraph(h, 0, Route::Auto), ModuleSpec::incidence(h)),
        Input::Fixture(f) => (f.value.clone(), f.module()),
    };
    match verify_series(&w, &spec, p, kmax, budget) {
        Ok(vals) => {
            let vals: Vec<String> = vals.iter().map(ToString::to_string).collect();
            Ok(VerifyLine {
                what: format!("oracle p={p}: T^0..T^{kmax} = [{}]", vals.join(", ")),
                ok: true,
            })
        }
        Err(e @ OracleError::Mismatch { .. }) => Ok(VerifyLine {
            what: format!("oracle p={p}: {e}"),
            ok: false,
        }),
        Err(e) => Err(oracle_error(e)),
    }
}

fn verify_cc(input: &Input, p: u64) -> Result<VerifyLine, CliError> {
    let g = match input {
        Input::Graph(g) => g.clone(),
        Input::Fixture(f) if f.kind == FixtureKind::WMinus => f.graph().cloned().unwrap(),
        _ => {
            return Err(CliError::Input(
                "class counts need a graph with a W⁻".into(),
            ))
        }
    };
    let (w, m) = minus_of(input)?;
    let x = Rational::from_integer(BigInt::from(p));
    let from_zeta = w.subst_t_scale(m as i64).t_coeff(1).eval(&x);
    let counted = conjugacy_count(&g, p).map_err(oracle_error)?;
    let ok = from_zeta == Rational::from_integer(BigInt::from(counted));
    Ok(VerifyLine {
        what: format!("classes p={p}: zeta gives {from_zeta}, group has {counted}"),
        ok,
    })
}

fn cmd_verify(
    input: &Input,
    p: u64,
    kmax: u32,
    mode: VerifyMode,
    format: Format,
) -> Result<String, CliError> {
    let budget = budget()?;
    let mut lines = Vec::new();
    if matches!(mode, VerifyMode::Oracle | VerifyMode::All) {
        lines.push(verify_oracle(input, p, kmax, budget)?);
    }
    let has_graph = match input {
        Input::Graph(_) => true,
        Input::Fixture(f) => f.kind == FixtureKind::WMinus,
        Input::Hyper(_) => false,
    };
    if mode == VerifyMode::Cc || (mode == VerifyMode::All && has_graph) {
        lines.push(verify_cc(input, p)?);
    }
    let passed = lines.iter().all(|l| l.ok);
    let text: Vec<String> = lines
        .iter()
        .map(|l| format!("{} {}", if l.ok { "ok  " } else { "FAIL" }, l.what))
        .collect();
    let report = json_or(
        format,
        json!({
            "passed": passed,
            "checks": lines.iter().map(|l| json!({"ok": l.ok, "detail": l.what})).collect::<Vec<_>>(),
        }),
        text.join("\n"),
    );
    if passed {
        Ok(report)
    } else {
        Err(CliError::Mismatch(report))
    }
}

fn cmd_fixtures(suite: &str, list: bool, format: Format) -> Result<String, CliError> {
    let suite: Suite = suite.parse().map_err(CliError::Input)?;
    if list {
        let rows: Vec<Value> = suite.members().iter().map(|f| f.to_json()).collect();
        let text: Vec<String> = suite
            .members()
            .iter()
            .map(|f| {
                let tag = match (&f.kite, f.cograph) {
                    (Some(k), _) => format!("kite {k}"),
                    (None, true) => "cograph".into(),
                    (None, false) => String::new(),
                };
                format!("{:<28} {:<8} n={} m={} {tag}", f.id, f.kind, f.n, f.m)
            })
            .collect();
        return Ok(json_or(format, json!(rows), text.join("\n")));
    }
    let report = fixtures::run_suite(suite, budget()?);
    let out = json_or(format, report.to_json(), report.to_text());
    if report.passed() {
        Ok(out)
    } else {
        Err(CliError::Mismatch(out))
    }
}

/// Executes a parsed command line; `Ok` carries stdout for exit code 0.
pub fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::HyperZeta {
            input,
            socle,
            route,
        } => {
            let h = load_hyper(&input)?;
            let route = match route {
                HyperRoute::Master => Route::Sum,
                HyperRoute::Recursive => Route::Recursion,
                HyperRoute::Auto => Route::Auto,
            };
            Ok(zeta_output(&w_hypergraph(&h, socle, route), format))
        }
        Command::GraphZeta { input, route } => {
            let g = load_graph(&input)?;
            let w = match route {
                GraphRoute::Model => w_minus(&g),
                GraphRoute::Join => w_minus_join_route(&g),
            }
            .map_err(graph_error)?;
            Ok(zeta_output(&w, format))
        }
        Command::Cc { input } => {
            let g = load_graph(&input)?;
            Ok(zeta_output(&cc_zeta(&g).map_err(graph_error)?, format))
        }
        Command::Model { input } => cmd_model(&load_graph(&input)?, format),
        Command::Cotree { input } => {
            let t = cotree(&load_graph(&input)?).map_err(graph_error)?;
            Ok(json_or(
                format,
                json!({ "cotree": t.to_string() }),
                t.to_string(),
            ))
        }
        Command::Kite { input } => cmd_kite(&load_graph(&input)?, format),
        Command::Series {
            input,
            kind,
            terms,
            at_q,
        } => cmd_series(&load_input(&input)?, kind, terms, at_q, format),
        Command::Verify {
            input,
            p,
            kmax,
            mode,
        } => cmd_verify(&load_input(&input)?, p, kmax, mode, format),
        Command::Fixtures { suite, list } => cmd_fixtures(&suite, list, format),
    }
}
