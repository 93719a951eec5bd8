//! The `jnum` command line.
//!
//! Every command produces a [`CliResult`]; the binary prints it as text,
//! JSON (`--json`) or CSV (`--csv`) and exits with [`CliResult::exit_code`].

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{invariant_trace_field_generators, recognize_field, DEFAULT_COEFF_BOUND};
use crate::catalog::{bianchi_generators, bianchi_relator_texts, gtk_generators, identify_gtk, GtkParams};
use crate::error::{Error, Result};
use crate::linalg::{commutator_trace, fmt_cx, jorgensen_pair, Cx, Mat2};
use crate::poly::IntPoly;
use crate::riley::{knot_jreport, link_jreport, SelectionOptions, TwoBridge};
use crate::roots::{solve_roots, RootSet};
use crate::tolerance::{self, tolerances, Tolerances};
use crate::verify::{run_all, verify_relations, Check, Suite, SuiteReport, VerifyOptions};
use crate::words::GeneratorSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliResult {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Vec<Value>,
    pub tolerances: Tolerances,
    pub status: Status,
    /// Set when `status` is `error`: `usage` or `pipeline`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_kind: Option<String>,
}

impl CliResult {
    /// 0 ok, 1 violation or pipeline failure, 2 usage error.
    pub fn exit_code(&self) -> i32 {
        match (self.status, self.error_kind.as_deref()) {
            (Status::Ok, _) => 0,
            (Status::Error, Some("usage")) => 2,
            _ => 1,
        }
    }

    fn failure(command: &str, inputs: BTreeMap<String, Value>, err: &Error) -> CliResult {
        let kind = if is_usage(err) { "usage" } else { "pipeline" };
        let mut rec = json!({ "error": err.to_string() });
        if matches!(err, Error::NoGeometricRoot(_)) {
            rec["non_hyperbolic"] = json!(true);
        }
        CliResult {
            command: command.into(),
            inputs,
            results: vec![rec],
            tolerances: *tolerances(),
            status: Status::Error,
            error_kind: Some(kind.into()),
        }
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(e, Error::Usage(_) | Error::InvalidPair { .. } | Error::Parse(_) | Error::SizeLimit(_))
}

#[derive(Debug, Parser)]
#[command(name = "jnum", version, about = "Jørgensen numbers of two-generator Kleinian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the full result as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print result records as CSV (verify, roots).
    #[arg(long, global = true, conflicts_with = "json")]
    pub csv: bool,
    /// TOML file with [tolerances], [limits] and [verify] tables.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Tolerance overrides, e.g. `1e-10` or `cx=1e-10,fix=1e-7`.
    #[arg(long, global = true, value_name = "SPEC")]
    pub tol: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Riley polynomial, geometric root and J for a two-bridge knot.
    Knot {
        /// `P/Q` with P odd.
        pq: String,
        /// Take this root (index into the printed list) instead of selecting.
        #[arg(long)]
        root_index: Option<usize>,
        /// Word length for the discreteness sampling filter.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Riley polynomial, geometric root and J for a two-bridge link.
    Link {
        /// `P/Q` with P even.
        pq: String,
        #[arg(long)]
        root_index: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Generators and relators of PSL2(O_d), d in {1, 2, 3, 7, 11}.
    Bianchi {
        #[arg(long)]
        d: u64,
        /// Evaluate every relator.
        #[arg(long)]
        verify: bool,
    },
    /// The group G(θ, k) with θ = π·NUM/DEN.
    Gtk {
        /// `NUM/DEN`, the angle as a multiple of π.
        theta: String,
        /// Real parameter k.
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Roots of an integer polynomial given as ascending coefficients.
    Roots {
        /// e.g. `1,2,1,1` for z^3 + z^2 + 2z + 1.
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

/// Word-length caps settable from the config file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    pub sample_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { sample_len: SelectionOptions::default().sample_len }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub tolerances: Option<toml::Table>,
    pub limits: Limits,
    pub verify: VerifyOptions,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// Config tolerances over the defaults, in the override-string format.
    fn tolerance_spec(&self) -> Result<String> {
        let Some(t) = &self.tolerances else { return Ok(String::new()) };
        let mut parts = Vec::new();
        for (k, v) in t {
            let v = match v {
                toml::Value::Float(f) => f.to_string(),
                toml::Value::Integer(i) => i.to_string(),
                _ => return Err(Error::Parse(format!("tolerance {k} must be a number"))),
            };
            parts.push(format!("{k}={v}"));
        }
        Ok(parts.join(","))
    }
}

/// Tolerances from defaults, then the config file, then [`tolerance::ENV_VAR`],
/// then `--tol`.
pub fn resolve_tolerances(config: &Config, flag: Option<&str>) -> Result<Tolerances> {
    let mut t = Tolerances::default().with_overrides(&config.tolerance_spec()?)?;
    if let Ok(env) = std::env::var(tolerance::ENV_VAR) {
        t = t.with_overrides(&env)?;
    }
    if let Some(f) = flag {
        t = t.with_overrides(f)?;
    }
    Ok(t)
}

/// Output of one invocation.
pub struct Outcome {
    pub result: CliResult,
    pub rendered: String,
}

/// Parses arguments, runs the command and renders the chosen format.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_requested = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let mut result = CliResult::failure("", BTreeMap::new(), &Error::Usage(e.to_string()));
            if shown {
                result.status = Status::Ok;
                result.error_kind = None;
            }
            let rendered = if json_requested && !shown { to_json(&result) } else { e.to_string() };
            return Outcome { result, rendered };
        }
    };
    let (format, command_name) = (OutputFormat::of(&cli), command_name(&cli.command));
    let result = match prepare(&cli) {
        Ok((config, tol)) => {
            if tolerance::install(tol).is_err() && *tolerances() != tol {
                let err = Error::Usage("tolerances were already fixed in this process".into());
                return finish(CliResult::failure(command_name, BTreeMap::new(), &err), format);
            }
            execute(&cli.command, &config)
        }
        Err(e) => CliResult::failure(command_name, BTreeMap::new(), &e),
    };
    finish(result, format)
}

fn prepare(cli: &Cli) -> Result<(Config, Tolerances)> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if cli.csv && !matches!(cli.command, Command::Verify { .. } | Command::Roots { .. }) {
        return Err(Error::Usage("--csv applies to verify and roots".into()));
    }
    let tol = resolve_tolerances(&config, cli.tol.as_deref())?;
    Ok((config, tol))
}

#[derive(Clone, Copy)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl OutputFormat {
    fn of(cli: &Cli) -> Self {
        if cli.json {
            OutputFormat::Json
        } else if cli.csv {
            OutputFormat::Csv
        } else {
            OutputFormat::Text
        }
    }
}

fn finish(result: CliResult, format: OutputFormat) -> Outcome {
    let rendered = match format {
        OutputFormat::Json => to_json(&result),
        OutputFormat::Csv if result.status != Status::Error => to_csv(&result),
        _ => to_text(&result),
    };
    Outcome { result, rendered }
}

fn to_json(r: &CliResult) -> String {
    serde_json::to_string_pretty(r).expect("CliResult serializes")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Knot { .. } => "knot",
        Command::Link { .. } => "link",
        Command::Bianchi { .. } => "bianchi",
        Command::Gtk { .. } => "gtk",
        Command::Verify { .. } => "verify",
        Command::Roots { .. } => "roots",
    }
}

fn inputs(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn ok_result(command: &str, inputs: BTreeMap<String, Value>, results: Vec<Value>, pass: bool) -> CliResult {
    CliResult {
        command: command.into(),
        inputs,
        results,
        tolerances: *tolerances(),
        status: if pass { Status::Ok } else { Status::Violation },
        error_kind: None,
    }
}

fn cx_json(z: Cx) -> Value {
    json!([z.re, z.im])
}

fn generators_json(g: &GeneratorSet) -> Value {
    let map: serde_json::Map<String, Value> = g
        .names()
        .iter()
        .zip(g.mats())
        .map(|(n, m)| (n.clone(), serde_json::to_value(m).expect("matrix serializes")))
        .collect();
    Value::Object(map)
}

fn roots_json(rs: &RootSet) -> Vec<Value> {
    rs.roots.iter().map(|r| json!({ "re": r.z.re, "im": r.z.im, "error_bound": r.error_bound })).collect()
}

/// Runs a parsed command. Tolerances must already be fixed.
pub fn execute(command: &Command, config: &Config) -> CliResult {
    let name = command_name(command);
    match command {
        Command::Knot { pq, root_index, max_len } | Command::Link { pq, root_index, max_len } => {
            let mut inp = inputs(&[("pq", json!(pq))]);
            if let Some(i) = root_index {
                inp.insert("root_index".into(), json!(i));
            }
            let opts =
                SelectionOptions { sample_len: max_len.unwrap_or(config.limits.sample_len), root_index: *root_index };
            inp.insert("max_len".into(), json!(opts.sample_len));
            let out = if name == "knot" { knot_record(pq, &opts) } else { link_record(pq, &opts) };
            match out {
                Ok((rec, pass)) => ok_result(name, inp, vec![rec], pass),
                Err(e) => CliResult::failure(name, inp, &e),
            }
        }
        Command::Bianchi { d, verify } => {
            let inp = inputs(&[("d", json!(d)), ("verify", json!(verify))]);
            match bianchi_record(*d, *verify) {
                Ok((rec, pass)) => ok_result(name, inp, vec![rec], pass),
                Err(e) => CliResult::failure(name, inp, &e),
            }
        }
        Command::Gtk { theta, k } => {
            let inp = inputs(&[("theta", json!(theta)), ("k", json!(k))]);
            match GtkParams::parse(theta, k).and_then(|p| gtk_record(&p)) {
                Ok(rec) => ok_result(name, inp, vec![rec], true),
                Err(e) => CliResult::failure(name, inp, &e),
            }
        }
        Command::Verify { suite } => {
            let mut inp = inputs(&[("suite", json!(suite))]);
            inp.insert("options".into(), serde_json::to_value(config.verify).expect("options serialize"));
            let reports = if suite == "all" {
                Ok(run_all(&config.verify))
            } else {
                suite.parse::<Suite>().map(|s| vec![s.run(&config.verify)])
            };
            match reports {
                Ok(reports) => {
                    let pass = reports.iter().all(|r| r.pass);
                    ok_result(name, inp, check_records(&reports), pass)
                }
                Err(e) => CliResult::failure(name, inp, &e),
            }
        }
        Command::Roots { poly } => {
            let inp = inputs(&[("poly", json!(poly))]);
            match IntPoly::from_text(poly).and_then(|p| solve_roots(&p)) {
                Ok(rs) => ok_result(name, inp, roots_json(&rs), true),
                Err(e) => CliResult::failure(name, inp, &e),
            }
        }
    }
}

fn check_records(reports: &[SuiteReport]) -> Vec<Value> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| {
                let mut v = serde_json::to_value(c).expect("check serializes");
                v["suite"] = json!(r.suite);
                v
            })
        })
        .collect()
}

fn knot_record(pq: &str, opts: &SelectionOptions) -> Result<(Value, bool)> {
    let tb = TwoBridge::parse(pq)?;
    let r = knot_jreport(&tb, opts)?;
    let rec = json!({
        "two_bridge": format!("{}/{}", tb.p(), tb.q()),
        "d_n": r.poly.to_text(),
        "d_n_display": r.poly.to_string(),
        "min_poly": r.min_poly.as_ref().map(|p| p.to_text()),
        "roots": roots_json(&r.roots),
        "selected_index": r.selection.index,
        "manual": r.selection.manual,
        "ambiguous": r.selection.ambiguous,
        "z": cx_json(r.z),
        "J": r.jreport.value,
        "abs_z": r.abs_z,
        "waist_bound": r.waist_bound,
        "z_bound_holds": r.z_bound_holds,
        "relation_residual": r.relation_residual,
    });
    Ok((rec, r.z_bound_holds && r.relation_residual <= 1e-6))
}

fn link_record(pq: &str, opts: &SelectionOptions) -> Result<(Value, bool)> {
    let tb = TwoBridge::parse(pq)?;
    let r = link_jreport(&tb, opts)?;
    let rec = json!({
        "two_bridge": format!("{}/{}", tb.p(), tb.q()),
        "c_n": r.raw_poly.to_text(),
        "c_n_normalized": r.poly.to_text(),
        "c_n_display": r.poly.to_string(),
        "min_poly": r.min_poly.as_ref().map(|p| p.to_text()),
        "roots": roots_json(&r.roots),
        "selected_index": r.selection.index,
        "manual": r.selection.manual,
        "ambiguous": r.selection.ambiguous,
        "z": cx_json(r.z),
        "J": r.jreport.value,
        "abs_z_sq": r.abs_z_sq,
        "waist_bound": r.waist_bound,
        "z_bound_holds": r.z_bound_holds,
        "relation_residual": r.relation_residual,
    });
    Ok((rec, r.z_bound_holds && r.relation_residual <= 1e-6))
}

fn bianchi_record(d: u64, verify: bool) -> Result<(Value, bool)> {
    let gens = bianchi_generators(d)?;
    let mut rec = json!({
        "d": d,
        "group": format!("PSL2(O_{d})"),
        "generators": generators_json(&gens),
        "relators": bianchi_relator_texts(d)?,
    });
    let mut pass = true;
    if verify {
        let report = verify_relations(d)?;
        pass = report.pass;
        rec["verification"] = serde_json::to_value(&report).expect("report serializes");
    }
    Ok((rec, pass))
}

fn gtk_record(p: &GtkParams) -> Result<Value> {
    let gens = gtk_generators(p);
    let (a, b) = (gens.mats()[0], gens.mats()[1]);
    let jr = jorgensen_pair(&a, &b);
    let field = invariant_trace_field_generators(&a, &b)?;
    let d = recognize_field(&field, DEFAULT_COEFF_BOUND).map(|f| f.d());
    let m = identify_gtk(p);
    Ok(json!({
        "theta": format!("{}/{}", p.theta_num, p.theta_den),
        "theta_radians": p.theta(),
        "k": p.k,
        "generators": generators_json(&gens),
        "J": jr.value,
        "commutator_trace": cx_json(commutator_trace(&a, &b)),
        "invariant_field_generators": field.iter().map(|&z| cx_json(z)).collect::<Vec<_>>(),
        "field_d": d,
        "family": m.as_ref().map(|m| m.family.label.clone()),
        "arithmetic": m.as_ref().map(|m| m.family.arithmetic),
        "identification": m.as_ref().map(|m| m.identification.clone()),
        "theta_shifted_by_pi": m.as_ref().map(|m| m.shifted),
    }))
}

// ---------------------------------------------------------------------------
// Rendering

fn to_csv(r: &CliResult) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    match r.command.as_str() {
        "verify" => {
            #[derive(Serialize)]
            struct Row<'a> {
                suite: &'a str,
                label: &'a str,
                expected: &'a str,
                actual: &'a str,
                deviation: Option<f64>,
                tolerance: Option<f64>,
                pass: bool,
                informational: bool,
                note: Option<&'a str>,
            }
            for v in &r.results {
                let c: Check = serde_json::from_value(strip_suite(v)).expect("check record");
                let suite = v["suite"].as_str().unwrap_or("");
                w.serialize(Row {
                    suite,
                    label: &c.label,
                    expected: &c.expected,
                    actual: &c.actual,
                    deviation: c.deviation,
                    tolerance: c.tolerance,
                    pass: c.pass,
                    informational: c.informational,
                    note: c.note.as_deref(),
                })
                .expect("csv row");
            }
        }
        _ => {
            #[derive(Serialize)]
            struct Row {
                re: f64,
                im: f64,
                error_bound: f64,
            }
            for v in &r.results {
                let row = Row {
                    re: v["re"].as_f64().unwrap_or(f64::NAN),
                    im: v["im"].as_f64().unwrap_or(f64::NAN),
                    error_bound: v["error_bound"].as_f64().unwrap_or(f64::NAN),
                };
                w.serialize(row).expect("csv row");
            }
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn strip_suite(v: &Value) -> Value {
    let mut v = v.clone();
    if let Some(o) = v.as_object_mut() {
        o.remove("suite");
    }
    v
}

fn num(v: &Value) -> String {
    v.as_f64().map_or("-".into(), |x| format!("{x:.10}"))
}

fn cx_text(v: &Value) -> String {
    match (v[0].as_f64(), v[1].as_f64()) {
        (Some(re), Some(im)) => fmt_cx(Cx::new(re, im), 10),
        _ => "-".into(),
    }
}

fn mats_text(out: &mut String, gens: &Value) {
    if let Some(o) = gens.as_object() {
        for (name, m) in o {
            if let Ok(m) = serde_json::from_value::<Mat2>(m.clone()) {
                let _ = writeln!(out, "  {name} = {m:.6}");
            }
        }
    }
}

fn to_text(r: &CliResult) -> String {
    let mut s = String::new();
    if r.status == Status::Error {
        let msg = r.results.first().and_then(|v| v["error"].as_str()).unwrap_or("error");
        let _ = writeln!(s, "error: {msg}");
        if r.results.first().is_some_and(|v| v.get("non_hyperbolic").is_some()) {
            let _ = writeln!(s, "no root gives a discrete faithful (hyperbolic) representation");
        }
        return s;
    }
    match r.command.as_str() {
        "knot" | "link" => {
            let v = &r.results[0];
            let poly_key = if r.command == "knot" { "d_n" } else { "c_n" };
            let _ = writeln!(s, "two-bridge {} {}", r.command, v["two_bridge"].as_str().unwrap_or(""));
            let display = v[format!("{poly_key}_display")].as_str().unwrap_or("");
            let _ = writeln!(s, "{poly_key:<13}{display}");
            if let Some(mp) = v["min_poly"].as_str() {
                let _ = writeln!(
                    s,
                    "{:<13}{}",
                    "min poly",
                    mp.parse::<IntPoly>().map(|p| p.to_string()).unwrap_or_default()
                );
            }
            let sel = v["selected_index"].as_u64();
            let _ = writeln!(s, "roots");
            for (i, root) in v["roots"].as_array().into_iter().flatten().enumerate() {
                let mark = if sel == Some(i as u64) { '*' } else { ' ' };
                let z = Cx::new(root["re"].as_f64().unwrap_or(0.0), root["im"].as_f64().unwrap_or(0.0));
                let _ = writeln!(s, " {mark}[{i}] {}", fmt_cx(z, 10));
            }
            let _ = writeln!(s, "{:<13}{}", "z", cx_text(&v["z"]));
            let _ = writeln!(s, "{:<13}{}", "J", num(&v["J"]));
            let _ = writeln!(s, "{:<13}{}", "waist bound", num(&v["waist_bound"]));
            let holds = v["z_bound_holds"].as_bool().unwrap_or(false);
            let _ = writeln!(s, "{:<13}{}", "|z| < 4", if holds { "yes" } else { "NO" });
            if v["ambiguous"].as_bool() == Some(true) {
                let _ = writeln!(s, "note: more than one root survived the discreteness filter");
            }
        }
        "bianchi" => {
            let v = &r.results[0];
            let _ = writeln!(s, "{}", v["group"].as_str().unwrap_or(""));
            mats_text(&mut s, &v["generators"]);
            let _ = writeln!(s, "relators");
            for rel in v["relators"].as_array().into_iter().flatten() {
                let _ = writeln!(s, "  {}", rel.as_str().unwrap_or(""));
            }
            if let Ok(rep) = serde_json::from_value::<SuiteReport>(v["verification"].clone()) {
                let _ = writeln!(s, "{rep}");
            }
        }
        "gtk" => {
            let v = &r.results[0];
            let _ = writeln!(s, "G(θ = π·{}, k = {})", v["theta"].as_str().unwrap_or(""), v["k"]);
            mats_text(&mut s, &v["generators"]);
            let _ = writeln!(s, "{:<16}{}", "J(A, B)", num(&v["J"]));
            let field = v["field_d"].as_u64().map_or("not quadratic imaginary".into(), |d| format!("Q(√-{d})"));
            let _ = writeln!(s, "{:<16}{field}", "invariant field");
            match v["family"].as_str() {
                Some(f) => {
                    let _ = writeln!(s, "{:<16}{f}", "family");
                    let _ = writeln!(s, "{:<16}{}", "group", v["identification"].as_str().unwrap_or(""));
                }
                None => {
                    let _ = writeln!(s, "{:<16}none of the listed (θ, k)", "family");
                }
            }
        }
        "verify" => {
            let mut by_suite: Vec<(String, Vec<Check>)> = Vec::new();
            for v in &r.results {
                let suite = v["suite"].as_str().unwrap_or("").to_string();
                let c: Check = serde_json::from_value(strip_suite(v)).expect("check record");
                match by_suite.last_mut() {
                    Some((name, cs)) if *name == suite => cs.push(c),
                    _ => by_suite.push((suite, vec![c])),
                }
            }
            for (suite, checks) in by_suite {
                let _ = writeln!(s, "{}", SuiteReport::new(suite, checks));
            }
        }
        "roots" => {
            for (i, v) in r.results.iter().enumerate() {
                let z = Cx::new(v["re"].as_f64().unwrap_or(0.0), v["im"].as_f64().unwrap_or(0.0));
                let _ = writeln!(s, "[{i}] {}  ± {:.1e}", fmt_cx(z, 12), v["error_bound"].as_f64().unwrap_or(0.0));
            }
        }
        _ => {}
    }
    let _ = writeln!(s, "status: {}", r.status);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> CliResult {
        let out = run(std::iter::once("jnum").chain(args.iter().copied()));
        out.result
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_ok(&["knot", "7/3"]).exit_code(), 0);
        assert_eq!(run_ok(&["knot", "6/3"]).exit_code(), 2);
        assert_eq!(run_ok(&["link", "7/3"]).exit_code(), 2);
        let r = run_ok(&["link", "4/1"]);
        assert_eq!((r.status, r.exit_code()), (Status::Error, 1));
        assert_eq!(r.results[0]["non_hyperbolic"], json!(true));
        assert_eq!(run_ok(&["verify", "nope"]).exit_code(), 2);
        assert_eq!(run_ok(&["frobnicate"]).exit_code(), 2);
        assert_eq!(run_ok(&["gtk", "1/2", "0.5", "--csv"]).exit_code(), 2);
    }

    #[test]
    fn results_round_trip() {
        for args in [&["knot", "5/3"][..], &["gtk", "1/4", "1.7071067811865476"], &["bianchi", "--d", "2", "--verify"]]
        {
            let r = run_ok(args);
            let back: CliResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn gtk_identification() {
        let r = run_ok(&["gtk", "1/2", "0.7071067811865476"]);
        assert_eq!(r.results[0]["field_d"], json!(2));
        assert_eq!(r.results[0]["identification"], json!("PSL2(O_2)"));
        let r = run_ok(&["gtk", "1/4", "1.7071067811865476"]);
        assert_eq!(r.results[0]["identification"], json!("listed family, not arithmetic"));
        assert_eq!(r.results[0]["field_d"], Value::Null);
    }

    #[test]
    fn config_tolerances_are_merged() {
        let cfg: Config =
            toml::from_str("[tolerances]\nfix = 1e-5\norder_cap = 64\n[limits]\nsample_len = 4\n").unwrap();
        assert_eq!(cfg.limits.sample_len, 4);
        let t = resolve_tolerances(&cfg, Some("cx=1e-11")).unwrap();
        assert_eq!((t.fix, t.order_cap, t.cx), (1e-5, 64, 1e-11));
        assert!(toml::from_str::<Config>("[limits]\nbogus = 1\n").is_err());
        let bad: Config = toml::from_str("[tolerances]\ncx = \"x\"\n").unwrap();
        assert!(resolve_tolerances(&bad, None).is_err());
    }

    #[test]
    fn csv_for_roots() {
        let out = run(["jnum", "roots", "1,0,1", "--csv"]);
        let mut lines = out.rendered.lines();
        assert_eq!(lines.next(), Some("re,im,error_bound"));
        assert_eq!(lines.count(), 2);
    }
}
