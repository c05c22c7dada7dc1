use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::ascent::{fact_report, theorem_report};
use crate::derived::{derived_table, ext_module, module_length, tor_module, DerivedKind};
use crate::error::{Error, Result};
use crate::groebner::reduced_ideal_basis;
use crate::harness::{self, CampaignConfig, CampaignResult};
use crate::invariants::{annihilator, depth_module, dim_module, minimal_primes};
use crate::presentation::ModulePresentation;
use crate::resolutions::minimal_resolution;

use super::{Command, Session, Statement, VerifyKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Default)]
pub struct ExecOptions {
    /// Replaces the seed of every `verify` command.
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// The command ran but an equivalence or campaign assertion failed.
    Failed,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub class: String,
    pub origin: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub evidence: Value,
    pub timing_ms: f64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("reports serialize"),
            Format::Text => {
                let mut out = format!("{}: ", self.command);
                match (&self.error, &self.result) {
                    (Some(e), _) => out.push_str(&format!("error [{}/{}] {}", e.origin, e.class, e.message)),
                    (None, Value::String(s)) => out.push_str(s),
                    (None, v) => out.push_str(&text_value(v)),
                }
                if self.status == Status::Failed {
                    out.push_str("  FAILED");
                }
                out.push_str(&format!("  ({:.1} ms)", self.timing_ms));
                out
            }
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
            parts.join(" ")
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(text_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

struct Outcome {
    result: Value,
    evidence: Value,
    failed: bool,
}

fn ok(result: Value, evidence: Value) -> Result<Outcome> {
    Ok(Outcome { result, evidence, failed: false })
}

fn module_entry(i: usize, m: &ModulePresentation) -> Value {
    let mut v = json!({ "degree": i, "module": m.to_string(), "zero": m.is_zero() });
    if let Some(len) = module_length(m) {
        v["length"] = json!(len);
    }
    v
}

fn campaign_outcome(c: CampaignResult) -> Result<Outcome> {
    let failed = c.failed > 0;
    let result = json!({ "passed": c.passed, "failed": c.failed, "excluded": c.excluded });
    let evidence = json!({
        "campaign": c.name,
        "config": c.config,
        "failures": c.failures,
        "logs": c.logs,
        "campaign_ms": c.timing_ms,
    });
    Ok(Outcome { result, evidence, failed })
}

fn run(cmd: &Command, env: &HashMap<String, ModulePresentation>, opts: &ExecOptions) -> Result<Outcome> {
    let get = |name: &String| env[name].clone();
    match cmd {
        Command::Ext { m, n, degree } | Command::Tor { m, n, degree } => {
            let kind = if matches!(cmd, Command::Ext { .. }) { DerivedKind::Ext } else { DerivedKind::Tor };
            let (m, n) = (get(m), get(n));
            match degree {
                Some(i) => {
                    let e = match kind {
                        DerivedKind::Ext => ext_module(&m, &n, i64::from(*i))?,
                        DerivedKind::Tor => tor_module(&m, &n, i64::from(*i))?,
                    };
                    ok(module_entry(*i as usize, &e), json!({}))
                }
                None => {
                    let t = derived_table(&m, &n, kind)?;
                    let entries: Vec<Value> = t.entries().iter().map(|(&i, e)| module_entry(i, e)).collect();
                    let pd = t.entries().len() - 1;
                    ok(json!({ "entries": entries }), json!({ "projective_dimension": pd }))
                }
            }
        }
        Command::Depth(m) => {
            let m = get(m);
            ok(json!(depth_module(&m)?), json!({ "nvars": m.ring().nvars() }))
        }
        Command::Dim(m) => {
            let m = get(m);
            let ann: Vec<String> = reduced_ideal_basis(&annihilator(&m))?.iter().map(ToString::to_string).collect();
            ok(json!(dim_module(&m)?), json!({ "annihilator": ann }))
        }
        Command::Resolve(m) => {
            let res = minimal_resolution(&get(m));
            let diffs: Vec<String> = (1..=res.length() as i64).map(|i| res.differential(i).to_string()).collect();
            ok(
                json!({ "ranks": res.ranks(), "length": res.length(), "minimal": res.is_minimal(), "complete": res.is_complete() }),
                json!({ "differentials": diffs }),
            )
        }
        Command::Ann(m) => {
            let gens: Vec<String> = reduced_ideal_basis(&annihilator(&get(m)))?.iter().map(ToString::to_string).collect();
            ok(json!({ "generators": gens }), json!({}))
        }
        Command::MinPrimes(m) => {
            let primes: Vec<String> = minimal_primes(&annihilator(&get(m)))?.iter().map(ToString::to_string).collect();
            ok(json!(primes), json!({}))
        }
        Command::Ascent { oracle, m, n } => {
            let (m, n) = (get(m), get(n));
            let oracle = oracle.build(m.ring())?;
            let rep = theorem_report(&m, &n, &oracle)?;
            let result = json!({ "conditions": rep.conditions, "agree": rep.agree });
            let evidence = json!({
                "conditions": rep.evidence,
                "projective_dimension": rep.projective_dimension,
                "dim_n": rep.dim_n,
                "range_edge": rep.range_edge,
                "experimental": rep.experimental,
            });
            Ok(Outcome { result, evidence, failed: !rep.agree })
        }
        Command::Fact { oracle, n } => {
            let n = get(n);
            let rep = fact_report(&n, &oracle.build(n.ring())?)?;
            let result = json!({ "vii": rep.vii, "viii": rep.viii, "agree": rep.agree });
            let evidence = json!({
                "conditions": rep.evidence,
                "derived_not_computed": rep.derived_not_computed,
                "experimental": rep.experimental,
            });
            Ok(Outcome { result, evidence, failed: !rep.agree })
        }
        Command::Verify { kind, args } => {
            let mut cfg = CampaignConfig::default();
            for (k, v) in args {
                cfg.set(k, v)?;
            }
            if let Some(seed) = opts.seed {
                cfg.seed = seed;
            }
            campaign_outcome(match kind {
                VerifyKind::Lemma1 => harness::run_lemma1_campaign(&cfg),
                VerifyKind::Lemma2 => harness::run_lemma2_campaign(&cfg),
                VerifyKind::Theorem => harness::run_theorem_campaign(&cfg),
                VerifyKind::Oracles => harness::brute_force_oracles(&cfg),
            })
        }
    }
}

fn inputs(cmd: &Command, defs: &HashMap<String, String>) -> Value {
    let mut map = Map::new();
    let mut module = |role: &str, name: &String| {
        let def = defs.get(name).cloned().unwrap_or_default();
        map.insert(role.to_string(), json!({ "name": name, "definition": def }));
    };
    match cmd {
        Command::Ext { m, n, .. } | Command::Tor { m, n, .. } | Command::Ascent { m, n, .. } => {
            module("M", m);
            module("N", n);
        }
        Command::Fact { n, .. } => module("N", n),
        Command::Depth(m) | Command::Dim(m) | Command::Resolve(m) | Command::Ann(m) | Command::MinPrimes(m) => {
            module("M", m)
        }
        Command::Verify { .. } => {}
    }
    match cmd {
        Command::Ext { degree: Some(i), .. } | Command::Tor { degree: Some(i), .. } => {
            map.insert("degree".into(), json!(i));
        }
        Command::Ascent { oracle, .. } | Command::Fact { oracle, .. } => {
            map.insert("oracle".into(), json!(oracle.to_string()));
        }
        Command::Verify { kind, args } => {
            map.insert("campaign".into(), json!(kind.to_string()));
            let a: Map<String, Value> = args.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            map.insert("args".into(), Value::Object(a));
        }
        _ => {}
    }
    Value::Object(map)
}

/// Runs every command in order. Module bindings take effect at the point
/// where they appear.
pub fn execute(session: &Session, opts: &ExecOptions) -> Vec<Report> {
    let mut env: HashMap<String, ModulePresentation> = HashMap::new();
    let mut defs: HashMap<String, String> = HashMap::new();
    let mut reports = Vec::new();
    let mut ring = None;
    for stmt in session.statements() {
        match stmt {
            Statement::Ring(r) => ring = Some(r.ring.clone()),
            Statement::Module { name, def } => {
                env.insert(name.clone(), def.presentation(ring.as_ref().expect("parser checked the ring")));
                defs.insert(name.clone(), def.to_string());
            }
            Statement::Command(cmd) => {
                let start = Instant::now();
                let outcome = run(cmd, &env, opts);
                let timing_ms = start.elapsed().as_secs_f64() * 1000.0;
                let inputs = inputs(cmd, &defs);
                reports.push(match outcome {
                    Ok(o) => Report {
                        command: cmd.to_string(),
                        inputs,
                        result: o.result,
                        evidence: o.evidence,
                        timing_ms,
                        status: if o.failed { Status::Failed } else { Status::Ok },
                        error: None,
                    },
                    Err(e) => Report {
                        command: cmd.to_string(),
                        inputs,
                        result: Value::Null,
                        evidence: json!({}),
                        timing_ms,
                        status: Status::Error,
                        error: Some(error_info(&e)),
                    },
                });
            }
        }
    }
    reports
}

pub(crate) fn error_info(e: &Error) -> ErrorInfo {
    ErrorInfo { class: e.class().into(), origin: e.origin().into(), message: e.to_string() }
}

/// A report for a failure outside any command, such as a parse error.
pub fn error_report(command: &str, e: &Error) -> Report {
    Report {
        command: command.to_string(),
        inputs: json!({}),
        result: Value::Null,
        evidence: json!({}),
        timing_ms: 0.0,
        status: Status::Error,
        error: Some(error_info(e)),
    }
}
