//! Seeded randomized campaigns and brute-force oracle checks.
//!
//! Each instance draws from its own ChaCha stream keyed by `(seed, index)`,
//! so any single instance can be replayed with `index=<i>` regardless of how
//! the campaign was scheduled.

pub mod generate;
pub mod oracles;

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ascent::{fact_report, theorem_report, AscentOracle};
use crate::derived::lemma1_witness;
use crate::error::{Error, Result};
use crate::groebner::krull_dimension;
use crate::invariants::{depth_module, minimal_primes};
use crate::presentation::ModulePresentation;
use crate::resolutions::projective_dimension;
use crate::ring::{CoefficientField, Ring};
use crate::session::{parse_field, reproducer};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorMode {
    Monomial,
    /// Homogeneous binomials mixed with monomials; `lemma1` and `lemma2` campaigns only.
    Binomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Identity,
    Completion,
    Henselization,
}

impl OracleKind {
    pub fn oracle(self) -> AscentOracle {
        match self {
            OracleKind::Identity => AscentOracle::Identity,
            OracleKind::Completion => AscentOracle::CompletionOfLocalizedPolynomialRing,
            OracleKind::Henselization => AscentOracle::Henselization,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub seed: u64,
    pub count: usize,
    pub nvars: usize,
    pub max_deg: u32,
    pub field: CoefficientField,
    pub oracle: OracleKind,
    pub mode: GeneratorMode,
    /// Run only this instance.
    pub index: Option<usize>,
    /// For the oracle campaign: enumerate every monomial ideal instead of sampling.
    pub exhaustive: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: 0,
            count: 100,
            nvars: 3,
            max_deg: 4,
            field: CoefficientField::Prime(crate::ring::DEFAULT_PRIME),
            oracle: OracleKind::Completion,
            mode: GeneratorMode::Monomial,
            index: None,
            exhaustive: false,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Config(format!("`{key}` expects a number, got `{value}`")))
}

impl CampaignConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "seed" => self.seed = parse_num(key, value)?,
            "n" | "count" => self.count = parse_num(key, value)?,
            "vars" | "nvars" => {
                let v: usize = parse_num(key, value)?;
                if !(1..=3).contains(&v) {
                    return Err(Error::Config("`vars` must be between 1 and 3".into()));
                }
                self.nvars = v;
            }
            "deg" | "max_deg" => {
                let d: u32 = parse_num(key, value)?;
                if !(1..=4).contains(&d) {
                    return Err(Error::Config("`deg` must be between 1 and 4".into()));
                }
                self.max_deg = d;
            }
            "field" => self.field = parse_field(value)?,
            "oracle" => {
                self.oracle = match value {
                    "identity" => OracleKind::Identity,
                    "completion" => OracleKind::Completion,
                    "henselization" => OracleKind::Henselization,
                    _ => return Err(Error::Config(format!("unknown oracle `{value}`"))),
                }
            }
            "mode" => {
                self.mode = match value {
                    "monomial" => GeneratorMode::Monomial,
                    "binomial" => GeneratorMode::Binomial,
                    _ => return Err(Error::Config(format!("unknown mode `{value}`"))),
                }
            }
            "index" => self.index = Some(parse_num(key, value)?),
            "exhaustive" => {
                self.exhaustive = match value {
                    "true" | "1" => true,
                    "false" | "0" => false,
                    _ => return Err(Error::Config("`exhaustive` expects true or false".into())),
                }
            }
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// Reads `key=value` pairs separated by whitespace or newlines; `#`
    /// starts a comment.
    pub fn from_kv_text(text: &str) -> Result<Self> {
        let mut cfg = CampaignConfig::default();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for pair in line.split_whitespace() {
                let (k, v) = pair
                    .split_once('=')
                    .ok_or_else(|| Error::Config(format!("expected key=value, got `{pair}`")))?;
                cfg.set(k.trim(), v.trim())?;
            }
        }
        Ok(cfg)
    }

    pub fn ring(&self) -> Arc<Ring> {
        let names = ["x", "y", "z"];
        Ring::new(&names[..self.nvars], self.field).expect("valid variable names")
    }

    fn indices(&self) -> Vec<usize> {
        match self.index {
            Some(i) => vec![i],
            None => (0..self.count).collect(),
        }
    }

    fn rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

impl fmt::Display for CampaignConfig {
    /// The same `key=value` syntax accepted by [`CampaignConfig::set`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let oracle = match self.oracle {
            OracleKind::Identity => "identity",
            OracleKind::Completion => "completion",
            OracleKind::Henselization => "henselization",
        };
        let mode = match self.mode {
            GeneratorMode::Monomial => "monomial",
            GeneratorMode::Binomial => "binomial",
        };
        write!(
            f,
            "seed={} n={} vars={} deg={} field={} oracle={oracle} mode={mode}",
            self.seed, self.count, self.nvars, self.max_deg, self.field
        )?;
        if let Some(i) = self.index {
            write!(f, " index={i}")?;
        }
        if self.exhaustive {
            write!(f, " exhaustive=true")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub message: String,
    /// A session that reproduces the instance.
    pub reproducer: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignResult {
    pub name: String,
    pub config: String,
    pub passed: usize,
    pub failed: usize,
    pub excluded: usize,
    pub failures: Vec<Failure>,
    pub logs: Vec<String>,
    pub timing_ms: u64,
}

impl CampaignResult {
    /// Everything except the timing; equal for equal configurations.
    pub fn verdicts(&self) -> (usize, usize, usize, &[Failure], &[String]) {
        (self.passed, self.failed, self.excluded, &self.failures, &self.logs)
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

enum Verdict {
    Pass,
    Fail(String),
    Excluded(String),
}

struct Outcome {
    verdict: Verdict,
    reproducer: String,
    log: Option<String>,
}

fn campaign(
    name: &str,
    cfg: &CampaignConfig,
    indices: Vec<usize>,
    f: impl Fn(usize) -> Outcome + Sync,
) -> CampaignResult {
    let start = Instant::now();
    let outcomes: Vec<(usize, Outcome)> = indices.into_par_iter().map(|i| (i, f(i))).collect();
    let mut res = CampaignResult {
        name: name.to_string(),
        config: cfg.to_string(),
        passed: 0,
        failed: 0,
        excluded: 0,
        failures: Vec::new(),
        logs: Vec::new(),
        timing_ms: 0,
    };
    for (index, o) in outcomes {
        match o.verdict {
            Verdict::Pass => res.passed += 1,
            Verdict::Fail(message) => {
                res.failed += 1;
                res.failures.push(Failure { index, message, reproducer: o.reproducer });
            }
            Verdict::Excluded(why) => {
                res.excluded += 1;
                res.logs.push(format!("instance {index} excluded: {why}"));
            }
        }
        if let Some(log) = o.log {
            res.logs.push(format!("instance {index}: {log}"));
        }
    }
    res.timing_ms = start.elapsed().as_millis() as u64;
    res
}

fn replay_line(kind: &str, cfg: &CampaignConfig, index: usize) -> String {
    let mut one = cfg.clone();
    one.index = Some(index);
    one.count = 1;
    format!("verify {kind} {one}")
}

fn verdict_of(r: Result<Verdict>) -> Verdict {
    r.unwrap_or_else(|e| Verdict::Fail(format!("error: {e}")))
}

/// The least nonvanishing Ext degree is at most `depth N`.
/// Also checks `pd M + depth M = d` for every generated module.
pub fn run_lemma1_campaign(cfg: &CampaignConfig) -> CampaignResult {
    let ring = cfg.ring();
    campaign("lemma1", cfg, cfg.indices(), |i| {
        let mut rng = cfg.rng(i);
        let m = generate::random_module(&mut rng, &ring, cfg.max_deg, cfg.mode);
        let n = generate::random_module(&mut rng, &ring, cfg.max_deg, cfg.mode);
        let reproducer = reproducer(
            &ring,
            &[("M", &m), ("N", &n)],
            &["ext M N".into(), "depth N".into(), replay_line("lemma1", cfg, i)],
        );
        let mut log = None;
        let verdict = verdict_of((|| {
            if m.is_zero() || n.is_zero() {
                return Ok(Verdict::Excluded("zero module drawn".into()));
            }
            let w = lemma1_witness(&m, &n)?;
            let depth = depth_module(&n)?;
            for l in [&m, &n] {
                let (pd, dp) = (projective_dimension(l)? as i64, depth_module(l)?);
                if pd + dp != ring.nvars() as i64 {
                    return Ok(Verdict::Fail(format!("pd {pd} + depth {dp} != {} for {l}", ring.nvars())));
                }
            }
            log = Some(format!("witness {w} <= depth {depth}"));
            Ok(Verdict::Pass)
        })());
        Outcome { verdict, reproducer, log }
    })
}

/// `f` is a quasi-isomorphism iff `K ⊗ f` is, with `K` the Koszul
/// complex on all variables.
pub fn run_lemma2_campaign(cfg: &CampaignConfig) -> CampaignResult {
    let ring = cfg.ring();
    let vars = ring.variables();
    campaign("lemma2", cfg, cfg.indices(), |i| {
        let mut rng = cfg.rng(i);
        let reproducer = format!("{};\n", replay_line("lemma2", cfg, i));
        let mut log = None;
        let verdict = verdict_of((|| {
            let inst = generate::random_chain_map(&mut rng, &ring, cfg.max_deg)?;
            let plain = inst.map.is_quasi_iso()?;
            let tensored = inst.map.koszul_tensor(&vars)?.is_quasi_iso()?;
            log = Some(format!("{}: quasi-iso {plain}, after Koszul {tensored}", inst.family));
            if plain != tensored {
                return Ok(Verdict::Fail(format!("{}: f quasi-iso {plain} but K ⊗ f {tensored}", inst.family)));
            }
            if let Some(e) = inst.expected {
                if e != plain {
                    return Ok(Verdict::Fail(format!("{}: expected quasi-iso {e}, computed {plain}", inst.family)));
                }
            }
            Ok(Verdict::Pass)
        })());
        Outcome { verdict, reproducer, log }
    })
}

/// The five computed ascent conditions agree. Range-edge instances
/// are logged and counted as excluded; a disagreement fails regardless.
/// Also checks that `M = R` reproduces the single-module report.
pub fn run_theorem_campaign(cfg: &CampaignConfig) -> CampaignResult {
    let ring = cfg.ring();
    let oracle = cfg.oracle.oracle();
    campaign("theorem", cfg, cfg.indices(), |i| {
        let mut rng = cfg.rng(i);
        let m = generate::random_module(&mut rng, &ring, cfg.max_deg, GeneratorMode::Monomial);
        let n = generate::random_module(&mut rng, &ring, cfg.max_deg, GeneratorMode::Monomial);
        let specialize = rng.gen_bool(0.2);
        let m = if specialize { ModulePresentation::free(&ring, 1) } else { m };
        let cmd = format!("ascent {} M N", oracle);
        let reproducer = reproducer(&ring, &[("M", &m), ("N", &n)], &[cmd, format!("fact {oracle} N")]);
        let mut log = None;
        let verdict = verdict_of((|| {
            let rep = theorem_report(&m, &n, &oracle)?;
            if !rep.agree {
                return Ok(Verdict::Fail(format!(
                    "conditions disagree: {:?}; evidence {}",
                    rep.conditions,
                    serde_json::to_string(&rep.evidence).unwrap_or_default()
                )));
            }
            if specialize || m == ModulePresentation::free(&ring, 1) {
                let fact = fact_report(&n, &oracle)?;
                if !fact.agree || fact.vii != rep.conditions["vii"] {
                    return Ok(Verdict::Fail(format!(
                        "M = R: theorem (vii) {} vs fact (vii) {} / (viii) {}",
                        rep.conditions["vii"], fact.vii, fact.viii
                    )));
                }
            }
            if rep.range_edge {
                return Ok(Verdict::Excluded(format!(
                    "range edge (all Ext in the (iv) range vanish, M ⊗ N ≠ 0, dim N = {}); conditions {:?}, agree {}",
                    rep.dim_n, rep.conditions, rep.agree
                )));
            }
            log = Some(format!("all {}", rep.conditions["i"]));
            Ok(Verdict::Pass)
        })());
        Outcome { verdict, reproducer, log }
    })
}

fn compare_oracles(ring: &Arc<Ring>, gens: &[crate::ring::Monomial]) -> Result<Option<String>> {
    let ideal = oracles::monomial_ideal(ring, gens);
    let n = ring.nvars();
    let dim = krull_dimension(&ideal)?;
    let brute = oracles::exhaustive_dimension(n, gens);
    if dim != brute {
        return Ok(Some(format!("dimension {dim} vs exhaustive {brute}")));
    }
    let primes: Vec<Vec<usize>> =
        minimal_primes(&ideal)?.iter().map(|p| p.variables().expect("monomial").to_vec()).collect();
    let brute = oracles::exhaustive_minimal_primes(n, gens);
    if primes != brute {
        return Ok(Some(format!("minimal primes {primes:?} vs exhaustive {brute:?}")));
    }
    Ok(None)
}

fn ideal_source(ring: &Arc<Ring>, gens: &[crate::ring::Monomial]) -> String {
    let ideal = oracles::monomial_ideal(ring, gens);
    let m = ModulePresentation::cyclic(ring, ideal.ideal_generators()).expect("same ring");
    reproducer(ring, &[("M", &m)], &["dim M".into(), "minprimes M".into()])
}

/// Brute-force cross-checks: exhaustive dimension and minimal primes on
/// random (or, with `exhaustive=true`, all) monomial ideals, the fixed
/// normal-form fixtures, and Ext from a hand-built Koszul resolution.
pub fn brute_force_oracles(cfg: &CampaignConfig) -> CampaignResult {
    let ring = cfg.ring();
    if cfg.exhaustive {
        return exhaustive_oracles(cfg);
    }
    let mut res = campaign("oracles", cfg, cfg.indices(), |i| {
        let mut rng = cfg.rng(i);
        let gens: Vec<_> = generate::random_ideal(&mut rng, &ring, cfg.max_deg, GeneratorMode::Monomial)
            .into_iter()
            .map(|p| p.terms()[0].0.clone())
            .collect();
        let k = rng.gen_range(1..=ring.nvars());
        let mut vars: Vec<usize> = (0..ring.nvars()).collect();
        rand::seq::SliceRandom::shuffle(vars.as_mut_slice(), &mut rng);
        vars.truncate(k);
        vars.sort_unstable();
        let n = generate::random_module(&mut rng, &ring, cfg.max_deg, GeneratorMode::Monomial);
        let verdict = verdict_of((|| {
            if let Some(msg) = compare_oracles(&ring, &gens)? {
                return Ok(Verdict::Fail(msg));
            }
            if let Some(msg) = oracles::check_koszul_ext_fixture(&ring, &vars, &n)? {
                return Ok(Verdict::Fail(msg));
            }
            Ok(Verdict::Pass)
        })());
        let m = ModulePresentation::cyclic(&ring, vars.iter().map(|&v| crate::ring::Polynomial::var(&ring, v)).collect())
            .expect("same ring");
        let mut reproducer = ideal_source(&ring, &gens);
        reproducer.push_str(&format!(
            "module K = {};\nmodule N = {};\next K N;\n",
            crate::session::ModuleDef::from_presentation(&m),
            crate::session::ModuleDef::from_presentation(&n)
        ));
        Outcome { verdict, reproducer, log: None }
    });
    match oracles::check_normal_form_fixtures() {
        Ok(fails) if fails.is_empty() => res.logs.push("normal-form fixtures: all match".into()),
        Ok(fails) => {
            for f in fails {
                res.failed += 1;
                res.failures.push(Failure { index: usize::MAX, message: f, reproducer: String::new() });
            }
        }
        Err(e) => {
            res.failed += 1;
            res.failures.push(Failure { index: usize::MAX, message: e.to_string(), reproducer: String::new() });
        }
    }
    res
}

/// Complete enumeration of monomial ideals in `cfg.nvars` variables with
/// generators of degree `≤ cfg.max_deg`.
pub fn exhaustive_oracles(cfg: &CampaignConfig) -> CampaignResult {
    let ring = cfg.ring();
    let ideals = oracles::all_monomial_ideals(ring.nvars(), cfg.max_deg);
    let indices: Vec<usize> = (0..ideals.len()).collect();
    let mut res = campaign("oracles-exhaustive", cfg, indices, |i| {
        let gens = &ideals[i];
        let verdict = verdict_of(compare_oracles(&ring, gens).map(|r| match r {
            None => Verdict::Pass,
            Some(msg) => Verdict::Fail(msg),
        }));
        Outcome { verdict, reproducer: ideal_source(&ring, gens), log: None }
    });
    res.logs.push(format!("enumerated {} monomial ideals", ideals.len()));
    res
}

#[cfg(test)]
mod tests;
