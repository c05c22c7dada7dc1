//! Ascent of module structures along a flat local map `φ: R → S` with
//! `R/m ≅ S/mS`.
//!
//! `S` is never built. All the computable conditions only ask whether
//! `R/p → S/pS` is an isomorphism for primes `p`, so `φ` is modelled by an
//! oracle answering that question.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::derived::{derived_table, module_length, DerivedKind};
use crate::error::{Error, Result};
use crate::groebner::{ideal_sum, krull_dimension, Submodule};
use crate::invariants::{annihilator, minimal_primes, PrimeIdeal};
use crate::presentation::ModulePresentation;
use crate::ring::Ring;

/// Monomial primes for which `R/p → S/pS` is an isomorphism, closed upward
/// (if it holds for `p` it holds for every `q ⊇ p`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSet {
    ring: Arc<Ring>,
    listed: Vec<PrimeIdeal>,
    masks: BTreeSet<u64>,
}

impl PrimeSet {
    pub fn new(ring: &Arc<Ring>, primes: Vec<PrimeIdeal>) -> Result<Self> {
        let n = ring.nvars();
        let mut masks = Vec::new();
        for p in &primes {
            let vars = p.variables().ok_or_else(|| {
                Error::unsupported("ascent", format!("explicit oracle primes must be generated by variables, got {p}"))
            })?;
            masks.push(vars.iter().fold(0u64, |m, &v| m | 1 << v));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if !masks.contains(&full) {
            return Err(Error::domain("ascent", "the ascending primes must include the maximal ideal"));
        }
        Ok(PrimeSet { ring: ring.clone(), listed: primes, masks: masks.into_iter().collect() })
    }

    pub fn listed(&self) -> &[PrimeIdeal] {
        &self.listed
    }

    fn contains_mask(&self, mask: u64) -> bool {
        self.masks.iter().any(|m| mask & m == *m)
    }

    /// Whether every prime of `self` also ascends under `other`.
    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.masks.iter().all(|&m| other.contains_mask(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AscentOracle {
    Identity,
    CompletionOfLocalizedPolynomialRing,
    /// Shares the completion criterion; results are marked experimental.
    Henselization,
    ExplicitAscendingPrimes(PrimeSet),
}

impl AscentOracle {
    pub fn explicit(ring: &Arc<Ring>, primes: Vec<PrimeIdeal>) -> Result<Self> {
        Ok(AscentOracle::ExplicitAscendingPrimes(PrimeSet::new(ring, primes)?))
    }

    pub fn is_experimental(&self) -> bool {
        matches!(self, AscentOracle::Henselization)
    }

    fn artinian_only(&self) -> bool {
        matches!(self, AscentOracle::CompletionOfLocalizedPolynomialRing | AscentOracle::Henselization)
    }
}

impl fmt::Display for AscentOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AscentOracle::Identity => write!(f, "identity"),
            AscentOracle::CompletionOfLocalizedPolynomialRing => write!(f, "completion"),
            AscentOracle::Henselization => write!(f, "henselization"),
            AscentOracle::ExplicitAscendingPrimes(set) => {
                let parts: Vec<String> = set
                    .listed
                    .iter()
                    .map(|p| {
                        let g: Vec<String> = p.generators().iter().map(ToString::to_string).collect();
                        format!("({})", g.join(", "))
                    })
                    .collect();
                write!(f, "primes{{{}}}", parts.join(";"))
            }
        }
    }
}

fn prime_mask(p: &PrimeIdeal) -> Result<u64> {
    p.variables()
        .map(|v| v.iter().fold(0u64, |m, &i| m | 1 << i))
        .ok_or_else(|| Error::unsupported("ascent", format!("only variable-generated primes are supported, got {p}")))
}

/// Whether `R/p → S/pS` is an isomorphism.
pub fn ascends_prime(p: &PrimeIdeal, oracle: &AscentOracle) -> Result<bool> {
    let mask = prime_mask(p)?;
    Ok(match oracle {
        AscentOracle::Identity => true,
        AscentOracle::CompletionOfLocalizedPolynomialRing | AscentOracle::Henselization => p.is_maximal(),
        AscentOracle::ExplicitAscendingPrimes(set) => {
            if set.ring != *p.ring() {
                return Err(Error::Context("oracle and prime live over different rings".into()));
            }
            set.contains_mask(mask)
        }
    })
}

/// One module looked at while deciding a condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Examined {
    pub module: String,
    pub zero: bool,
    pub dim: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_primes: Option<Vec<String>>,
    pub ascends: bool,
}

/// Ascent for the closed set `V(I)`.
fn ideal_ascends(label: String, ideal: &Submodule, oracle: &AscentOracle) -> Result<Examined> {
    let dim = krull_dimension(ideal)?;
    let mut ex = Examined { module: label, zero: dim < 0, dim, length: None, minimal_primes: None, ascends: true };
    if dim < 0 {
        return Ok(ex);
    }
    match oracle {
        AscentOracle::Identity => {}
        AscentOracle::CompletionOfLocalizedPolynomialRing | AscentOracle::Henselization => ex.ascends = dim == 0,
        AscentOracle::ExplicitAscendingPrimes(_) => {
            let primes = minimal_primes(ideal)?;
            let mut all = true;
            for p in &primes {
                all &= ascends_prime(p, oracle)?;
            }
            ex.minimal_primes = Some(primes.iter().map(ToString::to_string).collect());
            ex.ascends = all;
        }
    }
    Ok(ex)
}

fn examine(label: String, l: &ModulePresentation, oracle: &AscentOracle) -> Result<Examined> {
    let mut ex = ideal_ascends(label, &annihilator(l), oracle)?;
    if ex.dim == 0 {
        ex.length = module_length(l);
    }
    Ok(ex)
}

fn require_homogeneous(m: &ModulePresentation, name: &str) -> Result<()> {
    if m.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::unsupported("ascent", format!("{name} must have a homogeneous presentation")))
    }
}

/// `L = 0` or every minimal prime of `Ann L` ascends. For the completion
/// and henselization oracles this is finite length.
pub fn module_ascends(l: &ModulePresentation, oracle: &AscentOracle) -> Result<bool> {
    require_homogeneous(l, "the module")?;
    Ok(examine(String::new(), l, oracle)?.ascends)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportInputs {
    pub m: String,
    pub n: String,
    pub oracle: String,
}

/// Truth values of the computable conditions (i)–(iv) and (vii) for a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub conditions: BTreeMap<String, bool>,
    pub agree: bool,
    pub evidence: BTreeMap<String, Vec<Examined>>,
    pub inputs: ReportInputs,
    pub projective_dimension: usize,
    pub dim_n: i64,
    /// Every Ext in the range of (iv) vanishes while `M ⊗ N ≠ 0` and
    /// `dim N ≥ 1`; logged separately by campaigns.
    pub range_edge: bool,
    pub experimental: bool,
}

impl ConditionReport {
    pub fn condition(&self, key: &str) -> Option<bool> {
        self.conditions.get(key).copied()
    }
}

pub fn theorem_report(m: &ModulePresentation, n: &ModulePresentation, oracle: &AscentOracle) -> Result<ConditionReport> {
    require_homogeneous(m, "M")?;
    require_homogeneous(n, "N")?;
    if m.ring() != n.ring() {
        return Err(Error::Context("M and N live over different rings".into()));
    }
    let tor = derived_table(m, n, DerivedKind::Tor)?;
    let ext = derived_table(m, n, DerivedKind::Ext)?;
    let pd = tor.entries().keys().copied().max().unwrap_or(0);
    let dim_n = krull_dimension(&annihilator(n))?;

    let mut tor_ex = Vec::new();
    for (&i, t) in tor.entries() {
        tor_ex.push(examine(format!("Tor_{i}"), t, oracle)?);
    }
    let iv_top = usize::try_from(dim_n).unwrap_or(0);
    let mut ext_ex = Vec::new();
    for i in 0..=pd.max(iv_top) {
        ext_ex.push(examine(format!("Ext^{i}"), &ext.entry(i), oracle)?);
    }
    let iv_ex: Vec<Examined> = ext_ex.iter().take(iv_top).cloned().collect();
    let iii_ex: Vec<Examined> = ext_ex.iter().take(pd + 1).cloned().collect();
    let sum = ideal_sum(&annihilator(m), &annihilator(n))?;
    let vii_ex = ideal_ascends("R/(Ann M + Ann N)".into(), &sum, oracle)?;

    let all = |v: &[Examined]| v.iter().all(|e| e.ascends);
    let conditions = BTreeMap::from([
        ("i".to_string(), tor_ex[0].ascends),
        ("ii".to_string(), all(&tor_ex)),
        ("iii".to_string(), all(&iii_ex)),
        ("iv".to_string(), all(&iv_ex)),
        ("vii".to_string(), vii_ex.ascends),
    ]);
    let first = conditions["i"];
    let agree = conditions.values().all(|&v| v == first);
    let range_edge = dim_n >= 1 && !tor_ex[0].zero && iv_ex.iter().all(|e| e.zero);
    let evidence = BTreeMap::from([
        ("i".to_string(), vec![tor_ex[0].clone()]),
        ("ii".to_string(), tor_ex),
        ("iii".to_string(), iii_ex),
        ("iv".to_string(), iv_ex),
        ("vii".to_string(), vec![vii_ex]),
    ]);
    Ok(ConditionReport {
        conditions,
        agree,
        evidence,
        inputs: ReportInputs { m: m.to_string(), n: n.to_string(), oracle: oracle.to_string() },
        projective_dimension: pd,
        dim_n,
        range_edge,
        experimental: oracle.is_experimental(),
    })
}

/// Single-module report: (vii) through `Ann N`, (viii) through the minimal
/// primes of `N`, and the remaining conditions inferred from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactReport {
    pub vii: bool,
    pub viii: bool,
    pub agree: bool,
    /// Conditions (i)–(vi), set equal to (vii); never computed directly.
    pub derived_not_computed: BTreeMap<String, bool>,
    pub evidence: BTreeMap<String, Examined>,
    pub module: String,
    pub oracle: String,
    pub experimental: bool,
}

pub fn fact_report(n: &ModulePresentation, oracle: &AscentOracle) -> Result<FactReport> {
    require_homogeneous(n, "N")?;
    let ann = annihilator(n);
    let vii_ex = ideal_ascends("R/Ann N".into(), &ann, oracle)?;

    // (viii): walk the minimal primes when they are available.
    let dim = vii_ex.dim;
    let mut viii_ex =
        Examined { module: "Min N".into(), zero: dim < 0, dim, length: None, minimal_primes: None, ascends: true };
    match minimal_primes(&ann) {
        Ok(primes) => {
            let mut all = true;
            for p in &primes {
                all &= ascends_prime(p, oracle)?;
            }
            viii_ex.minimal_primes = Some(primes.iter().map(ToString::to_string).collect());
            viii_ex.ascends = all;
        }
        Err(Error::Unsupported { .. }) if oracle.artinian_only() => viii_ex.ascends = dim <= 0,
        Err(Error::Unsupported { .. }) if matches!(oracle, AscentOracle::Identity) => {}
        Err(e) => return Err(e),
    }
    let vii = vii_ex.ascends;
    let viii = viii_ex.ascends;
    let derived_not_computed = ["i", "ii", "iii", "iv", "v", "vi"].iter().map(|k| (k.to_string(), vii)).collect();
    Ok(FactReport {
        vii,
        viii,
        agree: vii == viii,
        derived_not_computed,
        evidence: BTreeMap::from([("vii".to_string(), vii_ex), ("viii".to_string(), viii_ex)]),
        module: n.to_string(),
        oracle: oracle.to_string(),
        experimental: oracle.is_experimental(),
    })
}

#[cfg(test)]
mod tests;
