//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use ascent_core::ascent::{fact_report, theorem_report, AscentOracle};
use ascent_core::complexes::{koszul, ChainMap};
use ascent_core::derived::{derived_table, ext_module, module_length, tor_module, DerivedKind};
use ascent_core::groebner::{ideal_sum, radical_membership, same_ideal};
use ascent_core::harness::generate::{random_chain_map, random_complex, random_module};
use ascent_core::harness::oracles::check_koszul_ext_fixture;
use ascent_core::harness::{
    exhaustive_oracles, run_lemma1_campaign, run_lemma2_campaign, run_theorem_campaign, CampaignConfig,
    CampaignResult, GeneratorMode, OracleKind,
};
use ascent_core::invariants::{annihilator, depth_module, dim_module};
use ascent_core::presentation::ModulePresentation;
use ascent_core::resolutions::{free_resolution, minimal_resolution, projective_dimension};
use ascent_core::ring::{CoefficientField, Polynomial, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn gf() -> CoefficientField {
    CoefficientField::Prime(32003)
}

fn ring(n: usize) -> Arc<Ring> {
    Ring::new(&["x", "y", "z"][..n], gf()).unwrap()
}

fn quot(r: &Arc<Ring>, vars: &[usize]) -> ModulePresentation {
    let gens = if vars.is_empty() {
        vec![Polynomial::zero(r)]
    } else {
        vars.iter().map(|&v| Polynomial::var(r, v)).collect()
    };
    ModulePresentation::cyclic(r, gens).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn axes_pair() -> Check {
    let r = ring(2);
    let (m, n) = (quot(&r, &[0]), quot(&r, &[1]));
    let tor0 = module_length(&tor_module(&m, &n, 0).map_err(e)?);
    let tor1 = tor_module(&m, &n, 1).map_err(e)?;
    let ext0 = ext_module(&m, &n, 0).map_err(e)?;
    let ext1 = module_length(&ext_module(&m, &n, 1).map_err(e)?);
    ensure(tor0 == Some(1), || format!("length Tor_0 = {tor0:?}"))?;
    ensure(tor1.is_zero(), || format!("Tor_1 = {tor1}"))?;
    ensure(ext0.is_zero(), || format!("Ext^0 = {ext0}"))?;
    ensure(ext1 == Some(1), || format!("length Ext^1 = {ext1:?}"))?;
    let rep = theorem_report(&m, &n, &AscentOracle::CompletionOfLocalizedPolynomialRing).map_err(e)?;
    ensure(rep.agree && rep.conditions.values().all(|&v| v), || format!("conditions {:?}", rep.conditions))?;
    Ok("Tor_0, Ext^1 of length 1; Tor_1 = Ext^0 = 0; conditions all true and agree".into())
}

/// The literal statement: Ext^i = 0 for i != j and Ext^j has the annihilator
/// and dimension of N itself; `fact completion N` false.
fn regular_sequence_ext() -> Check {
    let d = 3;
    let r = ring(d);
    let oracle = AscentOracle::CompletionOfLocalizedPolynomialRing;
    let mut mismatches = Vec::new();
    for j in 0..d {
        let m = quot(&r, &(0..j).collect::<Vec<_>>());
        let n = quot(&r, &(j..d - 1).collect::<Vec<_>>());
        let table = derived_table(&m, &n, DerivedKind::Ext).map_err(e)?;
        for (&i, ext) in table.entries() {
            if i != j {
                ensure(ext.is_zero(), || format!("j = {j}: Ext^{i} = {ext} is nonzero"))?;
            }
        }
        let ext_j = table.entry(j);
        if j > 0 {
            if let Some(msg) = check_koszul_ext_fixture(&r, &(0..j).collect::<Vec<_>>(), &n).map_err(e)? {
                return Err(format!("j = {j}: independent Koszul fixture disagrees: {msg}"));
            }
        }
        let dim_n = dim_module(&n).map_err(e)?;
        let fact = fact_report(&n, &oracle).map_err(e)?;
        ensure(dim_n == j as i64 + 1, || format!("j = {j}: dim N = {dim_n}"))?;
        ensure(!fact.vii && !fact.viii && fact.agree, || format!("j = {j}: fact completion N not false"))?;
        let same_ann = same_ideal(&annihilator(&ext_j), &annihilator(&n)).map_err(e)?;
        let dim_ext = dim_module(&ext_j).map_err(e)?;
        if !same_ann || dim_ext != dim_n {
            mismatches.push(format!(
                "j = {j}: Ext^{j} = {ext_j} (dim {dim_ext}) but N = {n} (dim {dim_n})"
            ));
        }
    }
    if mismatches.is_empty() {
        Ok("Ext^j ≅ N for j = 0, 1, 2; other Ext vanish; fact false".into())
    } else {
        Err(format!(
            "vanishing off degree j and `fact` hold, but Ext^j is N/(x_1..x_j)N rather than N: {}",
            mismatches.join("; ")
        ))
    }
}

fn campaign_check(res: CampaignResult, expected: usize) -> Check {
    ensure(res.failed == 0, || {
        let first = res.failures.first().map(|f| format!("{} | {}", f.message, f.reproducer)).unwrap_or_default();
        format!("{} failures; first: {first}", res.failed)
    })?;
    ensure(res.passed + res.excluded == expected, || {
        format!("{} passed + {} excluded != {expected}", res.passed, res.excluded)
    })?;
    Ok(format!("{} passed, {} excluded, 0 failed ({})", res.passed, res.excluded, res.config))
}

fn theorem_campaign() -> Check {
    let cfg = CampaignConfig {
        seed: 2024,
        count: 200,
        nvars: 3,
        max_deg: 4,
        oracle: OracleKind::Completion,
        ..CampaignConfig::default()
    };
    let res = run_theorem_campaign(&cfg);
    let excluded_logged = res.logs.iter().filter(|l| l.contains("excluded:")).count();
    ensure(excluded_logged == res.excluded, || "excluded instances are not all logged".into())?;
    campaign_check(res, 200)
}

fn lemma1_campaign() -> Check {
    let cfg = CampaignConfig { seed: 11, count: 100, ..CampaignConfig::default() };
    campaign_check(run_lemma1_campaign(&cfg), 100)
}

fn lemma2_campaign() -> Check {
    let cfg = CampaignConfig { seed: 42, count: 100, ..CampaignConfig::default() };
    campaign_check(run_lemma2_campaign(&cfg), 100)
}

fn oracle_equivalence() -> Check {
    let mut total = 0;
    for nvars in 1..=3 {
        let cfg = CampaignConfig { nvars, max_deg: 3, exhaustive: true, ..CampaignConfig::default() };
        let res = exhaustive_oracles(&cfg);
        let n = res.passed + res.failed;
        campaign_check(res, n)?;
        total += n;
    }
    Ok(format!("{total} monomial ideals enumerated in 1 to 3 variables, degree <= 3, all match"))
}

fn structural() -> Check {
    let r = ring(3);
    let vars = r.variables();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut complexes, mut resolutions) = (0, 0);
    for k in 0..100 {
        let m = random_module(&mut rng, &r, 4, GeneratorMode::Monomial);
        if m.is_zero() {
            continue;
        }
        for res in [minimal_resolution(&m), free_resolution(&m, None)] {
            res.complex().verify().map_err(|x| format!("module {k}: d² ≠ 0 in resolution: {x}"))?;
            ensure(res.is_exact(), || format!("module {k}: resolution of {m} not exact"))?;
            resolutions += 1;
        }
        let pd = projective_dimension(&m).map_err(e)? as i64;
        let depth = depth_module(&m).map_err(e)?;
        ensure(pd + depth == 3, || format!("module {k} = {m}: pd {pd} + depth {depth} != 3"))?;

        let c = random_complex(&mut rng, &r, 3).map_err(e)?;
        let n = random_module(&mut rng, &r, 3, GeneratorMode::Monomial);
        let mut built = vec![
            c.clone(),
            c.shift(1),
            c.koszul_tensor(&vars).map_err(e)?,
            ChainMap::identity(&c).cone().map_err(e)?,
            random_chain_map(&mut rng, &r, 3).map_err(e)?.map.cone().map_err(e)?,
            koszul(&vars).map_err(e)?.complex().clone(),
        ];
        if c.is_free() {
            built.push(c.tensor_with_module(&n).map_err(e)?);
            built.push(c.hom_into_module(&n).map_err(e)?);
        }
        for (t, x) in built.iter().enumerate() {
            x.verify().map_err(|err| format!("instance {k}, construction {t}: {err}"))?;
            complexes += 1;
        }
    }
    Ok(format!("{complexes} complexes with d² = 0, {resolutions} exact resolutions, pd + depth = 3 on all modules"))
}

fn support_containment() -> Check {
    let r = ring(3);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checks = 0;
    for k in 0..50 {
        let m = random_module(&mut rng, &r, 3, GeneratorMode::Monomial);
        let n = random_module(&mut rng, &r, 3, GeneratorMode::Monomial);
        let sum = ideal_sum(&annihilator(&m), &annihilator(&n)).map_err(e)?;
        for kind in [DerivedKind::Ext, DerivedKind::Tor] {
            let table = derived_table(&m, &n, kind).map_err(e)?;
            for (&i, entry) in table.entries() {
                let ann = annihilator(entry);
                for f in sum.ideal_generators() {
                    let ok = radical_membership(&f, &ann).map_err(e)?;
                    ensure(ok, || format!("pair {k}: {f} not in rad Ann {kind}_{i}(M, N); M = {m}, N = {n}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} radical-membership checks over 50 pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 axes pair Ext, Tor and ascent", axes_pair, Duration::from_secs(1)),
        ("2 Ext along a regular sequence", regular_sequence_ext, Duration::from_secs(5)),
        ("3 ascent equivalence campaign", theorem_campaign, Duration::from_secs(60)),
        ("4 Ext below depth campaign", lemma1_campaign, Duration::from_secs(60)),
        ("5 Koszul quasi-isomorphism campaign", lemma2_campaign, Duration::from_secs(60)),
        ("6 oracle equivalence", oracle_equivalence, Duration::from_secs(120)),
        ("7 structural invariants", structural, Duration::MAX),
        ("8 support containment", support_containment, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; but took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {name}: PASS ({:.1} ms) {msg}", elapsed.as_secs_f64() * 1e3),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({:.1} ms) {msg}", elapsed.as_secs_f64() * 1e3);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
