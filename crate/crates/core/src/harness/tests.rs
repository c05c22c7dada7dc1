use super::*;
use crate::complexes::{koszul, ChainComplex, ChainMap};
use crate::ring::Polynomial;

fn ring2() -> Arc<Ring> {
    Ring::new(&["x", "y"], CoefficientField::Prime(32003)).unwrap()
}

fn quot(r: &Arc<Ring>, gens: &[&str]) -> ModulePresentation {
    ModulePresentation::cyclic(r, gens.iter().map(|g| r.parse_poly(g).unwrap()).collect()).unwrap()
}

fn small(n: usize) -> CampaignConfig {
    CampaignConfig { seed: 7, count: n, nvars: 2, max_deg: 3, ..CampaignConfig::default() }
}

#[test]
fn config_round_trips_through_key_value_text() {
    let cfg = CampaignConfig::from_kv_text("seed=42 n=12 # comment\nvars=2\ndeg=3 field=Q oracle=identity mode=binomial index=5").unwrap();
    assert_eq!(cfg.seed, 42);
    assert_eq!(cfg.count, 12);
    assert_eq!(cfg.field, CoefficientField::Rationals);
    assert_eq!(cfg.index, Some(5));
    assert_eq!(CampaignConfig::from_kv_text(&cfg.to_string()).unwrap(), cfg);
}

#[test]
fn config_rejects_bad_entries() {
    let mut cfg = CampaignConfig::default();
    assert!(matches!(cfg.set("vars", "4"), Err(Error::Config(_))));
    assert!(matches!(cfg.set("deg", "5"), Err(Error::Config(_))));
    assert!(matches!(cfg.set("colour", "red"), Err(Error::Config(_))));
    assert!(CampaignConfig::from_kv_text("seed").is_err());
}

#[test]
fn lemma1_fixed_pairs() {
    let r = ring2();
    let (mx, my) = (quot(&r, &["x"]), quot(&r, &["y"]));
    assert_eq!(lemma1_witness(&mx, &my).unwrap(), 1);
    assert_eq!(depth_module(&my).unwrap(), 1);
    let k = quot(&r, &["x", "y"]);
    let free = ModulePresentation::free(&r, 1);
    assert_eq!(lemma1_witness(&k, &free).unwrap(), 2);
    assert_eq!(depth_module(&free).unwrap(), 2);
}

#[test]
fn lemma2_fixed_maps() {
    let r = ring2();
    let vars = r.variables();
    let k = koszul(&vars).unwrap();
    let id = ChainMap::identity(k.complex());
    assert!(id.is_quasi_iso().unwrap());
    assert!(id.koszul_tensor(&vars).unwrap().is_quasi_iso().unwrap());

    let free = ChainComplex::concentrated(&ModulePresentation::free(&r, 1), 0);
    let mult = ChainMap::scalar(&free, &Polynomial::var(&r, 0)).unwrap();
    assert!(!mult.is_quasi_iso().unwrap());
    assert!(!mult.koszul_tensor(&vars).unwrap().is_quasi_iso().unwrap());

    let kx = koszul(&[Polynomial::var(&r, 0)]).unwrap();
    let exact = ChainMap::identity(kx.complex()).cone().unwrap();
    let other = ChainMap::identity(&free).cone().unwrap();
    let zero = ChainMap::zero(&exact, &other);
    assert!(zero.is_quasi_iso().unwrap());
    assert!(zero.koszul_tensor(&vars).unwrap().is_quasi_iso().unwrap());
}

#[test]
fn theorem_fixed_pairs() {
    let r = ring2();
    let oracle = AscentOracle::CompletionOfLocalizedPolynomialRing;
    let cases = [(["x"].as_slice(), ["y"].as_slice(), true), (&["x"], &["x"], false), (&["x", "y"], &["x", "y"], true)];
    for (m, n, all) in cases {
        let rep = theorem_report(&quot(&r, m), &quot(&r, n), &oracle).unwrap();
        assert!(rep.agree, "{m:?} {n:?}");
        assert!(rep.conditions.values().all(|&v| v == all), "{m:?} {n:?}: {:?}", rep.conditions);
    }
}

#[test]
fn oracle_fixed_examples() {
    let r = Ring::new(&["x", "y", "z"], CoefficientField::Prime(32003)).unwrap();
    let xy = Monomial::from_exponents(&[1, 1, 0]);
    let xz = Monomial::from_exponents(&[1, 0, 1]);
    assert_eq!(compare_oracles(&r, std::slice::from_ref(&xy)).unwrap(), None);
    assert_eq!(oracles::exhaustive_dimension(3, std::slice::from_ref(&xy)), 2);
    assert_eq!(oracles::exhaustive_minimal_primes(3, &[xy.clone(), xz.clone()]), vec![vec![0], vec![1, 2]]);
    assert_eq!(compare_oracles(&r, &[xy, xz]).unwrap(), None);
    assert!(oracles::check_normal_form_fixtures().unwrap().is_empty());
    let r2 = ring2();
    assert_eq!(oracles::check_koszul_ext_fixture(&r2, &[0], &quot(&r2, &["y"])).unwrap(), None);
}

use crate::ring::Monomial;

#[test]
fn campaigns_pass_and_replay_identically() {
    for run in [run_lemma1_campaign, run_lemma2_campaign, run_theorem_campaign, brute_force_oracles] {
        let a = run(&small(12));
        assert!(a.ok(), "{}: {:?}", a.name, a.failures);
        assert_eq!(a.passed + a.excluded, 12, "{}", a.name);
        let b = run(&small(12));
        assert_eq!(a.verdicts(), b.verdicts(), "{}", a.name);
    }
}

#[test]
fn single_index_matches_full_run() {
    let full = run_lemma2_campaign(&small(6));
    let mut one = small(6);
    one.index = Some(4);
    let single = run_lemma2_campaign(&one);
    assert_eq!(single.passed + single.failed + single.excluded, 1);
    let tag = "instance 4:";
    let log_full: Vec<_> = full.logs.iter().filter(|l| l.starts_with(tag)).collect();
    let log_one: Vec<_> = single.logs.iter().filter(|l| l.starts_with(tag)).collect();
    assert_eq!(log_full, log_one);
}

#[test]
fn binomial_mode_runs() {
    let mut cfg = small(8);
    cfg.mode = GeneratorMode::Binomial;
    let res = run_lemma1_campaign(&cfg);
    assert!(res.ok(), "{:?}", res.failures);
}

#[test]
fn exhaustive_two_variable_enumeration() {
    let cfg = CampaignConfig { nvars: 2, max_deg: 2, exhaustive: true, ..CampaignConfig::default() };
    let res = brute_force_oracles(&cfg);
    assert!(res.ok(), "{:?}", res.failures);
    assert!(res.passed > 5);
}

#[test]
fn reproducers_are_replayable_sessions() {
    use crate::session::{execute, parse_session, ExecOptions, Status};
    let cfg = small(3);
    let ring = cfg.ring();
    let m = quot(&ring, &["x*y"]);
    let text = reproducer(&ring, &[("M", &m), ("N", &m)], &["ext M N".into(), replay_line("lemma1", &cfg, 2)]);
    let reports = execute(&parse_session(&text).unwrap(), &ExecOptions::default());
    assert!(reports.iter().all(|r| r.status == Status::Ok));
    assert_eq!(reports[1].result["passed"].as_u64().unwrap() + reports[1].result["excluded"].as_u64().unwrap(), 1);
    let line = replay_line("lemma2", &cfg, 1);
    assert!(parse_session(&format!("{line};")).is_ok(), "{line}");
}
