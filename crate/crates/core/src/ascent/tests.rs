use super::*;
use crate::ring::{CoefficientField, Polynomial};
use proptest::prelude::*;

fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::new(vars, CoefficientField::Prime(32003)).unwrap()
}

fn quot(r: &Arc<Ring>, gens: &[&str]) -> ModulePresentation {
    ModulePresentation::cyclic(r, gens.iter().map(|g| r.parse_poly(g).unwrap()).collect()).unwrap()
}

const COMPLETION: AscentOracle = AscentOracle::CompletionOfLocalizedPolynomialRing;

fn values(r: &ConditionReport) -> Vec<bool> {
    r.conditions.values().copied().collect()
}

#[test]
fn primes_under_completion() {
    let r = ring(&["x", "y"]);
    assert!(ascends_prime(&PrimeIdeal::maximal(&r), &COMPLETION).unwrap());
    assert!(!ascends_prime(&PrimeIdeal::monomial(&r, &[0]), &COMPLETION).unwrap());
    assert!(ascends_prime(&PrimeIdeal::monomial(&r, &[0]), &AscentOracle::Identity).unwrap());
    let odd = PrimeIdeal::from_generators(&r, vec![r.parse_poly("x-y").unwrap()]).unwrap();
    assert!(ascends_prime(&odd, &COMPLETION).is_err());
}

#[test]
fn modules_under_completion() {
    let r = ring(&["x", "y"]);
    assert!(module_ascends(&quot(&r, &["x", "y"]), &COMPLETION).unwrap());
    assert!(!module_ascends(&quot(&r, &["x"]), &COMPLETION).unwrap());
    assert!(module_ascends(&ModulePresentation::zero(&r), &COMPLETION).unwrap());
}

#[test]
fn example_one() {
    let r = ring(&["x", "y"]);
    let rep = theorem_report(&quot(&r, &["x"]), &quot(&r, &["y"]), &COMPLETION).unwrap();
    assert_eq!(values(&rep), vec![true; 5]);
    assert!(rep.agree);
    let json = serde_json::to_value(&rep.conditions).unwrap();
    assert_eq!(json, serde_json::json!({"i": true, "ii": true, "iii": true, "iv": true, "vii": true}));
}

#[test]
fn free_first_argument_recovers_fact() {
    let r = ring(&["x", "y"]);
    let n = quot(&r, &["x"]);
    let rep = theorem_report(&ModulePresentation::free(&r, 1), &n, &COMPLETION).unwrap();
    assert_eq!(values(&rep), vec![false; 5]);
    let fact = fact_report(&n, &COMPLETION).unwrap();
    assert!(!fact.vii && !fact.viii && fact.agree);
}

#[test]
fn example_two_in_dimension_two() {
    let r = ring(&["X1", "X2"]);
    let rep = theorem_report(&quot(&r, &["X1"]), &ModulePresentation::free(&r, 1), &COMPLETION).unwrap();
    assert!(rep.agree);
    assert_eq!(rep.condition("iv"), Some(false));
    assert_eq!(rep.condition("vii"), Some(false));
    assert!(!rep.range_edge);
}

#[test]
fn self_pair_fails() {
    let r = ring(&["x", "y"]);
    let m = quot(&r, &["x"]);
    let rep = theorem_report(&m, &m, &COMPLETION).unwrap();
    assert_eq!(values(&rep), vec![false; 5]);
    let k = quot(&r, &["x", "y"]);
    let rep = theorem_report(&k, &k, &COMPLETION).unwrap();
    assert_eq!(values(&rep), vec![true; 5]);
}

#[test]
fn explicit_oracle() {
    let r = ring(&["x", "y", "z"]);
    let oracle = AscentOracle::explicit(&r, vec![PrimeIdeal::monomial(&r, &[0]), PrimeIdeal::maximal(&r)]).unwrap();
    let fact = fact_report(&quot(&r, &["x*y", "x*z"]), &oracle).unwrap();
    assert!(!fact.vii && !fact.viii);
    assert_eq!(
        fact.evidence["viii"].minimal_primes.as_deref(),
        Some(&["(x)".to_string(), "(y, z)".to_string()][..])
    );
    // upward closure: (x, y) contains (x)
    assert!(ascends_prime(&PrimeIdeal::monomial(&r, &[0, 1]), &oracle).unwrap());
    assert!(AscentOracle::explicit(&r, vec![PrimeIdeal::monomial(&r, &[0])]).is_err());
    assert_eq!(oracle.to_string(), "primes{(x);(x, y, z)}");
}

#[test]
fn inhomogeneous_rejected() {
    let r = ring(&["x", "y"]);
    assert!(theorem_report(&quot(&r, &["x-1"]), &quot(&r, &["y"]), &COMPLETION).is_err());
}

fn monomial_quotient() -> impl Strategy<Value = ModulePresentation> {
    let r = ring(&["x", "y", "z"]);
    prop::collection::vec(prop::collection::vec(0u32..3, 3), 0..3).prop_map(move |exps| {
        let gens = exps
            .into_iter()
            .filter(|e| e.iter().any(|&a| a > 0))
            .map(|e| (0..3).fold(Polynomial::one(&r), |acc, i| &acc * &Polynomial::var(&r, i).pow(e[i])))
            .collect();
        ModulePresentation::cyclic(&r, gens).unwrap()
    })
}

fn var_subset() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::sample::subsequence(vec![0usize, 1, 2], 0..=3), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn conditions_agree(m in monomial_quotient(), n in monomial_quotient(), extra in var_subset()) {
        let rep = theorem_report(&m, &n, &COMPLETION).unwrap();
        prop_assert!(rep.agree, "{:?}", rep);
        let r = m.ring().clone();
        let mut primes: Vec<PrimeIdeal> = extra.iter().map(|v| PrimeIdeal::monomial(&r, v)).collect();
        primes.push(PrimeIdeal::maximal(&r));
        let oracle = AscentOracle::explicit(&r, primes).unwrap();
        let rep2 = theorem_report(&m, &n, &oracle).unwrap();
        prop_assert!(rep2.agree, "{:?}", rep2);
        // completion is the smallest oracle, so truth is monotone
        if rep.conditions["vii"] {
            prop_assert!(rep2.conditions["vii"]);
        }
        let fact = fact_report(&n, &oracle).unwrap();
        prop_assert!(fact.agree);
        let special = theorem_report(&ModulePresentation::free(&r, 1), &n, &oracle).unwrap();
        prop_assert_eq!(special.conditions["vii"], fact.vii);
    }
}
