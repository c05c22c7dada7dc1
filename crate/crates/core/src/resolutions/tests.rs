use super::*;
use crate::complexes::koszul;
use crate::ring::{CoefficientField, Polynomial};
use proptest::prelude::*;

fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::new(vars, CoefficientField::Rationals).unwrap()
}

fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
    r.parse_poly(s).unwrap()
}

fn quot(r: &Arc<Ring>, gens: &[&str]) -> ModulePresentation {
    ModulePresentation::cyclic(r, gens.iter().map(|g| p(r, g)).collect()).unwrap()
}

#[test]
fn residue_field_in_two_variables() {
    let r = ring(&["x", "y"]);
    let m = quot(&r, &["x", "y"]);
    let res = free_resolution(&m, None);
    assert_eq!(res.ranks(), vec![1, 2, 1]);
    assert!(res.is_complete() && res.is_minimal() && res.is_exact());
    assert_eq!(projective_dimension(&m).unwrap(), 2);
    // same complex as the Koszul complex up to the sign of d_2
    let k = koszul(&[p(&r, "x"), p(&r, "y")]).unwrap();
    assert_eq!(res.differential(1), k.complex().differential(1));
    let d2 = res.differential(2);
    let kd2 = k.complex().differential(2);
    assert!(d2 == kd2 || d2 == kd2.neg());
}

#[test]
fn free_and_principal() {
    let r = ring(&["x", "y"]);
    let f = ModulePresentation::free(&r, 2);
    let res = free_resolution(&f, None);
    assert_eq!(res.length(), 0);
    assert_eq!(projective_dimension(&f).unwrap(), 0);
    let m = quot(&r, &["x"]);
    let res = free_resolution(&m, None);
    assert_eq!(res.ranks(), vec![1, 1]);
    assert_eq!(projective_dimension(&m).unwrap(), 1);
}

#[test]
fn zero_module_has_no_projective_dimension() {
    let r = ring(&["x"]);
    assert!(projective_dimension(&quot(&r, &["1"])).is_err());
    assert!(projective_dimension(&quot(&r, &["x", "x-1"])).is_err());
}

#[test]
fn minimalize_keeps_koszul() {
    let r = ring(&["x", "y", "z"]);
    let k = koszul(&[p(&r, "x"), p(&r, "y"), p(&r, "z")]).unwrap();
    let res = Resolution::from_complex(k.complex().clone(), &quot(&r, &["x", "y", "z"])).unwrap();
    assert!(res.is_minimal());
    assert_eq!(minimalize(&res), res);
}

#[test]
fn minimalize_strips_identity_summand() {
    let r = ring(&["x"]);
    let d1 = Matrix::from_rows(&r, 2, vec![vec![p(&r, "x"), Polynomial::zero(&r)]]).unwrap();
    let d2 = Matrix::from_rows(&r, 1, vec![vec![Polynomial::zero(&r)], vec![Polynomial::one(&r)]]).unwrap();
    let c = ChainComplex::free(&r, &[(0, 1), (1, 2), (2, 1)], vec![(1, d1), (2, d2)]).unwrap();
    let res = Resolution::from_complex(c, &quot(&r, &["x"])).unwrap();
    assert!(!res.is_minimal());
    let m = minimalize(&res);
    assert!(m.is_minimal());
    assert_eq!(m.ranks(), vec![1, 1]);
    assert!(m.is_exact());
}

#[test]
fn redundant_presentation_of_principal_quotient() {
    // generators g1, g2 with relations g2 - x g1 = 0 (unit) and x g1 = 0
    let r = ring(&["x"]);
    let rel = Matrix::from_rows(
        &r,
        2,
        vec![vec![p(&r, "-x"), p(&r, "x")], vec![Polynomial::one(&r), Polynomial::zero(&r)]],
    )
    .unwrap();
    let m = ModulePresentation::new(rel);
    let full = free_resolution(&m, None);
    assert!(full.is_exact());
    let min = minimalize(&full);
    assert_eq!(min.ranks(), vec![1, 1]);
    assert!(min.is_exact());
    assert_eq!(minimal_resolution(&m).ranks(), vec![1, 1]);
}

#[test]
fn nonminimal_generators_get_trimmed() {
    // (x^2 + y^2, xy) has Gröbner basis with a redundant y^3
    let r = ring(&["x", "y"]);
    let m = quot(&r, &["x^2+y^2", "x*y", "y^3"]);
    let res = minimal_resolution(&m);
    assert_eq!(res.ranks(), vec![1, 2, 1]);
    assert!(res.is_minimal() && res.is_exact());
}

#[test]
fn twisted_cubic_betti_numbers() {
    let r = ring(&["a", "b", "c", "d"]);
    let m = quot(&r, &["a*c-b^2", "b*d-c^2", "a*d-b*c"]);
    let res = minimal_resolution(&m);
    assert_eq!(res.ranks(), vec![1, 3, 2]);
    assert!(res.is_exact());
}

fn monomial_quotient(nv: usize) -> impl Strategy<Value = ModulePresentation> {
    let names = ["x", "y", "z"];
    let r = ring(&names[..nv]);
    prop::collection::vec(prop::collection::vec(0u32..3, nv), 1..4).prop_map(move |exps| {
        let gens = exps
            .into_iter()
            .map(|e| {
                let mut e = e;
                if e.iter().all(|&a| a == 0) {
                    e[0] = 1;
                }
                (0..nv).fold(Polynomial::one(&r), |acc, i| &acc * &Polynomial::var(&r, i).pow(e[i]))
            })
            .collect();
        ModulePresentation::cyclic(&r, gens).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn resolutions_are_exact_and_short(m in monomial_quotient(3)) {
        let res = minimal_resolution(&m);
        prop_assert!(res.is_complete());
        prop_assert!(res.length() <= 3);
        prop_assert!(res.is_minimal());
        prop_assert!(res.is_exact());
        let full = free_resolution(&m, Some(6));
        prop_assert!(full.is_exact());
        prop_assert_eq!(minimalize(&full).ranks(), res.ranks());
    }
}
