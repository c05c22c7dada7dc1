//! Independent brute-force oracles used to cross-check the main algorithms.

use std::sync::Arc;

use crate::complexes::koszul;
use crate::derived::{derived_table, module_length, DerivedKind};
use crate::error::Result;
use crate::groebner::{buchberger, normal_form, same_ideal, FreeElement, Submodule};
use crate::invariants::annihilator;
use crate::presentation::ModulePresentation;
use crate::resolutions::Resolution;
use crate::ring::{Monomial, MonomialOrder, Polynomial, Ring};

fn subset_of(m: &Monomial, set: u64) -> bool {
    m.support().all(|v| set >> v & 1 == 1)
}

/// Largest set of variables `S` such that no generator is a monomial in
/// `S` alone, by trying every subset.
pub fn exhaustive_dimension(nvars: usize, gens: &[Monomial]) -> i64 {
    if gens.iter().any(Monomial::is_one) {
        return -1;
    }
    (0u64..1 << nvars)
        .filter(|&s| !gens.iter().any(|g| subset_of(g, s)))
        .map(|s| i64::from(s.count_ones()))
        .max()
        .unwrap_or(-1)
}

/// Minimal variable sets meeting every generator's support, by trying every
/// subset. Each prime is returned as sorted variable indices.
pub fn exhaustive_minimal_primes(nvars: usize, gens: &[Monomial]) -> Vec<Vec<usize>> {
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let contains = |s: u64| gens.iter().all(|g| g.support().any(|v| s >> v & 1 == 1));
    let all: Vec<u64> = (0u64..1 << nvars).filter(|&s| contains(s)).collect();
    let mut out: Vec<Vec<usize>> = all
        .iter()
        .filter(|&&s| !all.iter().any(|&t| t != s && t & s == t))
        .map(|&s| (0..nvars).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// All monomials of degree `1..=max_deg` in `nvars` variables.
pub fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<Monomial> {
    fn go(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == nvars {
            if cur.iter().sum::<u32>() > 0 {
                out.push(Monomial::from_exponents(cur));
            }
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(nvars, max_deg, &mut Vec::new(), &mut out);
    out.sort_by_key(|m| (m.degree(), m.exponents().to_vec()));
    out
}

/// Every monomial ideal generated in degrees `1..=max_deg`, listed once by
/// its minimal generators (antichains under divisibility). Includes `(0)`.
pub fn all_monomial_ideals(nvars: usize, max_deg: u32) -> Vec<Vec<Monomial>> {
    fn go(mons: &[Monomial], start: usize, cur: &mut Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
        out.push(cur.clone());
        for i in start..mons.len() {
            let m = &mons[i];
            if cur.iter().any(|c| c.divides(m) || m.divides(c)) {
                continue;
            }
            cur.push(m.clone());
            go(mons, i + 1, cur, out);
            cur.pop();
        }
    }
    let mons = monomials_up_to(nvars, max_deg);
    let mut out = Vec::new();
    go(&mons, 0, &mut Vec::new(), &mut out);
    out
}

pub fn monomial_ideal(ring: &Arc<Ring>, gens: &[Monomial]) -> Submodule {
    let polys = gens.iter().map(|m| Polynomial::term(ring, m.clone(), ring.field().one())).collect();
    Submodule::ideal(ring, polys).expect("same ring")
}

/// Normal forms worked out by hand: (polynomial, basis, expected remainder),
/// all over `Q[x, y]` with grevlex.
const NORMAL_FORM_FIXTURES: &[(&str, &[&str], &str)] = &[
    ("x^3", &["x^2 - y^2"], "x*y^2"),
    ("x^4 + y", &["x^2 - y^2"], "y^4 + y"),
    ("x^2*y + x*y^2", &["x*y"], "0"),
    ("x^3 + 3*x^2*y + 3*x*y^2 + y^3", &["x^2", "y^2"], "0"),
    ("x^2 + x*y + y^2", &["x + y"], "y^2"),
    ("x*y + 1", &["x - 1", "y - 2"], "3"),
];

/// Checks the fixed normal-form fixtures; returns failure descriptions.
pub fn check_normal_form_fixtures() -> Result<Vec<String>> {
    let ring = Ring::new(&["x", "y"], crate::ring::CoefficientField::Rationals)?;
    let mut failures = Vec::new();
    for (f, basis, expected) in NORMAL_FORM_FIXTURES {
        let gens = basis.iter().map(|g| ring.parse_poly(g)).collect::<Result<Vec<_>>>()?;
        let gb = buchberger(&Submodule::ideal(&ring, gens)?, MonomialOrder::grevlex());
        let nf = normal_form(&FreeElement::from_poly(ring.parse_poly(f)?), &gb)?;
        let got = nf.components()[0].clone();
        if got != ring.parse_poly(expected)? {
            failures.push(format!("normal form of {f} modulo {basis:?}: expected {expected}, got {got}"));
        }
    }
    Ok(failures)
}

/// Compares the Ext table of `(R/(vars), N)` from the hand-built Koszul
/// resolution of `R/(vars)` with the one from the minimal resolution.
pub fn check_koszul_ext_fixture(ring: &Arc<Ring>, vars: &[usize], n: &ModulePresentation) -> Result<Option<String>> {
    let xs: Vec<Polynomial> = vars.iter().map(|&i| Polynomial::var(ring, i)).collect();
    let m = ModulePresentation::cyclic(ring, xs.clone())?;
    let fixture = Resolution::from_complex(koszul(&xs)?.complex().clone(), &m)?;
    let hom = fixture.complex().hom_into_module(n)?;
    let table = derived_table(&m, n, DerivedKind::Ext)?;
    for i in 0..=vars.len() {
        let by_hand = hom.homology(-(i as i64));
        let computed = table.entry(i);
        let same = by_hand.is_zero() == computed.is_zero()
            && same_ideal(&annihilator(&by_hand), &annihilator(&computed))?
            && module_length(&by_hand) == module_length(&computed);
        if !same {
            return Ok(Some(format!("Ext^{i}: Koszul fixture gives {by_hand}, derived_table gives {computed}")));
        }
    }
    Ok(None)
}
