//! Annihilators, dimension, depth, finite length, minimal primes of
//! monomial ideals, and the NAK predicate.
//!
//! Local notions at the origin are computed through the grading, so the
//! dimension-type invariants insist on homogeneous input.

use std::fmt;
use std::sync::Arc;

use crate::complexes::koszul;
use crate::error::{Error, Result};
use crate::groebner::vector::unit_vector;
use crate::groebner::{
    intersect, is_monomial_ideal, krull_dimension, module_quotient, reduced_ideal_basis, top, Submodule,
};
use crate::presentation::{require_nonzero, ModulePresentation};
use crate::ring::{Polynomial, Ring};

/// A prime ideal. Monomial primes are generated by variables and keep the
/// variable indices, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdeal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    variables: Option<Vec<usize>>,
}

impl PrimeIdeal {
    /// The prime generated by the given variables; empty means `(0)`.
    pub fn monomial(ring: &Arc<Ring>, vars: &[usize]) -> Self {
        let mut vars = vars.to_vec();
        vars.sort_unstable();
        vars.dedup();
        let generators = vars.iter().map(|&i| Polynomial::var(ring, i)).collect();
        PrimeIdeal { ring: ring.clone(), generators, variables: Some(vars) }
    }

    /// The maximal ideal of the origin.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        Self::monomial(ring, &(0..ring.nvars()).collect::<Vec<_>>())
    }

    /// Wraps generators known to span a prime. Distinct variables are
    /// recognised as a monomial prime; anything else is stored as given.
    pub fn from_generators(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::Context("prime generators from another ring".into()));
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let vars: Option<Vec<usize>> = gens.iter().map(|g| (0..ring.nvars()).find(|&i| *g == Polynomial::var(ring, i))).collect();
        Ok(match vars {
            Some(v) => Self::monomial(ring, &v),
            None => PrimeIdeal { ring: ring.clone(), generators: gens, variables: None },
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.variables.is_some()
    }

    /// Variable indices of a monomial prime.
    pub fn variables(&self) -> Option<&[usize]> {
        self.variables.as_deref()
    }

    pub fn is_maximal(&self) -> bool {
        self.variables.as_ref().is_some_and(|v| v.len() == self.ring.nvars())
    }

    pub fn to_ideal(&self) -> Submodule {
        Submodule::ideal(&self.ring, self.generators.clone()).expect("same ring")
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn require_homogeneous(m: &ModulePresentation, what: &str) -> Result<()> {
    if m.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::unsupported(
            "invariants",
            format!("{what} is computed through the grading and needs a homogeneous presentation"),
        ))
    }
}

/// `Ann(M) = ∩_j (U : e_j)` for `M = R^g / U`.
pub fn annihilator(m: &ModulePresentation) -> Submodule {
    let ring = m.ring();
    let g = m.num_generators();
    if g == 0 {
        return Submodule::ideal(ring, vec![Polynomial::one(ring)]).expect("same ring");
    }
    let ord = top(ring);
    let u = m.relation_vectors(&ord);
    let mut ann: Option<Submodule> = None;
    for j in 0..g {
        let e = unit_vector(ring.field(), ring.nvars(), j);
        let q = Submodule::from_vectors(ring, 1, &module_quotient(ring, g, &u, &e));
        ann = Some(match ann {
            None => q,
            Some(a) => intersect(&a, &q).expect("ideals over one ring"),
        });
    }
    ann.expect("g > 0")
}

/// Krull dimension of `M`; `-1` for the zero module.
pub fn dim_module(m: &ModulePresentation) -> Result<i64> {
    require_homogeneous(m, "dimension")?;
    krull_dimension(&annihilator(m))
}

/// `d − sup(K(x_1, …, x_d) ⊗ N)` with the variables as parameters.
pub fn depth_module(n: &ModulePresentation) -> Result<i64> {
    require_homogeneous(n, "depth")?;
    require_nonzero(n, "invariants", "depth")?;
    let ring = n.ring();
    let d = ring.nvars();
    if d == 0 {
        return Ok(0);
    }
    let k = koszul(&ring.variables())?;
    let sup = k.complex().tensor_with_module(n)?.sup();
    let sup = sup.ok_or_else(|| Error::Verification("Koszul homology of a nonzero module vanished".into()))?;
    Ok(d as i64 - sup)
}

/// `M = 0` or `dim M = 0`.
pub fn is_finite_length(m: &ModulePresentation) -> Result<bool> {
    Ok(dim_module(m)? <= 0)
}

/// Minimal primes of a monomial ideal, found by branching over the variables
/// of each uncovered generator. The zero ideal yields `(0)`; the unit ideal
/// yields nothing.
pub fn minimal_primes(i: &Submodule) -> Result<Vec<PrimeIdeal>> {
    if !is_monomial_ideal(i)? {
        return Err(Error::unsupported(
            "invariants",
            "minimal primes are only computed for monomial ideals; use dimension-based checks instead",
        ));
    }
    let ring = i.ring();
    let basis = reduced_ideal_basis(i)?;
    if basis.iter().any(Polynomial::is_constant) {
        return Ok(Vec::new());
    }
    let mut supports: Vec<u64> = basis.iter().map(|p| p.terms()[0].0.support_mask()).collect();
    supports.sort_unstable();
    supports.dedup();
    let mut covers = Vec::new();
    branch(&supports, 0, &mut covers);
    covers.sort_unstable_by_key(|c: &u64| (c.count_ones(), *c));
    let mut minimal: Vec<u64> = Vec::new();
    for c in covers {
        if minimal.iter().all(|&m| m & !c != 0) {
            minimal.push(c);
        }
    }
    let mut primes: Vec<PrimeIdeal> = minimal
        .into_iter()
        .map(|c| {
            let vars: Vec<usize> = (0..ring.nvars()).filter(|&v| c >> v & 1 == 1).collect();
            PrimeIdeal::monomial(ring, &vars)
        })
        .collect();
    primes.sort_by(|a, b| a.variables.cmp(&b.variables));
    Ok(primes)
}

fn branch(supports: &[u64], chosen: u64, out: &mut Vec<u64>) {
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => out.push(chosen),
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                branch(supports, chosen | b, out);
                bits &= bits - 1;
            }
        }
    }
}

/// Membership in `NAK(R)`: `M = 0` or `M/mM ≠ 0`. Holds for every finitely
/// presented module; computed from the pruned presentation.
pub fn nak_status(m: &ModulePresentation) -> bool {
    m.is_zero() || m.prune().num_generators() > 0
}
