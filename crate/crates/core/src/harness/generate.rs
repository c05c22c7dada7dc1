//! Random homogeneous inputs for the campaigns.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use crate::complexes::{koszul, ChainComplex, ChainMap};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::presentation::ModulePresentation;
use crate::resolutions::minimal_resolution;
use crate::ring::{Monomial, Polynomial, Ring};

use super::GeneratorMode;

pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> Monomial {
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(&e)
}

fn monomial_poly(ring: &Arc<Ring>, m: Monomial) -> Polynomial {
    Polynomial::term(ring, m, ring.field().one())
}

/// A monomial of degree `1..=max_deg`.
pub fn random_monomial_poly(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32) -> Polynomial {
    let d = rng.gen_range(1..=max_deg);
    monomial_poly(ring, random_monomial(rng, ring.nvars(), d))
}

/// `m1 - m2` with both monomials of the same degree; a monomial when the
/// draw collides.
pub fn random_binomial(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32) -> Polynomial {
    let d = rng.gen_range(1..=max_deg);
    let a = random_monomial(rng, ring.nvars(), d);
    let b = random_monomial(rng, ring.nvars(), d);
    &monomial_poly(ring, a) - &monomial_poly(ring, b)
}

/// Generators of a random proper homogeneous ideal (possibly zero).
pub fn random_ideal(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32, mode: GeneratorMode) -> Vec<Polynomial> {
    let k = rng.gen_range(0..=3);
    (0..k)
        .map(|_| match mode {
            GeneratorMode::Binomial if rng.gen_bool(0.5) => random_binomial(rng, ring, max_deg),
            _ => random_monomial_poly(rng, ring, max_deg),
        })
        .filter(|p| !p.is_zero())
        .collect()
}

/// `R/I`, or with probability 1/4 a sum `R/I ⊕ R/J`. Never zero.
pub fn random_module(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32, mode: GeneratorMode) -> ModulePresentation {
    let cyclic = |rng: &mut ChaCha8Rng| {
        ModulePresentation::cyclic(ring, random_ideal(rng, ring, max_deg, mode)).expect("same ring")
    };
    let m = cyclic(rng);
    if rng.gen_bool(0.25) {
        m.direct_sum(&cyclic(rng))
    } else {
        m
    }
}

/// A small homogeneous complex: a Koszul complex on monomials, a minimal
/// resolution, or a module in degree 0.
pub fn random_complex(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32) -> Result<ChainComplex> {
    Ok(match rng.gen_range(0..3) {
        0 => {
            let k = rng.gen_range(1..=2.min(ring.nvars().max(1)));
            let xs: Vec<Polynomial> = (0..k).map(|_| random_monomial_poly(rng, ring, max_deg.min(2))).collect();
            koszul(&xs)?.complex().clone()
        }
        1 => {
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2)).map(|_| random_monomial_poly(rng, ring, max_deg.min(2))).collect();
            let m = ModulePresentation::cyclic(ring, gens)?;
            minimal_resolution(&m).complex().clone()
        }
        _ => {
            let m = ModulePresentation::cyclic(ring, random_ideal(rng, ring, max_deg.min(2), GeneratorMode::Monomial))?;
            ChainComplex::concentrated(&m, 0)
        }
    })
}

/// A chain map drawn from one of the families below, with the answer when
/// the family determines it.
pub struct MapInstance {
    pub family: &'static str,
    pub map: ChainMap,
    pub expected: Option<bool>,
}

/// `e_S ↦ (∏_{i ∈ S} c_i) e_S` from `K(c·b)` to `K(b)`.
fn koszul_scaling(b: &[Polynomial], c: &[Polynomial]) -> Result<ChainMap> {
    let cb: Vec<Polynomial> = b.iter().zip(c).map(|(x, y)| x * y).collect();
    let src = koszul(&cb)?.complex().clone();
    let tgt = koszul(b)?.complex().clone();
    let ring = b[0].ring().clone();
    let n = b.len();
    let mut components = std::collections::BTreeMap::new();
    for k in 0..=n {
        let subsets = subsets(n, k);
        let mut m = Matrix::zeros(&ring, subsets.len(), subsets.len());
        for (j, s) in subsets.iter().enumerate() {
            let prod = s.iter().fold(Polynomial::one(&ring), |acc, &i| &acc * &c[i]);
            m.set(j, j, prod);
        }
        components.insert(k as i64, m);
    }
    ChainMap::new(&src, &tgt, components)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in (k - 1)..n {
        for mut s in subsets(last, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out.sort();
    out
}

pub fn random_chain_map(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32) -> Result<MapInstance> {
    let field = ring.field();
    let family = *["identity", "constant", "multiplication", "koszul-scaling", "cone-section", "zero-exact", "zero"]
        .choose(rng)
        .expect("nonempty");
    let x = random_complex(rng, ring, max_deg)?;
    let (map, expected) = match family {
        "identity" => (ChainMap::identity(&x), Some(true)),
        "constant" => {
            let c = Polynomial::constant(ring, field.from_i64(rng.gen_range(1..50)));
            (ChainMap::scalar(&x, &c)?, Some(true))
        }
        "multiplication" => (ChainMap::scalar(&x, &random_monomial_poly(rng, ring, 2))?, None),
        "koszul-scaling" => {
            let k = rng.gen_range(1..=2.min(ring.nvars()));
            let b: Vec<Polynomial> = (0..k).map(|_| random_monomial_poly(rng, ring, 2)).collect();
            let c: Vec<Polynomial> = (0..k)
                .map(|_| if rng.gen_bool(0.5) { Polynomial::one(ring) } else { random_monomial_poly(rng, ring, 1) })
                .collect();
            (koszul_scaling(&b, &c)?, None)
        }
        "cone-section" => {
            // (id, p·ι): X → X ⊕ Cone(id_X), a quasi-isomorphism for any p
            let id = ChainMap::identity(&x);
            let iota = id.cone_inclusion()?;
            let p = random_monomial_poly(rng, ring, 2);
            (ChainMap::pair(&id, &iota.scale(&p))?, Some(true))
        }
        "zero-exact" => {
            let y = random_complex(rng, ring, max_deg)?;
            let a = ChainMap::identity(&x).cone()?;
            let b = ChainMap::identity(&y).cone()?;
            (ChainMap::zero(&a, &b), Some(true))
        }
        _ => {
            let y = random_complex(rng, ring, max_deg)?;
            (ChainMap::zero(&x, &y), None)
        }
    };
    Ok(MapInstance { family, map, expected })
}
