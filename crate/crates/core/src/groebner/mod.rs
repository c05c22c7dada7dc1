//! Gröbner bases for ideals and submodules of free modules, and the
//! constructions built on them: normal forms, syzygies, quotients,
//! dimension and radical membership.

mod engine;
pub(crate) mod vector;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Monomial, MonomialOrder, Polynomial, Ring};

pub(crate) use engine::Engine;
use vector::{from_poly_at, from_polys, shift_components, to_polys, unit_vector, Term, TermOrder, Vector};

/// An element of a free module `R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    components: Vec<Polynomial>,
}

impl FreeElement {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::domain("groebner", "free element needs at least one component"));
        };
        if components.iter().any(|p| p.ring() != first.ring()) {
            return Err(Error::Context("components from different rings".into()));
        }
        Ok(FreeElement { components })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        FreeElement { components: vec![p] }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.components[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub(crate) fn to_vector(&self, ord: &TermOrder) -> Vector {
        from_polys(ord, &self.components)
    }

    pub(crate) fn from_vector(ring: &Arc<Ring>, rank: usize, v: &[Term]) -> Self {
        FreeElement { components: to_polys(ring, rank, v) }
    }
}

/// A submodule of `R^rank` given by generators. Rank one submodules are ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    ring: Arc<Ring>,
    rank: usize,
    generators: Vec<FreeElement>,
}

impl Submodule {
    pub fn new(ring: &Arc<Ring>, rank: usize, generators: Vec<FreeElement>) -> Result<Self> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::domain("groebner", format!("generator of rank {} in rank {rank} module", g.rank())));
            }
            if g.ring() != ring {
                return Err(Error::Context(format!("generator from {}", g.ring())));
            }
        }
        Ok(Submodule { ring: ring.clone(), rank, generators })
    }

    pub fn ideal(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        Self::new(ring, 1, generators.into_iter().map(FreeElement::from_poly).collect())
    }

    /// The submodule spanned by the columns of a matrix.
    pub fn from_columns(m: &Matrix) -> Self {
        let generators = (0..m.cols()).map(|j| FreeElement { components: m.column(j) }).collect();
        Submodule { ring: m.ring().clone(), rank: m.rows(), generators }
    }

    pub fn to_matrix(&self) -> Matrix {
        let cols = self.generators.iter().map(|g| g.components.clone()).collect();
        Matrix::from_columns(&self.ring, self.rank, cols).expect("ranks agree")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeElement] {
        &self.generators
    }

    /// Generators of a rank one submodule as polynomials.
    pub fn ideal_generators(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank, 1, "not an ideal");
        self.generators.iter().map(|g| g.components[0].clone()).collect()
    }

    pub(crate) fn vectors(&self, ord: &TermOrder) -> Vec<Vector> {
        self.generators.iter().map(|g| g.to_vector(ord)).collect()
    }

    pub(crate) fn from_vectors(ring: &Arc<Ring>, rank: usize, vs: &[Vector]) -> Self {
        let generators = vs.iter().map(|v| FreeElement::from_vector(ring, rank, v)).collect();
        Submodule { ring: ring.clone(), rank, generators }
    }

    fn require_ideal(&self, op: &str) -> Result<()> {
        if self.rank != 1 {
            return Err(Error::domain("groebner", format!("{op} expects an ideal, got a rank {} submodule", self.rank)));
        }
        Ok(())
    }
}

/// A reduced Gröbner basis together with the submodule it was computed from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    rank: usize,
    elements: Vec<FreeElement>,
    source: Submodule,
    vectors: Vec<Vector>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn source(&self) -> &Submodule {
        &self.source
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn engine(&self) -> Engine {
        Engine { field: self.ring.field(), order: TermOrder::from_public(self.order), ideal: self.rank == 1 }
    }

    /// Leading terms `(monomial, component)` in basis order.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.vectors.iter().map(|v| (v[0].mon.clone(), v[0].comp)).collect()
    }

    /// Membership in the generated submodule.
    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        Ok(normal_form(v, self)?.is_zero())
    }

    /// True when the basis generates the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|c| self.vectors.iter().any(|v| v[0].comp == c && v[0].mon.is_one()))
    }

    /// Buchberger's criterion, checked directly on every pair.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        self.engine().is_groebner(&self.vectors)
    }

    pub fn is_reduced(&self) -> bool {
        let field = self.ring.field();
        let ord = TermOrder::from_public(self.order);
        self.vectors.iter().enumerate().all(|(k, v)| {
            field.is_one(&v[0].coeff)
                && v.iter().all(|t| {
                    self.vectors.iter().enumerate().all(|(i, g)| {
                        i == k || !(g[0].comp == t.comp && g[0].mon.divides(&t.mon))
                    })
                })
                && v.windows(2).all(|w| ord.cmp_terms(&w[0], &w[1]).is_gt())
        })
    }
}

pub(crate) fn engine(ring: &Ring, order: TermOrder, rank: usize) -> Engine {
    Engine { field: ring.field(), order, ideal: rank == 1 }
}

pub(crate) fn top(ring: &Ring) -> TermOrder {
    TermOrder::top(ring.order())
}

/// Reduced Gröbner basis of a submodule under `ord`.
pub fn buchberger(s: &Submodule, ord: MonomialOrder) -> GroebnerBasis {
    let tord = TermOrder::from_public(ord);
    let vectors = engine(&s.ring, tord, s.rank).groebner(s.vectors(&tord));
    let elements = vectors.iter().map(|v| FreeElement::from_vector(&s.ring, s.rank, v)).collect();
    GroebnerBasis { ring: s.ring.clone(), order: ord, rank: s.rank, elements, source: s.clone(), vectors }
}

/// Remainder of `v` on division by `g`.
pub fn normal_form(v: &FreeElement, g: &GroebnerBasis) -> Result<FreeElement> {
    if v.rank() != g.rank {
        return Err(Error::Context(format!("element of rank {} against basis of rank {}", v.rank(), g.rank)));
    }
    if v.ring() != &g.ring {
        return Err(Error::Context(format!("{} vs {}", v.ring(), g.ring)));
    }
    let ord = TermOrder::from_public(g.order);
    let r = g.engine().reduce(v.to_vector(&ord), &g.vectors);
    Ok(FreeElement::from_vector(&g.ring, g.rank, &r))
}

/// `{ v ∈ R^n : Σ v_j·images[j] ∈ span(relations) }` inside `R^n`, `n = images.len()`,
/// returned as a reduced Gröbner basis under term-over-position.
pub(crate) fn preimage(ring: &Arc<Ring>, target_rank: usize, images: &[Vector], relations: &[Vector]) -> Vec<Vector> {
    let n = images.len();
    let field = ring.field();
    let nv = ring.nvars();
    if n == 0 {
        return Vec::new();
    }
    if target_rank == 0 {
        return (0..n).map(|j| unit_vector(field, nv, j)).collect();
    }
    let ord = TermOrder::elim(ring.order(), target_rank);
    let mut gens: Vec<Vector> = Vec::with_capacity(n + relations.len());
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.push(Term { mon: Monomial::one(nv), comp: target_rank + j, coeff: field.one() });
        ord.sort(&mut v);
        gens.push(v);
    }
    for rel in relations {
        let mut v = rel.clone();
        ord.sort(&mut v);
        gens.push(v);
    }
    let gb = engine(ring, ord, target_rank + n).groebner(gens);
    let top = top(ring);
    let mut out: Vec<Vector> = gb
        .into_iter()
        .filter(|v| v[0].comp >= target_rank)
        .map(|v| {
            let mut w = shift_components(&v, -(target_rank as isize));
            top.sort(&mut w);
            w
        })
        .collect();
    out.sort_by(|a, b| top.cmp_terms(&a[0], &b[0]));
    out
}

/// Generators of the kernel of `R^k → R^rank`, `e_i ↦ generator i`.
pub fn syzygy_basis(s: &Submodule) -> Submodule {
    let ord = top(&s.ring);
    let images = s.vectors(&ord);
    let syz = preimage(&s.ring, s.rank, &images, &[]);
    Submodule::from_vectors(&s.ring, s.generators.len(), &syz)
}

/// `(I : f) = { g : g·f ∈ I }`.
pub fn ideal_quotient(i: &Submodule, f: &Polynomial) -> Result<Submodule> {
    i.require_ideal("ideal_quotient")?;
    if f.is_zero() {
        return Err(Error::domain("groebner", "quotient by the zero polynomial"));
    }
    let ord = top(&i.ring);
    let q = preimage(&i.ring, 1, &[from_poly_at(&ord, f, 0)], &i.vectors(&ord));
    Ok(Submodule::from_vectors(&i.ring, 1, &q))
}

/// `{ r : r·v ∈ U }` for a submodule `U` of `R^n` and `v ∈ R^n`.
pub(crate) fn module_quotient(ring: &Arc<Ring>, rank: usize, u: &[Vector], v: &Vector) -> Vec<Vector> {
    preimage(ring, rank, std::slice::from_ref(v), u)
}

/// `I ∩ J`.
pub fn intersect(i: &Submodule, j: &Submodule) -> Result<Submodule> {
    i.require_ideal("intersect")?;
    j.require_ideal("intersect")?;
    let ord = top(&i.ring);
    let nv = i.ring.nvars();
    let field = i.ring.field();
    let diag = vec![
        Term { mon: Monomial::one(nv), comp: 0, coeff: field.one() },
        Term { mon: Monomial::one(nv), comp: 1, coeff: field.one() },
    ];
    let mut rels: Vec<Vector> = i.vectors(&ord);
    rels.extend(j.vectors(&ord).iter().map(|v| shift_components(v, 1)));
    let q = module_quotient(&i.ring, 2, &rels, &diag);
    Ok(Submodule::from_vectors(&i.ring, 1, &q))
}

/// `I + J`.
pub fn ideal_sum(i: &Submodule, j: &Submodule) -> Result<Submodule> {
    i.require_ideal("ideal_sum")?;
    j.require_ideal("ideal_sum")?;
    let mut gens = i.generators.clone();
    gens.extend(j.generators.iter().cloned());
    Submodule::new(&i.ring, 1, gens)
}

/// Minimal generators of the leading monomial ideal of `I` under grevlex.
pub fn leading_monomial_ideal(i: &Submodule) -> Result<Vec<Monomial>> {
    i.require_ideal("leading_monomial_ideal")?;
    let gb = buchberger(i, MonomialOrder::grevlex());
    Ok(gb.leading_terms().into_iter().map(|(m, _)| m).collect())
}

/// Krull dimension of `R/I`: the largest set of variables independent
/// modulo the leading monomial ideal. `-1` for the unit ideal.
pub fn krull_dimension(i: &Submodule) -> Result<i64> {
    let lead = leading_monomial_ideal(i)?;
    Ok(dimension_of_monomial_ideal(i.ring.nvars(), &lead))
}

/// `n − (smallest set of variables meeting every generator's support)`.
pub(crate) fn dimension_of_monomial_ideal(nvars: usize, gens: &[Monomial]) -> i64 {
    if gens.iter().any(Monomial::is_one) {
        return -1;
    }
    let mut supports: Vec<u64> = gens.iter().map(Monomial::support_mask).collect();
    supports.sort_unstable();
    supports.dedup();
    // A support containing another is hit whenever the smaller one is.
    let minimal: Vec<u64> = supports
        .iter()
        .copied()
        .filter(|&s| !supports.iter().any(|&t| t != s && t & s == t))
        .collect();
    let mut best = nvars as u32;
    min_cover(&minimal, 0, &mut best);
    nvars as i64 - best as i64
}

fn min_cover(supports: &[u64], chosen: u64, best: &mut u32) {
    let size = chosen.count_ones();
    if size >= *best {
        return;
    }
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => *best = size,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                min_cover(supports, chosen | b, best);
                bits &= bits - 1;
            }
        }
    }
}

/// Whether `f ∈ √I`, via `1 ∈ (I, 1 − t·f)` with an auxiliary variable `t`.
pub fn radical_membership(f: &Polynomial, i: &Submodule) -> Result<bool> {
    i.require_ideal("radical_membership")?;
    if f.ring() != &i.ring {
        return Err(Error::Context(format!("{} vs {}", f.ring(), i.ring)));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let big = i.ring.with_extra_variable();
    let n = i.ring.nvars();
    let lift = |p: &Polynomial| {
        Polynomial::from_terms(&big, p.terms().iter().map(|(m, c)| (m.extend(1), c.clone())))
    };
    let t = Polynomial::var(&big, n);
    let aux = &Polynomial::one(&big) - &(&t * &lift(f));
    let mut gens: Vec<Polynomial> = i.ideal_generators().iter().map(lift).collect();
    gens.push(aux);
    let ord = top(&big);
    let vs: Vec<Vector> = gens.iter().map(|p| from_poly_at(&ord, p, 0)).collect();
    let gb = engine(&big, ord, 1).groebner(vs);
    Ok(gb.iter().any(|v| v[0].mon.is_one()))
}

/// Whether every generator of a reduced basis of `I` is a monomial.
pub fn is_monomial_ideal(i: &Submodule) -> Result<bool> {
    i.require_ideal("is_monomial_ideal")?;
    let gb = buchberger(i, MonomialOrder::grevlex());
    Ok(gb.vectors.iter().all(|v| v.len() == 1))
}

/// The reduced grevlex basis of an ideal as polynomials.
pub fn reduced_ideal_basis(i: &Submodule) -> Result<Vec<Polynomial>> {
    i.require_ideal("reduced_ideal_basis")?;
    Ok(buchberger(i, MonomialOrder::grevlex()).elements.iter().map(|e| e.components[0].clone()).collect())
}

/// Equality of ideals through their reduced bases.
pub fn same_ideal(i: &Submodule, j: &Submodule) -> Result<bool> {
    Ok(reduced_ideal_basis(i)? == reduced_ideal_basis(j)?)
}
