//! Bounded chain complexes whose terms are finitely presented modules.
//!
//! Complexes are indexed homologically, `d_i : X_i → X_{i-1}`. A complex of
//! free modules is the special case where every term has no relations.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::vector::{unit_vector, Vector};
use crate::groebner::{engine, preimage, top};
use crate::matrix::Matrix;
use crate::presentation::ModulePresentation;
use crate::ring::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: Arc<Ring>,
    terms: BTreeMap<i64, ModulePresentation>,
    differentials: BTreeMap<i64, Matrix>,
}

/// Whether every column of `m` lies in the span of `relations`.
fn columns_in_span(m: &Matrix, relations: &ModulePresentation) -> bool {
    if m.is_zero() {
        return true;
    }
    let ring = m.ring();
    let ord = top(ring);
    let eng = engine(ring, ord, m.rows());
    let basis = eng.groebner(relations.relation_vectors(&ord));
    m.column_vectors(&ord).into_iter().all(|v| eng.reduce(v, &basis).is_empty())
}

impl ChainComplex {
    /// Builds and validates a complex: shapes, `d∘d = 0`, and that every
    /// differential respects the relations of its source and target.
    pub fn new(
        ring: &Arc<Ring>,
        terms: BTreeMap<i64, ModulePresentation>,
        differentials: BTreeMap<i64, Matrix>,
    ) -> Result<Self> {
        let c = Self::assemble(ring, terms, differentials)?;
        c.verify()?;
        Ok(c)
    }

    fn assemble(
        ring: &Arc<Ring>,
        terms: BTreeMap<i64, ModulePresentation>,
        differentials: BTreeMap<i64, Matrix>,
    ) -> Result<Self> {
        let terms: BTreeMap<i64, ModulePresentation> =
            terms.into_iter().filter(|(_, t)| t.num_generators() > 0).collect();
        let mut c = ChainComplex { ring: ring.clone(), terms, differentials: BTreeMap::new() };
        for (i, d) in differentials {
            if d.ring() != ring {
                return Err(Error::Context(format!("differential over {}", d.ring())));
            }
            if d.rows() != c.rank(i - 1) || d.cols() != c.rank(i) {
                return Err(Error::domain(
                    "complexes",
                    format!(
                        "d_{i} is {}x{} but the terms have ranks {} and {}",
                        d.rows(),
                        d.cols(),
                        c.rank(i - 1),
                        c.rank(i)
                    ),
                ));
            }
            if d.rows() > 0 && d.cols() > 0 && !d.is_zero() {
                c.differentials.insert(i, d);
            }
        }
        Ok(c)
    }

    /// A complex of free modules with the given ranks.
    pub fn free(ring: &Arc<Ring>, ranks: &[(i64, usize)], differentials: Vec<(i64, Matrix)>) -> Result<Self> {
        let terms = ranks.iter().map(|&(i, r)| (i, ModulePresentation::free(ring, r))).collect();
        Self::new(ring, terms, differentials.into_iter().collect())
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        ChainComplex { ring: ring.clone(), terms: BTreeMap::new(), differentials: BTreeMap::new() }
    }

    /// The module `M` concentrated in degree `i`.
    pub fn concentrated(m: &ModulePresentation, i: i64) -> Self {
        let terms = BTreeMap::from([(i, m.clone())]);
        Self::assemble(m.ring(), terms, BTreeMap::new()).expect("single term")
    }

    /// Rechecks `d∘d = 0` and compatibility with relations.
    pub fn verify(&self) -> Result<()> {
        for (&i, d) in &self.differentials {
            let src = self.term(i);
            if src.relations().cols() > 0 {
                let image = d.mul(src.relations())?;
                if !columns_in_span(&image, &self.term(i - 1)) {
                    return Err(Error::domain("complexes", format!("d_{i} does not respect the relations")));
                }
            }
            if let Some(prev) = self.differentials.get(&(i - 1)) {
                let dd = prev.mul(d)?;
                if !columns_in_span(&dd, &self.term(i - 2)) {
                    return Err(Error::domain("complexes", format!("d_{} ∘ d_{i} is not zero", i - 1)));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self, i: i64) -> usize {
        self.terms.get(&i).map_or(0, ModulePresentation::num_generators)
    }

    pub fn term(&self, i: i64) -> ModulePresentation {
        self.terms.get(&i).cloned().unwrap_or_else(|| ModulePresentation::zero(&self.ring))
    }

    pub fn differential(&self, i: i64) -> Matrix {
        self.differentials
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(&self.ring, self.rank(i - 1), self.rank(i)))
    }

    /// Degrees carrying a nonzero term, in increasing order.
    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn ranks(&self) -> BTreeMap<i64, usize> {
        self.terms.iter().map(|(&i, t)| (i, t.num_generators())).collect()
    }

    pub fn is_free(&self) -> bool {
        self.terms.values().all(|t| t.relations().cols() == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.differentials.values().all(Matrix::is_homogeneous)
            && self.terms.values().all(|t| t.relations().is_homogeneous())
    }

    /// `(Σ^n X)_i = X_{i-n}` with differentials multiplied by `(-1)^n`.
    pub fn shift(&self, n: i64) -> ChainComplex {
        let terms = self.terms.iter().map(|(&i, t)| (i + n, t.clone())).collect();
        let differentials = self
            .differentials
            .iter()
            .map(|(&i, d)| (i + n, if n.rem_euclid(2) == 1 { d.neg() } else { d.clone() }))
            .collect();
        ChainComplex { ring: self.ring.clone(), terms, differentials }
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        let mut degrees: Vec<i64> = self.degrees();
        degrees.extend(other.degrees());
        degrees.sort_unstable();
        degrees.dedup();
        let terms = degrees.iter().map(|&i| (i, self.term(i).direct_sum(&other.term(i)))).collect();
        let differentials = degrees
            .iter()
            .map(|&i| (i, Matrix::block_diag(&self.ring, &[self.differential(i), other.differential(i)])))
            .collect();
        Self::new(&self.ring, terms, differentials)
    }

    /// Generators of `ker(X_i → X_{i-1})` inside the free cover of `X_i`.
    fn cycles(&self, i: i64) -> Vec<Vector> {
        let ring = &self.ring;
        let f = self.rank(i);
        let below = self.rank(i - 1);
        if below == 0 {
            return (0..f).map(|j| unit_vector(ring.field(), ring.nvars(), j)).collect();
        }
        let ord = top(ring);
        let d = self.differential(i);
        preimage(ring, below, &d.column_vectors(&ord), &self.term(i - 1).relation_vectors(&ord))
    }

    /// Boundaries plus relations of `X_i`.
    fn boundaries(&self, i: i64) -> Vec<Vector> {
        let ord = top(&self.ring);
        let mut b = self.differential(i + 1).column_vectors(&ord);
        b.extend(self.term(i).relation_vectors(&ord));
        b
    }

    /// A pruned presentation of `H_i(X)`.
    pub fn homology(&self, i: i64) -> ModulePresentation {
        let f = self.rank(i);
        if f == 0 {
            return ModulePresentation::zero(&self.ring);
        }
        let z = self.cycles(i);
        if z.is_empty() {
            return ModulePresentation::zero(&self.ring);
        }
        let rel = preimage(&self.ring, f, &z, &self.boundaries(i));
        ModulePresentation::new(Matrix::from_vectors(&self.ring, z.len(), &rel)).prune()
    }

    /// `H_i(X) = 0`, decided by reducing cycles modulo boundaries.
    pub fn homology_vanishes(&self, i: i64) -> bool {
        let f = self.rank(i);
        if f == 0 {
            return true;
        }
        let z = self.cycles(i);
        if z.is_empty() {
            return true;
        }
        let ord = top(&self.ring);
        let eng = engine(&self.ring, ord, f);
        let basis = eng.groebner(self.boundaries(i));
        z.into_iter().all(|v| eng.reduce(v, &basis).is_empty())
    }

    pub fn is_exact(&self) -> bool {
        self.degrees().into_iter().all(|i| self.homology_vanishes(i))
    }

    /// Largest degree with nonzero homology; `None` stands for `-∞`.
    pub fn sup(&self) -> Option<i64> {
        self.degrees().into_iter().rev().find(|&i| !self.homology_vanishes(i))
    }

    /// Degreewise `X ⊗ M` for a complex of free modules.
    pub fn tensor_with_module(&self, m: &ModulePresentation) -> Result<ChainComplex> {
        if !self.is_free() {
            return Err(Error::domain("complexes", "tensor with a module needs a complex of free modules"));
        }
        let n = m.num_generators();
        let terms = self.terms.iter().map(|(&i, t)| (i, m.power(t.num_generators()))).collect();
        let differentials = self.differentials.iter().map(|(&i, d)| (i, d.kron_identity(n))).collect();
        Self::new(&self.ring, terms, differentials)
    }

    /// `Hom(P, N)` for a complex of free modules, placed so that the
    /// cohomological degree `i` sits in homological degree `-i`.
    pub fn hom_into_module(&self, n_mod: &ModulePresentation) -> Result<ChainComplex> {
        if !self.is_free() {
            return Err(Error::domain("complexes", "Hom into a module needs a complex of free modules"));
        }
        let n = n_mod.num_generators();
        let terms = self.terms.iter().map(|(&i, t)| (-i, n_mod.power(t.num_generators()))).collect();
        // Hom(P_i, N) → Hom(P_{i+1}, N) is precomposition with d_{i+1}
        let differentials =
            self.differentials.iter().map(|(&i, d)| (-(i - 1), d.transpose().kron_identity(n))).collect();
        Self::new(&self.ring, terms, differentials)
    }

    /// `K(xs) ⊗ X`, built as iterated mapping cones of multiplication maps.
    pub fn koszul_tensor(&self, xs: &[Polynomial]) -> Result<ChainComplex> {
        let mut c = self.clone();
        for x in xs {
            c = ChainMap::scalar(&c, x)?.cone()?;
        }
        Ok(c)
    }
}

/// A morphism of complexes, given degreewise on free covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: BTreeMap<i64, Matrix>,
}

impl ChainMap {
    /// Validates shapes, compatibility with relations, and `d f = f d`.
    pub fn new(source: &ChainComplex, target: &ChainComplex, components: BTreeMap<i64, Matrix>) -> Result<Self> {
        let mut comps = BTreeMap::new();
        for (i, m) in components {
            if m.rows() != target.rank(i) || m.cols() != source.rank(i) {
                return Err(Error::domain(
                    "complexes",
                    format!("component {i} is {}x{}, expected {}x{}", m.rows(), m.cols(), target.rank(i), source.rank(i)),
                ));
            }
            if m.rows() > 0 && m.cols() > 0 && !m.is_zero() {
                comps.insert(i, m);
            }
        }
        let f = ChainMap { source: source.clone(), target: target.clone(), components: comps };
        f.verify()?;
        Ok(f)
    }

    pub fn verify(&self) -> Result<()> {
        let mut degrees = self.source.degrees();
        degrees.extend(self.target.degrees());
        degrees.sort_unstable();
        degrees.dedup();
        for i in degrees {
            let f = self.component(i);
            let src = self.source.term(i);
            if src.relations().cols() > 0 && !columns_in_span(&f.mul(src.relations())?, &self.target.term(i)) {
                return Err(Error::domain("complexes", format!("component {i} does not respect relations")));
            }
            let lhs = self.target.differential(i).mul(&f)?;
            let rhs = self.component(i - 1).mul(&self.source.differential(i))?;
            let diff = lhs.add(&rhs.neg())?;
            if !columns_in_span(&diff, &self.target.term(i - 1)) {
                return Err(Error::domain("complexes", format!("map does not commute with d_{i}")));
            }
        }
        Ok(())
    }

    pub fn identity(x: &ChainComplex) -> ChainMap {
        let components = x.terms.iter().map(|(&i, t)| (i, Matrix::identity(&x.ring, t.num_generators()))).collect();
        ChainMap { source: x.clone(), target: x.clone(), components }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> ChainMap {
        ChainMap { source: source.clone(), target: target.clone(), components: BTreeMap::new() }
    }

    /// Multiplication by `p` on every term.
    pub fn scalar(x: &ChainComplex, p: &Polynomial) -> Result<ChainMap> {
        if p.ring() != &x.ring {
            return Err(Error::Context(format!("{} vs {}", p.ring(), x.ring)));
        }
        let components =
            x.terms.iter().map(|(&i, t)| (i, Matrix::identity(&x.ring, t.num_generators()).scale(p))).collect();
        Ok(ChainMap { source: x.clone(), target: x.clone(), components })
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn component(&self, i: i64) -> Matrix {
        self.components
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(&self.source.ring, self.target.rank(i), self.source.rank(i)))
    }

    /// `p · f`.
    pub fn scale(&self, p: &Polynomial) -> ChainMap {
        let components = self.components.iter().map(|(&i, m)| (i, m.scale(p))).collect();
        ChainMap { components, ..self.clone() }
    }

    /// `(f, g) : X → Y ⊕ Z`.
    pub fn pair(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        if f.source != g.source {
            return Err(Error::domain("complexes", "paired maps need a common source"));
        }
        let target = f.target.direct_sum(&g.target)?;
        let ring = &f.source.ring;
        let components = f
            .source
            .degrees()
            .into_iter()
            .map(|i| {
                let (a, b) = (f.component(i), g.component(i));
                let mut m = Matrix::zeros(ring, a.rows() + b.rows(), a.cols());
                m.paste(0, 0, &a);
                m.paste(a.rows(), 0, &b);
                (i, m)
            })
            .collect();
        ChainMap::new(&f.source, &target, components)
    }

    /// Mapping cone: `Cone_i = X_{i-1} ⊕ Y_i`, `d = [[-d^X, 0], [f, d^Y]]`.
    pub fn cone(&self) -> Result<ChainComplex> {
        let (x, y) = (&self.source, &self.target);
        let ring = &x.ring;
        let mut degrees: Vec<i64> = x.degrees().into_iter().map(|i| i + 1).collect();
        degrees.extend(y.degrees());
        degrees.sort_unstable();
        degrees.dedup();
        let terms: BTreeMap<i64, ModulePresentation> =
            degrees.iter().map(|&i| (i, x.term(i - 1).direct_sum(&y.term(i)))).collect();
        let mut differentials = BTreeMap::new();
        for &i in &degrees {
            let (xa, ya) = (x.rank(i - 1), y.rank(i));
            let (xb, yb) = (x.rank(i - 2), y.rank(i - 1));
            if xb + yb == 0 {
                continue;
            }
            let mut d = Matrix::zeros(ring, xb + yb, xa + ya);
            d.paste(0, 0, &x.differential(i - 1).neg());
            d.paste(xb, 0, &self.component(i - 1));
            d.paste(xb, xa, &y.differential(i));
            differentials.insert(i, d);
        }
        ChainComplex::new(ring, terms, differentials)
    }

    /// The canonical inclusion `Y → Cone(f)`.
    pub fn cone_inclusion(&self) -> Result<ChainMap> {
        let cone = self.cone()?;
        let ring = &self.source.ring;
        let components = self
            .target
            .degrees()
            .into_iter()
            .map(|i| {
                let xa = self.source.rank(i - 1);
                let mut m = Matrix::zeros(ring, xa + self.target.rank(i), self.target.rank(i));
                m.paste(xa, 0, &Matrix::identity(ring, self.target.rank(i)));
                (i, m)
            })
            .collect();
        ChainMap::new(&self.target, &cone, components)
    }

    /// Quasi-isomorphism test: the mapping cone is exact.
    pub fn is_quasi_iso(&self) -> Result<bool> {
        Ok(self.cone()?.is_exact())
    }

    /// `K(xs) ⊗ f`, matching [`ChainComplex::koszul_tensor`] on both ends.
    pub fn koszul_tensor(&self, xs: &[Polynomial]) -> Result<ChainMap> {
        let mut f = self.clone();
        for x in xs {
            let source = ChainMap::scalar(&f.source, x)?.cone()?;
            let target = ChainMap::scalar(&f.target, x)?.cone()?;
            let ring = source.ring.clone();
            let components = source
                .degrees()
                .into_iter()
                .map(|i| (i, Matrix::block_diag(&ring, &[f.component(i - 1), f.component(i)])))
                .collect();
            f = ChainMap::new(&source, &target, components)?;
        }
        Ok(f)
    }
}

/// A Koszul complex together with its defining sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulData {
    sequence: Vec<Polynomial>,
    complex: ChainComplex,
}

impl KoszulData {
    pub fn sequence(&self) -> &[Polynomial] {
        &self.sequence
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }
}

/// Subsets of `0..n` of size `k` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex on `xs`: basis of degree `k` indexed by `k`-subsets,
/// `d(e_S) = Σ_p (-1)^p x_{s_p} e_{S∖s_p}`.
pub fn koszul(xs: &[Polynomial]) -> Result<KoszulData> {
    let Some(first) = xs.first() else {
        return Err(Error::domain("complexes", "Koszul complex on an empty sequence"));
    };
    let ring = first.ring().clone();
    if xs.iter().any(|x| x.ring() != &ring) {
        return Err(Error::Context("Koszul sequence from different rings".into()));
    }
    let n = xs.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets(n, k)).collect();
    let mut differentials = Vec::new();
    for k in 1..=n {
        let (src, tgt) = (&bases[k], &bases[k - 1]);
        let mut d = Matrix::zeros(&ring, tgt.len(), src.len());
        for (col, s) in src.iter().enumerate() {
            for p in 0..s.len() {
                let mut rest = s.clone();
                rest.remove(p);
                let row = tgt.binary_search(&rest).expect("subset present");
                let e = if p % 2 == 0 { xs[s[p]].clone() } else { -&xs[s[p]] };
                d.set(row, col, e);
            }
        }
        differentials.push((k as i64, d));
    }
    let ranks: Vec<(i64, usize)> = bases.iter().enumerate().map(|(k, b)| (k as i64, b.len())).collect();
    let complex = ChainComplex::free(&ring, &ranks, differentials)?;
    Ok(KoszulData { sequence: xs.to_vec(), complex })
}
