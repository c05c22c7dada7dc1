//! Finitely presented modules `coker(R^r → R^g)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::vector::{TermOrder, Vector};
use crate::groebner::{engine, top};
use crate::matrix::Matrix;
use crate::ring::{Monomial, Polynomial, Ring};

/// A module given as the cokernel of its relation matrix. Rows index
/// generators, columns index relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    relations: Matrix,
}

impl ModulePresentation {
    pub fn new(relations: Matrix) -> Self {
        ModulePresentation { relations }
    }

    pub fn free(ring: &Arc<Ring>, rank: usize) -> Self {
        Self::new(Matrix::zeros(ring, rank, 0))
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::free(ring, 0)
    }

    /// `R/(gens)`.
    pub fn cyclic(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        let n = gens.len();
        Ok(Self::new(Matrix::from_rows(ring, n, vec![gens])?))
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.relations.ring()
    }

    pub fn num_generators(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> ModulePresentation {
        Self::new(Matrix::block_diag(self.ring(), &[self.relations.clone(), other.relations.clone()]))
    }

    /// `self^n`.
    pub fn power(&self, n: usize) -> ModulePresentation {
        Self::new(self.relations.repeat_diagonal(n))
    }

    pub(crate) fn relation_vectors(&self, ord: &TermOrder) -> Vec<Vector> {
        self.relations.column_vectors(ord)
    }

    /// Reduced term-over-position Gröbner basis of the relation module.
    pub(crate) fn relation_basis(&self) -> Vec<Vector> {
        let ord = top(self.ring());
        engine(self.ring(), ord, self.num_generators()).groebner(self.relation_vectors(&ord))
    }

    /// Removes generators made redundant by relations with a constant
    /// entry, drops zero relations, and replaces the remaining relations by
    /// their reduced Gröbner basis.
    pub fn prune(&self) -> ModulePresentation {
        let mut a = self.relations.clone();
        let field = self.ring().field();
        while let Some((j, k)) = a.find_unit() {
            let inv = field.inv(&a.get(j, k).constant_term());
            for k2 in 0..a.cols() {
                if k2 == k || a.get(j, k2).is_zero() {
                    continue;
                }
                let factor = a.get(j, k2).scale(&inv);
                a.col_axpy(k2, &factor, k);
            }
            a = a.remove_row(j).remove_column(k);
        }
        let p = ModulePresentation::new(a);
        let basis = p.relation_basis();
        ModulePresentation::new(Matrix::from_vectors(p.ring(), p.num_generators(), &basis))
    }

    pub fn is_zero(&self) -> bool {
        let p = self.prune();
        let g = p.num_generators();
        if g == 0 {
            return true;
        }
        let basis = p.relation_basis();
        (0..g).all(|c| basis.iter().any(|v| v[0].comp == c && v[0].mon.is_one()))
    }

    /// Generator degrees making every relation homogeneous, if they exist.
    pub fn grading(&self) -> Option<Vec<i64>> {
        let a = &self.relations;
        if !a.is_homogeneous() {
            return None;
        }
        let (g, r) = (a.rows(), a.cols());
        let mut gen_deg: Vec<Option<i64>> = vec![None; g];
        let mut rel_deg: Vec<Option<i64>> = vec![None; r];
        let entry_deg = |i: usize, j: usize| a.get(i, j).total_degree().map(|d| d as i64);
        for start in 0..g {
            if gen_deg[start].is_some() {
                continue;
            }
            gen_deg[start] = Some(0);
            // nodes: generators as (true, i), relations as (false, j)
            let mut queue = VecDeque::from([(true, start)]);
            while let Some((is_gen, idx)) = queue.pop_front() {
                if is_gen {
                    let s = gen_deg[idx].unwrap();
                    for (j, slot) in rel_deg.iter_mut().enumerate() {
                        if let Some(d) = entry_deg(idx, j) {
                            match *slot {
                                None => {
                                    *slot = Some(s + d);
                                    queue.push_back((false, j));
                                }
                                Some(t) if t != s + d => return None,
                                _ => {}
                            }
                        }
                    }
                } else {
                    let t = rel_deg[idx].unwrap();
                    for (i, slot) in gen_deg.iter_mut().enumerate() {
                        if let Some(d) = entry_deg(i, idx) {
                            match *slot {
                                None => {
                                    *slot = Some(t - d);
                                    queue.push_back((true, i));
                                }
                                Some(s) if s != t - d => return None,
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
        Some(gen_deg.into_iter().map(|d| d.unwrap_or(0)).collect())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.grading().is_some()
    }

    /// Dimension over the coefficient field, when finite.
    pub fn vector_space_dimension(&self) -> Option<usize> {
        let p = self.prune();
        let basis = p.relation_basis();
        let n = self.ring().nvars();
        let mut total = 0;
        for c in 0..p.num_generators() {
            let leads: Vec<Monomial> =
                basis.iter().filter(|v| v[0].comp == c).map(|v| v[0].mon.clone()).collect();
            total += standard_monomial_count(n, &leads)?;
        }
        Some(total)
    }
}

/// Number of monomials outside the monomial ideal generated by `leads`.
pub(crate) fn standard_monomial_count(nvars: usize, leads: &[Monomial]) -> Option<usize> {
    if leads.iter().any(Monomial::is_one) {
        return Some(0);
    }
    for i in 0..nvars {
        let has_power = leads.iter().any(|m| m.support().all(|v| v == i) && m.exponents()[i] > 0);
        if !has_power {
            return None;
        }
    }
    let standard = |m: &Monomial| leads.iter().all(|l| !l.divides(m));
    let mut count = 0;
    let mut layer: HashSet<Monomial> = HashSet::from([Monomial::one(nvars)]);
    while !layer.is_empty() {
        count += layer.len();
        let mut next = HashSet::new();
        for m in &layer {
            for i in 0..nvars {
                let m2 = m.mul(&Monomial::var(nvars, i));
                if standard(&m2) {
                    next.insert(m2);
                }
            }
        }
        layer = next;
    }
    Some(count)
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.num_generators();
        if g == 0 {
            return write!(f, "0");
        }
        if self.relations.cols() == 0 {
            return if g == 1 { write!(f, "R") } else { write!(f, "R^{g}") };
        }
        write!(f, "coker {}", self.relations)
    }
}

pub(crate) fn require_nonzero(m: &ModulePresentation, module: &'static str, what: &str) -> Result<()> {
    if m.is_zero() {
        Err(Error::domain(module, format!("{what} of the zero module is undefined")))
    } else {
        Ok(())
    }
}
