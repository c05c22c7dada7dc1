//! Sparse free-module vectors used inside the Gröbner engine.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::ring::{Coeff, CoefficientField, ModuleExtension, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub comp: usize,
    pub coeff: Coeff,
}

/// Terms sorted in decreasing order under a [`TermOrder`].
pub(crate) type Vector = Vec<Term>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Extension {
    Top,
    Pot,
    /// Components below the split form a block that dominates the rest;
    /// term-over-position inside each block.
    Elim(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct TermOrder {
    pub kind: OrderKind,
    pub ext: Extension,
}

impl TermOrder {
    pub fn top(kind: OrderKind) -> Self {
        TermOrder { kind, ext: Extension::Top }
    }

    pub fn elim(kind: OrderKind, split: usize) -> Self {
        TermOrder { kind, ext: Extension::Elim(split) }
    }

    pub fn from_public(ord: MonomialOrder) -> Self {
        let ext = match ord.extension {
            ModuleExtension::TermOverPosition => Extension::Top,
            ModuleExtension::PositionOverTerm => Extension::Pot,
        };
        TermOrder { kind: ord.kind, ext }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, i: usize, b: &Monomial, j: usize) -> Ordering {
        match self.ext {
            Extension::Top => self.kind.cmp(a, b).then_with(|| j.cmp(&i)),
            Extension::Pot => j.cmp(&i).then_with(|| self.kind.cmp(a, b)),
            Extension::Elim(s) => (i < s)
                .cmp(&(j < s))
                .then_with(|| self.kind.cmp(a, b))
                .then_with(|| j.cmp(&i)),
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.mon, a.comp, &b.mon, b.comp)
    }

    pub fn sort(&self, v: &mut Vector) {
        v.sort_by(|a, b| self.cmp_terms(b, a));
    }
}

/// `a - c·m·b`, both sorted under `ord`.
pub(crate) fn sub_scaled(
    field: CoefficientField,
    ord: &TermOrder,
    a: &[Term],
    c: &Coeff,
    m: &Monomial,
    b: &[Term],
) -> Vector {
    let negc = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<Term> = None;
    while i < a.len() || j < b.len() || pending.is_some() {
        if pending.is_none() && j < b.len() {
            let t = &b[j];
            pending = Some(Term { mon: t.mon.mul(m), comp: t.comp, coeff: field.mul(&t.coeff, &negc) });
            j += 1;
        }
        match (a.get(i), pending.as_ref()) {
            (Some(x), Some(y)) => match ord.cmp_terms(x, y) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => out.push(pending.take().unwrap()),
                Ordering::Equal => {
                    let s = field.add(&x.coeff, &y.coeff);
                    if !field.is_zero(&s) {
                        out.push(Term { mon: x.mon.clone(), comp: x.comp, coeff: s });
                    }
                    i += 1;
                    pending = None;
                }
            },
            (Some(_), None) => {
                out.extend_from_slice(&a[i..]);
                i = a.len();
            }
            (None, Some(_)) => out.push(pending.take().unwrap()),
            (None, None) => break,
        }
    }
    out
}

pub(crate) fn scale(field: CoefficientField, v: &mut Vector, c: &Coeff) {
    for t in v.iter_mut() {
        t.coeff = field.mul(&t.coeff, c);
    }
}

pub(crate) fn make_monic(field: CoefficientField, v: &mut Vector) {
    if let Some(t) = v.first() {
        if !field.is_one(&t.coeff) {
            let inv = field.inv(&t.coeff);
            scale(field, v, &inv);
        }
    }
}

pub(crate) fn shift_components(v: &Vector, offset: isize) -> Vector {
    v.iter()
        .map(|t| Term { mon: t.mon.clone(), comp: (t.comp as isize + offset) as usize, coeff: t.coeff.clone() })
        .collect()
}

/// Collects the components of polynomials into a sorted vector.
pub(crate) fn from_polys<'a>(ord: &TermOrder, comps: impl IntoIterator<Item = &'a Polynomial>) -> Vector {
    let mut v: Vector = comps
        .into_iter()
        .enumerate()
        .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| Term { mon: m.clone(), comp: i, coeff: c.clone() }))
        .collect();
    ord.sort(&mut v);
    v
}

/// Splits a vector back into `rank` polynomials.
pub(crate) fn to_polys(ring: &Arc<Ring>, rank: usize, v: &[Term]) -> Vec<Polynomial> {
    let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
    for t in v {
        buckets[t.comp].push((t.mon.clone(), t.coeff.clone()));
    }
    let kind = ring.order();
    buckets
        .into_iter()
        .map(|mut terms| {
            terms.sort_by(|a, b| kind.cmp(&b.0, &a.0));
            Polynomial::from_sorted_terms(ring, terms)
        })
        .collect()
}

/// `p · e_comp` for a single polynomial.
pub(crate) fn from_poly_at(ord: &TermOrder, p: &Polynomial, comp: usize) -> Vector {
    let mut v: Vector =
        p.terms().iter().map(|(m, c)| Term { mon: m.clone(), comp, coeff: c.clone() }).collect();
    ord.sort(&mut v);
    v
}

pub(crate) fn unit_vector(field: CoefficientField, nvars: usize, comp: usize) -> Vector {
    vec![Term { mon: Monomial::one(nvars), comp, coeff: field.one() }]
}
