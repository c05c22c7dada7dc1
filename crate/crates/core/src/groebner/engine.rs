//! Buchberger's algorithm on free-module vectors.
//!
//! Pairs are selected by smallest lcm degree (normal strategy) and pruned
//! with the Gebauer–Möller installation of Buchberger's chain criterion. The
//! product criterion only applies to ideals (rank one), where it is valid.

use crate::ring::{CoefficientField, Monomial};

use super::vector::{make_monic, sub_scaled, Term, TermOrder, Vector};

#[derive(Clone, Copy)]
pub(crate) struct Engine {
    pub field: CoefficientField,
    pub order: TermOrder,
    /// Enables the product criterion.
    pub ideal: bool,
}

struct Lead {
    mon: Monomial,
    comp: usize,
    mask: u64,
}

impl Lead {
    fn of(v: &Vector) -> Lead {
        let t = &v[0];
        Lead { mon: t.mon.clone(), comp: t.comp, mask: t.mon.support_mask() }
    }

    #[inline]
    fn divides(&self, t: &Term, mask: u64) -> bool {
        self.comp == t.comp && self.mask & !mask == 0 && self.mon.divides(&t.mon)
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    deg: u32,
}

impl Engine {
    /// Fully reduces `v` modulo `basis`: no term of the result is divisible
    /// by a leading term of `basis`. Divisors are tried in basis order.
    pub fn reduce(&self, v: Vector, basis: &[Vector]) -> Vector {
        let leads: Vec<Lead> = basis.iter().map(Lead::of).collect();
        self.reduce_with_leads(v, basis, &leads)
    }

    fn reduce_with_leads(&self, mut p: Vector, basis: &[Vector], leads: &[Lead]) -> Vector {
        let mut out = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let t = &p[start];
            let mask = t.mon.support_mask();
            let hit = leads.iter().position(|l| l.divides(t, mask));
            match hit {
                Some(k) => {
                    let g = &basis[k];
                    let q = t.mon.checked_div(&g[0].mon).expect("divisible");
                    let c = self.field.div(&t.coeff, &g[0].coeff);
                    p = sub_scaled(self.field, &self.order, &p[start..], &c, &q, g);
                    start = 0;
                }
                None => {
                    out.push(p[start].clone());
                    start += 1;
                }
            }
        }
        out
    }

    fn spoly(&self, f: &Vector, g: &Vector, lcm: &Monomial) -> Vector {
        let qf = lcm.checked_div(&f[0].mon).expect("lcm");
        let qg = lcm.checked_div(&g[0].mon).expect("lcm");
        let cf = self.field.inv(&f[0].coeff);
        let cg = self.field.inv(&g[0].coeff);
        let mut a: Vector = f
            .iter()
            .map(|t| Term { mon: t.mon.mul(&qf), comp: t.comp, coeff: self.field.mul(&t.coeff, &cf) })
            .collect();
        a = sub_scaled(self.field, &self.order, &a, &cg, &qg, g);
        a
    }

    /// Reduced Gröbner basis of the span of `gens`, sorted by increasing
    /// leading term.
    pub fn groebner(&self, gens: Vec<Vector>) -> Vec<Vector> {
        let mut basis: Vec<Vector> = Vec::new();
        let mut leads: Vec<Lead> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        for g in gens {
            let mut h = self.reduce_with_leads(g, &basis, &leads);
            if h.is_empty() {
                continue;
            }
            make_monic(self.field, &mut h);
            self.install(h, &mut basis, &mut leads, &mut active, &mut pairs);
        }

        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (p, q) = (&pairs[a], &pairs[b]);
                    p.deg
                        .cmp(&q.deg)
                        .then_with(|| self.order.cmp(&p.lcm, p.comp, &q.lcm, q.comp))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                })
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            let s = self.spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
            let mut h = self.reduce_with_leads(s, &basis, &leads);
            if h.is_empty() {
                continue;
            }
            make_monic(self.field, &mut h);
            self.install(h, &mut basis, &mut leads, &mut active, &mut pairs);
        }

        let minimal: Vec<Vector> =
            basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(v, _)| v).collect();
        let mut reduced: Vec<Vector> = (0..minimal.len())
            .map(|k| {
                let others: Vec<Vector> =
                    minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| v.clone()).collect();
                let mut v = self.reduce(minimal[k].clone(), &others);
                make_monic(self.field, &mut v);
                v
            })
            .collect();
        reduced.sort_by(|a, b| self.order.cmp_terms(&a[0], &b[0]));
        reduced
    }

    /// Gebauer–Möller update for a new element `h`.
    fn install(
        &self,
        h: Vector,
        basis: &mut Vec<Vector>,
        leads: &mut Vec<Lead>,
        active: &mut Vec<bool>,
        pairs: &mut Vec<Pair>,
    ) {
        let lh = Lead::of(&h);
        let t = basis.len();

        let cands: Vec<(usize, Monomial)> = (0..t)
            .filter(|&g| active[g] && leads[g].comp == lh.comp)
            .map(|g| (g, lh.mon.lcm(&leads[g].mon)))
            .collect();
        let coprime = |g: usize| self.ideal && lh.mon.is_coprime(&leads[g].mon);

        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for k in 0..cands.len() {
            let (g1, ref l1) = cands[k];
            let dominated = cands[k + 1..].iter().chain(kept.iter()).any(|(_, l2)| l2.divides(l1));
            if coprime(g1) || !dominated {
                kept.push(cands[k].clone());
            }
        }
        kept.retain(|(g, _)| !coprime(*g));

        pairs.retain(|p| {
            if p.comp != lh.comp || !lh.mon.divides(&p.lcm) {
                return true;
            }
            let li = lh.mon.lcm(&leads[p.i].mon);
            let lj = lh.mon.lcm(&leads[p.j].mon);
            li == p.lcm || lj == p.lcm
        });
        for (g, lcm) in kept {
            let deg = lcm.degree();
            pairs.push(Pair { i: g, j: t, lcm, comp: lh.comp, deg });
        }

        for g in 0..t {
            if active[g] && leads[g].comp == lh.comp && lh.mon.divides(&leads[g].mon) {
                active[g] = false;
            }
        }
        basis.push(h);
        leads.push(lh);
        active.push(true);
    }

    /// Checks that every S-vector of same-component pairs reduces to zero.
    pub fn is_groebner(&self, basis: &[Vector]) -> bool {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if basis[i][0].comp != basis[j][0].comp {
                    continue;
                }
                let lcm = basis[i][0].mon.lcm(&basis[j][0].mon);
                let s = self.spoly(&basis[i], &basis[j], &lcm);
                if !self.reduce(s, basis).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
