//! Free resolutions by iterated syzygies, minimalization by splitting off
//! unit entries, and projective dimension.

use std::sync::Arc;

use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::groebner::{preimage, top};
use crate::matrix::Matrix;
use crate::presentation::ModulePresentation;
use crate::ring::Ring;

/// A free resolution `F_• → M`, with `F_0` free on the generators of the
/// stored presentation (up to minimalization of degree 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    complex: ChainComplex,
    module: ModulePresentation,
    minimal: bool,
    complete: bool,
}

/// Differentials `d_1..d_n` together with the ranks `F_0..F_n`.
struct Stack {
    ring: Arc<Ring>,
    ranks: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl Stack {
    fn start(m: &ModulePresentation) -> Stack {
        let rel = m.relations();
        let nonzero: Vec<usize> = (0..rel.cols()).filter(|&j| rel.column(j).iter().any(|e| !e.is_zero())).collect();
        let d1 = rel.select_columns(&nonzero);
        let mut s = Stack { ring: m.ring().clone(), ranks: vec![m.num_generators()], diffs: Vec::new() };
        if d1.cols() > 0 {
            s.ranks.push(d1.cols());
            s.diffs.push(d1);
        }
        s
    }

    /// Appends the syzygies of the last differential; false when they vanish.
    fn extend(&mut self) -> bool {
        let Some(last) = self.diffs.last() else { return false };
        let ord = top(&self.ring);
        let syz = preimage(&self.ring, last.rows(), &last.column_vectors(&ord), &[]);
        if syz.is_empty() {
            return false;
        }
        let d = Matrix::from_vectors(&self.ring, last.cols(), &syz);
        self.ranks.push(d.cols());
        self.diffs.push(d);
        true
    }

    /// `d_i` for `i ≥ 1`.
    fn d(&mut self, i: usize) -> Option<&mut Matrix> {
        self.diffs.get_mut(i.checked_sub(1)?)
    }

    /// Removes the split summand `R --u--> R` sitting at entry `(r, c)` of `d_i`.
    fn split(&mut self, i: usize, r: usize, c: usize) {
        let field = self.ring.field();
        let d = &self.diffs[i - 1];
        let uinv = field.inv(&d.get(r, c).constant_term());
        for r2 in 0..d.rows() {
            let a = self.diffs[i - 1].get(r2, c).clone();
            if r2 == r || a.is_zero() {
                continue;
            }
            let coef = a.scale(&uinv);
            self.diffs[i - 1].row_axpy(r2, &coef, r);
            if let Some(below) = self.d(i - 1) {
                below.col_axpy(r, &-&coef, r2);
            }
        }
        for c2 in 0..self.diffs[i - 1].cols() {
            let b = self.diffs[i - 1].get(r, c2).clone();
            if c2 == c || b.is_zero() {
                continue;
            }
            let coef = b.scale(&uinv);
            self.diffs[i - 1].col_axpy(c2, &coef, c);
            if let Some(above) = self.d(i + 1) {
                above.row_axpy(c, &-&coef, c2);
            }
        }
        let d = &mut self.diffs[i - 1];
        *d = d.remove_row(r).remove_column(c);
        if let Some(below) = self.d(i - 1) {
            *below = below.remove_column(r);
        }
        if let Some(above) = self.d(i + 1) {
            *above = above.remove_row(c);
        }
        self.ranks[i - 1] -= 1;
        self.ranks[i] -= 1;
    }

    fn split_all_from(&mut self, lo: usize) {
        let mut i = lo.max(1);
        while i <= self.diffs.len() {
            if let Some((r, c)) = self.diffs[i - 1].find_unit() {
                self.split(i, r, c);
                // a split can create units one step down
                i = (i - 1).max(lo.max(1));
                continue;
            }
            i += 1;
        }
        while self.ranks.len() > 1 && *self.ranks.last().unwrap() == 0 {
            self.ranks.pop();
            self.diffs.pop();
        }
    }

    fn into_complex(self) -> ChainComplex {
        let ranks: Vec<(i64, usize)> = self.ranks.iter().enumerate().map(|(i, &r)| (i as i64, r)).collect();
        let diffs = self.diffs.into_iter().enumerate().map(|(i, d)| (i as i64 + 1, d)).collect();
        ChainComplex::free(&self.ring, &ranks, diffs).expect("resolution differentials compose to zero")
    }
}

fn is_minimal(c: &ChainComplex) -> bool {
    c.degrees()
        .into_iter()
        .all(|i| c.differential(i).entries().all(|e| e.constant_term() == e.ring().field().zero()))
}

impl Resolution {
    /// Wraps a hand-built complex of free modules as a resolution of `module`.
    /// The complex must live in degrees `≥ 0` and have `coker d_1 = module`.
    pub fn from_complex(complex: ChainComplex, module: &ModulePresentation) -> Result<Self> {
        if !complex.is_free() || complex.degrees().first().is_some_and(|&i| i < 0) {
            return Err(Error::domain("resolutions", "a resolution is a complex of free modules in degrees ≥ 0"));
        }
        if complex.rank(0) != module.num_generators() {
            return Err(Error::domain("resolutions", "rank of F_0 differs from the number of generators"));
        }
        let minimal = is_minimal(&complex);
        Ok(Resolution { complex, module: module.clone(), minimal, complete: true })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// False when the length cap was reached before the syzygies vanished.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Largest degree with a nonzero free module; 0 for the zero module.
    pub fn length(&self) -> usize {
        self.complex.degrees().last().map_or(0, |&i| i as usize)
    }

    /// Ranks of `F_0, …, F_length`.
    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.length() as i64).map(|i| self.complex.rank(i)).collect()
    }

    pub fn differential(&self, i: i64) -> Matrix {
        self.complex.differential(i)
    }

    /// `H_i = 0` for `i ≥ 1` and `coker d_1` presents the same module.
    pub fn is_exact(&self) -> bool {
        (1..=self.length() as i64).all(|i| self.complex.homology_vanishes(i)) && self.augments_to_module()
    }

    fn augments_to_module(&self) -> bool {
        let h0 = ModulePresentation::new(self.differential(1));
        h0.num_generators() == self.module.num_generators() && h0.relation_basis() == self.module.relation_basis()
    }
}

/// Iterated syzygies of the given presentation, up to `max_length`
/// (default: the number of variables).
pub fn free_resolution(m: &ModulePresentation, max_length: Option<usize>) -> Resolution {
    let cap = max_length.unwrap_or_else(|| m.ring().nvars());
    let mut s = Stack::start(m);
    let mut complete = true;
    if s.diffs.len() > cap {
        s.diffs.truncate(cap);
        s.ranks.truncate(cap + 1);
        complete = false;
    } else {
        loop {
            if s.diffs.len() >= cap {
                let mut probe = Stack { ring: s.ring.clone(), ranks: s.ranks.clone(), diffs: s.diffs.clone() };
                complete = !probe.extend();
                break;
            }
            if !s.extend() {
                break;
            }
        }
    }
    let complex = s.into_complex();
    let minimal = is_minimal(&complex);
    Resolution { complex, module: m.clone(), minimal, complete }
}

/// Repeatedly splits off summands `R --unit--> R` until no differential has
/// an entry with nonzero constant term left to split.
pub fn minimalize(res: &Resolution) -> Resolution {
    let c = &res.complex;
    let len = res.length();
    let mut s = Stack {
        ring: c.ring().clone(),
        ranks: (0..=len as i64).map(|i| c.rank(i)).collect(),
        diffs: (1..=len as i64).map(|i| c.differential(i)).collect(),
    };
    s.split_all_from(1);
    let complex = s.into_complex();
    let minimal = is_minimal(&complex);
    // splitting inside d_1 changes generators of M, not M itself
    let module = if complex.rank(0) == res.module.num_generators() {
        res.module.clone()
    } else {
        ModulePresentation::new(complex.differential(1))
    };
    Resolution { complex, module, minimal, complete: res.complete }
}

/// A minimal resolution of `M`, built one syzygy step at a time with
/// minimalization after each step so generators stay minimal.
pub fn minimal_resolution(m: &ModulePresentation) -> Resolution {
    let pruned = m.prune();
    let mut s = Stack::start(&pruned);
    s.split_all_from(1);
    let cap = m.ring().nvars() + 1;
    let mut complete = true;
    loop {
        if !s.extend() {
            break;
        }
        let n = s.diffs.len();
        s.split_all_from(n - 1);
        if s.diffs.len() > cap {
            complete = false;
            break;
        }
    }
    let complex = s.into_complex();
    let minimal = is_minimal(&complex);
    Resolution { complex, module: pruned, minimal, complete }
}

/// Length of the minimal free resolution.
pub fn projective_dimension(m: &ModulePresentation) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::domain("resolutions", "projective dimension of the zero module"));
    }
    let res = minimal_resolution(m);
    if !res.complete {
        return Err(Error::unsupported(
            "resolutions",
            "syzygies did not terminate within the variable bound; input is likely inhomogeneous",
        ));
    }
    Ok(res.length())
}

#[cfg(test)]
mod tests;
