use std::cmp::Ordering;

use serde::Serialize;
use smallvec::SmallVec;

/// Exponent vector over the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    pub fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1 << i))
    }

    /// Appends `extra` zero exponents.
    pub(crate) fn extend(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0, extra));
        Monomial(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrderKind {
    GrevLex,
    Lex,
}

/// How a monomial order is extended to terms of a free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ModuleExtension {
    TermOverPosition,
    PositionOverTerm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub extension: ModuleExtension,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, extension: ModuleExtension::TermOverPosition }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, extension: ModuleExtension::TermOverPosition }
    }

    pub fn with_extension(self, extension: ModuleExtension) -> Self {
        MonomialOrder { extension, ..self }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.kind.cmp(a, b)
    }

    /// Compares module terms `a·e_i` and `b·e_j`; lower component index is larger.
    pub fn cmp_terms(&self, a: &Monomial, i: usize, b: &Monomial, j: usize) -> Ordering {
        match self.extension {
            ModuleExtension::TermOverPosition => self.kind.cmp(a, b).then_with(|| j.cmp(&i)),
            ModuleExtension::PositionOverTerm => j.cmp(&i).then_with(|| self.kind.cmp(a, b)),
        }
    }
}

impl OrderKind {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderKind::Lex => a.0.cmp(&b.0),
            OrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_ties_break_on_last_variable() {
        let o = OrderKind::GrevLex;
        // x^2 y > x y^2
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        // x y > z^2 in three variables
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Less);
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(OrderKind::Lex.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn module_extensions() {
        let top = MonomialOrder::grevlex();
        let pot = top.with_extension(ModuleExtension::PositionOverTerm);
        let (a, b) = (m(&[2, 0]), m(&[1, 0]));
        assert_eq!(top.cmp_terms(&a, 1, &b, 0), Ordering::Greater);
        assert_eq!(pot.cmp_terms(&a, 1, &b, 0), Ordering::Less);
    }

    #[test]
    fn divisibility() {
        let a = m(&[1, 2]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert_eq!(b.checked_div(&a), Some(m(&[1, 1])));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.lcm(&m(&[3, 0])), m(&[3, 2]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
    }
}
