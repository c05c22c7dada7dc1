//! Coefficient fields, monomials, monomial orders and polynomial arithmetic.

mod field;
mod monomial;
pub(crate) mod parse;
mod polynomial;

use std::fmt;
use std::sync::Arc;

pub use field::{Coeff, CoefficientField, DEFAULT_PRIME};
pub use monomial::{ModuleExtension, Monomial, MonomialOrder, OrderKind};
pub use polynomial::{poly_arith, ArithOp, Polynomial};

use crate::error::{Error, Result};

/// Variables, coefficient field and the monomial order used to store terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: CoefficientField,
    order: OrderKind,
}

pub const MAX_VARS: usize = 63;

impl Ring {
    pub fn new(vars: &[&str], field: CoefficientField) -> Result<Arc<Ring>> {
        Self::with_order(vars.iter().map(|s| s.to_string()).collect(), field, OrderKind::GrevLex)
    }

    pub fn with_order(vars: Vec<String>, field: CoefficientField, order: OrderKind) -> Result<Arc<Ring>> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::domain("ring", format!("need between 1 and {MAX_VARS} variables")));
        }
        for (i, v) in vars.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::domain("ring", format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::domain("ring", format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    /// Shorthand for GF(32003) on the given variables.
    pub fn default_prime(vars: &[&str]) -> Arc<Ring> {
        Self::new(vars, CoefficientField::Prime(DEFAULT_PRIME)).expect("valid variables")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same ring with terms stored under a different order.
    pub fn reordered(&self, order: OrderKind) -> Arc<Ring> {
        Arc::new(Ring { order, ..self.clone() })
    }

    /// The ring with one extra variable appended, named so it does not clash.
    pub(crate) fn with_extra_variable(&self) -> Arc<Ring> {
        let mut name = String::from("t");
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = self.vars.clone();
        vars.push(name);
        Arc::new(Ring { vars, ..self.clone() })
    }

    pub fn variables(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::var(self, i)).collect()
    }

    /// Reads a polynomial such as `3*x^2*y - 1/2*y^3`.
    pub fn parse_poly(self: &Arc<Self>, src: &str) -> Result<Polynomial> {
        let toks = crate::syntax::tokenize(src)?;
        let mut pos = 0;
        let p = parse::parse_expr(self, &toks, &mut pos)?;
        if let Some(t) = toks.get(pos) {
            return Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: format!("unexpected {} after polynomial", t.describe()),
            });
        }
        Ok(p)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}
