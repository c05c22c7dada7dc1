use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::syntax::{Tok, Token};

use super::{Polynomial, Ring};

fn err_at(toks: &[Token], pos: usize, message: impl Into<String>) -> Error {
    let (line, column) = match toks.get(pos).or(toks.last()) {
        Some(t) => (t.line, t.column),
        None => (1, 1),
    };
    Error::Syntax { line, column, message: message.into() }
}

/// `expr := [+|-] term ((+|-) term)*`
pub(crate) fn parse_expr(ring: &Arc<Ring>, toks: &[Token], pos: &mut usize) -> Result<Polynomial> {
    let mut negate = false;
    if let Some(t) = toks.get(*pos) {
        if t.is_sym('-') || t.is_sym('+') {
            negate = t.is_sym('-');
            *pos += 1;
        }
    }
    let first = parse_term(ring, toks, pos)?;
    let mut acc = if negate { -&first } else { first };
    while let Some(t) = toks.get(*pos) {
        if t.is_sym('+') {
            *pos += 1;
            acc = &acc + &parse_term(ring, toks, pos)?;
        } else if t.is_sym('-') {
            *pos += 1;
            acc = &acc - &parse_term(ring, toks, pos)?;
        } else {
            break;
        }
    }
    Ok(acc)
}

fn parse_term(ring: &Arc<Ring>, toks: &[Token], pos: &mut usize) -> Result<Polynomial> {
    let mut acc = parse_power(ring, toks, pos)?;
    while let Some(t) = toks.get(*pos) {
        if t.is_sym('*') {
            *pos += 1;
            acc = &acc * &parse_power(ring, toks, pos)?;
        } else if t.is_sym('/') {
            *pos += 1;
            let at = *pos;
            let d = parse_power(ring, toks, pos)?;
            if !d.is_constant() || d.is_zero() {
                return Err(err_at(toks, at, "division is only allowed by nonzero constants"));
            }
            let field = ring.field();
            acc = acc.scale(&field.inv(&d.constant_term()));
        } else {
            break;
        }
    }
    Ok(acc)
}

fn parse_power(ring: &Arc<Ring>, toks: &[Token], pos: &mut usize) -> Result<Polynomial> {
    let base = parse_atom(ring, toks, pos)?;
    if toks.get(*pos).is_some_and(|t| t.is_sym('^')) {
        *pos += 1;
        match toks.get(*pos) {
            Some(Token { tok: Tok::Int(s), .. }) => {
                let e: u32 = s.parse().map_err(|_| err_at(toks, *pos, "exponent too large"))?;
                *pos += 1;
                return Ok(base.pow(e));
            }
            _ => return Err(err_at(toks, *pos, "expected an integer exponent")),
        }
    }
    Ok(base)
}

fn parse_atom(ring: &Arc<Ring>, toks: &[Token], pos: &mut usize) -> Result<Polynomial> {
    let Some(t) = toks.get(*pos) else {
        return Err(err_at(toks, *pos, "unexpected end of input in polynomial"));
    };
    match &t.tok {
        Tok::Int(s) => {
            let n: BigInt = s.parse().expect("digits");
            *pos += 1;
            let c = ring.field().from_bigint(&n);
            Ok(Polynomial::constant(ring, c))
        }
        Tok::Ident(name) => match ring.var_index(name) {
            Some(i) => {
                *pos += 1;
                Ok(Polynomial::var(ring, i))
            }
            None => Err(err_at(toks, *pos, format!("unknown variable `{name}`"))),
        },
        Tok::Sym('(') => {
            *pos += 1;
            let p = parse_expr(ring, toks, pos)?;
            if !toks.get(*pos).is_some_and(|t| t.is_sym(')')) {
                return Err(err_at(toks, *pos, "expected `)`"));
            }
            *pos += 1;
            Ok(p)
        }
        _ => Err(err_at(toks, *pos, format!("unexpected {} in polynomial", t.describe()))),
    }
}
