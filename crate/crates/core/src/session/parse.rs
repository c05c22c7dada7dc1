use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::harness::CampaignConfig;
use crate::ring::parse::parse_expr;
use crate::ring::{CoefficientField, Polynomial, Ring};
use crate::syntax::{tokenize, Tok, Token};

use super::{Command, ModuleDef, OracleSpec, RingDecl, Session, Statement, VerifyKind};

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    ring: Option<Arc<Ring>>,
    names: HashSet<String>,
    homogeneous: std::collections::HashMap<String, bool>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        match self.peek().or(self.toks.last()) {
            Some(t) => (t.line, t.column),
            None => (1, 1),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        Error::Syntax { line, column, message: message.into() }
    }

    fn found(&self) -> String {
        self.peek().map_or_else(|| "end of input".to_string(), Token::describe)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek().is_some_and(|t| t.is_sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`, found {}", self.found())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize)> {
        match self.peek() {
            Some(Token { tok: Tok::Ident(s), line, column }) => {
                let out = (s.clone(), *line, *column);
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.error(format!("expected {what}, found {}", self.found()))),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64> {
        match self.peek() {
            Some(Token { tok: Tok::Int(s), .. }) => {
                let v = s.parse().map_err(|_| self.error(format!("{what} is too large")))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error(format!("expected {what}, found {}", self.found()))),
        }
    }

    fn ring(&self) -> Result<Arc<Ring>> {
        self.ring.clone().ok_or_else(|| {
            let (line, column) = self.here();
            Error::UnboundRing { line, column }
        })
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let ring = self.ring()?;
        parse_expr(&ring, &self.toks, &mut self.pos)
    }

    /// `open [p (, p)*] close`
    fn poly_list(&mut self, open: char, close: char) -> Result<Vec<Polynomial>> {
        self.expect_sym(open)?;
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(self.poly()?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            self.expect_sym(',')?;
        }
    }

    fn field(&mut self) -> Result<CoefficientField> {
        let (name, ..) = self.ident("a field (Q or GF(p))")?;
        match name.as_str() {
            "Q" => Ok(CoefficientField::Rationals),
            "GF" => {
                self.expect_sym('(')?;
                let p = self.int("a prime")?;
                let f = CoefficientField::prime(p).map_err(|e| self.error(e.to_string()))?;
                self.expect_sym(')')?;
                Ok(f)
            }
            _ => {
                self.pos -= 1;
                Err(self.error(format!("unknown field `{name}`; expected Q or GF(p)")))
            }
        }
    }

    fn ring_decl(&mut self, line: usize, column: usize) -> Result<Statement> {
        if self.ring.is_some() {
            return Err(Error::DuplicateRing { line, column });
        }
        let field = self.field()?;
        self.expect_sym('[')?;
        let mut vars = Vec::new();
        if !self.eat_sym(']') {
            loop {
                vars.push(self.ident("a variable name")?.0);
                if self.eat_sym(']') {
                    break;
                }
                self.expect_sym(',')?;
            }
        }
        let local = self.peek().is_some_and(|t| t.is_ident("local"));
        if local {
            self.pos += 1;
        }
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        let ring = Ring::new(&names, field).map_err(|e| Error::Syntax { line, column, message: e.to_string() })?;
        self.ring = Some(ring.clone());
        Ok(Statement::Ring(RingDecl { ring, local }))
    }

    fn module_def(&mut self) -> Result<ModuleDef> {
        let (kind, ..) = self.ident("`quot` or `coker`")?;
        match kind.as_str() {
            "quot" => Ok(ModuleDef::Quot(self.poly_list('(', ')')?)),
            "coker" => {
                self.expect_sym('[')?;
                let mut rows = Vec::new();
                if !self.eat_sym(']') {
                    loop {
                        rows.push(self.poly_list('[', ']')?);
                        if self.eat_sym(']') {
                            break;
                        }
                        if !self.eat_sym(';') {
                            self.expect_sym(',')?;
                        }
                    }
                }
                let cols = rows.first().map_or(0, Vec::len);
                if rows.iter().any(|r| r.len() != cols) {
                    return Err(self.error("coker rows must all have the same length"));
                }
                Ok(ModuleDef::Coker { rows, cols })
            }
            _ => {
                self.pos -= 1;
                Err(self.error(format!("expected `quot` or `coker`, found `{kind}`")))
            }
        }
    }

    /// A bound module name; `command` set means the command needs homogeneity.
    fn name(&mut self, command: Option<&str>) -> Result<String> {
        let (name, line, column) = self.ident("a module name")?;
        if !self.names.contains(&name) {
            return Err(Error::UnboundName { line, column, name });
        }
        if let Some(command) = command {
            if !self.homogeneous[&name] {
                return Err(Error::Inhomogeneous { line, column, command: command.into(), name });
            }
        }
        Ok(name)
    }

    fn oracle(&mut self) -> Result<OracleSpec> {
        let (kind, ..) = self.ident("an oracle")?;
        match kind.as_str() {
            "identity" => Ok(OracleSpec::Identity),
            "completion" => Ok(OracleSpec::Completion),
            "henselization" => Ok(OracleSpec::Henselization),
            "primes" => {
                self.expect_sym('{')?;
                let mut list = Vec::new();
                if !self.eat_sym('}') {
                    loop {
                        list.push(self.poly_list('(', ')')?);
                        if self.eat_sym('}') {
                            break;
                        }
                        self.expect_sym(';')?;
                    }
                }
                Ok(OracleSpec::Primes(list))
            }
            _ => {
                self.pos -= 1;
                Err(self.error(format!("unknown oracle `{kind}`")))
            }
        }
    }

    fn verify_value(&mut self) -> Result<String> {
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                Ok(s)
            }
            Some(Tok::Ident(s)) if s == "GF" => {
                self.pos += 1;
                self.expect_sym('(')?;
                let p = self.int("a prime")?;
                self.expect_sym(')')?;
                Ok(format!("GF({p})"))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected a value, found {}", self.found()))),
        }
    }

    fn command(&mut self, word: &str) -> Result<Command> {
        Ok(match word {
            "ext" | "tor" => {
                let m = self.name(None)?;
                let n = self.name(None)?;
                let degree = match self.peek() {
                    Some(Token { tok: Tok::Int(_), .. }) => {
                        Some(u32::try_from(self.int("a degree")?).map_err(|_| self.error("degree too large"))?)
                    }
                    _ => None,
                };
                if word == "ext" {
                    Command::Ext { m, n, degree }
                } else {
                    Command::Tor { m, n, degree }
                }
            }
            "depth" => Command::Depth(self.name(Some("depth"))?),
            "dim" => Command::Dim(self.name(Some("dim"))?),
            "resolve" => Command::Resolve(self.name(None)?),
            "ann" => Command::Ann(self.name(None)?),
            "minprimes" => Command::MinPrimes(self.name(Some("minprimes"))?),
            "ascent" => {
                let oracle = self.oracle()?;
                let m = self.name(Some("ascent"))?;
                let n = self.name(Some("ascent"))?;
                Command::Ascent { oracle, m, n }
            }
            "fact" => {
                let oracle = self.oracle()?;
                Command::Fact { oracle, n: self.name(Some("fact"))? }
            }
            "verify" => {
                let (k, ..) = self.ident("lemma1, lemma2, theorem or oracles")?;
                let kind = match k.as_str() {
                    "lemma1" => VerifyKind::Lemma1,
                    "lemma2" => VerifyKind::Lemma2,
                    "theorem" => VerifyKind::Theorem,
                    "oracles" => VerifyKind::Oracles,
                    _ => {
                        self.pos -= 1;
                        return Err(self.error(format!("unknown verification `{k}`")));
                    }
                };
                let mut args = Vec::new();
                let mut probe = CampaignConfig::default();
                while !self.peek().is_some_and(|t| t.is_sym(';')) && self.peek().is_some() {
                    let (key, line, column) = self.ident("a key=value argument")?;
                    self.expect_sym('=')?;
                    let value = self.verify_value()?;
                    probe.set(&key, &value).map_err(|e| Error::Syntax { line, column, message: e.to_string() })?;
                    args.push((key, value));
                }
                Command::Verify { kind, args }
            }
            _ => unreachable!("dispatch covers every command word"),
        })
    }

    fn statement(&mut self) -> Result<Statement> {
        let (word, line, column) = self.ident("a statement")?;
        let stmt = match word.as_str() {
            "ring" => self.ring_decl(line, column)?,
            "module" => {
                if self.ring.is_none() {
                    return Err(Error::UnboundRing { line, column });
                }
                let (name, ..) = self.ident("a module name")?;
                self.expect_sym('=')?;
                let def = self.module_def()?;
                let ring = self.ring()?;
                self.homogeneous.insert(name.clone(), def.presentation(&ring).is_homogeneous());
                self.names.insert(name.clone());
                Statement::Module { name, def }
            }
            "ext" | "tor" | "depth" | "dim" | "resolve" | "ann" | "minprimes" | "ascent" | "fact" | "verify" => {
                if self.ring.is_none() && word != "verify" {
                    return Err(Error::UnboundRing { line, column });
                }
                Statement::Command(self.command(&word)?)
            }
            _ => {
                return Err(Error::Syntax { line, column, message: format!("unknown statement `{word}`") });
            }
        };
        self.expect_sym(';')?;
        Ok(stmt)
    }
}

/// Parses a session, reporting the first error with its location.
pub fn parse_session(text: &str) -> Result<Session> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring: None, names: HashSet::new(), homogeneous: Default::default() };
    let mut statements = Vec::new();
    while p.peek().is_some() {
        statements.push(p.statement()?);
    }
    Ok(Session { statements })
}
