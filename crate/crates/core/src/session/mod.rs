//! The session language: a ring declaration, named modules and commands.
//!
//! ```text
//! ring GF(32003)[x,y];
//! module M = quot (x);
//! module N = coker [[y, 0], [0, y]];
//! ascent completion M N;
//! ```

mod exec;
mod parse;

use std::fmt;
use std::sync::Arc;

use crate::ascent::AscentOracle;
use crate::error::Result;
use crate::invariants::PrimeIdeal;
use crate::presentation::ModulePresentation;
use crate::ring::{CoefficientField, Polynomial, Ring};

pub use exec::{error_report, execute, ErrorInfo, ExecOptions, Format, Report, Status};
pub use parse::parse_session;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub ring: Arc<Ring>,
    pub local: bool,
}

/// How a module was written down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleDef {
    /// `quot (f1, …, fk)`: the cyclic module `R/(f1, …, fk)`.
    Quot(Vec<Polynomial>),
    /// `coker [row; …]` with one row per generator.
    Coker { rows: Vec<Vec<Polynomial>>, cols: usize },
}

impl ModuleDef {
    pub fn presentation(&self, ring: &Arc<Ring>) -> ModulePresentation {
        match self {
            ModuleDef::Quot(gens) => ModulePresentation::cyclic(ring, gens.clone()).expect("parsed over ring"),
            ModuleDef::Coker { rows, cols } => ModulePresentation::new(
                crate::matrix::Matrix::from_rows(ring, *cols, rows.clone()).expect("rectangular rows"),
            ),
        }
    }

    /// Source text for a presentation: `quot` when cyclic, `coker` otherwise.
    pub fn from_presentation(m: &ModulePresentation) -> ModuleDef {
        let rel = m.relations();
        if rel.rows() == 1 {
            return ModuleDef::Quot(rel.row(0));
        }
        ModuleDef::Coker { rows: (0..rel.rows()).map(|i| rel.row(i)).collect(), cols: rel.cols() }
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for ModuleDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleDef::Quot(gens) => write!(f, "quot ({})", join(gens, ", ")),
            ModuleDef::Coker { rows, .. } => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", join(r, ", "))).collect();
                write!(f, "coker [{}]", rows.join("; "))
            }
        }
    }
}

/// Oracle as written in a session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleSpec {
    Identity,
    Completion,
    Henselization,
    Primes(Vec<Vec<Polynomial>>),
}

impl OracleSpec {
    pub fn build(&self, ring: &Arc<Ring>) -> Result<AscentOracle> {
        Ok(match self {
            OracleSpec::Identity => AscentOracle::Identity,
            OracleSpec::Completion => AscentOracle::CompletionOfLocalizedPolynomialRing,
            OracleSpec::Henselization => AscentOracle::Henselization,
            OracleSpec::Primes(list) => {
                let primes =
                    list.iter().map(|g| PrimeIdeal::from_generators(ring, g.clone())).collect::<Result<Vec<_>>>()?;
                AscentOracle::explicit(ring, primes)?
            }
        })
    }
}

impl fmt::Display for OracleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleSpec::Identity => write!(f, "identity"),
            OracleSpec::Completion => write!(f, "completion"),
            OracleSpec::Henselization => write!(f, "henselization"),
            OracleSpec::Primes(list) => {
                let parts: Vec<String> = list.iter().map(|g| format!("({})", join(g, ", "))).collect();
                write!(f, "primes{{{}}}", parts.join(";"))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyKind {
    Lemma1,
    Lemma2,
    Theorem,
    Oracles,
}

impl fmt::Display for VerifyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyKind::Lemma1 => "lemma1",
            VerifyKind::Lemma2 => "lemma2",
            VerifyKind::Theorem => "theorem",
            VerifyKind::Oracles => "oracles",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Ext { m: String, n: String, degree: Option<u32> },
    Tor { m: String, n: String, degree: Option<u32> },
    Depth(String),
    Dim(String),
    Resolve(String),
    Ann(String),
    MinPrimes(String),
    Ascent { oracle: OracleSpec, m: String, n: String },
    Fact { oracle: OracleSpec, n: String },
    Verify { kind: VerifyKind, args: Vec<(String, String)> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ext { .. } => "ext",
            Command::Tor { .. } => "tor",
            Command::Depth(_) => "depth",
            Command::Dim(_) => "dim",
            Command::Resolve(_) => "resolve",
            Command::Ann(_) => "ann",
            Command::MinPrimes(_) => "minprimes",
            Command::Ascent { .. } => "ascent",
            Command::Fact { .. } => "fact",
            Command::Verify { .. } => "verify",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Ext { m, n, degree } | Command::Tor { m, n, degree } => {
                write!(f, "{} {m} {n}", self.name())?;
                if let Some(i) = degree {
                    write!(f, " {i}")?;
                }
                Ok(())
            }
            Command::Depth(m) | Command::Dim(m) | Command::Resolve(m) | Command::Ann(m) | Command::MinPrimes(m) => {
                write!(f, "{} {m}", self.name())
            }
            Command::Ascent { oracle, m, n } => write!(f, "ascent {oracle} {m} {n}"),
            Command::Fact { oracle, n } => write!(f, "fact {oracle} {n}"),
            Command::Verify { kind, args } => {
                write!(f, "verify {kind}")?;
                for (k, v) in args {
                    write!(f, " {k}={v}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Ring(RingDecl),
    Module { name: String, def: ModuleDef },
    Command(Command),
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Ring(r) => {
                write!(f, "ring {}[{}]", r.ring.field(), r.ring.vars().join(","))?;
                if r.local {
                    write!(f, " local")?;
                }
                write!(f, ";")
            }
            Statement::Module { name, def } => write!(f, "module {name} = {def};"),
            Statement::Command(c) => write!(f, "{c};"),
        }
    }
}

/// A parsed session. Statements keep their source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    statements: Vec<Statement>,
}

impl Session {
    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    pub fn ring(&self) -> Option<&RingDecl> {
        self.statements.iter().find_map(|s| match s {
            Statement::Ring(r) => Some(r),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Command(c) => Some(c),
            _ => None,
        })
    }

    /// The latest binding of `name`.
    pub fn module(&self, name: &str) -> Option<&ModuleDef> {
        self.statements.iter().rev().find_map(|s| match s {
            Statement::Module { name: n, def } if n == name => Some(def),
            _ => None,
        })
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A self-contained session declaring `ring`, binding modules and running
/// `commands`, used for reproducers.
pub fn reproducer(ring: &Arc<Ring>, modules: &[(&str, &ModulePresentation)], commands: &[String]) -> String {
    let mut out = Statement::Ring(RingDecl { ring: ring.clone(), local: false }).to_string();
    out.push('\n');
    for (name, m) in modules {
        out.push_str(&format!("module {name} = {};\n", ModuleDef::from_presentation(m)));
    }
    for c in commands {
        out.push_str(&format!("{c};\n"));
    }
    out
}

/// Field syntax: `Q` or `GF(p)`.
pub fn parse_field(s: &str) -> Result<CoefficientField> {
    let s = s.trim();
    if s == "Q" {
        return Ok(CoefficientField::Rationals);
    }
    let p = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|d| d.trim().parse::<u64>().ok())
        .ok_or_else(|| crate::Error::Config(format!("unknown field `{s}`; expected Q or GF(p)")))?;
    CoefficientField::prime(p)
}

#[cfg(test)]
mod tests;
