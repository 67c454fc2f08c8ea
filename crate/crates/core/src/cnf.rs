//! CNF formulas, their natural verifiers, and DIMACS I/O.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{HamError, Result};
use crate::verifier::Verifier;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, positive: false }
    }

    pub fn negated(self) -> Self {
        Self { var: self.var, positive: !self.positive }
    }

    pub fn eval(self, assignment: &BitString) -> bool {
        assignment.get(self.var) == self.positive
    }

    /// 1-based signed DIMACS integer.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive { v } else { -v }
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        (x != 0).then(|| Self { var: x.unsigned_abs() as usize - 1, positive: x > 0 })
    }
}

pub type Clause = Vec<Literal>;

/// Conjunction of clauses over variables `0..variable_count`.
///
/// Generated and gadget formulas use width-3 clauses, padding shorter ones by
/// repeating a literal. Simplification during self-reduction can leave
/// narrower or empty clauses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(variable_count: usize) -> Self {
        Self { variable_count, clauses: Vec::new() }
    }

    pub fn from_clauses(variable_count: usize, clauses: impl IntoIterator<Item = Clause>) -> Result<Self> {
        let mut f = Self::new(variable_count);
        for c in clauses {
            f.add_clause(c)?;
        }
        Ok(f)
    }

    pub fn add_clause(&mut self, clause: Clause) -> Result<()> {
        if let Some(bad) = clause.iter().find(|l| l.var >= self.variable_count) {
            return Err(HamError::InvalidParameter(format!(
                "literal on variable {} but formula has {} variables",
                bad.var, self.variable_count
            )));
        }
        self.clauses.push(clause);
        Ok(())
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn is_three_cnf(&self) -> bool {
        self.clauses.iter().all(|c| c.len() == 3)
    }

    pub fn satisfied_by(&self, assignment: &BitString) -> bool {
        assignment.len() == self.variable_count
            && self.clauses.iter().all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// Every clause holds a true and a false literal.
    pub fn nae_satisfied_by(&self, assignment: &BitString) -> bool {
        assignment.len() == self.variable_count
            && self.clauses.iter().all(|c| {
                let trues = c.iter().filter(|l| l.eval(assignment)).count();
                trues > 0 && trues < c.len()
            })
    }

    /// Fix variable 0 to `value`, drop satisfied clauses and false literals,
    /// and renumber the remaining variables down by one.
    pub fn assign_first(&self, value: bool) -> Self {
        assert!(self.variable_count > 0, "no variable to assign");
        let clauses = self
            .clauses
            .iter()
            .filter(|c| !c.iter().any(|l| l.var == 0 && l.positive == value))
            .map(|c| {
                c.iter()
                    .filter(|l| l.var != 0)
                    .map(|l| Literal { var: l.var - 1, positive: l.positive })
                    .collect()
            })
            .collect();
        Self { variable_count: self.variable_count - 1, clauses }
    }

    pub fn to_dimacs(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            writeln!(out, "c {c}").expect("write to string");
        }
        writeln!(out, "p cnf {} {}", self.variable_count, self.clauses.len()).expect("write to string");
        for clause in &self.clauses {
            for l in clause {
                write!(out, "{} ", l.to_dimacs()).expect("write to string");
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
                continue;
            }
            if trimmed.starts_with('p') {
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                let parsed = match fields.as_slice() {
                    ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                    _ => None,
                };
                header = Some(parsed.ok_or(HamError::Parse { line, msg: "expected `p cnf <vars> <clauses>`".into() })?);
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(HamError::Parse { line, msg: "clause before header".into() });
            };
            for tok in trimmed.split_whitespace() {
                let x: i64 = tok.parse().map_err(|_| HamError::Parse { line, msg: format!("bad literal {tok:?}") })?;
                match Literal::from_dimacs(x) {
                    None => clauses.push(std::mem::take(&mut current)),
                    Some(l) if l.var < vars => current.push(l),
                    Some(_) => return Err(HamError::Parse { line, msg: format!("literal {x} out of range") }),
                }
            }
        }
        let (vars, count) = header.ok_or(HamError::Parse { line: 0, msg: "missing header".into() })?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != count {
            return Err(HamError::Parse { line: 0, msg: format!("header says {count} clauses, found {}", clauses.len()) });
        }
        Ok(Self { variable_count: vars, clauses })
    }
}

/// The natural SAT verifier: bit `i` is the value of variable `i`.
#[derive(Debug, Clone)]
pub struct CnfVerifier(pub CnfFormula);

impl Verifier for CnfVerifier {
    fn witness_length(&self) -> usize {
        self.0.variable_count()
    }

    fn accepts(&self, w: &BitString) -> bool {
        self.0.satisfied_by(w)
    }

    fn label(&self) -> String {
        format!("cnf(n={}, m={})", self.0.variable_count(), self.0.clauses().len())
    }
}

/// The natural not-all-equal SAT verifier.
#[derive(Debug, Clone)]
pub struct NaeVerifier(pub CnfFormula);

impl Verifier for NaeVerifier {
    fn witness_length(&self) -> usize {
        self.0.variable_count()
    }

    fn accepts(&self, w: &BitString) -> bool {
        self.0.nae_satisfied_by(w)
    }

    fn label(&self) -> String {
        format!("nae(n={}, m={})", self.0.variable_count(), self.0.clauses().len())
    }
}
