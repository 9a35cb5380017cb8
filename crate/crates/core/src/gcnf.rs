//! Group-oriented DIMACS (`p gcnf`) reading and writing.
//!
//! ```text
//! c comment
//! p gcnf <vars> <clauses> <groups>
//! {0} -1 3 0
//! {1} 1 0
//! ```
//!
//! Group `{0}` holds the hard clauses. A clause may span several lines and
//! ends at its `0` terminator.

use std::fmt::Write as _;

use crate::error::{GcnfError, ModelError};
use crate::model::{Clause, GroupId, GroupedFormula, HornClause};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcnfDocument {
    pub num_vars: u32,
    pub num_clauses: usize,
    pub num_groups: u32,
    /// Clauses in file order, tagged with their group and starting line.
    pub clauses: Vec<(GroupId, Clause, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

fn tokens(line: &str) -> impl Iterator<Item = Token<'_>> {
    line.split_whitespace().flat_map(|word| {
        let mut out = Vec::new();
        let mut rest = word;
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('{') {
                out.push(Token::Open);
                rest = r;
            } else if let Some(r) = rest.strip_prefix('}') {
                out.push(Token::Close);
                rest = r;
            } else {
                let end = rest.find(['{', '}']).unwrap_or(rest.len());
                out.push(Token::Word(&rest[..end]));
                rest = &rest[end..];
            }
        }
        out
    })
}

fn number<T: std::str::FromStr>(word: &str, line: usize) -> Result<T, GcnfError> {
    word.parse()
        .map_err(|_| GcnfError::Syntax(line, format!("expected a number, found `{word}`")))
}

impl GcnfDocument {
    pub fn parse(text: &str) -> Result<GcnfDocument, GcnfError> {
        let mut header: Option<(u32, usize, u32)> = None;
        let mut clauses = Vec::new();
        // (group, literals, starting line) of the clause being read
        let mut current: Option<(GroupId, Vec<i64>, usize)> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            if trimmed.starts_with('p') {
                if header.is_some() {
                    return Err(GcnfError::Syntax(line, "duplicate header".into()));
                }
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 5 || fields[0] != "p" || fields[1] != "gcnf" {
                    return Err(GcnfError::Syntax(
                        line,
                        "expected `p gcnf <vars> <clauses> <groups>`".into(),
                    ));
                }
                header = Some((
                    number(fields[2], line)?,
                    number(fields[3], line)?,
                    number(fields[4], line)?,
                ));
                continue;
            }
            let Some((num_vars, _, num_groups)) = header else {
                return Err(GcnfError::Syntax(line, "clause before header".into()));
            };
            let mut toks = tokens(trimmed).peekable();
            while let Some(tok) = toks.next() {
                match (tok, current.as_mut()) {
                    (Token::Open, None) => {
                        let g = match (toks.next(), toks.next()) {
                            (Some(Token::Word(w)), Some(Token::Close)) => number::<u32>(w, line)?,
                            _ => return Err(GcnfError::Syntax(line, "malformed group tag".into())),
                        };
                        if g > num_groups {
                            return Err(GcnfError::UnknownGroup(line));
                        }
                        current = Some((g, Vec::new(), line));
                    }
                    (Token::Word(w), Some((_, lits, _))) => {
                        let lit: i64 = number(w, line)?;
                        if lit == 0 {
                            let (g, lits, start) = current.take().expect("clause in progress");
                            clauses.push(finish_clause(g, &lits, start, num_vars)?);
                        } else {
                            lits.push(lit);
                        }
                    }
                    (Token::Word(_), None) => return Err(GcnfError::Syntax(line, "clause without group tag".into())),
                    _ => return Err(GcnfError::Syntax(line, "unexpected brace".into())),
                }
            }
        }

        let Some((num_vars, num_clauses, num_groups)) = header else {
            return Err(GcnfError::Syntax(1, "missing `p gcnf` header".into()));
        };
        if let Some((_, _, start)) = current {
            return Err(GcnfError::Syntax(start, "clause not terminated by 0".into()));
        }
        if clauses.len() != num_clauses {
            return Err(GcnfError::HeaderMismatch(format!(
                "header declares {num_clauses} clauses, found {}",
                clauses.len()
            )));
        }
        for g in 1..=num_groups {
            if !clauses.iter().any(|(id, _, _)| *id == g) {
                return Err(GcnfError::HeaderMismatch(format!("group {g} has no clauses")));
            }
        }
        Ok(GcnfDocument {
            num_vars,
            num_clauses,
            num_groups,
            clauses,
        })
    }

    pub fn to_formula(&self) -> Result<GroupedFormula, GcnfError> {
        let mut hard = Vec::new();
        let mut groups: Vec<Vec<HornClause>> = vec![Vec::new(); self.num_groups as usize];
        for (g, clause, line) in &self.clauses {
            let horn = HornClause::from_clause(clause).ok_or(GcnfError::NonHornClause(*line))?;
            if *g == 0 {
                hard.push(horn);
            } else {
                if horn.is_empty() {
                    return Err(GcnfError::Model {
                        line: *line,
                        source: ModelError::EmptyClauseInGroup(0),
                    });
                }
                groups[*g as usize - 1].push(horn);
            }
        }
        GroupedFormula::from_horn(hard, groups, self.num_vars).map_err(|source| GcnfError::Model { line: 1, source })
    }
}

fn finish_clause(g: GroupId, lits: &[i64], line: usize, num_vars: u32) -> Result<(GroupId, Clause, usize), GcnfError> {
    if let Some(&bad) = lits.iter().find(|l| l.unsigned_abs() > num_vars as u64) {
        return Err(GcnfError::Model {
            line,
            source: ModelError::VarOutOfRange {
                var: bad.unsigned_abs().min(u32::MAX as u64) as u32,
                num_vars,
            },
        });
    }
    let clause = Clause::from_dimacs(lits).map_err(|source| GcnfError::Model { line, source })?;
    if clause.positive_count() > 1 {
        return Err(GcnfError::NonHornClause(line));
    }
    Ok((g, clause, line))
}

/// Parses GCNF text into a validated formula.
pub fn parse_gcnf(text: &str) -> Result<GroupedFormula, GcnfError> {
    GcnfDocument::parse(text)?.to_formula()
}

/// Canonical GCNF: hard clauses first, then groups in order; within a
/// clause the negative literals ascend and the head comes last.
pub fn write_gcnf(f: &GroupedFormula) -> String {
    let mut out = String::new();
    writeln!(out, "p gcnf {} {} {}", f.num_vars(), f.num_clauses(), f.num_groups()).unwrap();
    for (g, clause) in f.flatten() {
        write!(out, "{{{g}}}").unwrap();
        for lit in clause.lits() {
            write!(out, " {lit}").unwrap();
        }
        out.push_str(" 0\n");
    }
    out
}
