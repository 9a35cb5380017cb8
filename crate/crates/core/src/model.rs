//! Variables, literals, Horn clauses and grouped formulae.
//!
//! A [`GroupedFormula`] is a hard group `G0` of Horn clauses together with
//! indexed groups `G1..Gk`. Group ids are 1-based throughout the crate, and
//! group `i` is selected in the map formula by selector variable `i`.

use std::fmt;
use std::ops::Not;

use crate::error::ModelError;

/// Identifier of a soft group, in `1..=k`.
pub type GroupId = u32;

/// A propositional literal over a 1-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    pub fn new(var: u32, positive: bool) -> Lit {
        debug_assert!(var >= 1);
        Lit((var << 1) | (!positive as u32))
    }

    pub fn pos(var: u32) -> Lit {
        Lit::new(var, true)
    }

    pub fn neg(var: u32) -> Lit {
        Lit::new(var, false)
    }

    /// Parses a DIMACS integer literal. Zero is rejected.
    pub fn from_dimacs(value: i64) -> Result<Lit, ModelError> {
        if value == 0 {
            return Err(ModelError::ZeroLiteral);
        }
        Ok(Lit::new(value.unsigned_abs() as u32, value > 0))
    }

    pub fn to_dimacs(self) -> i64 {
        if self.is_positive() {
            self.var() as i64
        } else {
            -(self.var() as i64)
        }
    }

    #[inline]
    pub fn var(self) -> u32 {
        self.0 >> 1
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    /// Dense code `2 * var + sign`, used to index per-literal tables.
    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }
}

impl Not for Lit {
    type Output = Lit;

    #[inline]
    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A disjunction of literals without duplicates or complementary pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause(Vec<Lit>);

impl Clause {
    /// Builds a clause, dropping repeated literals and rejecting tautologies.
    /// Literal order is preserved.
    pub fn new(lits: impl IntoIterator<Item = Lit>) -> Result<Clause, ModelError> {
        let mut out: Vec<Lit> = Vec::new();
        for lit in lits {
            if out.contains(&!lit) {
                return Err(ModelError::Tautology);
            }
            if !out.contains(&lit) {
                out.push(lit);
            }
        }
        Ok(Clause(out))
    }

    pub fn from_dimacs(values: &[i64]) -> Result<Clause, ModelError> {
        let lits = values
            .iter()
            .map(|&v| Lit::from_dimacs(v))
            .collect::<Result<Vec<_>, _>>()?;
        Clause::new(lits)
    }

    pub fn lits(&self) -> &[Lit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.0.iter().filter(|l| l.is_positive()).count()
    }
}

/// A clause with at most one positive literal, stored as an implication
/// `body -> head` (a missing head means the body implies false).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HornClause {
    /// Variables appearing negatively, sorted ascending.
    pub body: Vec<u32>,
    pub head: Option<u32>,
}

impl HornClause {
    pub fn new(mut body: Vec<u32>, head: Option<u32>) -> HornClause {
        body.sort_unstable();
        body.dedup();
        debug_assert!(head.is_none_or(|h| !body.contains(&h)));
        HornClause { body, head }
    }

    pub fn fact(var: u32) -> HornClause {
        HornClause::new(Vec::new(), Some(var))
    }

    pub fn goal(body: Vec<u32>) -> HornClause {
        HornClause::new(body, None)
    }

    pub fn len(&self) -> usize {
        self.body.len() + self.head.is_some() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn max_var(&self) -> u32 {
        self.body.iter().copied().chain(self.head).max().unwrap_or(0)
    }

    /// Converts a clause into Horn form, or returns `None` if it has two or
    /// more positive literals.
    pub fn from_clause(clause: &Clause) -> Option<HornClause> {
        if clause.positive_count() > 1 {
            return None;
        }
        let head = clause.lits().iter().find(|l| l.is_positive()).map(|l| l.var());
        let body = clause
            .lits()
            .iter()
            .filter(|l| !l.is_positive())
            .map(|l| l.var())
            .collect();
        Some(HornClause::new(body, head))
    }

    /// Negated body literals in ascending order, then the head.
    pub fn to_clause(&self) -> Clause {
        Clause(
            self.body
                .iter()
                .map(|&v| Lit::neg(v))
                .chain(self.head.map(Lit::pos))
                .collect(),
        )
    }

    /// True when `assignment` (indexed by variable) satisfies the clause.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.body.iter().any(|&v| !assignment[v as usize]) || self.head.is_some_and(|h| assignment[h as usize])
    }
}

/// Converts every clause to Horn form, preserving order.
pub fn validate_horn(clauses: &[Clause]) -> Result<Vec<HornClause>, ModelError> {
    clauses
        .iter()
        .enumerate()
        .map(|(i, c)| HornClause::from_clause(c).ok_or(ModelError::NonHornClause(i)))
        .collect()
}

/// Hard clauses plus soft groups `1..=k` of Horn clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupedFormula {
    num_vars: u32,
    hard: Vec<HornClause>,
    groups: Vec<Vec<HornClause>>,
    size_lits: usize,
}

impl GroupedFormula {
    /// Validates and assembles a formula. Group ids follow input order.
    /// `NonHornClause` and `EmptyClauseInGroup` carry the clause position in
    /// the flattened hard-then-groups sequence.
    pub fn build(hard: &[Clause], groups: &[Vec<Clause>], num_vars: u32) -> Result<GroupedFormula, ModelError> {
        if groups.is_empty() {
            return Err(ModelError::NoGroups);
        }
        let hard_horn = validate_horn(hard)?;
        let mut offset = hard.len();
        let mut horn_groups = Vec::with_capacity(groups.len());
        for (gi, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(ModelError::EmptyGroup(gi + 1));
            }
            let horn = validate_horn(group).map_err(|e| match e {
                ModelError::NonHornClause(i) => ModelError::NonHornClause(offset + i),
                other => other,
            })?;
            if let Some(i) = horn.iter().position(HornClause::is_empty) {
                return Err(ModelError::EmptyClauseInGroup(offset + i));
            }
            offset += group.len();
            horn_groups.push(horn);
        }
        GroupedFormula::from_horn(hard_horn, horn_groups, num_vars)
    }

    /// Assembles a formula from clauses already in Horn form.
    pub fn from_horn(
        hard: Vec<HornClause>,
        groups: Vec<Vec<HornClause>>,
        num_vars: u32,
    ) -> Result<GroupedFormula, ModelError> {
        if groups.is_empty() {
            return Err(ModelError::NoGroups);
        }
        for (gi, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(ModelError::EmptyGroup(gi + 1));
            }
        }
        let all = hard.iter().chain(groups.iter().flatten());
        let mut size_lits = 0;
        for clause in all {
            let max = clause.max_var();
            if max > num_vars {
                return Err(ModelError::VarOutOfRange { var: max, num_vars });
            }
            size_lits += clause.len();
        }
        Ok(GroupedFormula {
            num_vars,
            hard,
            groups,
            size_lits,
        })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn hard(&self) -> &[HornClause] {
        &self.hard
    }

    /// Number of soft groups `k`.
    pub fn num_groups(&self) -> usize {
        self.groups.len()
    }

    /// Clauses of group `id` (1-based).
    pub fn group(&self, id: GroupId) -> &[HornClause] {
        &self.groups[id as usize - 1]
    }

    pub fn groups(&self) -> impl Iterator<Item = (GroupId, &[HornClause])> {
        self.groups
            .iter()
            .enumerate()
            .map(|(i, g)| (i as GroupId + 1, g.as_slice()))
    }

    pub fn group_ids(&self) -> impl Iterator<Item = GroupId> {
        1..=self.groups.len() as GroupId
    }

    /// Total literal count `||F||`.
    pub fn size_lits(&self) -> usize {
        self.size_lits
    }

    pub fn num_clauses(&self) -> usize {
        self.hard.len() + self.groups.iter().map(Vec::len).sum::<usize>()
    }

    /// All clauses as `(group, clause)` pairs, hard clauses tagged with 0.
    pub fn flatten(&self) -> Vec<(GroupId, Clause)> {
        self.hard
            .iter()
            .map(|c| (0, c.to_clause()))
            .chain(
                self.groups()
                    .flat_map(|(id, cs)| cs.iter().map(move |c| (id, c.to_clause()))),
            )
            .collect()
    }

    /// Copy with exact duplicate clauses removed within each group.
    pub fn dedup_clauses(&self) -> GroupedFormula {
        fn dedup(cs: &[HornClause]) -> Vec<HornClause> {
            let mut seen = std::collections::HashSet::new();
            cs.iter().filter(|c| seen.insert(*c)).cloned().collect()
        }
        let hard = dedup(&self.hard);
        let groups: Vec<_> = self.groups.iter().map(|g| dedup(g)).collect();
        GroupedFormula::from_horn(hard, groups, self.num_vars).expect("subset of a valid formula")
    }
}

/// Bijection between group ids and selector variables of the map formula.
///
/// Selector `p_i` picks group `G_i`, so both sides share the index space
/// `1..=k`; the type exists to keep the two roles apart at call sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectorMap {
    num_groups: u32,
}

impl SelectorMap {
    pub fn new(num_groups: u32) -> SelectorMap {
        SelectorMap { num_groups }
    }

    pub fn len(&self) -> u32 {
        self.num_groups
    }

    pub fn is_empty(&self) -> bool {
        self.num_groups == 0
    }

    pub fn selector(&self, group: GroupId) -> u32 {
        assert!((1..=self.num_groups).contains(&group), "group {group} out of range");
        group
    }

    pub fn group(&self, selector: u32) -> GroupId {
        assert!(
            (1..=self.num_groups).contains(&selector),
            "selector {selector} out of range"
        );
        selector
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cl(v: &[i64]) -> Clause {
        Clause::from_dimacs(v).unwrap()
    }

    #[test]
    fn horn_rewrite() {
        let h = validate_horn(&[cl(&[-1, 3])]).unwrap();
        assert_eq!(h, vec![HornClause::new(vec![1], Some(3))]);
        let h = validate_horn(&[cl(&[-1, -2, 3])]).unwrap();
        assert_eq!(h, vec![HornClause::new(vec![1, 2], Some(3))]);
        assert_eq!(validate_horn(&[cl(&[1, 2])]), Err(ModelError::NonHornClause(0)));
    }

    #[test]
    fn tautology_and_duplicates() {
        assert_eq!(Clause::from_dimacs(&[1, -1]), Err(ModelError::Tautology));
        assert_eq!(cl(&[-2, -2, 3]).len(), 2);
        assert_eq!(Clause::from_dimacs(&[0]), Err(ModelError::ZeroLiteral));
    }

    #[test]
    fn build_counts_literals() {
        let hard = vec![cl(&[-1, 3]), cl(&[-2, 3]), cl(&[-3])];
        let groups = vec![vec![cl(&[1])], vec![cl(&[2])]];
        let f = GroupedFormula::build(&hard, &groups, 3).unwrap();
        assert_eq!(f.num_groups(), 2);
        assert_eq!(f.size_lits(), 7);

        let f = GroupedFormula::build(&[], &[vec![cl(&[1])]], 1).unwrap();
        assert_eq!((f.num_groups(), f.size_lits()), (1, 1));

        assert_eq!(GroupedFormula::build(&[cl(&[-1])], &[], 1), Err(ModelError::NoGroups));
    }

    #[test]
    fn build_errors() {
        let err = GroupedFormula::build(&[cl(&[-1])], &[vec![cl(&[1]), cl(&[1, 2])]], 2);
        assert_eq!(err, Err(ModelError::NonHornClause(2)));
        let err = GroupedFormula::build(&[], &[vec![cl(&[1])], vec![Clause::new([]).unwrap()]], 2);
        assert_eq!(err, Err(ModelError::EmptyClauseInGroup(1)));
        let err = GroupedFormula::build(&[], &[vec![]], 2);
        assert_eq!(err, Err(ModelError::EmptyGroup(1)));
        let err = GroupedFormula::build(&[cl(&[-5])], &[vec![cl(&[1])]], 2);
        assert_eq!(err, Err(ModelError::VarOutOfRange { var: 5, num_vars: 2 }));
        // an empty hard clause is allowed; the enumerator reports it as HardUnsat
        assert!(GroupedFormula::build(&[Clause::new([]).unwrap()], &[vec![cl(&[1])]], 1).is_ok());
    }

    #[test]
    fn dedup_keeps_one_copy() {
        let f = GroupedFormula::build(&[cl(&[-1]), cl(&[-1])], &[vec![cl(&[1]), cl(&[1])]], 1).unwrap();
        assert_eq!(f.num_clauses(), 4);
        let d = f.dedup_clauses();
        assert_eq!(d.num_clauses(), 2);
        assert_eq!(d.size_lits(), 2);
    }

    #[test]
    fn selector_map_is_identity_on_range() {
        let m = SelectorMap::new(3);
        for g in 1..=3 {
            assert_eq!(m.group(m.selector(g)), g);
        }
    }

    fn horn_clause_strategy(num_vars: u32) -> impl Strategy<Value = Vec<i64>> {
        (
            proptest::collection::btree_set(1..=num_vars, 0..4),
            proptest::option::of(1..=num_vars),
        )
            .prop_map(|(body, head)| {
                let mut lits: Vec<i64> = body
                    .iter()
                    .filter(|&&v| Some(v) != head)
                    .map(|&v| -(v as i64))
                    .collect();
                if let Some(h) = head {
                    lits.push(h as i64);
                }
                lits
            })
    }

    proptest! {
        #[test]
        fn build_then_flatten_round_trips(
            hard in proptest::collection::vec(horn_clause_strategy(6), 0..5),
            groups in proptest::collection::vec(
                proptest::collection::vec(horn_clause_strategy(6).prop_filter("nonempty", |c| !c.is_empty()), 1..3),
                1..4),
        ) {
            let hard_c: Vec<Clause> = hard.iter().map(|c| cl(c)).collect();
            let groups_c: Vec<Vec<Clause>> = groups.iter().map(|g| g.iter().map(|c| cl(c)).collect()).collect();
            let f = GroupedFormula::build(&hard_c, &groups_c, 6).unwrap();
            let mut expected: Vec<(u32, Vec<i64>)> = hard.iter().map(|c| (0, c.clone()))
                .chain(groups.iter().enumerate().flat_map(|(i, g)| g.iter().map(move |c| (i as u32 + 1, c.clone()))))
                .map(|(g, mut c)| { c.sort(); (g, c) })
                .collect();
            let mut got: Vec<(u32, Vec<i64>)> = f.flatten().into_iter()
                .map(|(g, c)| { let mut v: Vec<i64> = c.lits().iter().map(|l| l.to_dimacs()).collect(); v.sort(); (g, v) })
                .collect();
            expected.sort();
            got.sort();
            prop_assert_eq!(got, expected);
            let total: usize = f.flatten().iter().map(|(_, c)| c.len()).sum();
            prop_assert_eq!(total, f.size_lits());
            for (_, c) in f.flatten() {
                prop_assert!(c.positive_count() <= 1);
            }
        }
    }
}
