//! Exhaustive reference implementations, written straight from the
//! definitions and kept deliberately naive.
//!
//! Nothing here touches the propagation engine or the CDCL solver: subset
//! satisfiability is decided by a plain least-fixpoint computation over the
//! clause list (and cross-checked against full assignment enumeration in the
//! tests), and maximal models by scanning every assignment.

use std::collections::BTreeSet;

use crate::error::OracleError;
use crate::map::Model;
use crate::model::{Clause, GroupId, GroupedFormula, HornClause};

/// Group-count limit for [`all_muses`] and [`all_mcses`].
pub const MAX_ORACLE_GROUPS: usize = 20;
/// Selector limit for [`all_maximal_models`].
pub const MAX_ORACLE_SELECTORS: usize = 16;

pub type GroupSet = BTreeSet<GroupId>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub muses: BTreeSet<GroupSet>,
    pub mcses: BTreeSet<GroupSet>,
    pub duality_ok: bool,
}

/// Decides a Horn clause set by iterating to the least model. Quadratic, on
/// purpose.
pub fn horn_satisfiable<'a>(num_vars: u32, clauses: impl IntoIterator<Item = &'a HornClause>) -> bool {
    let clauses: Vec<&HornClause> = clauses.into_iter().collect();
    let mut truth = vec![false; num_vars as usize + 1];
    loop {
        let mut changed = false;
        for c in &clauses {
            if c.body.iter().all(|&v| truth[v as usize]) {
                match c.head {
                    None => return false,
                    Some(h) if !truth[h as usize] => {
                        truth[h as usize] = true;
                        changed = true;
                    }
                    Some(_) => {}
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Decides a Horn clause set by trying all `2^n` assignments. Only usable
/// for a handful of variables; exists to validate [`horn_satisfiable`].
pub fn satisfiable_by_enumeration(num_vars: u32, clauses: &[HornClause]) -> bool {
    assert!(num_vars <= 20);
    (0u32..1 << num_vars).any(|bits| {
        let assignment: Vec<bool> = (0..=num_vars).map(|v| v > 0 && bits >> (v - 1) & 1 == 1).collect();
        clauses.iter().all(|c| c.satisfied_by(&assignment))
    })
}

fn check_size(size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::TooLarge { size, limit })
    } else {
        Ok(())
    }
}

/// Satisfiability of `G0` together with each subset of groups, indexed by
/// bitmask (bit `i - 1` selects group `i`).
fn subset_table(f: &GroupedFormula) -> Vec<bool> {
    let k = f.num_groups();
    (0u32..1 << k)
        .map(|mask| {
            let selected = f
                .groups()
                .filter(|(id, _)| mask >> (id - 1) & 1 == 1)
                .flat_map(|(_, cs)| cs.iter());
            horn_satisfiable(f.num_vars(), f.hard().iter().chain(selected))
        })
        .collect()
}

fn mask_to_set(mask: u32) -> GroupSet {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Every group set `S` with `G0 ∪ S` unsatisfiable and `G0 ∪ (S \ {g})`
/// satisfiable for each `g ∈ S`.
pub fn all_muses(f: &GroupedFormula) -> Result<BTreeSet<GroupSet>, OracleError> {
    check_size(f.num_groups(), MAX_ORACLE_GROUPS)?;
    let sat = subset_table(f);
    let k = f.num_groups();
    Ok((0u32..1 << k)
        .filter(|&mask| !sat[mask as usize])
        .filter(|&mask| {
            (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .all(|b| sat[(mask & !(1 << b)) as usize])
        })
        .map(mask_to_set)
        .collect())
}

/// Complements of the maximal satisfiable group sets.
pub fn all_mcses(f: &GroupedFormula) -> Result<BTreeSet<GroupSet>, OracleError> {
    check_size(f.num_groups(), MAX_ORACLE_GROUPS)?;
    let sat = subset_table(f);
    let k = f.num_groups();
    let full = (1u32 << k) - 1;
    Ok((0u32..1 << k)
        .filter(|&mask| sat[mask as usize])
        .filter(|&mask| {
            (0..k)
                .filter(|b| mask >> b & 1 == 0)
                .all(|b| !sat[(mask | 1 << b) as usize])
        })
        .map(|mss| mask_to_set(full & !mss))
        .collect())
}

pub fn report(f: &GroupedFormula) -> Result<OracleReport, OracleError> {
    let muses = all_muses(f)?;
    let mcses = all_mcses(f)?;
    let duality_ok = check_duality(&muses, &mcses);
    Ok(OracleReport {
        muses,
        mcses,
        duality_ok,
    })
}

/// Positive-literal sets of all maximal models of `clauses` over `1..=k`.
pub fn all_maximal_models(num_selectors: u32, clauses: &[Clause]) -> Result<BTreeSet<BTreeSet<u32>>, OracleError> {
    check_size(num_selectors as usize, MAX_ORACLE_SELECTORS)?;
    let k = num_selectors;
    let models: Vec<u32> = (0u32..1 << k)
        .filter(|&bits| {
            let m = Model::from_positives(k, (1..=k).filter(|v| bits >> (v - 1) & 1 == 1));
            clauses.iter().all(|c| m.satisfies_clause(c))
        })
        .collect();
    Ok(models
        .iter()
        .filter(|&&a| !models.iter().any(|&b| b != a && b & a == a))
        .map(|&bits| mask_to_set(bits))
        .collect())
}

fn hits(set: &GroupSet, member: &GroupSet) -> bool {
    !set.is_disjoint(member)
}

/// True iff `candidate` hits every member of `family` and no set obtained by
/// removing one element still does.
pub fn is_minimal_hitting_set(candidate: &GroupSet, family: &BTreeSet<GroupSet>) -> bool {
    if !family.iter().all(|m| hits(candidate, m)) {
        return false;
    }
    candidate.iter().all(|g| {
        let mut smaller = candidate.clone();
        smaller.remove(g);
        !family.iter().all(|m| hits(&smaller, m))
    })
}

/// Every MUS is a minimal hitting set of the MCSes and every MCS a minimal
/// hitting set of the MUSes.
pub fn check_duality(muses: &BTreeSet<GroupSet>, mcses: &BTreeSet<GroupSet>) -> bool {
    muses.iter().all(|m| is_minimal_hitting_set(m, mcses)) && mcses.iter().all(|c| is_minimal_hitting_set(c, muses))
}
