//! Reduction of an unsatisfiable group selection to a group-MUS.
//!
//! [`insertion_mus`] is the extractor used by the enumerator. It adds groups
//! one at a time on top of the incremental engine until a conflict appears;
//! the group that caused it (the transition group) belongs to the MUS. The
//! next round only needs to look at the groups added before the transition,
//! so each transition costs one linear propagation pass and the whole
//! extraction is `O(|MUS| * ||F||)`.
//!
//! [`deletion_mus`] is the classic remove-and-recheck baseline, `O(|I| * ||F||)`.
//!
//! Both expect an engine that holds exactly the hard clauses, propagated
//! without conflict, and leave it in that state on return.

use crate::error::ExtractError;
use crate::ltur::{LturEngine, SatStatus};
use crate::model::{GroupId, GroupedFormula};

/// Scratch state of one insertion-based extraction.
#[derive(Debug, Clone, Default)]
pub struct ExtractionState {
    /// Groups confirmed to be in the MUS, in discovery order.
    pub confirmed: Vec<GroupId>,
    /// Groups added during the current round.
    pub scratch: Vec<GroupId>,
    /// Last transition group, not yet merged into `confirmed`.
    pub transition: Option<GroupId>,
    /// Candidates for the next round.
    pub working: Vec<GroupId>,
}

fn push_group(engine: &mut LturEngine, f: &GroupedFormula, g: GroupId) -> Result<SatStatus, ExtractError> {
    Ok(engine.push_clauses(f.group(g))?)
}

/// Insertion-based extraction. `candidates` is scanned in the given order.
/// Returns the MUS sorted ascending.
pub fn insertion_mus(
    engine: &mut LturEngine,
    f: &GroupedFormula,
    candidates: &[GroupId],
) -> Result<Vec<GroupId>, ExtractError> {
    if engine.is_conflict() {
        return Err(ExtractError::HardConflict);
    }
    let base = engine.checkpoint();
    let mut state = ExtractionState {
        working: candidates.to_vec(),
        ..Default::default()
    };

    let result = loop {
        if let Some(t) = state.transition.take() {
            state.confirmed.push(t);
            if push_group(engine, f, t)? == SatStatus::Conflict {
                break Ok(state.confirmed);
            }
        }
        let round = engine.checkpoint();
        state.scratch.clear();
        let mut found = None;
        for &g in &state.working {
            state.scratch.push(g);
            if push_group(engine, f, g)? == SatStatus::Conflict {
                found = Some(g);
                break;
            }
        }
        engine.rollback(round)?;
        match found {
            None => break Err(ExtractError::NotUnsat),
            Some(t) => {
                state.scratch.pop();
                state.working = std::mem::take(&mut state.scratch);
                state.transition = Some(t);
            }
        }
    };
    engine.rollback(base)?;
    result.map(|mut mus| {
        mus.sort_unstable();
        mus
    })
}

/// Deletion-based extraction. Groups are tried for removal in the given
/// order; groups proven necessary stay loaded between tests.
pub fn deletion_mus(
    engine: &mut LturEngine,
    f: &GroupedFormula,
    candidates: &[GroupId],
) -> Result<Vec<GroupId>, ExtractError> {
    if engine.is_conflict() {
        return Err(ExtractError::HardConflict);
    }
    let base = engine.checkpoint();
    let result = deletion_inner(engine, f, candidates);
    engine.rollback(base)?;
    result
}

fn deletion_inner(
    engine: &mut LturEngine,
    f: &GroupedFormula,
    candidates: &[GroupId],
) -> Result<Vec<GroupId>, ExtractError> {
    // Whole-set check first.
    let mark = engine.checkpoint();
    let mut conflict = false;
    for &g in candidates {
        if push_group(engine, f, g)? == SatStatus::Conflict {
            conflict = true;
            break;
        }
    }
    engine.rollback(mark)?;
    if !conflict {
        return Err(ExtractError::NotUnsat);
    }

    let mut kept: Vec<bool> = vec![true; candidates.len()];
    let mut necessary = engine.checkpoint();
    for (i, &g) in candidates.iter().enumerate() {
        // The necessary groups found so far are already loaded; add the
        // undecided tail and every kept group except `g`.
        let mut conflict = false;
        for (j, &h) in candidates.iter().enumerate().skip(i + 1) {
            if kept[j] && push_group(engine, f, h)? == SatStatus::Conflict {
                conflict = true;
                break;
            }
        }
        engine.rollback(necessary)?;
        if conflict {
            kept[i] = false;
        } else if push_group(engine, f, g)? == SatStatus::Conflict {
            // necessary groups alone are already unsatisfiable
            kept[i + 1..].iter_mut().for_each(|k| *k = false);
            break;
        } else {
            necessary = engine.checkpoint();
        }
    }
    let mut mus: Vec<GroupId> = candidates
        .iter()
        .zip(&kept)
        .filter(|(_, &k)| k)
        .map(|(&g, _)| g)
        .collect();
    mus.sort_unstable();
    Ok(mus)
}
