//! Maximal models of the selector formula.
//!
//! Linear search over the untested selectors: `P` grows monotonically from
//! the pure positive selectors, every satisfiable probe moves all selectors
//! the model sets to 1 into `P`, and every unsatisfiable probe fixes the
//! probed selector to 0 for the rest of the call. The number of oracle calls
//! is at most one plus the number of selectors that are not pure positive.

use std::collections::BTreeSet;

use crate::map::{MapSolver, Model};
use crate::model::Lit;

/// Working sets of a maximal-model computation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MxmState {
    /// Selectors fixed to 1.
    pub positive: BTreeSet<u32>,
    /// Selectors not yet tested.
    pub untested: BTreeSet<u32>,
    /// Selectors proven to be 0 in every extension of `positive`.
    pub backbone_negative: BTreeSet<u32>,
}

impl MxmState {
    fn assumptions(&self) -> Vec<Lit> {
        self.positive
            .iter()
            .map(|&v| Lit::pos(v))
            .chain(self.backbone_negative.iter().map(|&v| Lit::neg(v)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MxmResult {
    /// False iff the selector formula is unsatisfiable.
    pub status: bool,
    /// Selectors set to 1 in the maximal model, ascending.
    pub positive: BTreeSet<u32>,
    /// Oracle calls spent on this computation.
    pub solve_calls: u64,
}

/// Moves every untested selector that `model` sets to 1 into the positive set.
pub fn update_sat(model: &Model, mut state: MxmState) -> MxmState {
    let (taken, rest): (BTreeSet<u32>, BTreeSet<u32>) = state.untested.iter().partition(|&&v| model.value(v));
    state.positive.extend(taken);
    state.untested = rest;
    state
}

/// Computes a maximal model of the solver's formula.
///
/// Selection policy: the lowest-numbered untested selector is probed next.
/// Backbone literals are passed as assumptions, so they never outlive the call.
pub fn maximal_model(map: &mut MapSolver) -> MxmResult {
    let calls_before = map.solve_calls();
    let pure: BTreeSet<u32> = map.pure_positive().into_iter().collect();
    let untested: BTreeSet<u32> = (1..=map.num_selectors()).filter(|v| !pure.contains(v)).collect();
    let mut state = MxmState {
        positive: pure,
        untested,
        backbone_negative: BTreeSet::new(),
    };

    match map.solve(&state.assumptions()) {
        None => {
            return MxmResult {
                status: false,
                positive: BTreeSet::new(),
                solve_calls: map.solve_calls() - calls_before,
            }
        }
        Some(model) => state = update_sat(&model, state),
    }

    while let Some(&probe) = state.untested.first() {
        let mut assumptions = state.assumptions();
        assumptions.push(Lit::pos(probe));
        match map.solve(&assumptions) {
            Some(model) => {
                debug_assert!(model.value(probe));
                state = update_sat(&model, state);
            }
            None => {
                state.untested.remove(&probe);
                state.backbone_negative.insert(probe);
            }
        }
    }

    MxmResult {
        status: true,
        positive: state.positive,
        solve_calls: map.solve_calls() - calls_before,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Clause;

    fn cl(v: &[i64]) -> Clause {
        Clause::from_dimacs(v).unwrap()
    }

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn empty_formula_needs_one_call() {
        let mut map = MapSolver::new(2);
        let r = maximal_model(&mut map);
        assert!(r.status);
        assert_eq!(r.positive, set(&[1, 2]));
        assert_eq!(r.solve_calls, 1);
    }

    #[test]
    fn exactly_one_of_two() {
        let mut map = MapSolver::new(2);
        map.add_clause(cl(&[1, 2])).unwrap();
        map.add_clause(cl(&[-1, -2])).unwrap();
        let r = maximal_model(&mut map);
        assert!(r.status);
        assert!(r.positive == set(&[1]) || r.positive == set(&[2]));
    }

    #[test]
    fn unsat_formula() {
        let mut map = MapSolver::new(1);
        map.add_clause(cl(&[1])).unwrap();
        map.add_clause(cl(&[-1])).unwrap();
        let r = maximal_model(&mut map);
        assert!(!r.status);
        assert!(r.positive.is_empty());
    }

    #[test]
    fn update_sat_moves_true_selectors() {
        let state = MxmState {
            positive: set(&[]),
            untested: set(&[1, 2]),
            backbone_negative: set(&[]),
        };
        let all = update_sat(&Model::from_positives(2, [1, 2]), state.clone());
        assert_eq!((all.positive, all.untested), (set(&[1, 2]), set(&[])));
        let one = update_sat(&Model::from_positives(2, [1]), state);
        assert_eq!((one.positive, one.untested), (set(&[1]), set(&[2])));

        let done = MxmState {
            positive: set(&[1]),
            untested: set(&[]),
            backbone_negative: set(&[2]),
        };
        assert_eq!(update_sat(&Model::from_positives(2, [1]), done.clone()), done);
    }

    #[test]
    fn backbone_does_not_leak_into_formula() {
        let mut map = MapSolver::new(3);
        map.add_clause(cl(&[-1, -2])).unwrap();
        let before = map.clauses().to_vec();
        let r = maximal_model(&mut map);
        assert_eq!(r.positive, set(&[1, 3]));
        assert_eq!(map.clauses(), before.as_slice());
        // selector 2 is still selectable in later calls
        assert!(map.solve(&[Lit::pos(2)]).is_some());
    }
}
