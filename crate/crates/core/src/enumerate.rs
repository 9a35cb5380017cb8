//! Implicit hitting-set enumeration of group-MUSes and group-MCSes.
//!
//! Each iteration takes a maximal model `P` of the selector formula `Q` and
//! loads the selected groups into the propagation engine on top of the hard
//! clauses. An unsatisfiable selection is shrunk to a MUS `M` and blocked
//! with the clause `{¬p_i : i ∈ M}`. A satisfiable one is a maximal
//! satisfiable subset, since `P` is maximal for `Q`, so its complement
//! `C = I \ P` is an MCS and is blocked with `{p_i : i ∈ C}`. That clause
//! rules out every later selection disjoint from `C`, i.e. `C` and all its
//! supersets as correction sets. The loop ends when `Q` becomes
//! unsatisfiable, after exactly `#MUS + #MCS` iterations.
//!
//! Why `I \ P` is minimal without further work: every selection satisfying
//! `Q` hits all earlier MCSes and contains no earlier MUS. If some `S ⊃ P`
//! were satisfiable with the hard clauses, `S` would contain no MUS at all
//! and would hit every MCS blocked so far (it is a superset of `P`), so
//! `S` would also satisfy `Q`, contradicting the maximality of `P`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::error::{EnumError, OracleError};
use crate::extract::insertion_mus;
use crate::ltur::{LturEngine, SatStatus};
use crate::map::MapSolver;
use crate::model::{Clause, GroupId, GroupedFormula, Lit, SelectorMap};
use crate::mxm::maximal_model;
use crate::oracle;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EnumConfig {
    pub max_muses: Option<usize>,
    pub max_mcses: Option<usize>,
    /// Wall-clock limit, checked between iterations.
    pub time_budget: Option<Duration>,
    /// Pass MCSes to the sink (they are always counted).
    pub report_mcs: bool,
    /// Report the empty MCS instead of failing on satisfiable input.
    pub allow_sat: bool,
    /// Cross-check the complete output against the exhaustive oracle.
    pub validate: bool,
}

impl EnumConfig {
    pub fn reporting_all() -> EnumConfig {
        EnumConfig {
            report_mcs: true,
            ..EnumConfig::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EnumerationStats {
    pub mus_count: usize,
    pub mcs_count: usize,
    pub iterations: usize,
    pub map_solver_calls: u64,
    pub ltur_pushes: u64,
    /// Literal visits performed by the propagation engine.
    pub ltur_work: u64,
    pub elapsed: Duration,
    pub time_to_first_mus: Option<Duration>,
}

/// One enumeration result, group ids ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Found {
    Mus(Vec<GroupId>),
    Mcs(Vec<GroupId>),
}

/// Adds the clause forbidding any selection that contains all of `mus`.
pub fn block_mus(map: &mut MapSolver, mus: &[GroupId]) {
    debug_assert!(!mus.is_empty());
    let selectors = SelectorMap::new(map.num_selectors());
    let clause = Clause::new(mus.iter().map(|&g| Lit::neg(selectors.selector(g)))).expect("no tautology");
    map.add_clause(clause).expect("group ids are in range");
}

/// Adds the clause requiring future selections to include some group of `mcs`.
pub fn block_mcs(map: &mut MapSolver, mcs: &[GroupId]) {
    debug_assert!(!mcs.is_empty());
    let selectors = SelectorMap::new(map.num_selectors());
    let clause = Clause::new(mcs.iter().map(|&g| Lit::pos(selectors.selector(g)))).expect("no tautology");
    map.add_clause(clause).expect("group ids are in range");
}

/// Enumerates all group-MUSes and group-MCSes of `f`, streaming each one to
/// `sink` as soon as it is found.
///
/// Fails with `HardUnsat` if the hard clauses are unsatisfiable and with
/// `TotallySat` if nothing is unsatisfiable (unless `allow_sat` is set).
/// Hitting a cap or the time budget yields `BudgetExhausted` with the
/// statistics so far.
pub fn enumerate<F>(f: &GroupedFormula, cfg: &EnumConfig, mut sink: F) -> Result<EnumerationStats, EnumError>
where
    F: FnMut(&Found),
{
    let start = Instant::now();
    let mut engine = LturEngine::new(f.num_vars());
    if engine.push_clauses(f.hard())? == SatStatus::Conflict {
        return Err(EnumError::HardUnsat);
    }
    let base = engine.checkpoint();
    let selectors = SelectorMap::new(f.num_groups() as u32);
    let all: Vec<GroupId> = f.group_ids().collect();
    let mut stats = EnumerationStats::default();

    // (MUSes, MCSes) seen so far, kept only for validation
    let mut emitted: Option<[BTreeSet<Vec<GroupId>>; 2]> = cfg.validate.then(Default::default);
    if cfg.validate && f.num_groups() > oracle::MAX_ORACLE_GROUPS {
        return Err(OracleError::TooLarge {
            size: f.num_groups(),
            limit: oracle::MAX_ORACLE_GROUPS,
        }
        .into());
    }

    if load(&mut engine, f, &all)? == SatStatus::Consistent {
        if !cfg.allow_sat {
            return Err(EnumError::TotallySat);
        }
        stats.mcs_count = 1;
        stats.iterations = 1;
        stats.ltur_pushes = engine.pushes();
        stats.ltur_work = engine.work();
        stats.elapsed = start.elapsed();
        if cfg.report_mcs {
            sink(&Found::Mcs(Vec::new()));
        }
        return Ok(stats);
    }
    engine.rollback(base)?;

    let mut map = MapSolver::new(selectors.len());
    loop {
        if budget_hit(cfg, &stats, start) {
            finish(&mut stats, &map, &engine, start);
            return Err(EnumError::BudgetExhausted(stats));
        }
        let mxm = maximal_model(&mut map);
        if !mxm.status {
            break;
        }
        let selected: Vec<GroupId> = mxm.positive.iter().map(|&s| selectors.group(s)).collect();
        let status = load(&mut engine, f, &selected)?;
        engine.rollback(base)?;
        stats.iterations += 1;
        if status == SatStatus::Conflict {
            let mus = insertion_mus(&mut engine, f, &selected)?;
            stats.mus_count += 1;
            if stats.time_to_first_mus.is_none() {
                stats.time_to_first_mus = Some(start.elapsed());
            }
            sink(&Found::Mus(mus.clone()));
            block_mus(&mut map, &mus);
            if let Some([muses, _]) = emitted.as_mut() {
                muses.insert(mus);
            }
        } else {
            let mcs: Vec<GroupId> = all
                .iter()
                .copied()
                .filter(|g| !mxm.positive.contains(&selectors.selector(*g)))
                .collect();
            stats.mcs_count += 1;
            if cfg.report_mcs {
                sink(&Found::Mcs(mcs.clone()));
            }
            block_mcs(&mut map, &mcs);
            if let Some([_, mcses]) = emitted.as_mut() {
                mcses.insert(mcs);
            }
        }
    }
    finish(&mut stats, &map, &engine, start);

    if let Some([muses, mcses]) = emitted {
        validate(f, &muses, &mcses)?;
    }
    Ok(stats)
}

fn load(engine: &mut LturEngine, f: &GroupedFormula, groups: &[GroupId]) -> Result<SatStatus, EnumError> {
    for &g in groups {
        if engine.push_clauses(f.group(g))? == SatStatus::Conflict {
            return Ok(SatStatus::Conflict);
        }
    }
    Ok(SatStatus::Consistent)
}

fn budget_hit(cfg: &EnumConfig, stats: &EnumerationStats, start: Instant) -> bool {
    cfg.max_muses.is_some_and(|cap| stats.mus_count >= cap)
        || cfg.max_mcses.is_some_and(|cap| stats.mcs_count >= cap)
        || cfg.time_budget.is_some_and(|budget| start.elapsed() >= budget)
}

fn finish(stats: &mut EnumerationStats, map: &MapSolver, engine: &LturEngine, start: Instant) {
    stats.map_solver_calls = map.solve_calls();
    stats.ltur_pushes = engine.pushes();
    stats.ltur_work = engine.work();
    stats.elapsed = start.elapsed();
}

fn validate(
    f: &GroupedFormula,
    muses: &BTreeSet<Vec<GroupId>>,
    mcses: &BTreeSet<Vec<GroupId>>,
) -> Result<(), EnumError> {
    let to_sets = |fam: &BTreeSet<Vec<GroupId>>| -> BTreeSet<oracle::GroupSet> {
        fam.iter().map(|s| s.iter().copied().collect()).collect()
    };
    let expected_muses = oracle::all_muses(f)?;
    let expected_mcses = oracle::all_mcses(f)?;
    if to_sets(muses) != expected_muses {
        return Err(EnumError::ValidationFailed(format!(
            "MUS family differs: got {}, expected {}",
            muses.len(),
            expected_muses.len()
        )));
    }
    if to_sets(mcses) != expected_mcses {
        return Err(EnumError::ValidationFailed(format!(
            "MCS family differs: got {}, expected {}",
            mcses.len(),
            expected_mcses.len()
        )));
    }
    Ok(())
}
