//! Incremental linear-time unit resolution for Horn clauses.
//!
//! Only assignments to 1 are ever made. Each clause keeps a counter of body
//! variables whose assignment has not yet been propagated; when it reaches
//! zero the head is set, or, for a headless clause, a conflict is raised.
//! Clauses are reached through per-variable adjacency lists, so the total
//! work over a push/rollback epoch is linear in the number of literals.
//!
//! [`LturEngine::checkpoint`] and [`LturEngine::rollback`] unwind both
//! assignments and clause additions.

use crate::error::LturError;
use crate::model::HornClause;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatStatus {
    Consistent,
    Conflict,
}

/// Sizes of the trail and clause store at the time it was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checkpoint {
    pub trail_length: usize,
    pub clause_count: usize,
    conflict: Option<u32>,
}

impl Checkpoint {
    /// The state of a freshly constructed engine.
    pub const ORIGIN: Checkpoint = Checkpoint {
        trail_length: 0,
        clause_count: 0,
        conflict: None,
    };
}

#[derive(Debug, Clone)]
pub struct LturEngine {
    num_vars: u32,
    clauses: Vec<HornClause>,
    /// Body variables of each clause not yet propagated.
    counters: Vec<u32>,
    /// For every variable, the clauses containing it in the body, in push order.
    occurs: Vec<Vec<u32>>,
    assigned: Vec<bool>,
    trail: Vec<u32>,
    /// Trail entries before this index have had their adjacency lists walked.
    propagated: usize,
    conflict: Option<u32>,
    work: u64,
    pushes: u64,
}

impl LturEngine {
    pub fn new(num_vars: u32) -> LturEngine {
        LturEngine {
            num_vars,
            clauses: Vec::new(),
            counters: Vec::new(),
            occurs: vec![Vec::new(); num_vars as usize + 1],
            assigned: vec![false; num_vars as usize + 1],
            trail: Vec::new(),
            propagated: 0,
            conflict: None,
            work: 0,
            pushes: 0,
        }
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    /// Adds clauses and propagates their consequences.
    ///
    /// Returns `Conflict` iff the accumulated formula is unsatisfiable. The
    /// whole batch is stored even when a conflict is found part way through.
    pub fn push_clauses<'a, I>(&mut self, clauses: I) -> Result<SatStatus, LturError>
    where
        I: IntoIterator<Item = &'a HornClause>,
    {
        if self.conflict.is_some() {
            return Err(LturError::CalledInConflict);
        }
        debug_assert_eq!(self.propagated, self.trail.len());
        self.pushes += 1;
        let first_new = self.clauses.len();
        for clause in clauses {
            debug_assert!(clause.max_var() <= self.num_vars);
            let id = self.clauses.len() as u32;
            let mut pending = 0;
            for &v in &clause.body {
                self.occurs[v as usize].push(id);
                if !self.assigned[v as usize] {
                    pending += 1;
                }
            }
            self.work += clause.len() as u64;
            self.clauses.push(clause.clone());
            self.counters.push(pending);
        }
        for id in first_new..self.clauses.len() {
            if self.counters[id] == 0 {
                match self.clauses[id].head {
                    Some(h) => self.assign(h),
                    None => {
                        self.conflict = Some(id as u32);
                        return Ok(SatStatus::Conflict);
                    }
                }
            }
        }
        Ok(self.propagate())
    }

    fn assign(&mut self, var: u32) {
        if !self.assigned[var as usize] {
            self.assigned[var as usize] = true;
            self.trail.push(var);
        }
    }

    /// Breadth-first: the trail doubles as the queue. A conflict ends
    /// propagation once the current variable's adjacency list is finished,
    /// so every walked list is walked completely.
    fn propagate(&mut self) -> SatStatus {
        while self.propagated < self.trail.len() {
            let var = self.trail[self.propagated] as usize;
            self.propagated += 1;
            let occurs = std::mem::take(&mut self.occurs[var]);
            for &id in &occurs {
                self.work += 1;
                let counter = &mut self.counters[id as usize];
                *counter -= 1;
                if *counter == 0 {
                    match self.clauses[id as usize].head {
                        Some(h) => self.assign(h),
                        None => {
                            if self.conflict.is_none() {
                                self.conflict = Some(id);
                            }
                        }
                    }
                }
            }
            self.occurs[var] = occurs;
            if self.conflict.is_some() {
                return SatStatus::Conflict;
            }
        }
        SatStatus::Consistent
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            trail_length: self.trail.len(),
            clause_count: self.clauses.len(),
            conflict: self.conflict,
        }
    }

    /// Restores the engine to the state captured by `mark`.
    pub fn rollback(&mut self, mark: Checkpoint) -> Result<(), LturError> {
        if mark.trail_length > self.trail.len() || mark.clause_count > self.clauses.len() {
            return Err(LturError::StaleCheckpoint);
        }
        // Drop clauses newest first; each one is at the tail of its body
        // variables' adjacency lists.
        while self.clauses.len() > mark.clause_count {
            let id = self.clauses.len() as u32 - 1;
            let clause = self.clauses.pop().expect("nonempty");
            self.counters.pop();
            for &v in clause.body.iter() {
                let popped = self.occurs[v as usize].pop();
                debug_assert_eq!(popped, Some(id));
            }
        }
        while self.trail.len() > mark.trail_length {
            let pos = self.trail.len() - 1;
            let var = self.trail.pop().expect("nonempty") as usize;
            if pos < self.propagated {
                for &id in &self.occurs[var] {
                    self.counters[id as usize] += 1;
                }
            }
            self.assigned[var] = false;
        }
        self.propagated = self.propagated.min(mark.trail_length);
        // Marks taken in a consistent state clear the conflict.
        self.conflict = mark.conflict;
        Ok(())
    }

    pub fn status(&self) -> SatStatus {
        if self.conflict.is_some() {
            SatStatus::Conflict
        } else {
            SatStatus::Consistent
        }
    }

    pub fn is_conflict(&self) -> bool {
        self.conflict.is_some()
    }

    /// The headless clause that produced the current conflict.
    pub fn conflict_clause(&self) -> Option<&HornClause> {
        self.conflict.map(|id| &self.clauses[id as usize])
    }

    pub fn is_true(&self, var: u32) -> bool {
        self.assigned.get(var as usize).copied().unwrap_or(false)
    }

    /// Variables assigned 1, in assignment order.
    pub fn trail(&self) -> &[u32] {
        &self.trail
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Literal visits performed so far.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// Number of `push_clauses` calls made so far.
    pub fn pushes(&self) -> u64 {
        self.pushes
    }

    /// Assignment with trail variables set and everything else cleared,
    /// indexed by variable.
    pub fn assignment(&self) -> Vec<bool> {
        self.assigned.clone()
    }
}
