//! SAT oracle for the selector formula `Q`.
//!
//! `Q` collects blocking clauses over the selectors `1..=k`: all-negative
//! clauses for MUSes found so far and all-positive clauses for MCSes. The
//! solver is a compact CDCL search (two watched literals, first-UIP
//! learning, activity-based branching) with MiniSat-style assumptions.
//! Decisions always pick the positive phase, so variables that `Q` leaves
//! unconstrained come back assigned 1.

use crate::error::MapError;
use crate::model::{Clause, Lit};

/// A complete assignment over the selectors, indexed `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model(Vec<bool>);

impl Model {
    pub fn value(&self, var: u32) -> bool {
        self.0[var as usize]
    }

    pub fn satisfies(&self, lit: Lit) -> bool {
        self.value(lit.var()) == lit.is_positive()
    }

    pub fn satisfies_clause(&self, clause: &Clause) -> bool {
        clause.lits().iter().any(|&l| self.satisfies(l))
    }

    /// Selectors assigned 1, ascending.
    pub fn positives(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &b)| b)
            .map(|(v, _)| v as u32)
    }

    pub fn from_positives(num_vars: u32, positives: impl IntoIterator<Item = u32>) -> Model {
        let mut values = vec![false; num_vars as usize + 1];
        for v in positives {
            values[v as usize] = true;
        }
        Model(values)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    True,
    False,
    Unassigned,
}

type ClauseRef = usize;

#[inline]
fn value_of(values: &[Value], lit: Lit) -> Value {
    match values[lit.var() as usize] {
        Value::Unassigned => Value::Unassigned,
        Value::True if lit.is_positive() => Value::True,
        Value::False if !lit.is_positive() => Value::True,
        _ => Value::False,
    }
}

#[derive(Debug, Clone)]
pub struct MapSolver {
    num_vars: u32,
    /// Clauses added through [`MapSolver::add_clause`], as given.
    original: Vec<Clause>,
    pos_occurrences: Vec<u32>,
    neg_occurrences: Vec<u32>,

    db: Vec<Vec<Lit>>,
    learnt_count: usize,
    watches: Vec<Vec<ClauseRef>>,
    values: Vec<Value>,
    levels: Vec<usize>,
    reasons: Vec<Option<ClauseRef>>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    activity_inc: f64,
    seen: Vec<bool>,
    /// `Q` itself is unsatisfiable.
    inconsistent: bool,
    solve_calls: u64,
    conflicts: u64,
}

impl MapSolver {
    pub fn new(num_selectors: u32) -> MapSolver {
        let n = num_selectors as usize + 1;
        MapSolver {
            num_vars: num_selectors,
            original: Vec::new(),
            pos_occurrences: vec![0; n],
            neg_occurrences: vec![0; n],
            db: Vec::new(),
            learnt_count: 0,
            watches: vec![Vec::new(); 2 * n],
            values: vec![Value::Unassigned; n],
            levels: vec![0; n],
            reasons: vec![None; n],
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; n],
            activity_inc: 1.0,
            seen: vec![false; n],
            inconsistent: false,
            solve_calls: 0,
            conflicts: 0,
        }
    }

    pub fn num_selectors(&self) -> u32 {
        self.num_vars
    }

    /// The clauses of `Q`, excluding learnt clauses.
    pub fn clauses(&self) -> &[Clause] {
        &self.original
    }

    pub fn solve_calls(&self) -> u64 {
        self.solve_calls
    }

    pub fn learnt_count(&self) -> usize {
        self.learnt_count
    }

    pub fn add_clause(&mut self, clause: Clause) -> Result<(), MapError> {
        if let Some(bad) = clause.lits().iter().find(|l| l.var() == 0 || l.var() > self.num_vars) {
            return Err(MapError::OutOfRangeSelector {
                selector: bad.var(),
                num_selectors: self.num_vars,
            });
        }
        for &l in clause.lits() {
            if l.is_positive() {
                self.pos_occurrences[l.var() as usize] += 1;
            } else {
                self.neg_occurrences[l.var() as usize] += 1;
            }
        }
        self.insert(clause.lits());
        self.original.push(clause);
        Ok(())
    }

    /// Selectors with no negative occurrence in `Q`.
    pub fn pure_positive(&self) -> Vec<u32> {
        (1..=self.num_vars)
            .filter(|&v| self.neg_occurrences[v as usize] == 0)
            .collect()
    }

    pub fn occurrences(&self, var: u32) -> (u32, u32) {
        (self.pos_occurrences[var as usize], self.neg_occurrences[var as usize])
    }

    /// Decides `Q` under the given assumptions. Returns a complete model
    /// when satisfiable.
    pub fn solve(&mut self, assumptions: &[Lit]) -> Option<Model> {
        self.solve_calls += 1;
        debug_assert!(assumptions.iter().all(|a| a.var() >= 1 && a.var() <= self.num_vars));
        if self.inconsistent {
            return None;
        }
        self.cancel_until(0);
        if self.propagate().is_some() {
            self.inconsistent = true;
            return None;
        }
        let result = self.search(assumptions);
        self.cancel_until(0);
        result
    }

    fn search(&mut self, assumptions: &[Lit]) -> Option<Model> {
        loop {
            if let Some(conflict) = self.propagate() {
                self.conflicts += 1;
                if self.decision_level() == 0 {
                    self.inconsistent = true;
                    return None;
                }
                let (learnt, backjump) = self.analyze(conflict);
                self.cancel_until(backjump);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], None);
                } else {
                    let asserting = learnt[0];
                    let cref = self.attach(learnt);
                    self.learnt_count += 1;
                    self.enqueue(asserting, Some(cref));
                }
                self.activity_inc *= 1.0 / 0.95;
                continue;
            }
            let level = self.decision_level();
            if level < assumptions.len() {
                let a = assumptions[level];
                match self.lit_value(a) {
                    Value::True => self.trail_lim.push(self.trail.len()),
                    Value::False => return None,
                    Value::Unassigned => {
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(a, None);
                    }
                }
                continue;
            }
            match self.pick_branch_var() {
                None => return Some(self.model()),
                Some(v) => {
                    self.trail_lim.push(self.trail.len());
                    self.enqueue(Lit::pos(v), None);
                }
            }
        }
    }

    fn model(&self) -> Model {
        Model(self.values.iter().map(|v| matches!(v, Value::True)).collect())
    }

    /// Adds a clause at decision level 0.
    fn insert(&mut self, lits: &[Lit]) {
        if self.inconsistent {
            return;
        }
        self.cancel_until(0);
        let mut kept = Vec::with_capacity(lits.len());
        for &l in lits {
            match self.lit_value(l) {
                Value::True => return,
                Value::False => {}
                Value::Unassigned => kept.push(l),
            }
        }
        match kept.len() {
            0 => self.inconsistent = true,
            1 => self.enqueue(kept[0], None),
            _ => {
                self.attach(kept);
            }
        }
    }

    fn attach(&mut self, lits: Vec<Lit>) -> ClauseRef {
        let cref = self.db.len();
        self.watches[(!lits[0]).code()].push(cref);
        self.watches[(!lits[1]).code()].push(cref);
        self.db.push(lits);
        cref
    }

    fn decision_level(&self) -> usize {
        self.trail_lim.len()
    }

    fn lit_value(&self, lit: Lit) -> Value {
        value_of(&self.values, lit)
    }

    fn enqueue(&mut self, lit: Lit, reason: Option<ClauseRef>) {
        let v = lit.var() as usize;
        debug_assert_eq!(self.values[v], Value::Unassigned);
        self.values[v] = if lit.is_positive() { Value::True } else { Value::False };
        self.levels[v] = self.decision_level();
        self.reasons[v] = reason;
        self.trail.push(lit);
    }

    fn cancel_until(&mut self, level: usize) {
        if self.decision_level() <= level {
            return;
        }
        let keep = self.trail_lim[level];
        for lit in self.trail.drain(keep..) {
            let v = lit.var() as usize;
            self.values[v] = Value::Unassigned;
            self.reasons[v] = None;
        }
        self.trail_lim.truncate(level);
        self.qhead = self.qhead.min(keep);
    }

    /// Two-watched-literal propagation. Watch lists are indexed by the
    /// negation of the watched literal, i.e. by the literal whose assignment
    /// makes the watch false.
    fn propagate(&mut self) -> Option<ClauseRef> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = !p;
            let mut watchers = std::mem::take(&mut self.watches[p.code()]);
            let mut i = 0;
            let mut conflict = None;
            while i < watchers.len() {
                let cref = watchers[i];
                let clause = &mut self.db[cref];
                if clause[0] == false_lit {
                    clause.swap(0, 1);
                }
                let first = clause[0];
                if value_of(&self.values, first) == Value::True {
                    i += 1;
                    continue;
                }
                let replacement = (2..clause.len()).find(|&k| value_of(&self.values, clause[k]) != Value::False);
                if let Some(k) = replacement {
                    clause.swap(1, k);
                    self.watches[(!clause[1]).code()].push(cref);
                    watchers.swap_remove(i);
                    continue;
                }
                i += 1;
                if value_of(&self.values, first) == Value::False {
                    conflict = Some(cref);
                    break;
                }
                self.enqueue(first, Some(cref));
            }
            debug_assert!(self.watches[p.code()].is_empty());
            self.watches[p.code()] = watchers;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    /// First-UIP conflict analysis. Returns the learnt clause, asserting
    /// literal first, and the level to backjump to.
    fn analyze(&mut self, conflict: ClauseRef) -> (Vec<Lit>, usize) {
        let mut learnt = vec![Lit::pos(1)];
        let mut pending = 0usize;
        let mut index = self.trail.len();
        let mut reason = conflict;
        let mut uip: Option<Lit> = None;
        loop {
            let start = if uip.is_none() { 0 } else { 1 };
            for k in start..self.db[reason].len() {
                let q = self.db[reason][k];
                let v = q.var() as usize;
                if self.seen[v] || self.levels[v] == 0 {
                    continue;
                }
                self.seen[v] = true;
                self.bump(v);
                if self.levels[v] == self.decision_level() {
                    pending += 1;
                } else {
                    learnt.push(q);
                }
            }
            // Next seen literal on the trail at the conflict level.
            loop {
                index -= 1;
                if self.seen[self.trail[index].var() as usize] {
                    break;
                }
            }
            let p = self.trail[index];
            self.seen[p.var() as usize] = false;
            pending -= 1;
            uip = Some(p);
            if pending == 0 {
                break;
            }
            reason = self.reasons[p.var() as usize].expect("implied literal has a reason");
        }
        learnt[0] = !uip.expect("conflict level has a literal");
        for l in &learnt[1..] {
            self.seen[l.var() as usize] = false;
        }
        let backjump = if learnt.len() == 1 {
            0
        } else {
            let (max_i, _) = learnt
                .iter()
                .enumerate()
                .skip(1)
                .max_by_key(|(_, l)| self.levels[l.var() as usize])
                .expect("nonempty tail");
            learnt.swap(1, max_i);
            self.levels[learnt[1].var() as usize]
        };
        (learnt, backjump)
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.activity_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.activity_inc *= 1e-100;
        }
    }

    /// Highest activity unassigned variable, lowest index on ties.
    fn pick_branch_var(&self) -> Option<u32> {
        let mut best: Option<(u32, f64)> = None;
        for v in 1..=self.num_vars {
            if self.values[v as usize] == Value::Unassigned {
                let a = self.activity[v as usize];
                if best.is_none_or(|(_, b)| a > b) {
                    best = Some((v, a));
                }
            }
        }
        best.map(|(v, _)| v)
    }
}
