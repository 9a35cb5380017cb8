#![allow(dead_code)]

use std::collections::BTreeSet;

use hornmus::fixtures::random_horn;
use hornmus::generate::gen_random;
use hornmus::model::{GroupedFormula, HornClause};
use hornmus::oracle::horn_satisfiable;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random instance with groups of one to three arbitrary Horn clauses.
pub fn random_grouped(rng: &mut ChaCha8Rng, num_vars: u32, num_groups: usize) -> GroupedFormula {
    let hard_count = rng.gen_range(0..2 * num_vars as usize);
    let hard: Vec<HornClause> = random_horn(rng, num_vars, hard_count)
        .into_iter()
        .filter(|c| !c.is_empty())
        .collect();
    let groups = (0..num_groups)
        .map(|_| loop {
            let size = rng.gen_range(1..=3);
            let g: Vec<HornClause> = random_horn(rng, num_vars, size)
                .into_iter()
                .filter(|c| !c.is_empty())
                .collect();
            if !g.is_empty() {
                break g;
            }
        })
        .collect();
    GroupedFormula::from_horn(hard, groups, num_vars).unwrap()
}

pub fn hard_sat(f: &GroupedFormula) -> bool {
    horn_satisfiable(f.num_vars(), f.hard())
}

pub fn all_unsat(f: &GroupedFormula) -> bool {
    let all = f.groups().flat_map(|(_, cs)| cs.iter());
    !horn_satisfiable(f.num_vars(), f.hard().iter().chain(all))
}

/// A valid enumeration input: hard part satisfiable, everything together not.
pub fn is_enumerable(f: &GroupedFormula) -> bool {
    hard_sat(f) && all_unsat(f)
}

/// Deterministic stream of enumerable instances, alternating between the
/// single-fact generator and random multi-clause groups.
pub fn instances(count: usize, max_vars: u32, max_groups: usize, seed: u64) -> Vec<GroupedFormula> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let groups = r.gen_range(1..=max_groups);
        let vars = r.gen_range(2..=max_vars);
        let f = if r.gen_bool(0.5) {
            gen_random(vars, groups as u32, r.gen_range(0.1..0.9), r.gen())
        } else {
            random_grouped(&mut r, vars, groups)
        };
        if is_enumerable(&f) {
            out.push(f);
        }
    }
    out
}

pub fn to_set(v: &[u32]) -> BTreeSet<u32> {
    v.iter().copied().collect()
}
