//! Small named instances and random clause helpers shared by tests,
//! benchmarks and documentation.

use rand::Rng;

use crate::model::{Clause, GroupedFormula, HornClause};

fn cls(clauses: &[&[i64]]) -> Vec<Clause> {
    clauses
        .iter()
        .map(|c| Clause::from_dimacs(c).expect("valid clause"))
        .collect()
}

/// `a -> c`, `b -> c`, `not c`; groups `(a)`, `(b)`. MUSes `{1}`, `{2}`.
pub fn e1() -> GroupedFormula {
    GroupedFormula::build(&cls(&[&[-1, 3], &[-2, 3], &[-3]]), &[cls(&[&[1]]), cls(&[&[2]])], 3).expect("valid instance")
}

/// `a and b -> c`, `not c`; groups `(a)`, `(b)`. Single MUS `{1, 2}`.
pub fn e2() -> GroupedFormula {
    GroupedFormula::build(&cls(&[&[-1, -2, 3], &[-3]]), &[cls(&[&[1]]), cls(&[&[2]])], 3).expect("valid instance")
}

/// `not x`; group `(x)`.
pub fn e3() -> GroupedFormula {
    GroupedFormula::build(&cls(&[&[-1]]), &[cls(&[&[1]])], 1).expect("valid instance")
}

/// Random Horn clauses over `1..=num_vars` with bodies of up to three
/// variables; roughly one in four clauses is headless.
pub fn random_horn<R: Rng>(rng: &mut R, num_vars: u32, count: usize) -> Vec<HornClause> {
    (0..count)
        .map(|_| {
            let head = if rng.gen_bool(0.75) {
                Some(rng.gen_range(1..=num_vars))
            } else {
                None
            };
            let body_len = rng.gen_range(0..=3);
            let body = (0..body_len)
                .map(|_| rng.gen_range(1..=num_vars))
                .filter(|&v| Some(v) != head)
                .collect();
            HornClause::new(body, head)
        })
        .collect()
}
