//! Seeded random instances shaped like axiom-pinpointing encodings: every
//! group is a single fact, the hard part is an acyclic rule base that
//! derives a goal variable, and one headless clause forbids the goal.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{GroupedFormula, HornClause};

/// Builds a reproducible instance.
///
/// Variables `1..=num_groups` (wrapping if there are fewer variables than
/// groups) are the facts asserted by the groups. Every later variable gets
/// a rule whose body is drawn from lower-numbered variables with
/// probability 0.9, plus further alternative rules with probability
/// `density` each (at most three in total). The highest variable is the
/// goal, and `¬goal` is hard.
pub fn gen_random(num_vars: u32, num_groups: u32, density: f64, seed: u64) -> GroupedFormula {
    assert!(num_vars >= 2 && num_groups >= 1, "parameters must be positive");
    let density = density.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sources = num_groups.min(num_vars - 1);
    let goal = num_vars;

    let mut hard = Vec::new();
    for head in sources + 1..=num_vars {
        let mut rules = 0;
        if rng.gen_bool(0.9) {
            hard.push(random_rule(&mut rng, head));
            rules += 1;
        }
        while rules < 3 && rng.gen_bool(density) {
            hard.push(random_rule(&mut rng, head));
            rules += 1;
        }
    }
    hard.push(HornClause::goal(vec![goal]));

    let groups = (0..num_groups)
        .map(|i| vec![HornClause::fact(i % sources + 1)])
        .collect();
    GroupedFormula::from_horn(hard, groups, num_vars).expect("generated instance is well formed")
}

fn random_rule(rng: &mut ChaCha8Rng, head: u32) -> HornClause {
    let max_body = (head - 1).min(3);
    let len = rng.gen_range(1..=max_body);
    let body = (0..len).map(|_| rng.gen_range(1..head)).collect();
    HornClause::new(body, Some(head))
}
