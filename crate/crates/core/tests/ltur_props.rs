mod common;

use hornmus::ltur::{Checkpoint, LturEngine, SatStatus};
use hornmus::model::HornClause;
use hornmus::oracle::satisfiable_by_enumeration;
use proptest::prelude::*;

fn horn_clause(num_vars: u32) -> impl Strategy<Value = HornClause> {
    (
        proptest::collection::btree_set(1..=num_vars, 0..4),
        proptest::option::weighted(0.75, 1..=num_vars),
    )
        .prop_map(|(body, head)| {
            let body = body.into_iter().filter(|&v| Some(v) != head).collect();
            HornClause::new(body, head)
        })
}

fn batches(num_vars: u32) -> impl Strategy<Value = Vec<Vec<HornClause>>> {
    proptest::collection::vec(proptest::collection::vec(horn_clause(num_vars), 0..5), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Status after each push equals exhaustive satisfiability, and in the
    /// consistent case the trail is a model.
    #[test]
    fn status_matches_enumeration(batches in batches(10)) {
        let mut e = LturEngine::new(10);
        let mut pushed: Vec<HornClause> = Vec::new();
        for batch in &batches {
            pushed.extend(batch.iter().cloned());
            let status = e.push_clauses(batch).unwrap();
            let sat = satisfiable_by_enumeration(10, &pushed);
            prop_assert_eq!(status == SatStatus::Consistent, sat);
            if status == SatStatus::Conflict {
                break;
            }
            let model = e.assignment();
            prop_assert!(pushed.iter().all(|c| c.satisfied_by(&model)));
            // every true variable is forced: the trail is the least model
            for &v in e.trail() {
                let mut without = pushed.clone();
                without.push(HornClause::goal(vec![v]));
                prop_assert!(!satisfiable_by_enumeration(10, &without));
            }
        }
    }

    /// Rolling back and replaying matches a fresh engine that only saw the
    /// surviving pushes.
    #[test]
    fn rollback_matches_replay(
        batches in batches(8),
        script in proptest::collection::vec((any::<bool>(), 0usize..6), 1..12),
    ) {
        let mut e = LturEngine::new(8);
        let mut marks: Vec<(Checkpoint, usize)> = vec![(e.checkpoint(), 0)];
        let mut live: Vec<usize> = Vec::new();
        let mut next = 0;
        for (push, pick) in script {
            if push && !e.is_conflict() && next < batches.len() {
                e.push_clauses(&batches[next]).unwrap();
                live.push(next);
                next += 1;
                marks.push((e.checkpoint(), live.len()));
            } else {
                let (mark, keep) = marks[pick % marks.len()];
                e.rollback(mark).unwrap();
                live.truncate(keep);
                marks.retain(|(_, k)| *k <= keep);
            }
            let mut fresh = LturEngine::new(8);
            for &b in &live {
                if fresh.push_clauses(&batches[b]).unwrap() == SatStatus::Conflict {
                    break;
                }
            }
            prop_assert_eq!(fresh.status(), e.status());
            if !e.is_conflict() {
                prop_assert_eq!(fresh.trail(), e.trail());
            }
            for v in 1..=8 {
                prop_assert_eq!(fresh.is_true(v), e.is_true(v));
            }
        }
    }

    /// Literal visits stay within a constant factor of the formula size,
    /// whatever the batching.
    #[test]
    fn work_is_linear(clauses in proptest::collection::vec(horn_clause(30), 1..80), split in 1usize..10) {
        let size: usize = clauses.iter().map(HornClause::len).sum();
        let mut e = LturEngine::new(30);
        for chunk in clauses.chunks(split) {
            if e.push_clauses(chunk).unwrap() == SatStatus::Conflict {
                break;
            }
        }
        prop_assert!(e.work() <= 4 * size as u64, "work {} for size {}", e.work(), size);
    }
}

#[test]
fn propagation_order_does_not_change_the_result() {
    // Same clauses pushed in different orders reach the same least model.
    let clauses = vec![
        HornClause::fact(1),
        HornClause::new(vec![1], Some(2)),
        HornClause::new(vec![1, 2], Some(3)),
        HornClause::new(vec![3], Some(4)),
        HornClause::new(vec![2, 4], Some(5)),
        HornClause::new(vec![6], Some(7)),
    ];
    let mut forward = LturEngine::new(7);
    forward.push_clauses(&clauses).unwrap();
    let mut reversed = LturEngine::new(7);
    for c in clauses.iter().rev() {
        reversed.push_clauses(std::slice::from_ref(c)).unwrap();
    }
    let mut a = forward.trail().to_vec();
    let mut b = reversed.trail().to_vec();
    a.sort();
    b.sort();
    assert_eq!(a, vec![1, 2, 3, 4, 5]);
    assert_eq!(a, b);
}
