mod common;

use hornmus::extract::{deletion_mus, insertion_mus};
use hornmus::ltur::LturEngine;
use hornmus::model::{GroupId, GroupedFormula, HornClause};
use hornmus::oracle::{all_muses, horn_satisfiable};

use common::{instances, to_set};

fn loaded(f: &GroupedFormula) -> LturEngine {
    let mut e = LturEngine::new(f.num_vars());
    e.push_clauses(f.hard()).unwrap();
    e
}

fn is_sat_with(f: &GroupedFormula, groups: &[GroupId]) -> bool {
    let mut e = loaded(f);
    for &g in groups {
        if e.push_clauses(f.group(g)).unwrap() == hornmus::ltur::SatStatus::Conflict {
            return false;
        }
    }
    true
}

#[test]
fn both_extractors_return_oracle_muses() {
    for f in instances(300, 14, 10, 21) {
        let muses = all_muses(&f).unwrap();
        let all: Vec<GroupId> = f.group_ids().collect();
        let mut reversed = all.clone();
        reversed.reverse();
        for order in [&all, &reversed] {
            let mut e = loaded(&f);
            let before = e.checkpoint();
            let ins = insertion_mus(&mut e, &f, order).unwrap();
            assert_eq!(e.checkpoint(), before);
            let del = deletion_mus(&mut e, &f, order).unwrap();
            assert_eq!(e.checkpoint(), before);
            assert!(muses.contains(&to_set(&ins)), "insertion {ins:?} not in {muses:?}");
            assert!(muses.contains(&to_set(&del)), "deletion {del:?} not in {muses:?}");
            for mus in [&ins, &del] {
                assert!(!is_sat_with(&f, mus));
                for g in mus {
                    let rest: Vec<GroupId> = mus.iter().copied().filter(|h| h != g).collect();
                    assert!(is_sat_with(&f, &rest));
                    // independent check, not through the engine
                    let clauses = rest.iter().flat_map(|&h| f.group(h).iter());
                    assert!(horn_satisfiable(f.num_vars(), f.hard().iter().chain(clauses)));
                }
            }
        }
    }
}

#[test]
fn work_bounds() {
    for f in instances(200, 16, 10, 22) {
        let all: Vec<GroupId> = f.group_ids().collect();
        let size = f.size_lits() as u64;
        let mut e = loaded(&f);
        let w0 = e.work();
        let mus = insertion_mus(&mut e, &f, &all).unwrap();
        let ins_work = e.work() - w0;
        assert!(
            ins_work <= 4 * mus.len() as u64 * size,
            "insertion {ins_work} > 4*{}*{size}",
            mus.len()
        );
        let w1 = e.work();
        deletion_mus(&mut e, &f, &all).unwrap();
        let del_work = e.work() - w1;
        assert!(
            del_work <= 4 * all.len() as u64 * size,
            "deletion {del_work} > 4*{}*{size}",
            all.len()
        );
    }
}

/// Chain instance: group `i` asserts `x_i`, the hard part needs two
/// specific facts for the goal. Many irrelevant groups, one MUS of size 2.
fn needle(num_groups: u32, chain: u32) -> GroupedFormula {
    let goal = num_groups + 1;
    let mut next = goal + 1;
    let mut hard = Vec::new();
    // every irrelevant fact starts a private implication chain
    for g in 1..=num_groups - 2 {
        let mut prev = g;
        for _ in 0..chain {
            hard.push(HornClause::new(vec![prev], Some(next)));
            prev = next;
            next += 1;
        }
    }
    hard.push(HornClause::new(vec![num_groups - 1, num_groups], Some(goal)));
    hard.push(HornClause::goal(vec![goal]));
    let groups = (1..=num_groups).map(|g| vec![HornClause::fact(g)]).collect();
    GroupedFormula::from_horn(hard, groups, next - 1).unwrap()
}

#[test]
fn insertion_beats_deletion_when_mus_is_small() {
    let f = needle(60, 3);
    let all: Vec<GroupId> = f.group_ids().collect();
    let mut e = loaded(&f);
    let w0 = e.work();
    assert_eq!(insertion_mus(&mut e, &f, &all).unwrap(), vec![59, 60]);
    let ins = e.work() - w0;
    let w1 = e.work();
    assert_eq!(deletion_mus(&mut e, &f, &all).unwrap(), vec![59, 60]);
    let del = e.work() - w1;
    assert!(ins * 10 < del, "insertion {ins} vs deletion {del}");
}

#[test]
fn multi_clause_groups_are_atomic() {
    // group 1 = {a, a -> b}, group 2 = {c}, hard: b and c -> false
    let f = GroupedFormula::from_horn(
        vec![HornClause::goal(vec![2, 3])],
        vec![
            vec![HornClause::fact(1), HornClause::new(vec![1], Some(2))],
            vec![HornClause::fact(3)],
        ],
        3,
    )
    .unwrap();
    assert_eq!(insertion_mus(&mut loaded(&f), &f, &[1, 2]).unwrap(), vec![1, 2]);
    assert_eq!(deletion_mus(&mut loaded(&f), &f, &[2, 1]).unwrap(), vec![1, 2]);
}
