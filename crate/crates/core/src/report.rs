//! Line-oriented result format.
//!
//! ```text
//! U 1 2 0                                   a MUS
//! C 3 0                                     an MCS
//! s STATS mus=1 mcs=1 iters=2 time=0.000    footer
//! ```
//!
//! Group ids are printed in ascending order.

use std::time::Duration;

use crate::enumerate::{EnumerationStats, Found};

fn line(tag: char, ids: &[u32]) -> String {
    let mut sorted = ids.to_vec();
    sorted.sort_unstable();
    let mut out = String::from(tag);
    for id in sorted {
        out.push(' ');
        out.push_str(&id.to_string());
    }
    out.push_str(" 0");
    out
}

pub fn emit_result(found: &Found) -> String {
    match found {
        Found::Mus(ids) => line('U', ids),
        Found::Mcs(ids) => line('C', ids),
    }
}

pub fn stats_footer(mus: usize, mcs: usize, iterations: usize, elapsed: Duration) -> String {
    format!(
        "s STATS mus={mus} mcs={mcs} iters={iterations} time={:.3}",
        elapsed.as_secs_f64()
    )
}

pub fn emit_stats(stats: &EnumerationStats) -> String {
    stats_footer(stats.mus_count, stats.mcs_count, stats.iterations, stats.elapsed)
}

/// Extra solver counters, printed as a comment line.
pub fn emit_counters(stats: &EnumerationStats) -> String {
    format!(
        "c map_calls={} ltur_pushes={} ltur_work={}",
        stats.map_solver_calls, stats.ltur_pushes, stats.ltur_work
    )
}
