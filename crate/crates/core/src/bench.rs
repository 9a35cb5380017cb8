//! Throughput measurements on generated instances: MUSes per second and
//! time to the first MUS.

use std::time::Duration;

use crate::enumerate::{enumerate, EnumConfig, EnumerationStats};
use crate::error::EnumError;
use crate::generate::gen_random;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchParams {
    pub num_vars: u32,
    pub num_groups: u32,
    pub density: f64,
    pub seeds: u64,
    pub time_budget: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub seed: u64,
    pub complete: bool,
    pub stats: EnumerationStats,
}

impl BenchRow {
    pub fn muses_per_second(&self) -> f64 {
        let secs = self.stats.elapsed.as_secs_f64().max(1e-9);
        self.stats.mus_count as f64 / secs
    }
}

/// Enumerates every seed in `0..params.seeds`, skipping instances that are
/// satisfiable or have unsatisfiable hard clauses.
pub fn run_bench(params: &BenchParams) -> Vec<BenchRow> {
    let cfg = EnumConfig {
        time_budget: params.time_budget,
        ..EnumConfig::default()
    };
    (0..params.seeds)
        .filter_map(|seed| {
            let f = gen_random(params.num_vars, params.num_groups, params.density, seed);
            match enumerate(&f, &cfg, |_| {}) {
                Ok(stats) => Some(BenchRow {
                    seed,
                    complete: true,
                    stats,
                }),
                Err(EnumError::BudgetExhausted(stats)) => Some(BenchRow {
                    seed,
                    complete: false,
                    stats,
                }),
                Err(_) => None,
            }
        })
        .collect()
}

pub fn format_row(row: &BenchRow) -> String {
    let first = row
        .stats
        .time_to_first_mus
        .map(|d| format!("{:.6}", d.as_secs_f64()))
        .unwrap_or_else(|| "-".into());
    format!(
        "{:>6} {:>8} {:>8} {:>8} {:>12.1} {:>12} {:>10.6} {}",
        row.seed,
        row.stats.mus_count,
        row.stats.mcs_count,
        row.stats.map_solver_calls,
        row.muses_per_second(),
        first,
        row.stats.elapsed.as_secs_f64(),
        if row.complete { "complete" } else { "partial" }
    )
}

pub const HEADER: &str = "  seed     muses    mcses map_calls     mus/sec  first_mus_s    total_s status";
