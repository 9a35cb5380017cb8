//! Prints MUSes/second and time-to-first-MUS over a range of generated
//! instances.
//!
//! Usage: hornmus-bench [VARS] [GROUPS] [DENSITY] [SEEDS] [TIMEOUT_SECS]

use std::time::Duration;

use hornmus::bench::{format_row, run_bench, BenchParams, HEADER};

fn arg<T: std::str::FromStr>(args: &[String], i: usize, default: T) -> T {
    args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let params = BenchParams {
        num_vars: arg(&args, 0, 60),
        num_groups: arg(&args, 1, 16),
        density: arg(&args, 2, 0.5),
        seeds: arg(&args, 3, 20),
        time_budget: Some(Duration::from_secs_f64(arg(&args, 4, 10.0))),
    };
    println!(
        "# vars={} groups={} density={} seeds={}",
        params.num_vars, params.num_groups, params.density, params.seeds
    );
    println!("{HEADER}");
    let rows = run_bench(&params);
    for row in &rows {
        println!("{}", format_row(row));
    }
    let muses: usize = rows.iter().map(|r| r.stats.mus_count).sum();
    let secs: f64 = rows.iter().map(|r| r.stats.elapsed.as_secs_f64()).sum();
    println!(
        "# instances={} muses={} total_s={:.3} mus/sec={:.1}",
        rows.len(),
        muses,
        secs,
        muses as f64 / secs.max(1e-9)
    );
}
