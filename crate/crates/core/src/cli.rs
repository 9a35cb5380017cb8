//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::Parser;

use crate::enumerate::{enumerate, EnumConfig};
use crate::error::EnumError;
use crate::gcnf::{parse_gcnf, write_gcnf};
use crate::generate::gen_random;
use crate::report::{emit_counters, emit_result, emit_stats};

pub const EXIT_COMPLETE: i32 = 0;
pub const EXIT_VALIDATION_FAILED: i32 = 1;
pub const EXIT_PARTIAL: i32 = 10;
pub const EXIT_INPUT_ERROR: i32 = 20;
pub const EXIT_HARD_UNSAT: i32 = 30;
pub const EXIT_TOTALLY_SAT: i32 = 40;

#[derive(Debug, Parser)]
#[command(
    name = "hornmus",
    version,
    about = "Enumerate group-MUSes and group-MCSes of a Horn GCNF formula"
)]
pub struct Args {
    /// Input formula in GCNF format.
    pub file: Option<PathBuf>,
    /// Stop after this many MUSes.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_mus: Option<u64>,
    /// Stop after this many MCSes.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_mcs: Option<u64>,
    /// Wall-clock budget in seconds, checked between iterations.
    #[arg(long)]
    pub timeout: Option<f64>,
    /// Print MCSes as `C` lines.
    #[arg(long)]
    pub print_mcs: bool,
    /// Report the empty MCS for satisfiable input instead of failing.
    #[arg(long)]
    pub allow_sat: bool,
    /// Cross-check the output against exhaustive enumeration (small inputs only).
    #[arg(long)]
    pub validate: bool,
    /// Print solver counters before the footer.
    #[arg(long)]
    pub stats: bool,
    /// Solve a generated instance with this seed instead of reading a file.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Variables of the generated instance.
    #[arg(long, default_value_t = 20)]
    pub gen_vars: u32,
    /// Groups of the generated instance.
    #[arg(long, default_value_t = 10)]
    pub gen_groups: u32,
    /// Rule density of the generated instance.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Print the formula in canonical GCNF and exit.
    #[arg(long)]
    pub dump_gcnf: bool,
}

/// Runs the command line and returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT_ERROR;
            }
            let _ = write!(out, "{e}");
            return EXIT_COMPLETE;
        }
    };
    run(&args, out, err)
}

pub fn run(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let formula = match (&args.file, args.seed) {
        (Some(path), None) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                    return EXIT_INPUT_ERROR;
                }
            };
            match parse_gcnf(&text) {
                Ok(f) => f,
                Err(e) => {
                    let _ = writeln!(err, "error: {}: {e}", path.display());
                    return EXIT_INPUT_ERROR;
                }
            }
        }
        (None, Some(seed)) => {
            if args.gen_vars < 2 || args.gen_groups < 1 || !(0.0..=1.0).contains(&args.density) {
                let _ = writeln!(
                    err,
                    "error: generator needs --gen-vars >= 2, --gen-groups >= 1, --density in [0, 1]"
                );
                return EXIT_INPUT_ERROR;
            }
            gen_random(args.gen_vars, args.gen_groups, args.density, seed)
        }
        (Some(_), Some(_)) => {
            let _ = writeln!(err, "error: give either an input file or --seed, not both");
            return EXIT_INPUT_ERROR;
        }
        (None, None) => {
            let _ = writeln!(err, "error: no input file (or --seed) given");
            return EXIT_INPUT_ERROR;
        }
    };

    if args.dump_gcnf {
        let _ = write!(out, "{}", write_gcnf(&formula));
        return EXIT_COMPLETE;
    }

    let time_budget = match args.timeout {
        Some(t) if t.is_finite() && t >= 0.0 => Some(Duration::from_secs_f64(t)),
        Some(_) => {
            let _ = writeln!(err, "error: --timeout must be a non-negative number of seconds");
            return EXIT_INPUT_ERROR;
        }
        None => None,
    };
    let cfg = EnumConfig {
        max_muses: args.max_mus.map(|n| n as usize),
        max_mcses: args.max_mcs.map(|n| n as usize),
        time_budget,
        report_mcs: args.print_mcs,
        allow_sat: args.allow_sat,
        validate: args.validate,
    };

    let result = enumerate(&formula, &cfg, |found| {
        let _ = writeln!(out, "{}", emit_result(found));
        let _ = out.flush();
    });
    let (stats, code) = match result {
        Ok(stats) => (stats, EXIT_COMPLETE),
        Err(EnumError::BudgetExhausted(stats)) => (stats, EXIT_PARTIAL),
        Err(e @ EnumError::HardUnsat) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_HARD_UNSAT;
        }
        Err(e @ EnumError::TotallySat) => {
            let _ = writeln!(err, "error: {e} (use --allow-sat to report the empty MCS)");
            return EXIT_TOTALLY_SAT;
        }
        Err(e @ EnumError::Oracle(_)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT_ERROR;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_VALIDATION_FAILED;
        }
    };
    if args.stats {
        let _ = writeln!(out, "{}", emit_counters(&stats));
    }
    let _ = writeln!(out, "{}", emit_stats(&stats));
    let _ = out.flush();
    code
}
