//! The twenty-problem benchmark suite, its reference data and the experiments
//! run over it.

mod fixtures;
mod functions;
mod harness;
mod oracle;
mod runner;
mod sweep;

pub use fixtures::{
    fixture, parse_fixture, render_fixture, Fixture, FixtureRecord, OracleRecord, ReferenceColumn,
    ReferenceCounts, COLUMNS,
};
pub use functions::{all_functions, table3, BenchFunction, power, FUNCTION_COUNT};
pub use harness::{check_case, numerical_minimizer_set, run_harness, HarnessCase, HarnessReport, SyntheticTarget, Violation};
pub use oracle::{reference_minimizer, scan_minimizer, ReferenceMinimum, GRID_POINTS};
pub use runner::{run_benchmark, run_cell, BenchReport, BenchRow};
pub use sweep::{
    exponent_ratio, ratio_grid, sweep_ratio_a_exponent, sweep_ratio_c, ExponentSample,
    RatioSample, RatioSweep,
};
