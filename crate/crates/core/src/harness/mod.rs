//! Multi-run experiments, trimmed statistics, parameter sweeps and export.

mod experiment;
mod export;
mod ids;
mod run;
mod stats;

pub use experiment::{
    param_sweep, run_experiment, ExperimentReport, ExperimentSpec, Outcome, Protocol, SummaryRow, SweepParam,
    SweepReport, SweepRow, Tally,
};
pub use export::{
    load_summary_json, read_summary_json, read_trace_csv, save_summary_json, save_trace_csv, write_summary_json,
    write_trace_csv, Summary, TRACE_HEADER,
};
pub use ids::{parse_algorithm_list, parse_problem_list, AlgorithmId, ProblemId};
pub use run::{run_objective, run_single, IterationRecord, ParamSet, RunConfig, RunTrace};
pub use stats::{compare_rows, trimmed_stats, SummaryStats};
