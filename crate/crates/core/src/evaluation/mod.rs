//! Ranking metrics, run evaluation, parameter sweeps and significance
//! testing.

mod metrics;
mod report;
mod significance;
mod sweep;

pub use metrics::{average_precision, precision_at_k, r_precision};
pub use report::{evaluate, summary_table, MetricReport, Metrics, TopicMetrics};
pub use significance::paired_significance;
pub use sweep::{
    alpha_beta_grid, AlphaBetaRow, AlphaBetaSweep, Experiment, MRow, MSweep, RunOutcome,
};
