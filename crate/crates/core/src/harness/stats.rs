use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::Sense;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub best: f64,
    pub avg: f64,
    pub worst: f64,
    /// Sample standard deviation of the kept runs, 0 for a single run.
    pub sd: f64,
    pub n_used: usize,
}

/// Statistics over the `keep_best` best values.
pub fn trimmed_stats(values: &[f64], keep_best: usize, sense: Sense) -> Result<SummaryStats> {
    if values.is_empty() {
        return Err(Error::EmptyInput("final fitness list"));
    }
    if keep_best == 0 || keep_best > values.len() {
        return Err(Error::InvalidConfig(format!(
            "keep_best must be in 1..={}, got {keep_best}",
            values.len()
        )));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| sense.cmp(*a, *b));
    let kept = &sorted[..keep_best];
    let n = kept.len() as f64;
    let avg = kept.iter().sum::<f64>() / n;
    let sd = if kept.len() > 1 {
        (kept.iter().map(|v| (v - avg).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(SummaryStats {
        best: kept[0],
        avg,
        worst: kept[keep_best - 1],
        sd,
        n_used: keep_best,
    })
}

/// `Less` when `a` ranks ahead of `b`: better average, then better best,
/// then smaller standard deviation.
pub fn compare_rows(a: &SummaryStats, b: &SummaryStats, sense: Sense) -> Ordering {
    sense
        .cmp(a.avg, b.avg)
        .then_with(|| sense.cmp(a.best, b.best))
        .then_with(|| a.sd.total_cmp(&b.sd))
}
