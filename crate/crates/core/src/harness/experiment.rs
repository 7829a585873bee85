use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::Sense;

use super::ids::{AlgorithmId, ProblemId};
use super::run::{run_single, ParamSet, RunConfig, RunTrace};
use super::stats::{compare_rows, trimmed_stats, SummaryStats};

/// What to run. Unset sizes fall back to per-problem defaults: population
/// 50, 500 iterations for F1..F7 and 1000 otherwise, 25 runs keeping the
/// best 20 for benchmarks, 30 runs keeping all 30 for design problems.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub algorithms: Vec<AlgorithmId>,
    pub problems: Vec<ProblemId>,
    pub pop_size: Option<usize>,
    pub max_iter: Option<usize>,
    pub runs: Option<usize>,
    pub keep_best: Option<usize>,
    pub base_seed: u64,
    pub params: ParamSet,
    pub constrained: bool,
    /// Population 30, half the iterations, 10 runs keeping 8.
    pub quick: bool,
}

/// Resolved sizes for one problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Protocol {
    pub pop_size: usize,
    pub max_iter: usize,
    pub runs: usize,
    pub keep_best: usize,
}

impl ExperimentSpec {
    pub fn new(algorithms: Vec<AlgorithmId>, problems: Vec<ProblemId>) -> Self {
        Self {
            algorithms,
            problems,
            pop_size: None,
            max_iter: None,
            runs: None,
            keep_best: None,
            base_seed: 0,
            params: ParamSet::default(),
            constrained: false,
            quick: false,
        }
    }

    pub fn protocol(&self, problem: ProblemId) -> Result<Protocol> {
        let design = matches!(problem, ProblemId::Design(_));
        let (pop, iters, runs, keep) = match (self.quick, design) {
            (false, false) => (50, problem.default_iterations(), 25, 20),
            (false, true) => (50, problem.default_iterations(), 30, 30),
            (true, false) => (30, problem.default_iterations() / 2, 10, 8),
            (true, true) => (30, problem.default_iterations() / 2, 10, 10),
        };
        let runs = self.runs.unwrap_or(runs);
        let keep_best = match (self.keep_best, self.runs) {
            (Some(k), _) => k,
            (None, Some(r)) => keep.min(r),
            (None, None) => keep,
        };
        if keep_best == 0 || keep_best > runs {
            return Err(Error::InvalidConfig(format!("keep_best must be in 1..={runs}, got {keep_best}")));
        }
        Ok(Protocol {
            pop_size: self.pop_size.unwrap_or(pop),
            max_iter: self.max_iter.unwrap_or(iters),
            runs,
            keep_best,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() || self.problems.is_empty() {
            return Err(Error::InvalidConfig("experiment needs at least one algorithm and one problem".into()));
        }
        for p in &self.problems {
            let proto = self.protocol(*p)?;
            if proto.pop_size < 2 {
                return Err(Error::InvalidConfig(format!("population {} is below 2", proto.pop_size)));
            }
            if proto.max_iter == 0 {
                return Err(Error::InvalidConfig("max_iter must be positive".into()));
            }
        }
        self.params.validate()
    }

    fn run_config(&self, proto: &Protocol) -> RunConfig {
        RunConfig {
            params: self.params,
            constrained: self.constrained,
            ..RunConfig::new(proto.pop_size, proto.max_iter)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub algorithm: AlgorithmId,
    pub problem: ProblemId,
    pub protocol: Protocol,
    pub base_seed: u64,
    pub stats: SummaryStats,
    /// Final fitness of every run, in seed order.
    pub final_fitnesses: Vec<f64>,
    pub mean_wall_ms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Win,
    Loss,
    Tie,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tally {
    pub challenger: AlgorithmId,
    pub baseline: AlgorithmId,
    pub wins: usize,
    pub losses: usize,
    pub ties: usize,
    /// Outcome per problem from the challenger's side.
    pub outcomes: Vec<(ProblemId, Outcome)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub rows: Vec<SummaryRow>,
    pub tallies: Vec<Tally>,
}

impl ExperimentReport {
    pub fn row(&self, algorithm: AlgorithmId, problem: ProblemId) -> Option<&SummaryRow> {
        self.rows.iter().find(|r| r.algorithm == algorithm && r.problem == problem)
    }

    pub fn problems(&self) -> Vec<ProblemId> {
        let mut out: Vec<ProblemId> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.problem) {
                out.push(r.problem);
            }
        }
        out
    }

    /// Head-to-head count over every problem both algorithms ran on.
    pub fn tally(&self, challenger: AlgorithmId, baseline: AlgorithmId) -> Tally {
        let mut t = Tally {
            challenger,
            baseline,
            wins: 0,
            losses: 0,
            ties: 0,
            outcomes: Vec::new(),
        };
        for p in self.problems() {
            let (Some(a), Some(b)) = (self.row(challenger, p), self.row(baseline, p)) else {
                continue;
            };
            let sense = p.build(false).sense();
            let outcome = match compare_rows(&a.stats, &b.stats, sense) {
                Ordering::Less => Outcome::Win,
                Ordering::Greater => Outcome::Loss,
                Ordering::Equal => Outcome::Tie,
            };
            match outcome {
                Outcome::Win => t.wins += 1,
                Outcome::Loss => t.losses += 1,
                Outcome::Tie => t.ties += 1,
            }
            t.outcomes.push((p, outcome));
        }
        t
    }
}

/// Runs every (algorithm, problem) pair with seeds `base_seed + run`.
/// Runs execute in parallel; results are gathered in a fixed order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    spec.validate()?;
    let mut jobs = Vec::new();
    for &problem in &spec.problems {
        let proto = spec.protocol(problem)?;
        for &algo in &spec.algorithms {
            for run in 0..proto.runs {
                jobs.push((algo, problem, proto, spec.base_seed.wrapping_add(run as u64)));
            }
        }
    }
    let traces: Vec<RunTrace> = jobs
        .par_iter()
        .map(|(algo, problem, proto, seed)| run_single(*algo, *problem, &spec.run_config(proto), *seed))
        .collect::<Result<_>>()?;

    let mut rows = Vec::new();
    let mut offset = 0;
    for &problem in &spec.problems {
        let proto = spec.protocol(problem)?;
        let sense: Sense = problem.build(spec.constrained).sense();
        for &algo in &spec.algorithms {
            let chunk = &traces[offset..offset + proto.runs];
            offset += proto.runs;
            let finals: Vec<f64> = chunk.iter().map(|t| t.final_fitness).collect();
            rows.push(SummaryRow {
                algorithm: algo,
                problem,
                protocol: proto,
                base_seed: spec.base_seed,
                stats: trimmed_stats(&finals, proto.keep_best, sense)?,
                final_fitnesses: finals,
                mean_wall_ms: chunk.iter().map(|t| t.wall_ms).sum::<f64>() / proto.runs as f64,
            });
        }
    }

    let mut report = ExperimentReport { rows, tallies: Vec::new() };
    for (challenger, baseline) in [(AlgorithmId::Mgps, AlgorithmId::Gps), (AlgorithmId::Mpsogsa, AlgorithmId::Psogsa)] {
        if spec.algorithms.contains(&challenger) && spec.algorithms.contains(&baseline) {
            report.tallies.push(report.tally(challenger, baseline));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    AlphaMut,
    BetaMut,
    Rho,
    Phi,
}

impl SweepParam {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::AlphaMut => "alpha_mut",
            Self::BetaMut => "beta_mut",
            Self::Rho => "rho",
            Self::Phi => "phi",
        }
    }

    fn apply(self, params: &mut ParamSet, value: f64) {
        let m = &mut params.mutation;
        match self {
            Self::AlphaMut => m.alpha_mut = value,
            Self::BetaMut => m.beta_mut = value,
            Self::Rho => m.rho = value,
            Self::Phi => m.phi = value,
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "alpha_mut" | "alpha" => Ok(Self::AlphaMut),
            "beta_mut" | "beta" => Ok(Self::BetaMut),
            "rho" => Ok(Self::Rho),
            "phi" => Ok(Self::Phi),
            other => Err(Error::InvalidConfig(format!(
                "unknown sweep parameter `{other}` (alpha_mut, beta_mut, rho, phi)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub report: ExperimentReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub parameter: SweepParam,
    pub rows: Vec<SweepRow>,
}

/// One experiment per value of a mutation parameter.
pub fn param_sweep(base: &ExperimentSpec, parameter: SweepParam, values: &[f64]) -> Result<SweepReport> {
    if values.is_empty() {
        return Err(Error::InvalidConfig("sweep needs at least one value".into()));
    }
    let rows = values
        .iter()
        .map(|&value| {
            let mut spec = base.clone();
            parameter.apply(&mut spec.params, value);
            run_experiment(&spec).map(|report| SweepRow { value, report })
        })
        .collect::<Result<_>>()?;
    Ok(SweepReport { parameter, rows })
}
