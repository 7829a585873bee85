use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algorithms::{advance, GpsParams, GsaParams, PsoParams, PsogsaParams, UpdateRule};
use crate::error::{Error, Result};
use crate::mutation::{mutate_population, update_unchanged, MutationDiagnostics, MutationParams, MutationState};
use crate::objective::Objective;
use crate::rng::{RngStream, MUTATION_STREAM};
use crate::swarm::initialize_population;

use super::ids::{AlgorithmId, ProblemId};

/// Coefficients for every algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ParamSet {
    pub pso: PsoParams,
    pub gsa: GsaParams,
    pub gps_c3: f64,
    pub gps_c4: f64,
    pub psogsa_c1: f64,
    pub psogsa_c2: f64,
    pub mutation: MutationParams,
}

impl Default for ParamSet {
    fn default() -> Self {
        let gps = GpsParams::default();
        let psogsa = PsogsaParams::default();
        Self {
            pso: PsoParams::default(),
            gsa: GsaParams::default(),
            gps_c3: gps.c3,
            gps_c4: gps.c4,
            psogsa_c1: psogsa.c1,
            psogsa_c2: psogsa.c2,
            mutation: MutationParams::default(),
        }
    }
}

impl ParamSet {
    pub fn rule(&self, algo: AlgorithmId) -> UpdateRule {
        match algo.base() {
            AlgorithmId::Pso => UpdateRule::Pso(self.pso),
            AlgorithmId::Gsa => UpdateRule::Gsa(self.gsa),
            AlgorithmId::Gps => UpdateRule::Gps(GpsParams {
                c3: self.gps_c3,
                c4: self.gps_c4,
                pso: self.pso,
                gsa: self.gsa,
            }),
            _ => UpdateRule::Psogsa(PsogsaParams {
                c1: self.psogsa_c1,
                c2: self.psogsa_c2,
                gsa: self.gsa,
            }),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for algo in AlgorithmId::ALL {
            self.rule(algo).validate()?;
        }
        self.mutation.validate()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub pop_size: usize,
    pub max_iter: usize,
    pub params: ParamSet,
    /// Evaluate engineering problems with their inequality constraints.
    pub constrained: bool,
    /// Fill the per-iteration `elapsed_ms` column; otherwise it is 0.
    pub timing: bool,
    /// Keep per-iteration mutation diagnostics in the trace.
    pub diagnostics: bool,
}

impl RunConfig {
    pub fn new(pop_size: usize, max_iter: usize) -> Self {
        Self {
            pop_size,
            max_iter,
            params: ParamSet::default(),
            constrained: false,
            timing: false,
            diagnostics: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Best fitness found so far.
    pub gbest: f64,
    /// Best fitness in the current population.
    pub pop_best: f64,
    pub pop_mean: f64,
    pub mutations: usize,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub algorithm: AlgorithmId,
    pub problem: String,
    pub seed: u64,
    pub records: Vec<IterationRecord>,
    pub diagnostics: Vec<MutationDiagnostics>,
    pub final_fitness: f64,
    pub final_position: Vec<f64>,
    /// Wall time of the whole run.
    pub wall_ms: f64,
}

pub fn run_single(algo: AlgorithmId, problem: ProblemId, config: &RunConfig, seed: u64) -> Result<RunTrace> {
    let objective = problem.build(config.constrained);
    run_objective(algo, objective.as_ref(), &problem.to_string(), config, seed)
}

/// Runs `algo` on any objective. `label` only names the trace.
///
/// Per iteration: move, mutate (mutated variants only), evaluate, refresh
/// memories, update the staleness counter. Mutation draws come from a
/// sibling stream of the same seed, so a variant whose mutation never fires
/// follows its base algorithm draw for draw.
pub fn run_objective(
    algo: AlgorithmId,
    objective: &dyn Objective,
    label: &str,
    config: &RunConfig,
    seed: u64,
) -> Result<RunTrace> {
    if config.max_iter == 0 {
        return Err(Error::InvalidConfig("max_iter must be positive".into()));
    }
    config.params.validate()?;
    let start = Instant::now();
    let space = objective.space();
    let sense = objective.sense();
    let rule = config.params.rule(algo);
    let mut rng = RngStream::new(seed);
    let mut mrng = rng.sibling(MUTATION_STREAM);

    let mut state = initialize_population(space, config.pop_size, sense, &mut rng)?;
    state.evaluate(objective, &mut rng)?;
    let mut mstate = MutationState::new(state.gbest_fitness);

    let mut records = Vec::with_capacity(config.max_iter);
    let mut diagnostics = Vec::new();
    for _ in 0..config.max_iter {
        advance(&rule, &mut state, config.max_iter, space, &mut rng)?;
        let count = state.iteration + 1;
        let diag = if algo.is_mutated() {
            mutate_population(&mut state, &mstate, count, config.max_iter, space, &config.params.mutation, &mut mrng)?
        } else {
            MutationDiagnostics::default()
        };
        state.evaluate(objective, &mut rng)?;
        state.iteration = count;
        update_unchanged(&mut mstate, state.gbest_fitness, sense);

        records.push(IterationRecord {
            iteration: count,
            gbest: state.gbest_fitness,
            pop_best: state.population_best(),
            pop_mean: state.population_mean(),
            mutations: diag.mutated,
            elapsed_ms: if config.timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 },
        });
        if config.diagnostics {
            diagnostics.push(diag);
        }
    }

    Ok(RunTrace {
        algorithm: algo,
        problem: label.to_string(),
        seed,
        records,
        diagnostics,
        final_fitness: state.gbest_fitness,
        final_position: state.gbest_position,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(pop: usize, iters: usize) -> RunConfig {
        RunConfig::new(pop, iters)
    }

    #[test]
    fn trace_shape_and_monotone_gbest() {
        let p: ProblemId = "F9".parse().unwrap();
        for algo in AlgorithmId::ALL {
            let t = run_single(algo, p, &quick(10, 40), 3).unwrap();
            assert_eq!(t.records.len(), 40);
            assert_eq!(t.records[0].iteration, 1);
            assert_eq!(t.final_fitness, t.records.last().unwrap().gbest);
            for w in t.records.windows(2) {
                assert!(w[1].gbest <= w[0].gbest, "{algo}");
            }
            for r in &t.records {
                assert!(r.pop_best >= r.gbest);
                assert!(r.pop_mean >= r.pop_best);
                assert_eq!(r.elapsed_ms, 0.0);
            }
            assert!(t.diagnostics.is_empty());
            if !algo.is_mutated() {
                assert!(t.records.iter().all(|r| r.mutations == 0));
            }
        }
    }

    #[test]
    fn pinned_zero_reproduces_base() {
        let mut cfg = quick(12, 30);
        cfg.params.mutation.pinned_probability = Some(0.0);
        for p in ["F1", "F10"] {
            let p: ProblemId = p.parse().unwrap();
            let a = run_single(AlgorithmId::Mgps, p, &cfg, 11).unwrap();
            let b = run_single(AlgorithmId::Gps, p, &cfg, 11).unwrap();
            assert_eq!(a.records, b.records);
            let a = run_single(AlgorithmId::Mpsogsa, p, &cfg, 11).unwrap();
            let b = run_single(AlgorithmId::Psogsa, p, &cfg, 11).unwrap();
            assert_eq!(a.records, b.records);
        }
    }

    #[test]
    fn mutation_actually_fires() {
        let mut cfg = quick(10, 20);
        cfg.diagnostics = true;
        let t = run_single(AlgorithmId::Mgps, "F9".parse().unwrap(), &cfg, 5).unwrap();
        assert_eq!(t.diagnostics.len(), 20);
        assert!(t.records.iter().map(|r| r.mutations).sum::<usize>() > 0);
    }

    #[test]
    fn rejects_bad_config() {
        let p: ProblemId = "F1".parse().unwrap();
        assert!(run_single(AlgorithmId::Pso, p, &quick(10, 0), 1).is_err());
        assert!(run_single(AlgorithmId::Pso, p, &quick(1, 10), 1).is_err());
        let mut cfg = quick(10, 10);
        cfg.params.mutation.pinned_probability = Some(2.0);
        assert!(run_single(AlgorithmId::Mgps, p, &cfg, 1).is_err());
    }

    #[test]
    fn timing_column_optional() {
        let mut cfg = quick(5, 5);
        cfg.timing = true;
        let t = run_single(AlgorithmId::Pso, "F1".parse().unwrap(), &cfg, 1).unwrap();
        assert!(t.records.windows(2).all(|w| w[1].elapsed_ms >= w[0].elapsed_ms));
    }
}
