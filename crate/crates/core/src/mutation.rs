//! Centroid-based fuzzy mutation.
//!
//! Each agent mutates with probability `rho * P_d + phi * P_c`, where
//! `P_d = 1 / (1 + dist)` rewards closeness to the population centroid and
//! `P_c = a + b * tanh(unchanged / alpha - beta)` grows while gbest is stale.
//! A mutated agent moves by `±Δp` in every dimension, where
//! `Δq = 0.5 * range * (1 - count/iter)^2` and `Δp = min(Δq, |x|)`.
//!
//! Draw order per agent (mutation stream): the decision draw, then one
//! sign draw per dimension only if the agent mutates.

use serde::{Deserialize, Serialize};

use crate::algorithms::euclidean;
use crate::error::{Error, Result};
use crate::rng::UniformSource;
use crate::space::{SearchSpace, Sense};
use crate::swarm::{centroid, Agent, SwarmState};

/// How the step is capped by the coordinate value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MagnitudeRule {
    /// `Δp = min(Δq, |x|)`, never negative.
    #[default]
    AbsoluteCoordinate,
    /// `Δp = min(Δq, x)`; negative coordinates give negative steps.
    RawCoordinate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MutationParams {
    /// Staleness scale inside the tanh.
    pub alpha_mut: f64,
    /// Staleness offset inside the tanh.
    pub beta_mut: f64,
    pub a: f64,
    pub b: f64,
    /// Weight of the centroid-distance term.
    pub rho: f64,
    /// Weight of the staleness term.
    pub phi: f64,
    pub magnitude: MagnitudeRule,
    /// Replaces the computed per-agent probability when set.
    pub pinned_probability: Option<f64>,
}

impl Default for MutationParams {
    fn default() -> Self {
        Self {
            alpha_mut: 4.0,
            beta_mut: 5.0,
            a: 0.5,
            b: 0.5,
            rho: 0.6,
            phi: 0.4,
            magnitude: MagnitudeRule::AbsoluteCoordinate,
            pinned_probability: None,
        }
    }
}

impl MutationParams {
    pub fn validate(&self) -> Result<()> {
        if self.alpha_mut.is_nan() || self.alpha_mut <= 0.0 {
            return Err(Error::InvalidConfig(format!("alpha_mut must be positive, got {}", self.alpha_mut)));
        }
        if self.rho < 0.0 || self.phi < 0.0 {
            return Err(Error::InvalidConfig("rho and phi must be non-negative".into()));
        }
        if let Some(p) = self.pinned_probability {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidConfig(format!("pinned probability {p} outside [0, 1]")));
            }
        }
        Ok(())
    }
}

/// Staleness counter for gbest.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MutationState {
    pub unchanged: u64,
    pub last_gbest_fitness: f64,
}

impl MutationState {
    pub fn new(gbest_fitness: f64) -> Self {
        Self {
            unchanged: 0,
            last_gbest_fitness: gbest_fitness,
        }
    }
}

/// Intermediates of one agent's mutation decision.
#[derive(Debug, Clone, PartialEq)]
pub struct MutationStep {
    /// Schedule bound per dimension.
    pub delta_q: Vec<f64>,
    /// Applied magnitude per dimension; empty when the agent did not mutate.
    pub delta_p: Vec<f64>,
    pub p_d: f64,
    pub p_c: f64,
    pub p_i: f64,
    pub dist: f64,
    pub mutated: bool,
}

pub fn distance_contribution(dist: f64) -> Result<f64> {
    if dist.is_nan() || dist < 0.0 {
        return Err(Error::InvalidArgument(format!("distance must be non-negative, got {dist}")));
    }
    Ok(1.0 / (1.0 + dist))
}

pub fn history_contribution(unchanged: u64, p: &MutationParams) -> f64 {
    p.a + p.b * (unchanged as f64 / p.alpha_mut - p.beta_mut).tanh()
}

pub fn mutation_probability(p_d: f64, p_c: f64, p: &MutationParams) -> f64 {
    p.rho * p_d + p.phi * p_c
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Magnitude {
    pub delta_q: f64,
    pub delta_p: f64,
}

pub fn mutation_magnitude(
    space: &SearchSpace,
    d: usize,
    count: usize,
    iter: usize,
    x: f64,
    rule: MagnitudeRule,
) -> Result<Magnitude> {
    if iter == 0 {
        return Err(Error::InvalidConfig("total iterations must be positive".into()));
    }
    if count > iter {
        return Err(Error::InvalidArgument(format!("iteration {count} beyond total {iter}")));
    }
    let left = 1.0 - count as f64 / iter as f64;
    let delta_q = 0.5 * space.range(d) * left * left;
    let cap = match rule {
        MagnitudeRule::AbsoluteCoordinate => x.abs(),
        MagnitudeRule::RawCoordinate => x,
    };
    Ok(Magnitude {
        delta_q,
        delta_p: delta_q.min(cap),
    })
}

/// Shared inputs for mutating one population at one iteration.
#[derive(Debug, Clone)]
pub struct MutationContext<'a> {
    pub centroid: &'a [f64],
    pub unchanged: u64,
    /// Current iteration, `1..=iter`.
    pub count: usize,
    pub iter: usize,
    pub space: &'a SearchSpace,
}

/// Decides and, when drawn, applies the mutation to one agent in place.
pub fn apply_mutation(
    agent: &mut Agent,
    ctx: &MutationContext<'_>,
    p: &MutationParams,
    rng: &mut impl UniformSource,
) -> Result<MutationStep> {
    let dist = euclidean(&agent.position, ctx.centroid);
    let p_d = distance_contribution(dist)?;
    let p_c = history_contribution(ctx.unchanged, p);
    let p_i = p.pinned_probability.unwrap_or_else(|| mutation_probability(p_d, p_c, p));

    let mut delta_q = Vec::with_capacity(agent.dim());
    for d in 0..agent.dim() {
        delta_q.push(mutation_magnitude(ctx.space, d, ctx.count, ctx.iter, 0.0, p.magnitude)?.delta_q);
    }

    let mutated = rng.uniform() < p_i;
    let mut delta_p = Vec::new();
    if mutated {
        delta_p.reserve(agent.dim());
        for d in 0..agent.dim() {
            let x = agent.position[d];
            let m = mutation_magnitude(ctx.space, d, ctx.count, ctx.iter, x, p.magnitude)?;
            if rng.uniform() < 0.5 {
                agent.position[d] = x + m.delta_p;
            } else {
                agent.position[d] = x - m.delta_p;
            }
            delta_p.push(m.delta_p);
        }
        ctx.space.clamp_in_place(&mut agent.position);
    }

    Ok(MutationStep {
        delta_q,
        delta_p,
        p_d,
        p_c,
        p_i,
        dist,
        mutated,
    })
}

/// Strict improvement resets the counter, anything else increments it.
pub fn update_unchanged(state: &mut MutationState, gbest_now: f64, sense: Sense) {
    if sense.better(gbest_now, state.last_gbest_fitness) {
        state.unchanged = 0;
        state.last_gbest_fitness = gbest_now;
    } else {
        state.unchanged += 1;
    }
}

/// Per-iteration summary of a population mutation pass.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MutationDiagnostics {
    pub mutated: usize,
    pub p_c: f64,
    pub mean_p_d: f64,
    pub mean_p_i: f64,
    /// Largest schedule bound across dimensions.
    pub delta_q: f64,
}

/// Runs the mutation decision for every agent against one shared centroid.
pub fn mutate_population(
    swarm: &mut SwarmState,
    mstate: &MutationState,
    count: usize,
    iter: usize,
    space: &SearchSpace,
    p: &MutationParams,
    rng: &mut impl UniformSource,
) -> Result<MutationDiagnostics> {
    let center = centroid(swarm)?;
    let ctx = MutationContext {
        centroid: &center,
        unchanged: mstate.unchanged,
        count,
        iter,
        space,
    };
    let mut diag = MutationDiagnostics::default();
    let n = swarm.len() as f64;
    for agent in &mut swarm.agents {
        let s = apply_mutation(agent, &ctx, p, rng)?;
        diag.mutated += usize::from(s.mutated);
        diag.p_c = s.p_c;
        diag.mean_p_d += s.p_d / n;
        diag.mean_p_i += s.p_i / n;
        diag.delta_q = s.delta_q.iter().copied().fold(diag.delta_q, f64::max);
    }
    Ok(diag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{ConstantSource, RngStream, ScriptedSource};

    fn agent_at(x: &[f64]) -> Agent {
        Agent::at_rest(x.to_vec(), Sense::Minimize)
    }

    #[test]
    fn distance_term() {
        assert_eq!(distance_contribution(0.0).unwrap(), 1.0);
        assert_eq!(distance_contribution(1.0).unwrap(), 0.5);
        assert_eq!(distance_contribution(9.0).unwrap(), 0.1);
        assert!(distance_contribution(-1.0).is_err());
        assert!(distance_contribution(f64::NAN).is_err());
    }

    #[test]
    fn history_term() {
        let p = MutationParams::default();
        assert_eq!(history_contribution(20, &p), 0.5);
        assert!((history_contribution(0, &p) - 4.539786870244589e-05).abs() < 1e-15);
        assert!((history_contribution(40, &p) - 0.9999546021312975).abs() < 1e-15);
    }

    #[test]
    fn combined_probability() {
        let p = MutationParams::default();
        assert!((mutation_probability(1.0, 0.5, &p) - 0.8).abs() < 1e-15);
        assert_eq!(mutation_probability(0.0, 0.0, &p), 0.0);
        assert!((mutation_probability(0.5, 0.5, &p) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn magnitude_schedule() {
        let s = SearchSpace::uniform(1, -100.0, 100.0).unwrap();
        let rule = MagnitudeRule::AbsoluteCoordinate;
        let m = mutation_magnitude(&s, 0, 0, 500, 1e9, rule).unwrap();
        assert_eq!((m.delta_q, m.delta_p), (100.0, 100.0));
        let m = mutation_magnitude(&s, 0, 500, 500, 3.0, rule).unwrap();
        assert_eq!((m.delta_q, m.delta_p), (0.0, 0.0));
        let m = mutation_magnitude(&s, 0, 250, 500, 10.0, rule).unwrap();
        assert_eq!((m.delta_q, m.delta_p), (25.0, 10.0));
        let m = mutation_magnitude(&s, 0, 250, 500, -10.0, rule).unwrap();
        assert_eq!(m.delta_p, 10.0);
        let m = mutation_magnitude(&s, 0, 250, 500, -10.0, MagnitudeRule::RawCoordinate).unwrap();
        assert_eq!(m.delta_p, -10.0);
        assert!(mutation_magnitude(&s, 0, 0, 0, 1.0, rule).is_err());
        assert!(mutation_magnitude(&s, 0, 501, 500, 1.0, rule).is_err());
    }

    fn ctx<'a>(center: &'a [f64], space: &'a SearchSpace, count: usize) -> MutationContext<'a> {
        MutationContext {
            centroid: center,
            unchanged: 0,
            count,
            iter: 100,
            space,
        }
    }

    #[test]
    fn zero_probability_never_mutates() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let p = MutationParams {
            pinned_probability: Some(0.0),
            ..Default::default()
        };
        let mut a = agent_at(&[1.0, 2.0]);
        let s = apply_mutation(&mut a, &ctx(&[1.0, 2.0], &space, 10), &p, &mut ConstantSource(0.0)).unwrap();
        assert!(!s.mutated);
        assert!(s.delta_p.is_empty());
        assert_eq!(a.position, vec![1.0, 2.0]);
    }

    #[test]
    fn final_iteration_has_zero_magnitude() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let p = MutationParams {
            pinned_probability: Some(1.0),
            ..Default::default()
        };
        let mut a = agent_at(&[1.0, -2.0]);
        let s = apply_mutation(&mut a, &ctx(&[0.0, 0.0], &space, 100), &p, &mut RngStream::new(3)).unwrap();
        assert!(s.mutated);
        assert_eq!(s.delta_p, vec![0.0, 0.0]);
        assert_eq!(a.position, vec![1.0, -2.0]);
    }

    #[test]
    fn one_dimensional_plus_step() {
        // range 24, count 50 of 100: Δq = 0.5 * 24 * 0.25 = 3, x = 10 so Δp = 3
        let space = SearchSpace::new(vec![-4.0], vec![20.0]).unwrap();
        let p = MutationParams {
            pinned_probability: Some(1.0),
            ..Default::default()
        };
        let mut a = agent_at(&[10.0]);
        // decision draw 0.0 (< 1), sign draw 0.1 (< 0.5 means "+")
        let mut s = ScriptedSource::new(vec![0.0, 0.1]);
        let step = apply_mutation(&mut a, &ctx(&[10.0], &space, 50), &p, &mut s).unwrap();
        assert_eq!(step.delta_q, vec![3.0]);
        assert_eq!(step.delta_p, vec![3.0]);
        assert_eq!(a.position, vec![13.0]);
    }

    #[test]
    fn mutation_stays_in_bounds() {
        let space = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
        let p = MutationParams {
            pinned_probability: Some(1.0),
            magnitude: MagnitudeRule::RawCoordinate,
            ..Default::default()
        };
        let mut rng = RngStream::new(5);
        for _ in 0..1000 {
            let mut a = agent_at(&[0.9, -0.9, 0.99]);
            apply_mutation(&mut a, &ctx(&[0.0; 3], &space, 1), &p, &mut rng).unwrap();
            assert!(space.contains(&a.position));
        }
    }

    #[test]
    fn staleness_counter() {
        let mut s = MutationState::new(5.0);
        update_unchanged(&mut s, 4.9, Sense::Minimize);
        assert_eq!(s.unchanged, 0);
        assert_eq!(s.last_gbest_fitness, 4.9);
        let mut s = MutationState::new(5.0);
        update_unchanged(&mut s, 5.0, Sense::Minimize);
        assert_eq!(s.unchanged, 1);
        update_unchanged(&mut s, 5.1, Sense::Minimize);
        assert_eq!(s.unchanged, 2);
        assert_eq!(s.last_gbest_fitness, 5.0);
    }
}
