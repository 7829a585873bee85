use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::UniformSource;
use crate::space::{SearchSpace, Sense};

/// One population member together with its personal-best memory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Agent {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub fitness: f64,
    pub pbest_position: Vec<f64>,
    pub pbest_fitness: f64,
}

impl Agent {
    /// Fresh agent at `position`, at rest, not yet evaluated.
    pub fn at_rest(position: Vec<f64>, sense: Sense) -> Self {
        let unseen = worst_possible(sense);
        Self {
            velocity: vec![0.0; position.len()],
            pbest_position: position.clone(),
            position,
            fitness: unseen,
            pbest_fitness: unseen,
        }
    }

    pub fn dim(&self) -> usize {
        self.position.len()
    }
}

fn worst_possible(sense: Sense) -> f64 {
    match sense {
        Sense::Minimize => f64::INFINITY,
        Sense::Maximize => f64::NEG_INFINITY,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwarmState {
    pub agents: Vec<Agent>,
    pub gbest_position: Vec<f64>,
    pub gbest_fitness: f64,
    /// Completed iterations.
    pub iteration: usize,
    pub sense: Sense,
}

impl SwarmState {
    /// Builds a state from agents whose fitness has not been evaluated.
    pub fn from_agents(agents: Vec<Agent>, sense: Sense) -> Result<Self> {
        let first = agents
            .first()
            .ok_or_else(|| Error::InvalidPopulation("population is empty".into()))?;
        let dim = first.dim();
        if agents.iter().any(|a| a.dim() != dim || a.velocity.len() != dim) {
            return Err(Error::InvalidPopulation("agents disagree on dimension".into()));
        }
        Ok(Self {
            gbest_position: first.position.clone(),
            gbest_fitness: worst_possible(sense),
            agents,
            iteration: 0,
            sense,
        })
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.gbest_position.len()
    }

    pub fn fitnesses(&self) -> Vec<f64> {
        self.agents.iter().map(|a| a.fitness).collect()
    }

    /// Evaluates every agent in index order, then refreshes pbest and gbest.
    pub fn evaluate(&mut self, objective: &dyn Objective, noise: &mut dyn UniformSource) -> Result<()> {
        for agent in &mut self.agents {
            agent.fitness = objective.evaluate(&agent.position, noise)?;
        }
        self.refresh_memories();
        Ok(())
    }

    /// Updates personal and global bests from the current fitness values.
    /// Ties keep the older memory, so gbest only moves on strict improvement.
    pub fn refresh_memories(&mut self) {
        let sense = self.sense;
        for agent in &mut self.agents {
            if sense.better(agent.fitness, agent.pbest_fitness) {
                agent.pbest_fitness = agent.fitness;
                agent.pbest_position.clone_from(&agent.position);
            }
        }
        for agent in &self.agents {
            if sense.better(agent.pbest_fitness, self.gbest_fitness) {
                self.gbest_fitness = agent.pbest_fitness;
                self.gbest_position.clone_from(&agent.pbest_position);
            }
        }
    }

    /// Best fitness among the current positions (not the memory).
    pub fn population_best(&self) -> f64 {
        let sense = self.sense;
        self.agents
            .iter()
            .map(|a| a.fitness)
            .min_by(|a, b| sense.cmp(*a, *b))
            .unwrap_or(f64::NAN)
    }

    pub fn population_mean(&self) -> f64 {
        self.agents.iter().map(|a| a.fitness).sum::<f64>() / self.agents.len() as f64
    }
}

/// Random population, uniform in the box, velocities zero.
///
/// Draw order: agent-major, then dimension.
pub fn initialize_population(
    space: &SearchSpace,
    n: usize,
    sense: Sense,
    rng: &mut impl UniformSource,
) -> Result<SwarmState> {
    if n < 2 {
        return Err(Error::InvalidPopulation(format!("need at least 2 agents, got {n}")));
    }
    let agents = (0..n)
        .map(|_| {
            let position = (0..space.dim())
                .map(|d| {
                    let x = space.lower()[d] + rng.uniform() * space.range(d);
                    // lower + u*range can round up to the upper bound itself
                    if x >= space.upper()[d] {
                        space.lower()[d].max(space.upper()[d].next_down())
                    } else {
                        x
                    }
                })
                .collect();
            Agent::at_rest(position, sense)
        })
        .collect();
    SwarmState::from_agents(agents, sense)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitnessExtremes {
    pub best: f64,
    pub worst: f64,
}

pub fn find_extremes(fitnesses: &[f64], sense: Sense) -> Result<FitnessExtremes> {
    if fitnesses.is_empty() {
        return Err(Error::EmptyInput("fitness list"));
    }
    let (lo, hi) = fitnesses
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &f| (lo.min(f), hi.max(f)));
    Ok(match sense {
        Sense::Minimize => FitnessExtremes { best: lo, worst: hi },
        Sense::Maximize => FitnessExtremes { best: hi, worst: lo },
    })
}

/// Coordinate-wise mean of all agent positions.
pub fn centroid(state: &SwarmState) -> Result<Vec<f64>> {
    positions_centroid(state.agents.iter().map(|a| a.position.as_slice()))
}

pub(crate) fn positions_centroid<'a>(positions: impl Iterator<Item = &'a [f64]>) -> Result<Vec<f64>> {
    let mut sum: Vec<f64> = Vec::new();
    let mut n = 0usize;
    for p in positions {
        if sum.is_empty() {
            sum = vec![0.0; p.len()];
        }
        for (s, x) in sum.iter_mut().zip(p) {
            *s += x;
        }
        n += 1;
    }
    if n == 0 {
        return Err(Error::EmptyInput("population"));
    }
    let inv = n as f64;
    Ok(sum.into_iter().map(|s| s / inv).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    fn state_at(points: &[&[f64]]) -> SwarmState {
        let agents = points
            .iter()
            .map(|p| Agent::at_rest(p.to_vec(), Sense::Minimize))
            .collect();
        SwarmState::from_agents(agents, Sense::Minimize).unwrap()
    }

    #[test]
    fn init_within_bounds_and_at_rest() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let st = initialize_population(&space, 3, Sense::Minimize, &mut RngStream::new(42)).unwrap();
        assert_eq!(st.len(), 3);
        for a in &st.agents {
            assert!(a.position.iter().all(|x| (-1.0..1.0).contains(x)));
            assert_eq!(a.velocity, vec![0.0, 0.0]);
            assert_eq!(a.pbest_position, a.position);
        }
    }

    #[test]
    fn init_is_deterministic() {
        let space = SearchSpace::uniform(5, -10.0, 10.0).unwrap();
        let a = initialize_population(&space, 10, Sense::Minimize, &mut RngStream::new(9)).unwrap();
        let b = initialize_population(&space, 10, Sense::Minimize, &mut RngStream::new(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn init_narrow_domain() {
        let eps = 1e-9;
        let space = SearchSpace::uniform(1, 0.0, eps).unwrap();
        let st = initialize_population(&space, 500, Sense::Minimize, &mut RngStream::new(1)).unwrap();
        for a in &st.agents {
            assert!(a.position[0] >= 0.0 && a.position[0] < eps);
        }
    }

    #[test]
    fn init_upper_draw_stays_half_open() {
        let space = SearchSpace::uniform(1, 0.0, 1.0).unwrap();
        let mut almost_one = crate::rng::ConstantSource(1.0);
        let st = initialize_population(&space, 2, Sense::Minimize, &mut almost_one).unwrap();
        assert!(st.agents[0].position[0] < 1.0);
    }

    #[test]
    fn init_rejects_tiny_population() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let err = initialize_population(&space, 1, Sense::Minimize, &mut RngStream::new(0));
        assert!(matches!(err, Err(Error::InvalidPopulation(_))));
    }

    #[test]
    fn extremes() {
        let e = find_extremes(&[1.0, 2.0, 3.0], Sense::Minimize).unwrap();
        assert_eq!((e.best, e.worst), (1.0, 3.0));
        let e = find_extremes(&[1.0, 2.0, 3.0], Sense::Maximize).unwrap();
        assert_eq!((e.best, e.worst), (3.0, 1.0));
        let e = find_extremes(&[5.0, 5.0, 5.0], Sense::Minimize).unwrap();
        assert_eq!((e.best, e.worst), (5.0, 5.0));
        assert!(matches!(find_extremes(&[], Sense::Minimize), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn centroid_cases() {
        assert_eq!(centroid(&state_at(&[&[0.0, 0.0], &[2.0, 2.0]])).unwrap(), vec![1.0, 1.0]);
        assert_eq!(centroid(&state_at(&[&[3.0, 4.0]])).unwrap(), vec![3.0, 4.0]);
        assert_eq!(
            centroid(&state_at(&[&[1.0, 0.0], &[0.0, 1.0], &[-1.0, -1.0]])).unwrap(),
            vec![0.0, 0.0]
        );
    }

    #[test]
    fn centroid_of_coincident_agents() {
        let p = [0.3, -7.25, 11.0];
        let st = state_at(&[&p, &p, &p, &p, &p]);
        let c = centroid(&st).unwrap();
        for (a, b) in c.iter().zip(&p) {
            assert!((a - b).abs() <= 1e-15 * b.abs().max(1.0));
        }
    }

    #[test]
    fn memories_follow_strict_improvement() {
        let mut st = state_at(&[&[0.0], &[1.0]]);
        st.agents[0].fitness = 2.0;
        st.agents[1].fitness = 1.0;
        st.refresh_memories();
        assert_eq!(st.gbest_fitness, 1.0);
        assert_eq!(st.gbest_position, vec![1.0]);
        st.agents[1].position = vec![5.0];
        st.agents[1].fitness = 4.0;
        st.refresh_memories();
        assert_eq!(st.gbest_fitness, 1.0);
        assert_eq!(st.agents[1].pbest_position, vec![1.0]);
        assert_eq!(st.population_best(), 2.0);
        assert_eq!(st.population_mean(), 3.0);
    }
}
