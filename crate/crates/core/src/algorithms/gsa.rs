//! Gravitational masses, pairwise forces and accelerations.

use crate::algorithms::params::GsaParams;
use crate::error::{Error, Result};
use crate::rng::UniformSource;
use crate::space::Sense;
use crate::swarm::{find_extremes, SwarmState};

/// `g0 * exp(-alpha_g * t / max_iter)`.
pub fn gravitational_constant(t: usize, max_iter: usize, p: &GsaParams) -> Result<f64> {
    if max_iter == 0 {
        return Err(Error::InvalidConfig("max_iter must be positive".into()));
    }
    Ok(p.g0 * (-p.alpha_g * t as f64 / max_iter as f64).exp())
}

/// Raw masses `(fit - worst) / (best - worst)` and their normalization.
///
/// When every fitness is equal the raw masses are all 1, giving `1/N` each.
pub fn compute_masses(fitnesses: &[f64], sense: Sense) -> Result<(Vec<f64>, Vec<f64>)> {
    let ext = find_extremes(fitnesses, sense)?;
    let spread = ext.best - ext.worst;
    let raw: Vec<f64> = if spread == 0.0 {
        vec![1.0; fitnesses.len()]
    } else {
        fitnesses.iter().map(|f| ((f - ext.worst) / spread).abs()).collect()
    };
    let total: f64 = raw.iter().sum();
    let masses = raw.iter().map(|m| m / total).collect();
    Ok((raw, masses))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GsaKinematics {
    pub raw_masses: Vec<f64>,
    pub masses: Vec<f64>,
    n: usize,
    distances: Vec<f64>,
    /// Row `i` is the resultant force on agent `i`.
    pub total_force: Vec<Vec<f64>>,
    /// Row `i` is the acceleration of agent `i`; zero rows for massless agents.
    pub acceleration: Vec<Vec<f64>>,
    pub g_now: f64,
}

impl GsaKinematics {
    /// Euclidean distance between agents `i` and `j`.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.distances[i * self.n + j]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// Forces and accelerations for the current population.
///
/// Consumes one draw per ordered pair `(i, j)`, `j != i`, in row-major
/// order; the draw scales that pair's force in every dimension.
pub fn compute_gsa_kinematics(
    state: &SwarmState,
    p: &GsaParams,
    t: usize,
    max_iter: usize,
    rng: &mut impl UniformSource,
) -> Result<GsaKinematics> {
    let n = state.len();
    let dim = state.dim();
    let (raw_masses, masses) = compute_masses(&state.fitnesses(), state.sense)?;
    let g_now = gravitational_constant(t, max_iter, p)?;

    let mut distances = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let r = euclidean(&state.agents[i].position, &state.agents[j].position);
            distances[i * n + j] = r;
            distances[j * n + i] = r;
        }
    }

    let mut total_force = vec![vec![0.0; dim]; n];
    for i in 0..n {
        let xi = &state.agents[i].position;
        for j in 0..n {
            if j == i {
                continue;
            }
            let scale = rng.uniform();
            let xj = &state.agents[j].position;
            let coupling = g_now * (masses[i] * masses[j] / (distances[i * n + j] + p.epsilon));
            for (f, (a, b)) in total_force[i].iter_mut().zip(xi.iter().zip(xj)) {
                *f += scale * (coupling * (b - a));
            }
        }
    }

    let acceleration = total_force
        .iter()
        .zip(&masses)
        .map(|(force, &m)| {
            if m == 0.0 {
                vec![0.0; dim]
            } else {
                force.iter().map(|f| f / m).collect()
            }
        })
        .collect();

    Ok(GsaKinematics {
        raw_masses,
        masses,
        n,
        distances,
        total_force,
        acceleration,
        g_now,
    })
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}
