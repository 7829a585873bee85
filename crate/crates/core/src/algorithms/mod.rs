//! PSO, GSA and their hybrids GPS and PSOGSA as per-iteration updates.
//!
//! Draw order within one iteration on the main stream:
//! 1. pairwise force scales (GSA, GPS, PSOGSA), see [`compute_gsa_kinematics`];
//! 2. for each agent in index order: PSO `r1, r2` per dimension (PSO, GPS),
//!    then the GSA inertia draw per dimension (GSA, GPS), then the GPS blend
//!    weight; PSOGSA draws its inertia coefficient per dimension;
//! 3. objective noise during evaluation.

mod gsa;
mod params;
mod velocity;

pub use gsa::{compute_gsa_kinematics, compute_masses, gravitational_constant, GsaKinematics};
pub(crate) use gsa::euclidean;
pub use params::{GpsParams, GsaParams, PsoParams, PsogsaParams};
pub use velocity::{gps_velocity, gsa_velocity, position_update, pso_velocity, psogsa_velocity};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::UniformSource;
use crate::space::SearchSpace;
use crate::swarm::SwarmState;

/// A base update rule with its coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UpdateRule {
    Pso(PsoParams),
    Gsa(GsaParams),
    Gps(GpsParams),
    Psogsa(PsogsaParams),
}

impl UpdateRule {
    pub fn validate(&self) -> Result<()> {
        match self {
            UpdateRule::Pso(p) => p.validate(),
            UpdateRule::Gsa(p) => p.validate(),
            UpdateRule::Gps(p) => p.validate(),
            UpdateRule::Psogsa(p) => p.validate(),
        }
    }

    fn gsa_params(&self) -> Option<&GsaParams> {
        match self {
            UpdateRule::Pso(_) => None,
            UpdateRule::Gsa(p) => Some(p),
            UpdateRule::Gps(p) => Some(&p.gsa),
            UpdateRule::Psogsa(p) => Some(&p.gsa),
        }
    }
}

/// Moves every agent once using `state.iteration` as the time index.
///
/// Does not evaluate; fitness values still describe the old positions.
pub fn advance(
    rule: &UpdateRule,
    state: &mut SwarmState,
    max_iter: usize,
    space: &SearchSpace,
    rng: &mut impl UniformSource,
) -> Result<()> {
    if max_iter == 0 {
        return Err(Error::InvalidConfig("max_iter must be positive".into()));
    }
    if state.dim() != space.dim() {
        return Err(Error::InvalidArgument(format!(
            "swarm has dimension {}, space has {}",
            state.dim(),
            space.dim()
        )));
    }
    let t = state.iteration;
    let kinematics = match rule.gsa_params() {
        Some(g) => Some(compute_gsa_kinematics(state, g, t, max_iter, rng)?),
        None => None,
    };
    let gbest = state.gbest_position.clone();
    for (i, agent) in state.agents.iter_mut().enumerate() {
        let accel = kinematics.as_ref().map(|k| k.acceleration[i].as_slice());
        let v = match rule {
            UpdateRule::Pso(p) => pso_velocity(agent, &gbest, t, max_iter, p, rng),
            UpdateRule::Gsa(_) => gsa_velocity(agent, accel.expect("kinematics for gravitational rules"), rng),
            UpdateRule::Gps(p) => {
                let v_pso = pso_velocity(agent, &gbest, t, max_iter, &p.pso, rng);
                let v_gsa = gsa_velocity(agent, accel.expect("kinematics for gravitational rules"), rng);
                gps_velocity(&v_pso, &v_gsa, p, rng)
            }
            UpdateRule::Psogsa(p) => psogsa_velocity(agent, accel.expect("kinematics for gravitational rules"), &gbest, p, rng),
        };
        position_update(agent, v, space);
    }
    Ok(())
}

/// One full iteration: move, re-evaluate, refresh memories.
pub fn step(
    rule: &UpdateRule,
    state: &mut SwarmState,
    max_iter: usize,
    objective: &dyn Objective,
    rng: &mut impl UniformSource,
) -> Result<()> {
    advance(rule, state, max_iter, objective.space(), rng)?;
    state.evaluate(objective, rng)?;
    state.iteration += 1;
    Ok(())
}
