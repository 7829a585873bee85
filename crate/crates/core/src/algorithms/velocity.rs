//! Velocity rules and the shared position update.
//!
//! Every per-dimension coefficient is a fresh draw per agent per
//! dimension; the GPS blend weight is one draw per agent.

use crate::algorithms::params::{GpsParams, PsoParams, PsogsaParams};
use crate::rng::UniformSource;
use crate::space::SearchSpace;
use crate::swarm::Agent;

/// Inertia plus cognitive and social pulls. Draws `r1, r2` per dimension.
pub fn pso_velocity(
    agent: &Agent,
    gbest: &[f64],
    t: usize,
    max_iter: usize,
    p: &PsoParams,
    rng: &mut impl UniformSource,
) -> Vec<f64> {
    let w = p.inertia(t, max_iter);
    (0..agent.dim())
        .map(|d| {
            let r1 = rng.uniform();
            let r2 = rng.uniform();
            let x = agent.position[d];
            w * agent.velocity[d] + p.c1 * r1 * (agent.pbest_position[d] - x) + p.c2 * r2 * (gbest[d] - x)
        })
        .collect()
}

/// Randomly damped inertia plus acceleration.
pub fn gsa_velocity(agent: &Agent, acceleration: &[f64], rng: &mut impl UniformSource) -> Vec<f64> {
    agent
        .velocity
        .iter()
        .zip(acceleration)
        .map(|(v, a)| rng.uniform() * v + a)
        .collect()
}

/// Stochastic blend `c3*r*v_pso + c4*(1-r)*v_gsa` with one `r` per agent.
pub fn gps_velocity(v_pso: &[f64], v_gsa: &[f64], p: &GpsParams, rng: &mut impl UniformSource) -> Vec<f64> {
    let r = rng.uniform();
    v_pso
        .iter()
        .zip(v_gsa)
        .map(|(a, b)| p.c3 * r * a + p.c4 * (1.0 - r) * b)
        .collect()
}

pub fn psogsa_velocity(
    agent: &Agent,
    acceleration: &[f64],
    gbest: &[f64],
    p: &PsogsaParams,
    rng: &mut impl UniformSource,
) -> Vec<f64> {
    (0..agent.dim())
        .map(|d| {
            rng.uniform() * agent.velocity[d] + p.c1 * acceleration[d] + p.c2 * (gbest[d] - agent.position[d])
        })
        .collect()
}

/// Stores the new velocity and moves the agent, clipping to the box.
pub fn position_update(agent: &mut Agent, new_velocity: Vec<f64>, space: &SearchSpace) {
    for (x, v) in agent.position.iter_mut().zip(&new_velocity) {
        *x += v;
    }
    space.clamp_in_place(&mut agent.position);
    agent.velocity = new_velocity;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{ConstantSource, ScriptedSource};
    use crate::space::Sense;

    fn agent(x: &[f64], v: &[f64], pbest: &[f64]) -> Agent {
        let mut a = Agent::at_rest(x.to_vec(), Sense::Minimize);
        a.velocity = v.to_vec();
        a.pbest_position = pbest.to_vec();
        a
    }

    #[test]
    fn pso_at_rest_on_best_stays() {
        let a = agent(&[1.0, 2.0], &[0.0, 0.0], &[1.0, 2.0]);
        let v = pso_velocity(&a, &[1.0, 2.0], 3, 10, &PsoParams::default(), &mut ConstantSource(0.7));
        assert_eq!(v, vec![0.0, 0.0]);
    }

    #[test]
    fn pso_without_pulls_is_inertia() {
        let a = agent(&[1.0], &[2.0], &[5.0]);
        let p = PsoParams {
            c1: 0.0,
            c2: 0.0,
            ..Default::default()
        };
        let v = pso_velocity(&a, &[-3.0], 0, 10, &p, &mut ConstantSource(0.3));
        assert_eq!(v, vec![0.9 * 2.0]);
    }

    #[test]
    fn pso_hand_checked() {
        // w=1, c1=2, r1=0.5, pbest - x = 4, c2 = 0: v' = 1.5 + 2*0.5*4 = 5.5
        let a = agent(&[1.0], &[1.5], &[5.0]);
        let p = PsoParams {
            c1: 2.0,
            c2: 0.0,
            w_start: 1.0,
            w_end: 1.0,
        };
        let mut s = ScriptedSource::new(vec![0.5, 0.9]);
        let v = pso_velocity(&a, &[100.0], 0, 10, &p, &mut s);
        assert_eq!(v, vec![5.5]);
        assert_eq!(s.consumed(), 2);
    }

    #[test]
    fn gsa_velocity_cases() {
        let a = agent(&[0.0], &[0.0], &[0.0]);
        assert_eq!(gsa_velocity(&a, &[3.5], &mut ConstantSource(0.4)), vec![3.5]);
        let a = agent(&[0.0], &[2.0], &[0.0]);
        assert_eq!(gsa_velocity(&a, &[0.0], &mut ConstantSource(1.0)), vec![2.0]);
        assert_eq!(gsa_velocity(&a, &[3.0], &mut ConstantSource(0.5)), vec![4.0]);
    }

    #[test]
    fn gps_blend_limits() {
        let p = GpsParams::default();
        assert_eq!(gps_velocity(&[2.0, -1.0], &[4.0, 7.0], &p, &mut ConstantSource(1.0)), vec![2.0, -1.0]);
        assert_eq!(gps_velocity(&[2.0, -1.0], &[4.0, 7.0], &p, &mut ConstantSource(0.0)), vec![4.0, 7.0]);
        assert_eq!(gps_velocity(&[2.0], &[4.0], &p, &mut ConstantSource(0.5)), vec![3.0]);
    }

    #[test]
    fn gps_draws_once_per_agent() {
        let mut s = ScriptedSource::new(vec![0.25]);
        let v = gps_velocity(&[4.0, 4.0, 4.0], &[0.0, 0.0, 0.0], &GpsParams::default(), &mut s);
        assert_eq!(v, vec![1.0, 1.0, 1.0]);
        assert_eq!(s.consumed(), 1);
    }

    #[test]
    fn psogsa_cases() {
        let p = PsogsaParams::default();
        let a = agent(&[2.0], &[3.0], &[2.0]);
        assert_eq!(psogsa_velocity(&a, &[0.0], &[2.0], &p, &mut ConstantSource(0.25)), vec![0.75]);
        let p0 = PsogsaParams {
            c1: 0.0,
            c2: 0.0,
            ..Default::default()
        };
        assert_eq!(psogsa_velocity(&a, &[9.0], &[-4.0], &p0, &mut ConstantSource(0.5)), vec![1.5]);
        let p1 = PsogsaParams {
            c1: 1.0,
            c2: 1.0,
            ..Default::default()
        };
        let a = agent(&[0.0], &[1.0], &[0.0]);
        assert_eq!(psogsa_velocity(&a, &[2.0], &[3.0], &p1, &mut ConstantSource(1.0)), vec![6.0]);
    }

    #[test]
    fn position_update_cases() {
        let space = SearchSpace::uniform(1, -5.0, 5.0).unwrap();
        let mut a = agent(&[0.0], &[0.0], &[0.0]);
        position_update(&mut a, vec![1.0], &space);
        assert_eq!(a.position, vec![1.0]);
        let mut a = agent(&[4.0], &[0.0], &[0.0]);
        position_update(&mut a, vec![3.0], &space);
        assert_eq!(a.position, vec![5.0]);
        assert_eq!(a.velocity, vec![3.0]);
        let mut a = agent(&[-2.5], &[0.0], &[0.0]);
        position_update(&mut a, vec![0.0], &space);
        assert_eq!(a.position, vec![-2.5]);
    }
}
