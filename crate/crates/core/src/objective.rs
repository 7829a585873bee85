use crate::error::Result;
use crate::rng::UniformSource;
use crate::space::{SearchSpace, Sense};

/// A box-bounded scalar objective.
///
/// `noise` is the run's main stream; deterministic objectives never touch it.
pub trait Objective: Send + Sync {
    fn space(&self) -> &SearchSpace;

    fn sense(&self) -> Sense {
        Sense::Minimize
    }

    fn evaluate(&self, x: &[f64], noise: &mut dyn UniformSource) -> Result<f64>;
}

/// Wraps a closure as an objective. Handy for tests and ad-hoc problems.
pub struct FnObjective<F> {
    space: SearchSpace,
    sense: Sense,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    pub fn new(space: SearchSpace, f: F) -> Self {
        Self {
            space,
            sense: Sense::Minimize,
            f,
        }
    }

    pub fn maximize(mut self) -> Self {
        self.sense = Sense::Maximize;
        self
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn sense(&self) -> Sense {
        self.sense
    }

    fn evaluate(&self, x: &[f64], _noise: &mut dyn UniformSource) -> Result<f64> {
        if x.len() != self.space.dim() {
            return Err(crate::Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.space.dim(),
                x.len()
            )));
        }
        Ok((self.f)(x))
    }
}
