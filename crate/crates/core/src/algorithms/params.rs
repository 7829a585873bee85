use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Gravitational constant schedule and force regularization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GsaParams {
    pub g0: f64,
    /// Decay rate of the gravitational constant.
    pub alpha_g: f64,
    /// Added to pairwise distances so coincident agents stay finite.
    pub epsilon: f64,
}

impl Default for GsaParams {
    fn default() -> Self {
        Self {
            g0: 100.0,
            alpha_g: 20.0,
            epsilon: 1e-10,
        }
    }
}

impl GsaParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.g0 > 0.0 && self.alpha_g > 0.0 && self.epsilon > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "gsa parameters must be positive: g0={}, alpha_g={}, epsilon={}",
                self.g0, self.alpha_g, self.epsilon
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PsoParams {
    pub c1: f64,
    pub c2: f64,
    pub w_start: f64,
    pub w_end: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            c1: 2.0,
            c2: 2.0,
            w_start: 0.9,
            w_end: 0.4,
        }
    }
}

impl PsoParams {
    /// Inertia weight, linear from `w_start` at t=0 to `w_end` at t=max_iter.
    pub fn inertia(&self, t: usize, max_iter: usize) -> f64 {
        let frac = t as f64 / max_iter.max(1) as f64;
        self.w_start - (self.w_start - self.w_end) * frac
    }

    pub fn validate(&self) -> Result<()> {
        if self.c1 < 0.0 || self.c2 < 0.0 {
            return Err(Error::InvalidConfig("pso c1, c2 must be non-negative".into()));
        }
        if !(self.w_start >= self.w_end && self.w_end >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "pso inertia needs w_start >= w_end >= 0, got {} -> {}",
                self.w_start, self.w_end
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PsogsaParams {
    /// Weight on the gravitational acceleration.
    pub c1: f64,
    /// Weight on the pull toward gbest.
    pub c2: f64,
    pub gsa: GsaParams,
}

impl Default for PsogsaParams {
    fn default() -> Self {
        Self {
            c1: 0.5,
            c2: 1.5,
            gsa: GsaParams::default(),
        }
    }
}

impl PsogsaParams {
    pub fn validate(&self) -> Result<()> {
        if self.c1 < 0.0 || self.c2 < 0.0 {
            return Err(Error::InvalidConfig("psogsa c1, c2 must be non-negative".into()));
        }
        self.gsa.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GpsParams {
    /// Scale of the PSO velocity share.
    pub c3: f64,
    /// Scale of the GSA velocity share.
    pub c4: f64,
    pub pso: PsoParams,
    pub gsa: GsaParams,
}

impl Default for GpsParams {
    fn default() -> Self {
        Self {
            c3: 1.0,
            c4: 1.0,
            pso: PsoParams::default(),
            gsa: GsaParams::default(),
        }
    }
}

impl GpsParams {
    pub fn validate(&self) -> Result<()> {
        if self.c3 < 0.0 || self.c4 < 0.0 {
            return Err(Error::InvalidConfig("gps c3, c4 must be non-negative".into()));
        }
        self.pso.validate()?;
        self.gsa.validate()
    }
}
