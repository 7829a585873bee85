//! Five classical engineering design objectives. Each problem runs either
//! with box bounds only, or with its usual inequality constraints folded
//! into the fitness through a static quadratic penalty.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::UniformSource;
use crate::space::SearchSpace;

pub const DEFAULT_PENALTY: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DesignId {
    /// Tension/compression spring, `[d, D, N]`.
    EF1,
    /// Gear train, `[n_A, n_B, n_D, n_F]`.
    EF2,
    /// Welded beam, `[h, l, t, b]`.
    EF3,
    /// Pressure vessel, `[T_s, T_h, R, L]`.
    EF4,
    /// Closed coil helical spring, `[d, D, N_c]`.
    EF5,
}

impl DesignId {
    pub const ALL: [DesignId; 5] = [Self::EF1, Self::EF2, Self::EF3, Self::EF4, Self::EF5];

    pub fn name(self) -> &'static str {
        match self {
            Self::EF1 => "tension/compression spring",
            Self::EF2 => "gear train",
            Self::EF3 => "welded beam",
            Self::EF4 => "pressure vessel",
            Self::EF5 => "closed coil helical spring",
        }
    }
}

impl fmt::Display for DesignId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for DesignId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown design problem `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignMode {
    #[default]
    Unconstrained,
    Constrained,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignProblem {
    pub id: DesignId,
    pub space: SearchSpace,
    pub mode: DesignMode,
    pub penalty_coefficient: f64,
    /// Round gear teeth counts to the nearest integer before evaluating.
    pub integer_gears: bool,
}

// welded beam load case
const WB_P: f64 = 6000.0;
const WB_L: f64 = 14.0;
const WB_E: f64 = 30e6;
const WB_G: f64 = 12e6;
const WB_TAU_MAX: f64 = 13600.0;
const WB_SIGMA_MAX: f64 = 30000.0;
const WB_DELTA_MAX: f64 = 0.25;

impl DesignProblem {
    /// Box-bounded problem with no constraint penalty.
    pub fn new(id: DesignId) -> Self {
        let (lower, upper) = match id {
            DesignId::EF1 => (vec![0.05, 0.25, 2.0], vec![2.0, 1.3, 15.0]),
            DesignId::EF2 => (vec![12.0; 4], vec![60.0; 4]),
            DesignId::EF3 => (vec![0.1, 0.1, 0.1, 0.1], vec![2.0, 10.0, 10.0, 2.0]),
            DesignId::EF4 => (vec![0.0, 0.0, 10.0, 10.0], vec![99.0, 99.0, 200.0, 200.0]),
            DesignId::EF5 => (vec![0.508, 1.27, 15.0], vec![1.016, 7.62, 25.0]),
        };
        Self {
            id,
            space: SearchSpace::new(lower, upper).expect("static bounds"),
            mode: DesignMode::Unconstrained,
            penalty_coefficient: DEFAULT_PENALTY,
            integer_gears: false,
        }
    }

    pub fn constrained(id: DesignId) -> Self {
        Self { mode: DesignMode::Constrained, ..Self::new(id) }
    }

    pub fn with_penalty(mut self, coefficient: f64) -> Result<Self> {
        if !(coefficient >= 0.0 && coefficient.is_finite()) {
            return Err(Error::InvalidConfig(format!("penalty coefficient {coefficient} must be finite and >= 0")));
        }
        self.penalty_coefficient = coefficient;
        Ok(self)
    }

    pub fn with_integer_gears(mut self, on: bool) -> Self {
        self.integer_gears = on;
        self
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{} takes {} variables, got {}",
                self.id,
                self.dim(),
                x.len()
            )))
        }
    }

    pub fn objective(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        let v = match self.id {
            DesignId::EF1 => (x[2] + 2.0) * x[1] * x[0] * x[0],
            DesignId::EF2 => {
                let g = self.gears(x);
                (1.0 / 6.931 - g[2] * g[1] / (g[0] * g[3])).powi(2)
            }
            DesignId::EF3 => 1.1047 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]),
            DesignId::EF4 => {
                0.6224 * x[0] * x[2] * x[3]
                    + 1.7781 * x[1] * x[2] * x[2]
                    + 3.1661 * x[0] * x[0] * x[3]
                    + 19.84 * x[0] * x[0] * x[2]
            }
            DesignId::EF5 => PI * PI / 4.0 * (x[2] + 2.0) * x[1] * x[0] * x[0],
        };
        Ok(v)
    }

    fn gears(&self, x: &[f64]) -> [f64; 4] {
        let mut g = [x[0], x[1], x[2], x[3]];
        if self.integer_gears {
            g.iter_mut().for_each(|v| *v = v.round());
        }
        g
    }

    /// Raw constraint values `g_k(x)`; feasible when all are `<= 0`.
    pub fn constraints(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(x)?;
        let g = match self.id {
            DesignId::EF1 => {
                let (d, dd, n) = (x[0], x[1], x[2]);
                vec![
                    1.0 - dd.powi(3) * n / (71785.0 * d.powi(4)),
                    (4.0 * dd * dd - d * dd) / (12566.0 * (dd * d.powi(3) - d.powi(4)))
                        + 1.0 / (5108.0 * d * d)
                        - 1.0,
                    1.0 - 140.45 * d / (dd * dd * n),
                    (d + dd) / 1.5 - 1.0,
                ]
            }
            DesignId::EF2 => {
                let g = self.gears(x);
                g.iter().flat_map(|v| [12.0 - v, v - 60.0]).collect()
            }
            DesignId::EF3 => welded_beam_constraints(x),
            DesignId::EF4 => {
                let (ts, th, r, l) = (x[0], x[1], x[2], x[3]);
                vec![
                    -ts + 0.0193 * r,
                    -th + 0.00954 * r,
                    -PI * r * r * l - 4.0 / 3.0 * PI * r.powi(3) + 1_296_000.0,
                    l - 240.0,
                ]
            }
            DesignId::EF5 => Vec::new(),
        };
        Ok(g)
    }

    /// `max(0, g_k(x))` per constraint; empty when unconstrained.
    pub fn constraint_violations(&self, x: &[f64]) -> Result<Vec<f64>> {
        if self.mode == DesignMode::Unconstrained {
            self.check_dim(x)?;
            return Ok(Vec::new());
        }
        Ok(self.constraints(x)?.into_iter().map(|g| g.max(0.0)).collect())
    }

    pub fn is_feasible(&self, x: &[f64]) -> Result<bool> {
        Ok(self.constraint_violations(x)?.iter().all(|v| *v == 0.0))
    }

    pub fn penalized_fitness(&self, x: &[f64]) -> Result<f64> {
        let f = self.objective(x)?;
        let violations = self.constraint_violations(x)?;
        if violations.is_empty() || self.penalty_coefficient == 0.0 {
            return Ok(f);
        }
        let sq: f64 = violations.iter().map(|v| v * v).sum();
        Ok(f + self.penalty_coefficient * sq)
    }
}

fn welded_beam_constraints(x: &[f64]) -> Vec<f64> {
    let (h, l, t, b) = (x[0], x[1], x[2], x[3]);
    let tau_p = WB_P / (SQRT_2 * h * l);
    let m = WB_P * (WB_L + l / 2.0);
    let r = (l * l / 4.0 + ((h + t) / 2.0).powi(2)).sqrt();
    let j = 2.0 * (SQRT_2 * h * l * (l * l / 12.0 + ((h + t) / 2.0).powi(2)));
    let tau_pp = m * r / j;
    let tau = (tau_p * tau_p + 2.0 * tau_p * tau_pp * l / (2.0 * r) + tau_pp * tau_pp).sqrt();
    let sigma = 6.0 * WB_P * WB_L / (b * t * t);
    let delta = 4.0 * WB_P * WB_L.powi(3) / (WB_E * t.powi(3) * b);
    let p_c = 4.013 * WB_E * (t * t * b.powi(6) / 36.0).sqrt() / (WB_L * WB_L)
        * (1.0 - t / (2.0 * WB_L) * (WB_E / (4.0 * WB_G)).sqrt());
    vec![
        tau - WB_TAU_MAX,
        sigma - WB_SIGMA_MAX,
        h - b,
        0.10471 * h * h + 0.04811 * t * b * (14.0 + l) - 5.0,
        0.125 - h,
        delta - WB_DELTA_MAX,
        WB_P - p_c,
    ]
}

impl Objective for DesignProblem {
    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &[f64], _noise: &mut dyn UniformSource) -> Result<f64> {
        self.penalized_fitness(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reported_designs() {
        let ef1 = DesignProblem::new(DesignId::EF1);
        assert!((ef1.objective(&[0.05, 0.25, 2.0]).unwrap() - 2.5e-3).abs() < 1e-12);
        let ef5 = DesignProblem::new(DesignId::EF5);
        assert!((ef5.objective(&[0.508, 1.27, 15.0]).unwrap() - 13.74738).abs() < 1e-4);
        let ef2 = DesignProblem::new(DesignId::EF2);
        let v = ef2.objective(&[60.0, 12.0, 43.2837, 60.0]).unwrap();
        assert!((v - 1.0547734568617715e-13).abs() < 1e-20, "{v}");
        assert!(ef2.objective(&[29.2062, 12.0, 12.0749, 34.3865]).unwrap() < 1e-11);
        let ef3 = DesignProblem::new(DesignId::EF3);
        assert!((ef3.objective(&[0.1; 4]).unwrap() - 0.00788821).abs() < 1e-12);
        let ef4 = DesignProblem::new(DesignId::EF4);
        assert_eq!(ef4.objective(&[0.0, 0.0, 82.7991, 10.6423]).unwrap(), 0.0);
        assert_eq!(ef4.objective(&[0.0, 0.0, 79.0777, 10.0]).unwrap(), 0.0);
    }

    #[test]
    fn gear_ratio_exact_zero() {
        let ef2 = DesignProblem::new(DesignId::EF2);
        // x2 x3 / (x1 x4) = 1/6.931
        let v = ef2.objective(&[6.931 * 20.0, 10.0, 2.0, 1.0]).unwrap();
        assert!(v < 1e-30);
    }

    #[test]
    fn unconstrained_has_no_violations() {
        for id in DesignId::ALL {
            let p = DesignProblem::new(id);
            let x = p.space.lower().to_vec();
            assert!(p.constraint_violations(&x).unwrap().is_empty());
            assert_eq!(p.penalized_fitness(&x).unwrap(), p.objective(&x).unwrap());
        }
    }

    #[test]
    fn gear_bound_violation() {
        let p = DesignProblem::constrained(DesignId::EF2);
        let v = p.constraint_violations(&[11.0, 20.0, 20.0, 20.0]).unwrap();
        assert_eq!(v.len(), 8);
        assert_eq!(v[0], 1.0);
        assert!(v[1..].iter().all(|x| *x == 0.0));
    }

    #[test]
    fn spring_known_feasible_and_infeasible() {
        let p = DesignProblem::constrained(DesignId::EF1);
        // best known constrained design
        let best = [0.051689, 0.356718, 11.288966];
        let g = p.constraints(&best).unwrap();
        assert!(g.iter().all(|v| *v < 1e-4), "{g:?}");
        assert!(!p.is_feasible(&[0.05, 0.25, 2.0]).unwrap());
    }

    #[test]
    fn welded_beam_known_design() {
        let p = DesignProblem::constrained(DesignId::EF3);
        let x = [0.205730, 3.470489, 9.036624, 0.205730];
        let g = p.constraints(&x).unwrap();
        assert_eq!(g.len(), 7);
        // near-active constraints in absolute units
        assert!(g[0] < 1.0 && g[1] < 1.0 && g[6] < 1.0, "{g:?}");
        assert!(g[2] <= 1e-12 && g[3] < 0.0 && g[4] < 0.0 && g[5] < 0.0);
        let f = p.objective(&x).unwrap();
        assert!((f - 1.7248).abs() < 1e-3, "{f}");
    }

    #[test]
    fn pressure_vessel_constraints() {
        let p = DesignProblem::constrained(DesignId::EF4);
        assert!(!p.is_feasible(&[0.0, 0.0, 82.7991, 10.6423]).unwrap());
        assert!(p.is_feasible(&[1.0, 0.5, 50.0, 100.0]).unwrap());
    }

    #[test]
    fn penalty_formula() {
        let p = DesignProblem::constrained(DesignId::EF2).with_penalty(3.0).unwrap();
        let x = [11.0, 20.0, 20.0, 20.0];
        let f = p.objective(&x).unwrap();
        assert_eq!(p.penalized_fitness(&x).unwrap(), f + 3.0);
        let zero = DesignProblem::constrained(DesignId::EF2).with_penalty(0.0).unwrap();
        assert_eq!(zero.penalized_fitness(&x).unwrap(), f);
        assert!(DesignProblem::new(DesignId::EF2).with_penalty(-1.0).is_err());
    }

    #[test]
    fn integer_gears_round() {
        let p = DesignProblem::new(DesignId::EF2).with_integer_gears(true);
        assert_eq!(
            p.objective(&[49.2, 19.4, 16.1, 43.4]).unwrap(),
            p.objective(&[49.0, 19.0, 16.0, 43.0]).unwrap()
        );
    }

    #[test]
    fn dimension_checked() {
        let p = DesignProblem::new(DesignId::EF5);
        assert!(matches!(p.objective(&[1.0, 2.0]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn ids_parse() {
        assert_eq!("EF3".parse::<DesignId>().unwrap(), DesignId::EF3);
        assert_eq!("ef5".parse::<DesignId>().unwrap(), DesignId::EF5);
        assert!("EF6".parse::<DesignId>().is_err());
    }
}
