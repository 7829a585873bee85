//! The 23 classical benchmark objectives: seven unimodal and six
//! multimodal 30-dimensional functions, and ten low-dimensional
//! multimodal functions with tabulated coefficients.

mod coefficients;

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::UniformSource;
use crate::space::SearchSpace;

pub use coefficients::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BenchmarkId(u8);

impl BenchmarkId {
    pub fn new(n: u8) -> Result<Self> {
        if (1..=23).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::InvalidConfig(format!("benchmark F{n} does not exist (F1..F23)")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = BenchmarkId> {
        (1..=23).map(BenchmarkId)
    }

    pub fn category(self) -> Category {
        match self.0 {
            1..=7 => Category::Unimodal,
            8..=13 => Category::Multimodal,
            _ => Category::FixedDimension,
        }
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown benchmark id `{s}`")))?;
        let n: u8 = digits
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("unknown benchmark id `{s}`")))?;
        Self::new(n)
    }
}

impl TryFrom<String> for BenchmarkId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BenchmarkId> for String {
    fn from(id: BenchmarkId) -> String {
        id.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Unimodal,
    Multimodal,
    FixedDimension,
}

impl Category {
    pub fn label(self) -> &'static str {
        match self {
            Category::Unimodal => "unimodal",
            Category::Multimodal => "multimodal",
            Category::FixedDimension => "fixed-dimension",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkProblem {
    pub id: BenchmarkId,
    pub space: SearchSpace,
    /// Global minimum value to full precision.
    pub known_optimum: f64,
    /// The rounded figure usually quoted for this function.
    pub tabulated_optimum: f64,
    /// Points attaining the minimum (to the precision they are usually quoted).
    pub optimum_positions: Vec<Vec<f64>>,
    pub category: Category,
}

impl BenchmarkProblem {
    pub fn new(id: BenchmarkId) -> Self {
        let n = id.number();
        let cube = |dim: usize, lo: f64, hi: f64| SearchSpace::uniform(dim, lo, hi).expect("static bounds");
        let at = |dim: usize, v: f64| vec![vec![v; dim]];
        let (space, known, tab, positions) = match n {
            1 | 3 | 4 | 6 => (cube(30, -100.0, 100.0), 0.0, 0.0, at(30, 0.0)),
            2 => (cube(30, -10.0, 10.0), 0.0, 0.0, at(30, 0.0)),
            5 => (cube(30, -30.0, 30.0), 0.0, 0.0, at(30, 1.0)),
            7 => (cube(30, -1.28, 1.28), 0.0, 0.0, at(30, 0.0)),
            8 => (cube(30, -500.0, 500.0), -12569.48661816488, -12569.5, at(30, 420.96)),
            9 => (cube(30, -5.12, 5.12), 0.0, 0.0, at(30, 0.0)),
            10 => (cube(30, -32.0, 32.0), 0.0, 0.0, at(30, 0.0)),
            11 => (cube(30, -600.0, 600.0), 0.0, 0.0, at(30, 0.0)),
            12 => (cube(30, -50.0, 50.0), 0.0, 0.0, at(30, -1.0)),
            13 => (cube(30, -50.0, 50.0), 0.0, 0.0, at(30, 1.0)),
            14 => (cube(2, -65.536, 65.536), 0.9980038377944496, 1.0, vec![vec![-32.0, -32.0]]),
            15 => (
                cube(4, -5.0, 5.0),
                0.00030748598780560557,
                0.00030,
                vec![vec![0.1928, 0.1908, 0.1231, 0.1358]],
            ),
            16 => (
                cube(2, -5.0, 5.0),
                -1.0316284534898776,
                -1.0316,
                vec![vec![0.089, -0.712], vec![-0.089, 0.712]],
            ),
            17 => (
                SearchSpace::new(vec![-5.0, 0.0], vec![10.0, 15.0]).expect("static bounds"),
                0.39788735772973816,
                0.398,
                vec![vec![-PI, 12.275], vec![PI, 2.275], vec![3.0 * PI, 2.475]],
            ),
            18 => (cube(2, -5.0, 5.0), 3.0, 3.0, vec![vec![0.0, -1.0]]),
            19 => (cube(3, 0.0, 1.0), -3.8627821478207554, -3.86, vec![vec![0.114, 0.556, 0.852]]),
            20 => (
                cube(6, 0.0, 1.0),
                -3.322368011415515,
                -3.32,
                vec![vec![0.201, 0.15, 0.477, 0.275, 0.311, 0.657]],
            ),
            21 => (cube(4, 0.0, 10.0), -10.153199679058229, -10.1532, vec![vec![4.0; 4]]),
            22 => (cube(4, 0.0, 10.0), -10.402940566818662, -10.4028, vec![vec![4.0; 4]]),
            23 => (cube(4, 0.0, 10.0), -10.536409816692045, -10.5363, vec![vec![4.0; 4]]),
            _ => unreachable!("BenchmarkId is validated"),
        };
        Self {
            id,
            space,
            known_optimum: known,
            tabulated_optimum: tab,
            optimum_positions: positions,
            category: id.category(),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// True for objectives that consume a noise draw per evaluation.
    pub fn is_stochastic(&self) -> bool {
        self.id.number() == 7
    }
}

impl Objective for BenchmarkProblem {
    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &[f64], noise: &mut dyn UniformSource) -> Result<f64> {
        evaluate(self, x, noise)
    }
}

/// All 23 problems in id order.
pub fn registry() -> Vec<BenchmarkProblem> {
    BenchmarkId::all().map(BenchmarkProblem::new).collect()
}

/// `k (x - a)^m` above `a`, `k (-x - a)^m` below `-a`, zero in between.
pub fn penalty_u(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

pub fn evaluate(problem: &BenchmarkProblem, x: &[f64], noise: &mut dyn UniformSource) -> Result<f64> {
    if x.len() != problem.dim() {
        return Err(Error::InvalidArgument(format!(
            "{} takes {} coordinates, got {}",
            problem.id,
            problem.dim(),
            x.len()
        )));
    }
    let n = x.len() as f64;
    let v = match problem.id.number() {
        1 => x.iter().map(|v| v * v).sum(),
        2 => {
            let abs = x.iter().map(|v| v.abs());
            abs.clone().sum::<f64>() + abs.product::<f64>()
        }
        3 => {
            let mut prefix = 0.0;
            x.iter()
                .map(|v| {
                    prefix += v;
                    prefix * prefix
                })
                .sum()
        }
        4 => x.iter().fold(0.0, |m: f64, v| m.max(v.abs())),
        5 => x
            .windows(2)
            .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
            .sum(),
        6 => x.iter().map(|v| (v + 0.5).floor().powi(2)).sum(),
        7 => {
            let s: f64 = x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v.powi(4)).sum();
            s + noise.uniform()
        }
        8 => x.iter().map(|v| -v * v.abs().sqrt().sin()).sum(),
        9 => x.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0).sum(),
        10 => {
            let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
            let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
            -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
        }
        11 => {
            let s = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
            let p: f64 = x
                .iter()
                .enumerate()
                .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                .product();
            s - p + 1.0
        }
        12 => {
            let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
            let last = y[y.len() - 1];
            let inner: f64 = y
                .windows(2)
                .map(|w| (w[0] - 1.0).powi(2) * (1.0 + 10.0 * (PI * w[1]).sin().powi(2)))
                .sum();
            let core = 10.0 * (PI * y[0]).sin().powi(2) + inner + (last - 1.0).powi(2);
            PI / n * core + x.iter().map(|v| penalty_u(*v, 10.0, 100.0, 4)).sum::<f64>()
        }
        13 => {
            let last = x[x.len() - 1];
            let inner: f64 = x
                .iter()
                .map(|v| (v - 1.0).powi(2) * (1.0 + (3.0 * PI * v).sin().powi(2)))
                .sum();
            let core = (3.0 * PI * x[0]).sin().powi(2)
                + inner
                + (last - 1.0).powi(2) * (1.0 + (2.0 * PI * last).sin().powi(2));
            0.1 * core + x.iter().map(|v| penalty_u(*v, 5.0, 100.0, 4)).sum::<f64>()
        }
        14 => {
            let a = foxholes();
            let s: f64 = (0..25)
                .map(|j| 1.0 / ((j + 1) as f64 + (x[0] - a[0][j]).powi(6) + (x[1] - a[1][j]).powi(6)))
                .sum();
            1.0 / (1.0 / 500.0 + s)
        }
        15 => KOWALIK_A
            .iter()
            .zip(KOWALIK_B_INV)
            .map(|(a, b_inv)| {
                let b = 1.0 / b_inv;
                let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
                (a - model).powi(2)
            })
            .sum(),
        16 => {
            let (a, b) = (x[0], x[1]);
            4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
        }
        17 => {
            let (a, b) = (x[0], x[1]);
            (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
                + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
                + 10.0
        }
        18 => {
            let (a, b) = (x[0], x[1]);
            let first = 1.0
                + (a + b + 1.0).powi(2) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
            let second = 30.0
                + (2.0 * a - 3.0 * b).powi(2)
                    * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
            first * second
        }
        19 => hartmann(x, &HARTMANN3_A, &HARTMANN3_P),
        20 => hartmann(x, &HARTMANN6_A, &HARTMANN6_P),
        21 => shekel(x, 5),
        22 => shekel(x, 7),
        23 => shekel(x, 10),
        _ => unreachable!("BenchmarkId is validated"),
    };
    Ok(v)
}

fn hartmann<const D: usize>(x: &[f64], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..D).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMANN_C[i] * (-e).exp()
        })
        .sum::<f64>()
}

fn shekel(x: &[f64], m: usize) -> f64 {
    -SHEKEL_A[..m]
        .iter()
        .zip(&SHEKEL_C)
        .map(|(a, c)| {
            let d: f64 = x.iter().zip(a).map(|(xi, ai)| (xi - ai).powi(2)).sum();
            1.0 / (d + c)
        })
        .sum::<f64>()
}
