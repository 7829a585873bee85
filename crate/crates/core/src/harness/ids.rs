use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engineering::{DesignId, DesignProblem};
use crate::error::{Error, Result};
use crate::functions::{BenchmarkId, BenchmarkProblem};
use crate::objective::Objective;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum AlgorithmId {
    Pso,
    Gsa,
    Gps,
    Psogsa,
    Mgps,
    Mpsogsa,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 6] = [Self::Pso, Self::Gsa, Self::Gps, Self::Psogsa, Self::Mgps, Self::Mpsogsa];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pso => "PSO",
            Self::Gsa => "GSA",
            Self::Gps => "GPS",
            Self::Psogsa => "PSOGSA",
            Self::Mgps => "MGPS",
            Self::Mpsogsa => "MPSOGSA",
        }
    }

    pub fn is_mutated(self) -> bool {
        matches!(self, Self::Mgps | Self::Mpsogsa)
    }

    /// The unmutated algorithm a mutated variant is built on.
    pub fn base(self) -> AlgorithmId {
        match self {
            Self::Mgps => Self::Gps,
            Self::Mpsogsa => Self::Psogsa,
            other => other,
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Self::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown algorithm `{s}`")))
    }
}

pub fn parse_algorithm_list(s: &str) -> Result<Vec<AlgorithmId>> {
    let list: Vec<AlgorithmId> = s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_>>()?;
    if list.is_empty() {
        return Err(Error::InvalidConfig("empty algorithm list".into()));
    }
    Ok(list)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ProblemId {
    Benchmark(BenchmarkId),
    Design(DesignId),
}

impl ProblemId {
    /// Iteration budget used when none is given.
    pub fn default_iterations(self) -> usize {
        match self {
            ProblemId::Benchmark(b) if b.number() <= 7 => 500,
            _ => 1000,
        }
    }

    pub fn build(self, constrained: bool) -> Box<dyn Objective> {
        match self {
            ProblemId::Benchmark(b) => Box::new(BenchmarkProblem::new(b)),
            ProblemId::Design(d) if constrained => Box::new(DesignProblem::constrained(d)),
            ProblemId::Design(d) => Box::new(DesignProblem::new(d)),
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemId::Benchmark(b) => b.fmt(f),
            ProblemId::Design(d) => d.fmt(f),
        }
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > 1 && s[..2].eq_ignore_ascii_case("EF") {
            s.parse().map(ProblemId::Design)
        } else {
            s.parse().map(ProblemId::Benchmark)
        }
    }
}

impl TryFrom<String> for ProblemId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ProblemId> for String {
    fn from(p: ProblemId) -> String {
        p.to_string()
    }
}

/// Parses `F1,F10,EF2` and inclusive ranges such as `F1..F23` or `EF1..EF5`.
pub fn parse_problem_list(s: &str) -> Result<Vec<ProblemId>> {
    let mut out = Vec::new();
    for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token.split_once("..") {
            Some((a, b)) => out.extend(expand_range(a.parse()?, b.parse()?)?),
            None => out.push(token.parse()?),
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidConfig("empty problem list".into()));
    }
    Ok(out)
}

fn expand_range(a: ProblemId, b: ProblemId) -> Result<Vec<ProblemId>> {
    let bad = || Error::InvalidConfig(format!("invalid problem range {a}..{b}"));
    match (a, b) {
        (ProblemId::Benchmark(x), ProblemId::Benchmark(y)) if x <= y => (x.number()..=y.number())
            .map(|n| BenchmarkId::new(n).map(ProblemId::Benchmark))
            .collect(),
        (ProblemId::Design(x), ProblemId::Design(y)) if x <= y => Ok(DesignId::ALL
            .into_iter()
            .filter(|d| (x..=y).contains(d))
            .map(ProblemId::Design)
            .collect()),
        _ => Err(bad()),
    }
}
