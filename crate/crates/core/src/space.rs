use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Optimization direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    #[default]
    Minimize,
    Maximize,
}

impl Sense {
    /// True when `a` is strictly better than `b`.
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Sense::Minimize => a < b,
            Sense::Maximize => a > b,
        }
    }

    /// Orders fitness values best-first.
    pub fn cmp(self, a: f64, b: f64) -> std::cmp::Ordering {
        match self {
            Sense::Minimize => a.total_cmp(&b),
            Sense::Maximize => b.total_cmp(&a),
        }
    }
}

/// Axis-aligned box `[lower[d], upper[d]]` in `D` dimensions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidArgument("search space needs at least one dimension".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::InvalidArgument(format!(
                "bound lengths differ: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        for (d, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(Error::InvalidArgument(format!(
                    "dimension {d}: need finite lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval in every dimension.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn range(&self, d: usize) -> f64 {
        self.upper[d] - self.lower[d]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *lo <= *v && *v <= *hi)
    }

    pub fn clamp_in_place(&self, x: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim());
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }
}

/// Clips every coordinate into the box.
pub fn clamp_to_bounds(position: &[f64], space: &SearchSpace) -> Vec<f64> {
    let mut out = position.to_vec();
    space.clamp_in_place(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_bounds() {
        assert!(SearchSpace::new(vec![1.0], vec![1.0]).is_err());
        assert!(SearchSpace::new(vec![2.0], vec![1.0]).is_err());
        assert!(SearchSpace::new(vec![0.0, 0.0], vec![1.0]).is_err());
        assert!(SearchSpace::new(vec![], vec![]).is_err());
    }

    #[test]
    fn clamp_outside_point() {
        let s = SearchSpace::uniform(2, -100.0, 100.0).unwrap();
        assert_eq!(clamp_to_bounds(&[150.0, -150.0], &s), vec![100.0, -100.0]);
    }

    #[test]
    fn clamp_keeps_interior_and_boundary() {
        let s = SearchSpace::uniform(2, -100.0, 100.0).unwrap();
        assert_eq!(clamp_to_bounds(&[3.5, -7.0], &s), vec![3.5, -7.0]);
        assert_eq!(clamp_to_bounds(&[100.0, -100.0], &s), vec![100.0, -100.0]);
    }

    #[test]
    fn range_is_width() {
        let s = SearchSpace::new(vec![-5.0, 0.0], vec![10.0, 15.0]).unwrap();
        assert_eq!(s.range(0), 15.0);
        assert_eq!(s.range(1), 15.0);
    }

    #[test]
    fn sense_ordering() {
        assert!(Sense::Minimize.better(1.0, 2.0));
        assert!(Sense::Maximize.better(2.0, 1.0));
        assert!(!Sense::Minimize.better(1.0, 1.0));
    }
}
