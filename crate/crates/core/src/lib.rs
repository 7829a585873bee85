//! Seedable swarm optimizers: PSO, GSA, the GPS and PSOGSA hybrids, and
//! their centroid-based fuzzy-mutation variants MGPS and MPSOGSA, with the
//! classical 23-function benchmark suite and five engineering design
//! problems.

pub mod algorithms;
pub mod engineering;
pub mod error;
pub mod functions;
pub mod harness;
pub mod mutation;
pub mod objective;
pub mod rng;
pub mod space;
pub mod swarm;

pub use error::{Error, Result};
pub use objective::{FnObjective, Objective};
pub use rng::{RngStream, UniformSource};
pub use space::{clamp_to_bounds, SearchSpace, Sense};
pub use swarm::{centroid, find_extremes, initialize_population, Agent, FitnessExtremes, SwarmState};
