//! Labelling constructions, each paired with its closed-form density prediction.

mod adhoc;
mod cactus;
mod generator;
mod hypercube;
mod parity;
mod pivot;
mod predicted;

use serde::Serialize;

use crate::temporal::{density, DensityReport, TemporalGraph};

pub use adhoc::{adhoc, happy_adhoc};
pub use cactus::{cactus_decompose, combined_cactus, Block, CactusDecomposition};
pub use generator::{generator_cycle, generator_even, generator_odd};
pub use hypercube::hypercube;
pub use parity::parity;
pub use pivot::pivot_tree;
pub use predicted::{predicted_density, Family, Prediction, Total};

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionResult {
    pub family: &'static str,
    pub params: Vec<(&'static str, usize)>,
    #[serde(skip)]
    pub graph: TemporalGraph,
    pub predicted: Prediction,
    /// Deviations decided while building (e.g. a dropped redundant label).
    pub notes: Vec<String>,
}

impl ConstructionResult {
    pub fn measured(&self) -> DensityReport {
        density(&self.graph)
    }

    /// Whether the measured density agrees with the prediction.
    pub fn matches_prediction(&self) -> bool {
        self.predicted.matches(&self.measured())
    }
}

/// Edge `i` of the cycle `0, 1, ..., n-1`.
pub(crate) fn cycle_edge(n: usize, i: usize) -> (usize, usize) {
    (i % n, (i + 1) % n)
}
