use serde::{Deserialize, Serialize};

use super::graph::{validate, Class, Label, TemporalGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub n: usize,
    pub m: usize,
    /// Temporal cost T.
    pub total: usize,
    /// Temporality: the most labels on a single edge.
    pub temporality: usize,
    pub max_label: Option<Label>,
    /// Strongest class the labelling validates as.
    pub class: Class,
}

pub fn density(g: &TemporalGraph) -> DensityReport {
    let class = if validate(g, Class::Happy).ok() {
        Class::Happy
    } else if validate(g, Class::Proper).ok() {
        Class::Proper
    } else {
        Class::Strict
    };
    DensityReport {
        n: g.n(),
        m: g.m(),
        total: g.total_labels(),
        temporality: g.temporality(),
        max_label: g.max_label(),
        class,
    }
}

/// `T ≤ n² − n − 1` and `τ ≤ n − 1`; meant for minimal temporally connected proper labellings.
pub fn check_global_bounds(r: &DensityReport) -> bool {
    if r.n <= 1 {
        return r.total == 0;
    }
    let n = r.n as u64;
    r.total as u64 <= n * n - n - 1 && r.temporality as u64 <= n - 1
}
