use super::{predicted_density, ConstructionResult, Family};
use crate::error::{Error, Result};
use crate::temporal::{Label, TemporalGraph};

/// `Q_d` with every dimension-`k` edge labelled `k + 1`.
pub fn hypercube(d: usize) -> Result<ConstructionResult> {
    if d == 0 || d > 20 {
        return Err(Error::Param(format!(
            "hypercube dimension must be in 1..=20, got {d}"
        )));
    }
    let n = 1usize << d;
    let mut g = TemporalGraph::new(n);
    for u in 0..n {
        for k in 0..d {
            let v = u ^ (1 << k);
            if u < v {
                g.add_label(u, v, k as Label + 1)?;
            }
        }
    }
    Ok(ConstructionResult {
        family: "hypercube",
        params: vec![("d", d)],
        graph: g,
        predicted: predicted_density(Family::Hypercube { d }),
        notes: Vec::new(),
    })
}
