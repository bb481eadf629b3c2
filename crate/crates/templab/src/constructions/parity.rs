use super::{cycle_edge, predicted_density, ConstructionResult, Family};
use crate::error::{Error, Result};
use crate::temporal::{Label, TemporalGraph};

/// `C_n` (n even) where the matching containing `{0, 1}` carries the odd labels
/// up to `n/2` and the other matching the even ones.
pub fn parity(n: usize) -> Result<ConstructionResult> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Param(format!(
            "parity needs an even n >= 4, got {n}"
        )));
    }
    let mut g = TemporalGraph::new(n);
    let half = (n / 2) as Label;
    for i in 0..n {
        let (u, v) = cycle_edge(n, i);
        let first = if i % 2 == 0 { 1 } else { 2 };
        g.ensure_edge(u, v)?;
        for l in (first..=half).step_by(2) {
            g.add_label(u, v, l)?;
        }
    }
    Ok(ConstructionResult {
        family: "parity",
        params: vec![("n", n)],
        graph: g,
        predicted: predicted_density(Family::Parity { n }),
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::{earliest_arrival, is_minimal, is_temporally_connected};

    #[test]
    fn n12() {
        let g = parity(12).unwrap().graph;
        assert_eq!(g.labels(0, 1), Some(&[1, 3, 5][..]));
        assert_eq!(g.labels(1, 2), Some(&[2, 4, 6][..]));
        assert_eq!(g.total_labels(), 36);
        assert_eq!(g.temporality(), 3);
        assert!(is_temporally_connected(&g) && is_minimal(&g));
        assert_eq!(earliest_arrival(&g, 0).arrival[6], Some(6));
    }

    #[test]
    fn n6() {
        let r = parity(6).unwrap();
        assert_eq!(r.graph.labels(0, 1), Some(&[1, 3][..]));
        assert_eq!(r.graph.labels(1, 2), Some(&[2][..]));
        assert_eq!(r.graph.total_labels(), 9);
        assert!(r.matches_prediction());
        assert!(parity(7).is_err());
    }

    #[test]
    fn rotation_by_two() {
        let n = 10;
        let g = parity(n).unwrap().graph;
        for i in 0..n {
            let (a, b) = cycle_edge(n, i);
            let (c, d) = cycle_edge(n, i + 2);
            assert_eq!(g.labels(a, b), g.labels(c, d));
        }
    }
}
