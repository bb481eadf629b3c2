use std::cmp::Ordering;

use crate::cycle::CycleView;
use crate::temporal::{Label, TemporalGraph};

/// Label lists of the edges `{i, i+1}` in position order.
pub type Canonical = Vec<Vec<Label>>;

/// Edge index read at slot `j` under automorphism `(reflect, r)`.
fn slot(n: usize, reflect: bool, r: usize, j: usize) -> usize {
    if reflect {
        (r + n - j) % n
    } else {
        (r + j) % n
    }
}

/// Least encoding among the 2n rotations and reflections of a cyclic
/// sequence of label lists.
pub fn canonical_cyclic(labels: &[Vec<Label>]) -> Canonical {
    let n = labels.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = (false, 0);
    for reflect in [false, true] {
        for r in 0..n {
            let ord = (0..n)
                .map(|j| labels[slot(n, reflect, r, j)].cmp(&labels[slot(n, best.0, best.1, j)]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal);
            if ord.is_lt() {
                best = (reflect, r);
            }
        }
    }
    (0..n)
        .map(|j| labels[slot(n, best.0, best.1, j)].clone())
        .collect()
}

/// Canonical form over the cycle's automorphisms; other footprints get the
/// identity transform (label lists in edge order).
pub fn canonicalize(g: &TemporalGraph) -> Canonical {
    match CycleView::new(g) {
        Ok(view) => canonical_cyclic(
            &(0..view.n())
                .map(|i| view.edge_labels(i).to_vec())
                .collect::<Vec<_>>(),
        ),
        Err(_) => g.edges().map(|(_, ls)| ls.to_vec()).collect(),
    }
}
