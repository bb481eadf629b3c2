use std::collections::VecDeque;

use super::{predicted_density, ConstructionResult, Family};
use crate::error::{Error, Result};
use crate::temporal::{Label, TemporalGraph, Vertex};

/// BFS from `root` over `adj`, children in ascending id. Returns (order, parent).
pub(crate) fn bfs(adj: &[Vec<Vertex>], root: Vertex) -> (Vec<Vertex>, Vec<Option<Vertex>>) {
    let mut parent = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut order = vec![root];
    let mut q = VecDeque::from([root]);
    seen[root] = true;
    while let Some(x) = q.pop_front() {
        let mut next: Vec<Vertex> = adj[x].iter().copied().filter(|&y| !seen[y]).collect();
        next.sort_unstable();
        for y in next {
            seen[y] = true;
            parent[y] = Some(x);
            order.push(y);
            q.push_back(y);
        }
    }
    (order, parent)
}

/// Converge to `pivot` along reverse BFS order with labels `1..n-1`, broadcast
/// along BFS order with labels `n..2n-2`, then drop the broadcast label on the
/// edge to the first BFS child of the pivot.
///
/// The output is not compacted: label `n` is missing.
pub fn pivot_tree(tree: &TemporalGraph, pivot: Vertex) -> Result<ConstructionResult> {
    let n = tree.n();
    if pivot >= n {
        return Err(Error::VertexOutOfRange(pivot, n));
    }
    if tree.m() + 1 != n || !tree.is_connected_footprint() {
        return Err(Error::NotATree(format!("n = {n}, m = {}", tree.m())));
    }
    let (order, parent) = bfs(&tree.adjacency(), pivot);
    let mut g = TemporalGraph::from_edges(n, &tree.edge_list())?;
    let rest = &order[1..];
    for (i, &x) in rest.iter().rev().enumerate() {
        g.add_label(x, parent[x].unwrap(), i as Label + 1)?;
    }
    for (i, &x) in rest.iter().enumerate() {
        // the first broadcast label goes to the first child and is dropped
        if i > 0 {
            g.add_label(x, parent[x].unwrap(), (n + i) as Label)?;
        }
    }
    Ok(ConstructionResult {
        family: "trees",
        params: vec![("n", n), ("pivot", pivot)],
        graph: g,
        predicted: predicted_density(Family::Trees { n }),
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::{is_minimal, is_temporally_connected, validate, Class};

    fn star(leaves: usize) -> TemporalGraph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        TemporalGraph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn p3_middle_pivot() {
        let p3 = TemporalGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = pivot_tree(&p3, 1).unwrap();
        assert_eq!(r.graph.total_labels(), 3);
        assert_eq!(r.graph.temporality(), 2);
        assert_eq!(r.graph.labels(0, 1), Some(&[2][..]));
        assert_eq!(r.graph.labels(1, 2), Some(&[1, 4][..]));
        assert!(r.matches_prediction());
    }

    #[test]
    fn star_k15() {
        let r = pivot_tree(&star(5), 0).unwrap();
        let g = &r.graph;
        assert!(is_temporally_connected(g) && is_minimal(g));
        assert!(validate(g, Class::Proper).ok());
        assert_eq!(g.labels(0, 1), Some(&[5][..]));
        for leaf in 2..=5 {
            assert_eq!(g.labels(0, leaf).unwrap().len(), 2);
        }
        assert!(g.compact().is_incremental());
    }

    #[test]
    fn small_orders() {
        let r = pivot_tree(&TemporalGraph::new(1), 0).unwrap();
        assert_eq!(r.graph.total_labels(), 0);
        let r = pivot_tree(&TemporalGraph::from_edges(2, &[(0, 1)]).unwrap(), 1).unwrap();
        assert_eq!(r.graph.labels(0, 1), Some(&[1][..]));
        assert!(r.matches_prediction());
    }

    #[test]
    fn rejects_non_trees() {
        let c3 = TemporalGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(pivot_tree(&c3, 0), Err(Error::NotATree(_))));
        let forest = TemporalGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(pivot_tree(&forest, 0), Err(Error::NotATree(_))));
    }
}
