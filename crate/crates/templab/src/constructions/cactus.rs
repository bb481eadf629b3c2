use serde::Serialize;

use super::pivot::bfs;
use super::{generator_cycle, pivot_tree, ConstructionResult, Prediction, Total};
use crate::error::{Error, Result};
use crate::temporal::{edge, Edge, Label, TemporalGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Block {
    Bridge {
        edge: Edge,
    },
    /// Vertices in cyclic order, starting at the lowest id and continuing
    /// towards its smaller cycle neighbour.
    Cycle {
        vertices: Vec<Vertex>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CactusDecomposition {
    pub blocks: Vec<Block>,
    /// Size of the largest cycle block, 2 when acyclic.
    pub circumference: usize,
    pub largest_cycle: Option<Vec<Vertex>>,
    /// `contraction[v]` is the lowest vertex of the largest cycle for cycle
    /// vertices, `v` otherwise.
    pub contraction: Vec<Vertex>,
}

struct Tarjan<'a> {
    adj: &'a [Vec<Vertex>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<Edge>,
    blocks: Vec<Vec<Edge>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, x: Vertex, parent: Option<Vertex>) {
        self.time += 1;
        self.disc[x] = self.time;
        self.low[x] = self.time;
        for i in 0..self.adj[x].len() {
            let y = self.adj[x][i];
            if self.disc[y] == 0 {
                self.stack.push(edge(x, y));
                self.visit(y, Some(x));
                self.low[x] = self.low[x].min(self.low[y]);
                if self.low[y] >= self.disc[x] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == edge(x, y) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(y) != parent && self.disc[y] < self.disc[x] {
                self.stack.push(edge(x, y));
                self.low[x] = self.low[x].min(self.disc[y]);
            }
        }
    }
}

/// Cyclic order of a block whose vertices all have degree two inside it.
fn cycle_order(block: &[Edge]) -> Option<Vec<Vertex>> {
    let mut verts: Vec<Vertex> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != block.len() {
        return None;
    }
    let nb = |x: Vertex| -> Vec<Vertex> {
        let mut v: Vec<Vertex> = block
            .iter()
            .filter_map(|&(a, b)| {
                if a == x {
                    Some(b)
                } else if b == x {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        v.sort_unstable();
        v
    };
    if verts.iter().any(|&x| nb(x).len() != 2) {
        return None;
    }
    let start = verts[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut at = nb(start)[0];
    while at != start {
        order.push(at);
        let next = nb(at).into_iter().find(|&y| y != prev).unwrap();
        prev = at;
        at = next;
    }
    (order.len() == verts.len()).then_some(order)
}

pub fn cactus_decompose(g: &TemporalGraph) -> Result<CactusDecomposition> {
    let n = g.n();
    if !g.is_connected_footprint() {
        return Err(Error::Disconnected);
    }
    let adj = g.adjacency();
    let mut t = Tarjan {
        adj: &adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    if n > 0 {
        t.visit(0, None);
    }
    let mut blocks = Vec::new();
    for b in t.blocks {
        if b.len() == 1 {
            blocks.push(Block::Bridge { edge: b[0] });
        } else {
            let order = cycle_order(&b).ok_or(Error::NotACactus)?;
            blocks.push(Block::Cycle { vertices: order });
        }
    }
    blocks.sort_by_key(|b| match b {
        Block::Bridge { edge } => (0, vec![edge.0, edge.1]),
        Block::Cycle { vertices } => (1, vertices.clone()),
    });
    let mut largest: Option<Vec<Vertex>> = None;
    for b in &blocks {
        if let Block::Cycle { vertices } = b {
            let better = match &largest {
                None => true,
                Some(c) => {
                    let (mut a, mut z) = (vertices.clone(), c.clone());
                    a.sort_unstable();
                    z.sort_unstable();
                    vertices.len() > c.len() || (vertices.len() == c.len() && a < z)
                }
            };
            if better {
                largest = Some(vertices.clone());
            }
        }
    }
    let mut contraction: Vec<Vertex> = (0..n).collect();
    if let Some(c) = &largest {
        for &x in c {
            contraction[x] = c[0];
        }
    }
    Ok(CactusDecomposition {
        blocks,
        circumference: largest.as_ref().map_or(2, Vec::len),
        largest_cycle: largest,
        contraction,
    })
}

/// Converge toward the contracted largest cycle, run the generator labelling
/// on it, then broadcast back out.
///
/// Degenerates to `pivot_tree(g, 0)` on trees and to the generator labelling on
/// a cycle numbered `0..n` in order.
pub fn combined_cactus(g: &TemporalGraph) -> Result<ConstructionResult> {
    let dec = cactus_decompose(g)?;
    let n = g.n();
    let Some(cycle) = dec.largest_cycle.clone() else {
        let mut r = pivot_tree(g, 0)?;
        r.family = "cacti";
        r.params = vec![("n", n), ("c", 2)];
        return Ok(r);
    };
    let c = cycle.len();
    let root = cycle[0];
    let on_cycle: Vec<bool> = (0..n).map(|x| dec.contraction[x] == root).collect();

    // Contracted footprint: cycle vertices merge into `root`; the real edge
    // behind each contracted edge is remembered.
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut real = std::collections::BTreeMap::new();
    for (a, b) in g.edge_list() {
        if on_cycle[a] && on_cycle[b] {
            continue;
        }
        let (ca, cb) = (dec.contraction[a], dec.contraction[b]);
        adj[ca].push(cb);
        adj[cb].push(ca);
        real.insert(edge(ca, cb), (a, b));
    }
    let (order, parent) = bfs(&adj, root);
    let tree_edge = |x: Vertex| real[&edge(x, parent[x].unwrap())];

    let mut out = TemporalGraph::from_edges(n, &g.edge_list())?;
    let rest = &order[1..];
    let offset = rest.len() as Label;
    for (i, &x) in rest.iter().rev().enumerate() {
        let (a, b) = tree_edge(x);
        out.add_label(a, b, i as Label + 1)?;
    }
    let gen = generator_cycle(c)?.graph;
    let mut top = offset;
    for i in 0..c {
        let (a, b) = (cycle[i], cycle[(i + 1) % c]);
        for &l in gen.labels(i, (i + 1) % c).unwrap() {
            out.add_label(a, b, l + offset)?;
            top = top.max(l + offset);
        }
    }
    for (i, &x) in rest.iter().enumerate() {
        let (a, b) = tree_edge(x);
        out.add_label(a, b, top + 1 + i as Label)?;
    }
    let gen_total = gen.total_labels();
    Ok(ConstructionResult {
        family: "cacti",
        params: vec![("n", n), ("c", c)],
        graph: out,
        predicted: Prediction {
            n,
            total: Total::Exact(2 * (n - c) + gen_total),
            temporality: if n > c {
                c.div_ceil(2).max(2)
            } else {
                c.div_ceil(2)
            },
        },
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::generator_even;
    use crate::temporal::{is_minimal, is_temporally_connected, validate, Class};

    fn cycle(n: usize) -> TemporalGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        TemporalGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn decompose_shapes() {
        let path = TemporalGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let d = cactus_decompose(&path).unwrap();
        assert_eq!(d.circumference, 2);
        assert_eq!(d.blocks.len(), 2);
        let d = cactus_decompose(&cycle(6)).unwrap();
        assert_eq!(d.circumference, 6);
        assert_eq!(d.largest_cycle, Some(vec![0, 1, 2, 3, 4, 5]));
        // two triangles sharing vertex 2, pendant edge 4-5
        let g =
            TemporalGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
                .unwrap();
        let d = cactus_decompose(&g).unwrap();
        assert_eq!(d.circumference, 3);
        let cycles = d
            .blocks
            .iter()
            .filter(|b| matches!(b, Block::Cycle { .. }))
            .count();
        assert_eq!((cycles, d.blocks.len() - cycles), (2, 1));
        assert_eq!(d.largest_cycle, Some(vec![0, 1, 2]));
    }

    #[test]
    fn non_cactus() {
        // K4 minus an edge: one block with 5 edges on 4 vertices
        let g = TemporalGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(cactus_decompose(&g), Err(Error::NotACactus));
        let g = TemporalGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(cactus_decompose(&g), Err(Error::Disconnected));
    }

    #[test]
    fn degenerates() {
        assert_eq!(
            combined_cactus(&cycle(8)).unwrap().graph,
            generator_even(8).unwrap().graph
        );
        let tree = TemporalGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (0, 4)]).unwrap();
        assert_eq!(
            combined_cactus(&tree).unwrap().graph,
            pivot_tree(&tree, 0).unwrap().graph
        );
    }

    #[test]
    fn triangle_with_pendants() {
        let g = TemporalGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap();
        let r = combined_cactus(&g).unwrap();
        assert!(validate(&r.graph, Class::Proper).ok());
        assert!(is_temporally_connected(&r.graph) && is_minimal(&r.graph));
        assert!(r.graph.total_labels() >= 3 + 4);
        assert!(r.matches_prediction());
    }
}
