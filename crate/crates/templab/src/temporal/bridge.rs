use serde::Serialize;

use super::graph::{edge, Contact, Label, TemporalGraph, Vertex};
use super::journey::arrival_times;
use crate::error::{Error, Result};

/// Open time windows for crossing a bridge `{u, v}` in each direction.
/// `None` upper bounds are unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeWindows {
    pub u: Vertex,
    pub v: Vertex,
    pub t_u_minus: Label,
    pub t_u_plus: Option<Label>,
    pub t_v_minus: Label,
    pub t_v_plus: Option<Label>,
    /// At most two bridge labels that suffice for both directions.
    pub sufficient_labels: Vec<Label>,
}

fn in_window(l: Label, lo: Label, hi: Option<Label>) -> bool {
    l > lo && hi.is_none_or(|h| l < h)
}

/// Smallest label serving both windows if one exists, else the smallest label of each.
pub fn select_bridge_labels(
    labels: &[Label],
    forward: (Label, Option<Label>),
    backward: (Label, Option<Label>),
) -> Result<Vec<Label>> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let fits_f = |&&l: &&Label| in_window(l, forward.0, forward.1);
    let fits_b = |&&l: &&Label| in_window(l, backward.0, backward.1);
    if let Some(&l) = sorted.iter().find(|l| fits_f(l) && fits_b(l)) {
        return Ok(vec![l]);
    }
    let f = sorted.iter().find(fits_f).ok_or(Error::EmptyWindow)?;
    let b = sorted.iter().find(fits_b).ok_or(Error::EmptyWindow)?;
    let mut out = vec![*f, *b];
    out.sort_unstable();
    Ok(out)
}

/// Vertices reachable from `start` in the footprint without using edge `skip`.
fn side(g: &TemporalGraph, start: Vertex, skip: (Vertex, Vertex)) -> Vec<bool> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if edge(x, y) != skip && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Latest first label of a journey from each vertex to `target`, within `cs`
/// (contacts sorted ascending).
fn latest_departures(n: usize, cs: &[Contact], target: Vertex) -> Vec<Option<Label>> {
    // ld[x] = latest label at which a journey x -> target can start; target itself is "infinite".
    let mut ld: Vec<Option<Label>> = vec![None; n];
    let mut at_target = vec![false; n];
    at_target[target] = true;
    for c in cs.iter().rev() {
        for (x, y) in [(c.u, c.v), (c.v, c.u)] {
            let ok = at_target[y] || ld[y].is_some_and(|d| d > c.label);
            if ok && x != target && ld[x].is_none_or(|d| d < c.label) {
                ld[x] = Some(c.label);
            }
        }
    }
    ld
}

struct Side {
    members: Vec<Vertex>,
    contacts: Vec<Contact>,
}

impl Side {
    fn new(g: &TemporalGraph, root: Vertex, bridge: (Vertex, Vertex)) -> Self {
        let mask = side(g, root, bridge);
        let members = (0..g.n()).filter(|&x| mask[x]).collect();
        let contacts = g
            .contacts()
            .into_iter()
            .filter(|c| mask[c.u] && mask[c.v])
            .collect();
        Side { members, contacts }
    }

    /// Time by which every side vertex has reached `root`.
    fn gather(&self, n: usize, root: Vertex) -> Result<Label> {
        let mut t = 0;
        for &w in &self.members {
            if w != root {
                let a = arrival_times(n, &self.contacts, w)[root].ok_or(Error::EmptyWindow)?;
                t = t.max(a);
            }
        }
        Ok(t)
    }

    /// Latest start after which `root` still reaches every side vertex.
    fn scatter(&self, n: usize, root: Vertex) -> Result<Option<Label>> {
        let mut t: Option<Label> = None;
        for &w in &self.members {
            if w != root {
                let d = latest_departures(n, &self.contacts, w)[root].ok_or(Error::EmptyWindow)?;
                t = Some(t.map_or(d, |x| x.min(d)));
            }
        }
        Ok(t)
    }
}

pub fn bridge_windows(g: &TemporalGraph, u: Vertex, v: Vertex) -> Result<BridgeWindows> {
    let labels = g.labels(u, v).ok_or(Error::NoSuchEdge(u, v))?.to_vec();
    let e = edge(u, v);
    if side(g, u, e)[v] {
        return Err(Error::NotABridge(e.0, e.1));
    }
    let n = g.n();
    let su = Side::new(g, u, e);
    let sv = Side::new(g, v, e);
    let t_u_minus = su.gather(n, u)?;
    let t_u_plus = su.scatter(n, u)?;
    let t_v_minus = sv.gather(n, v)?;
    let t_v_plus = sv.scatter(n, v)?;
    let sufficient_labels =
        select_bridge_labels(&labels, (t_u_minus, t_v_plus), (t_v_minus, t_u_plus))?;
    Ok(BridgeWindows {
        u,
        v,
        t_u_minus,
        t_u_plus,
        t_v_minus,
        t_v_plus,
        sufficient_labels,
    })
}

/// Bridges of the footprint, by brute force (remove edge, test connectivity).
pub fn bridges(g: &TemporalGraph) -> Vec<(Vertex, Vertex)> {
    g.edge_list()
        .into_iter()
        .filter(|&(a, b)| !side(g, a, (a, b))[b])
        .collect()
}

/// Keeps only the window-selected labels on every bridge, one bridge at a time.
pub fn reduce_bridges(g: &TemporalGraph) -> Result<TemporalGraph> {
    let mut out = g.clone();
    for (a, b) in bridges(g) {
        let w = bridge_windows(&out, a, b)?;
        out.clear_labels(a, b);
        out.add_labels(a, b, &w.sufficient_labels)?;
    }
    Ok(out)
}
