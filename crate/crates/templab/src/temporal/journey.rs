use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::graph::{Contact, Label, TemporalGraph, Vertex};
use crate::error::{Error, Result};

/// A temporal walk: consecutive contacts share an endpoint and labels strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Journey {
    pub start: Vertex,
    pub contacts: Vec<Contact>,
}

impl Journey {
    pub fn new(start: Vertex, contacts: Vec<Contact>) -> Self {
        Journey { start, contacts }
    }

    /// Vertex sequence `start, ..., end`, or `None` when the walk is inconsistent.
    pub fn vertices(&self) -> Option<Vec<Vertex>> {
        let mut out = vec![self.start];
        let mut at = self.start;
        for c in &self.contacts {
            at = c.other(at)?;
            out.push(at);
        }
        Some(out)
    }

    pub fn end(&self) -> Option<Vertex> {
        self.vertices().and_then(|v| v.last().copied())
    }

    pub fn labels(&self) -> Vec<Label> {
        self.contacts.iter().map(|c| c.label).collect()
    }

    /// Checks walk consistency, strict label increase and presence in `g`.
    pub fn is_valid_in(&self, g: &TemporalGraph) -> bool {
        self.vertices().is_some()
            && self.start < g.n()
            && self.contacts.windows(2).all(|w| w[0].label < w[1].label)
            && self.contacts.iter().all(|&c| g.has_contact(c))
    }
}

/// Earliest-arrival tree of one source. `arrival[v] == None` marks an unreached vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Branching {
    pub root: Vertex,
    pub parent: Vec<Option<Contact>>,
    pub arrival: Vec<Option<Label>>,
}

impl Branching {
    pub fn reached(&self, v: Vertex) -> bool {
        self.arrival[v].is_some()
    }

    /// The branch journey from the root to `v`.
    pub fn journey_to(&self, v: Vertex) -> Option<Journey> {
        self.arrival[v]?;
        let mut contacts = Vec::new();
        let mut at = v;
        while let Some(c) = self.parent[at] {
            contacts.push(c);
            at = c.other(at).expect("parent contact is incident");
        }
        contacts.reverse();
        Some(Journey::new(self.root, contacts))
    }

    pub fn contacts(&self) -> impl Iterator<Item = Contact> + '_ {
        self.parent.iter().flatten().copied()
    }
}

/// Foremost arrival times from `source` given contacts pre-sorted by label.
pub(crate) fn arrival_times(n: usize, sorted: &[Contact], source: Vertex) -> Vec<Option<Label>> {
    let mut arr: Vec<Option<Label>> = vec![None; n];
    arr[source] = Some(0);
    for c in sorted {
        relax(&mut arr, c, None);
    }
    arr
}

#[inline]
fn relax(arr: &mut [Option<Label>], c: &Contact, mut parent: Option<&mut [Option<Contact>]>) {
    for (x, y) in [(c.u, c.v), (c.v, c.u)] {
        if let Some(ax) = arr[x] {
            // a value equal to c.label was set in this same time step: no chaining
            if ax < c.label && arr[y].is_none() {
                arr[y] = Some(c.label);
                if let Some(p) = parent.as_deref_mut() {
                    p[y] = Some(*c);
                }
            }
        }
    }
}

pub fn earliest_arrival(g: &TemporalGraph, source: Vertex) -> Branching {
    assert!(source < g.n(), "source out of range");
    let n = g.n();
    let mut arrival = vec![None; n];
    let mut parent = vec![None; n];
    arrival[source] = Some(0);
    for c in g.contacts() {
        relax(&mut arrival, &c, Some(&mut parent));
    }
    Branching {
        root: source,
        parent,
        arrival,
    }
}

/// `reach(u, v)` iff `u` can reach `v`; the diagonal is always set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReachabilityMatrix {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl ReachabilityMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reaches(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    pub fn row(&self, u: Vertex) -> &FixedBitSet {
        &self.rows[u]
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(|r| r.count_ones(..) == self.n)
    }

    pub fn unreachable_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].zeroes() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }
}

fn matrix_from_sorted(n: usize, sorted: &[Contact]) -> ReachabilityMatrix {
    let rows = (0..n)
        .map(|s| {
            let mut row = FixedBitSet::with_capacity(n);
            for (v, a) in arrival_times(n, sorted, s).into_iter().enumerate() {
                row.set(v, a.is_some());
            }
            row
        })
        .collect();
    ReachabilityMatrix { n, rows }
}

pub fn reachability_graph(g: &TemporalGraph) -> ReachabilityMatrix {
    matrix_from_sorted(g.n(), &g.contacts())
}

pub(crate) fn reachability_without(g: &TemporalGraph, skip: Contact) -> ReachabilityMatrix {
    let cs: Vec<Contact> = g.contacts().into_iter().filter(|&c| c != skip).collect();
    matrix_from_sorted(g.n(), &cs)
}

pub fn is_temporally_connected(g: &TemporalGraph) -> bool {
    let cs = g.contacts();
    (0..g.n()).all(|s| arrival_times(g.n(), &cs, s).iter().all(Option::is_some))
}

/// Every journey from `source` with at most `max_len` contacts, by exhaustive search.
/// Exponential; intended as a test oracle on small graphs.
pub fn enumerate_journeys(g: &TemporalGraph, source: Vertex, max_len: usize) -> Vec<Journey> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut stack: Vec<Contact> = Vec::new();
    fn rec(
        g: &TemporalGraph,
        adj: &[Vec<Vertex>],
        at: Vertex,
        after: Label,
        source: Vertex,
        max_len: usize,
        stack: &mut Vec<Contact>,
        out: &mut Vec<Journey>,
    ) {
        out.push(Journey::new(source, stack.clone()));
        if stack.len() == max_len {
            return;
        }
        for &y in &adj[at] {
            for &l in g.labels(at, y).unwrap() {
                if l > after {
                    stack.push(Contact::new(at, y, l));
                    rec(g, adj, y, l, source, max_len, stack, out);
                    stack.pop();
                }
            }
        }
    }
    rec(g, &adj, source, 0, source, max_len, &mut stack, &mut out);
    out
}

/// Earliest arrival by exhaustive journey enumeration (test oracle).
pub fn brute_force_arrival(g: &TemporalGraph, source: Vertex) -> Vec<Option<Label>> {
    let mut arr = vec![None; g.n()];
    arr[source] = Some(0);
    for j in enumerate_journeys(g, source, g.total_labels()) {
        let end = j.end().unwrap();
        if let Some(last) = j.contacts.last() {
            arr[end] = Some(arr[end].map_or(last.label, |a: Label| a.min(last.label)));
        }
    }
    arr
}

pub(crate) fn check_contact(g: &TemporalGraph, c: Contact) -> Result<()> {
    if g.has_contact(c) {
        Ok(())
    } else {
        Err(Error::NoSuchContact(c.u, c.v, c.label))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_contact() {
        let mut g = TemporalGraph::new(2);
        g.add_label(0, 1, 5).unwrap();
        let b = earliest_arrival(&g, 0);
        assert_eq!(b.arrival, vec![Some(0), Some(5)]);
        assert_eq!(b.journey_to(1).unwrap().labels(), vec![5]);
    }

    #[test]
    fn triangle_from_c() {
        // a=0, b=1, c=2
        let mut g = TemporalGraph::new(3);
        g.add_label(0, 1, 1).unwrap();
        g.add_label(1, 2, 2).unwrap();
        g.add_label(2, 0, 3).unwrap();
        let b = earliest_arrival(&g, 2);
        assert_eq!(b.arrival, vec![Some(3), Some(2), Some(0)]);
        assert_eq!(brute_force_arrival(&g, 2), b.arrival);
    }

    #[test]
    fn decreasing_path() {
        let mut g = TemporalGraph::new(3);
        g.add_label(0, 1, 2).unwrap();
        g.add_label(1, 2, 1).unwrap();
        let r = reachability_graph(&g);
        assert!(r.reaches(0, 1) && !r.reaches(0, 2));
        assert!(r.reaches(2, 1) && r.reaches(2, 0));
        assert!(r.reaches(1, 0) && r.reaches(1, 2));
    }

    #[test]
    fn equal_labels_do_not_chain() {
        let mut g = TemporalGraph::new(3);
        g.add_label(0, 1, 1).unwrap();
        g.add_label(1, 2, 1).unwrap();
        let r = reachability_graph(&g);
        assert!(!r.reaches(0, 2) && !r.reaches(2, 0));
    }

    #[test]
    fn edgeless_is_identity() {
        let r = reachability_graph(&TemporalGraph::new(3));
        assert_eq!(r.count(), 3);
        assert_eq!(r.unreachable_pairs().len(), 6);
        assert!(!is_temporally_connected(&TemporalGraph::new(3)));
        assert!(is_temporally_connected(&TemporalGraph::new(1)));
    }

    #[test]
    fn path_one_two_is_not_tc() {
        let mut g = TemporalGraph::new(3);
        g.add_label(0, 1, 1).unwrap();
        g.add_label(1, 2, 2).unwrap();
        assert!(!is_temporally_connected(&g));
        assert_eq!(reachability_graph(&g).unreachable_pairs(), vec![(2, 0)]);
    }

    #[test]
    fn branch_journeys_are_valid() {
        let mut g = TemporalGraph::new(4);
        g.add_labels(0, 1, &[1, 4]).unwrap();
        g.add_labels(1, 2, &[2]).unwrap();
        g.add_labels(2, 3, &[3, 5]).unwrap();
        g.add_labels(3, 0, &[6]).unwrap();
        for s in 0..4 {
            let b = earliest_arrival(&g, s);
            for v in (0..4).filter(|&v| b.reached(v)) {
                let j = b.journey_to(v).unwrap();
                assert!(j.is_valid_in(&g));
                assert_eq!(j.end(), Some(v));
            }
        }
    }
}
