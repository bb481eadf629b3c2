//! One-directional journeys on cycle footprints: prefix-foremost journeys,
//! dominating journeys (by local criteria and by definition), and the
//! pairwise necessity check built on them.
//!
//! Clockwise means ascending position along the cycle order, which for a
//! cycle numbered `0, 1, ..., n-1` is ascending vertex id.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::temporal::{Contact, Journey, Label, TemporalGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Clockwise, Orientation::CounterClockwise];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientedJourney {
    pub orientation: Orientation,
    pub journey: Journey,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    EarliestStart,
    LatestEnd,
    NoInterleavedEdge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub journey: OrientedJourney,
    pub dominating: bool,
    pub violated_criteria: Vec<Criterion>,
}

/// A cycle footprint laid out along its cyclic order.
#[derive(Clone, Debug)]
pub struct CycleView {
    n: usize,
    order: Vec<Vertex>,
    pos: Vec<usize>,
    /// `labels[i]` belongs to the edge between positions `i` and `i + 1`.
    labels: Vec<Vec<Label>>,
}

/// One-directional journey in position form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Walk {
    start: usize,
    o: Orientation,
    labels: Vec<Label>,
}

impl CycleView {
    pub fn new(g: &TemporalGraph) -> Result<Self> {
        let n = g.n();
        let adj = g.adjacency();
        if n < 3 || g.m() != n || adj.iter().any(|a| a.len() != 2) || !g.is_connected_footprint() {
            return Err(Error::NotACycle(format!("n = {n}, m = {}", g.m())));
        }
        let mut order = vec![0];
        let (mut prev, mut at) = (0, adj[0][0]);
        while at != 0 {
            order.push(at);
            let next = if adj[at][0] == prev {
                adj[at][1]
            } else {
                adj[at][0]
            };
            prev = at;
            at = next;
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let labels = (0..n)
            .map(|i| g.labels(order[i], order[(i + 1) % n]).unwrap().to_vec())
            .collect();
        Ok(CycleView {
            n,
            order,
            pos,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    /// Labels of the edge between positions `i` and `i + 1`.
    pub fn edge_labels(&self, i: usize) -> &[Label] {
        &self.labels[i % self.n]
    }

    /// Edge index of step `k` (may be -1 for the edge behind the start).
    fn step_edge(&self, p: usize, o: Orientation, k: isize) -> usize {
        let n = self.n as isize;
        let e = match o {
            Orientation::Clockwise => p as isize + k,
            Orientation::CounterClockwise => p as isize - 1 - k,
        };
        e.rem_euclid(n) as usize
    }

    fn position_after(&self, p: usize, o: Orientation, k: usize) -> usize {
        let n = self.n as isize;
        let q = match o {
            Orientation::Clockwise => p as isize + k as isize,
            Orientation::CounterClockwise => p as isize - k as isize,
        };
        q.rem_euclid(n) as usize
    }

    fn to_oriented(&self, w: &Walk) -> OrientedJourney {
        let contacts = w
            .labels
            .iter()
            .enumerate()
            .map(|(k, &l)| {
                let a = self.order[self.position_after(w.start, w.o, k)];
                let b = self.order[self.position_after(w.start, w.o, k + 1)];
                Contact::new(a, b, l)
            })
            .collect();
        OrientedJourney {
            orientation: w.o,
            journey: Journey::new(self.order[w.start], contacts),
        }
    }

    fn to_walk(&self, j: &OrientedJourney) -> Result<Walk> {
        let start = self.pos[j.journey.start];
        let w = Walk {
            start,
            o: j.orientation,
            labels: j.journey.labels(),
        };
        let ok = self.to_oriented(&w) == *j
            && w.labels.windows(2).all(|p| p[0] < p[1])
            && w.labels
                .iter()
                .enumerate()
                .all(|(k, l)| self.labels[self.step_edge(start, w.o, k as isize)].contains(l));
        if ok {
            Ok(w)
        } else {
            Err(Error::Param(
                "not a one-directional journey of this cycle".into(),
            ))
        }
    }

    fn any_on(&self, e: usize, pred: impl Fn(Label) -> bool) -> bool {
        self.labels[e].iter().any(|&l| pred(l))
    }

    fn greedy(&self, p: usize, o: Orientation) -> Walk {
        let mut labels = Vec::new();
        let mut t = 0;
        while labels.len() + 1 < self.n {
            let e = self.step_edge(p, o, labels.len() as isize);
            match self.labels[e].iter().find(|&&l| l > t) {
                Some(&l) => {
                    labels.push(l);
                    t = l;
                }
                None => break,
            }
        }
        Walk {
            start: p,
            o,
            labels,
        }
    }

    fn has_covering_journey(&self) -> bool {
        (0..self.n).any(|p| {
            Orientation::BOTH
                .iter()
                .any(|&o| self.greedy(p, o).labels.len() + 1 >= self.n)
        })
    }

    fn violated(&self, w: &Walk) -> Vec<Criterion> {
        let mut out = Vec::new();
        let k = w.labels.len();
        if k == 0 {
            return out;
        }
        let (first, last) = (w.labels[0], w.labels[k - 1]);
        let e = |i: isize| self.step_edge(w.start, w.o, i);
        if self.any_on(e(0), |t| t < first) || self.any_on(e(-1), |t| t < first) {
            out.push(Criterion::EarliestStart);
        }
        let (z, x) = (e(k as isize - 1), e(k as isize));
        if self.any_on(z, |t| t > last) || self.any_on(x, |t| t > last) {
            out.push(Criterion::LatestEnd);
        }
        let interleaved = (0..k - 1).any(|i| {
            let (lo, hi) = (w.labels[i], w.labels[i + 1]);
            let between = |t: Label| lo < t && t < hi;
            self.any_on(e(i as isize), between) || self.any_on(e(i as isize + 1), between)
        });
        if interleaved {
            out.push(Criterion::NoInterleavedEdge);
        }
        out
    }

    fn is_maximal(&self, w: &Walk) -> bool {
        let k = w.labels.len();
        if k == 0 {
            return false;
        }
        let e = |i: isize| self.step_edge(w.start, w.o, i);
        !self.any_on(e(-1), |t| t < w.labels[0])
            && !self.any_on(e(k as isize), |t| t > w.labels[k - 1])
    }

    /// Every one-directional journey with at least one contact.
    fn all_walks(&self) -> Vec<Walk> {
        let mut out = Vec::new();
        for p in 0..self.n {
            for o in Orientation::BOTH {
                let mut stack = Vec::new();
                self.extend(p, o, 0, &mut stack, &mut out);
            }
        }
        out
    }

    fn extend(
        &self,
        p: usize,
        o: Orientation,
        after: Label,
        stack: &mut Vec<Label>,
        out: &mut Vec<Walk>,
    ) {
        if stack.len() + 1 >= self.n {
            return;
        }
        let e = self.step_edge(p, o, stack.len() as isize);
        for &l in &self.labels[e] {
            if l > after {
                stack.push(l);
                out.push(Walk {
                    start: p,
                    o,
                    labels: stack.clone(),
                });
                self.extend(p, o, l, stack, out);
                stack.pop();
            }
        }
    }

    /// Covered vertex set as (leftmost position, number of steps).
    fn arc(&self, w: &Walk) -> (usize, usize) {
        let k = w.labels.len();
        match w.o {
            Orientation::Clockwise => (w.start, k),
            Orientation::CounterClockwise => (self.position_after(w.start, w.o, k), k),
        }
    }

    fn arc_contains(&self, outer: (usize, usize), inner: (usize, usize)) -> bool {
        let d = (inner.0 + self.n - outer.0) % self.n;
        d + inner.1 <= outer.1
    }

    /// Dominating walks by definition: the only journey covering its vertex
    /// set, and no same-orientation journey covers a strict superset.
    fn dominating_walks(&self) -> Vec<Walk> {
        let walks = self.all_walks();
        let mut by_arc: BTreeMap<(Orientation, (usize, usize)), Vec<&Walk>> = BTreeMap::new();
        for w in &walks {
            by_arc.entry((w.o, self.arc(w))).or_default().push(w);
        }
        let mut out = Vec::new();
        for (&(o, arc), ws) in &by_arc {
            if ws.len() != 1 {
                continue;
            }
            let covered = by_arc
                .keys()
                .any(|&(o2, a2)| o2 == o && a2 != arc && self.arc_contains(a2, arc));
            if !covered {
                out.push(ws[0].clone());
            }
        }
        out.sort();
        out
    }
}

pub fn prefix_foremost(g: &TemporalGraph, v: Vertex, o: Orientation) -> Result<OrientedJourney> {
    let view = CycleView::new(g)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange(v, g.n()));
    }
    Ok(view.to_oriented(&view.greedy(view.pos[v], o)))
}

fn checked_view(g: &TemporalGraph) -> Result<CycleView> {
    let view = CycleView::new(g)?;
    if view.has_covering_journey() {
        return Err(Error::CoveringJourney);
    }
    Ok(view)
}

/// Evaluates the three local criteria; dominating iff none is violated.
pub fn is_dominating(g: &TemporalGraph, j: &OrientedJourney) -> Result<DominationReport> {
    let view = checked_view(g)?;
    let w = view.to_walk(j)?;
    let violated = view.violated(&w);
    Ok(DominationReport {
        journey: j.clone(),
        dominating: violated.is_empty() && !w.labels.is_empty(),
        violated_criteria: violated,
    })
}

/// All dominating journeys, by exhaustive enumeration and set maximality.
pub fn enumerate_dominating(g: &TemporalGraph) -> Result<Vec<OrientedJourney>> {
    let view = checked_view(g)?;
    Ok(view
        .dominating_walks()
        .iter()
        .map(|w| view.to_oriented(w))
        .collect())
}

/// All maximal one-directional journeys (not extendable at either end).
pub fn enumerate_maximal(g: &TemporalGraph) -> Result<Vec<OrientedJourney>> {
    let view = checked_view(g)?;
    let mut ws: Vec<Walk> = view
        .all_walks()
        .into_iter()
        .filter(|w| view.is_maximal(w))
        .collect();
    ws.sort();
    Ok(ws.iter().map(|w| view.to_oriented(w)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub vertex: Vertex,
    /// All conditions of the pair lemma hold.
    pub holds: bool,
    /// The two journeys together cover every vertex.
    pub covers_all: bool,
    pub suffix_of_dominating: [bool; 2],
    pub crossing: bool,
    pub journeys: [OrientedJourney; 2],
}

/// Checks `v`'s clockwise and counter-clockwise prefix-foremost journeys
/// against the pair lemma: each must be a suffix of a dominating journey and
/// their covered arcs may only share `v`.
pub fn necessary_pair_check(g: &TemporalGraph, v: Vertex) -> Result<PairCheck> {
    let view = checked_view(g)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange(v, g.n()));
    }
    let p = view.pos[v];
    let dominating = view.dominating_walks();
    let walks = Orientation::BOTH.map(|o| view.greedy(p, o));
    let suffix = walks.clone().map(|w| {
        w.labels.is_empty()
            || dominating.iter().any(|d| {
                d.o == w.o
                    && d.labels.len() >= w.labels.len()
                    && d.labels.ends_with(&w.labels)
                    && view.position_after(d.start, d.o, d.labels.len() - w.labels.len()) == p
            })
    });
    let steps = walks[0].labels.len() + walks[1].labels.len();
    let crossing = steps >= view.n;
    let covers_all = steps + 1 >= view.n;
    Ok(PairCheck {
        vertex: v,
        holds: suffix[0] && suffix[1] && !crossing,
        covers_all,
        suffix_of_dominating: suffix,
        crossing,
        journeys: walks.map(|w| view.to_oriented(&w)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generator_even, parity};

    fn cycle(labels: &[&[Label]]) -> TemporalGraph {
        let n = labels.len();
        let mut g = TemporalGraph::new(n);
        for (i, ls) in labels.iter().enumerate() {
            g.add_labels(i, (i + 1) % n, ls).unwrap();
        }
        g
    }

    #[test]
    fn parity_prefix_foremost() {
        let g = parity(12).unwrap().graph;
        let j = prefix_foremost(&g, 0, Orientation::Clockwise).unwrap();
        assert_eq!(j.journey.labels(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(j.journey.end(), Some(6));
    }

    #[test]
    fn increasing_cycle_covers_all() {
        let g = cycle(&[&[1], &[2], &[3], &[4], &[5]]);
        let j = prefix_foremost(&g, 0, Orientation::Clockwise).unwrap();
        assert_eq!(j.journey.contacts.len(), 4);
        assert_eq!(is_dominating(&g, &j), Err(Error::CoveringJourney));
    }

    #[test]
    fn skipped_label_violates_interleaving() {
        let g = parity(8).unwrap().graph;
        // 0 -1-> 1 -4-> 2 skips label 2 on {1, 2}
        let j = OrientedJourney {
            orientation: Orientation::Clockwise,
            journey: Journey::new(0, vec![Contact::new(0, 1, 1), Contact::new(1, 2, 4)]),
        };
        let r = is_dominating(&g, &j).unwrap();
        assert!(!r.dominating);
        assert!(r.violated_criteria.contains(&Criterion::NoInterleavedEdge));
    }

    #[test]
    fn empty_edge_is_avoided() {
        // generator C4 has the covering journey 1, 2, 3 from vertex 0
        let g = generator_even(4).unwrap().graph;
        assert_eq!(enumerate_dominating(&g), Err(Error::CoveringJourney));
        let g = cycle(&[&[1, 3], &[2], &[1, 3], &[], &[2]]);
        let ds = enumerate_dominating(&g).unwrap();
        assert!(!ds.is_empty());
        for d in ds {
            assert!(d.journey.contacts.iter().all(|c| c.edge() != (3, 4)));
        }
    }

    #[test]
    fn crossing_pair() {
        let g = cycle(&[&[1], &[2], &[2], &[1]]);
        let r = necessary_pair_check(&g, 0).unwrap();
        assert!(r.crossing && !r.holds);
    }

    #[test]
    fn non_cycle_rejected() {
        let g = TemporalGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            prefix_foremost(&g, 0, Orientation::Clockwise),
            Err(Error::NotACycle(_))
        ));
    }
}
