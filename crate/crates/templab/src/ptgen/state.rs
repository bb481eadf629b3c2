use fixedbitset::FixedBitSet;

use super::reach::{Bits, ReachSet};
use crate::temporal::journey::reachability_without;
use crate::temporal::{reachability_graph, Contact, Edge, Label, TemporalGraph};

#[derive(Clone, Debug)]
struct Minus<S> {
    contact: Contact,
    sets: Vec<S>,
    /// Number of vertices `v` with `sets[v] == a[v]`.
    equal: usize,
}

/// `A(v)`: who reaches `v`; plus, per contact `c`, who reaches `v` without `c`.
#[derive(Clone, Debug)]
pub struct AccessibilityState<S> {
    n: usize,
    a: Vec<S>,
    /// Number of vertices with `A(v) = V`.
    full: usize,
    minus: Vec<Minus<S>>,
}

/// Representation-independent view of a state, for differential tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub a: Vec<FixedBitSet>,
    pub minus: Vec<(Contact, Vec<FixedBitSet>)>,
    pub full: usize,
    pub equal: Vec<usize>,
}

/// Every endpoint of `edges` absorbs the old set of the other endpoint.
fn spread<S: ReachSet>(sets: &mut [S], edges: &[Edge], n: usize) {
    let incoming: Vec<(usize, S)> = edges
        .iter()
        .flat_map(|&(u, v)| [(u, sets[v].clone()), (v, sets[u].clone())])
        .collect();
    for (x, s) in incoming {
        sets[x].union_with(&s, n);
    }
}

impl<S: ReachSet> AccessibilityState<S> {
    pub fn new(n: usize) -> Self {
        AccessibilityState {
            n,
            a: (0..n).map(|v| S::singleton(n, v)).collect(),
            full: usize::from(n == 1),
            minus: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reach(&self, v: usize) -> &S {
        &self.a[v]
    }

    pub fn contacts(&self) -> impl Iterator<Item = Contact> + '_ {
        self.minus.iter().map(|m| m.contact)
    }

    /// Adds `edges`, all carrying `label`, which must exceed every label seen so far.
    pub fn apply(&mut self, edges: &[Edge], label: Label) {
        let n = self.n;
        let mut touched: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        touched.sort_unstable();
        touched.dedup();

        let mut fresh = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let others: Vec<Edge> = edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e)
                .collect();
            let mut sets = self.a.clone();
            spread(&mut sets, &others, n);
            fresh.push(Minus {
                contact: Contact::new(u, v, label),
                sets,
                equal: 0,
            });
        }

        for &x in &touched {
            if self.a[x].count(n) == n {
                self.full -= 1;
            }
            for m in &mut self.minus {
                if m.sets[x] == self.a[x] {
                    m.equal -= 1;
                }
            }
        }
        spread(&mut self.a, edges, n);
        for m in &mut self.minus {
            spread(&mut m.sets, edges, n);
        }
        for &x in &touched {
            if self.a[x].count(n) == n {
                self.full += 1;
            }
            for m in &mut self.minus {
                if m.sets[x] == self.a[x] {
                    m.equal += 1;
                }
            }
        }
        for mut m in fresh {
            m.equal =
                n - touched.len() + touched.iter().filter(|&&x| m.sets[x] == self.a[x]).count();
            self.minus.push(m);
        }
    }

    pub fn is_connected(&self) -> bool {
        self.full == self.n
    }

    /// Some contact whose removal leaves every `A(v)` unchanged.
    pub fn redundant_contact(&self) -> Option<Contact> {
        self.minus
            .iter()
            .find(|m| m.equal == self.n)
            .map(|m| m.contact)
    }

    /// Sum of `|A(v)|`.
    pub fn volume(&self) -> usize {
        self.a.iter().map(|s| s.count(self.n)).sum()
    }

    pub fn snapshot(&self) -> Snapshot {
        let bits = |sets: &[S]| sets.iter().map(|s| s.to_bits(self.n)).collect::<Vec<_>>();
        let mut order: Vec<&Minus<S>> = self.minus.iter().collect();
        order.sort_by_key(|m| m.contact);
        Snapshot {
            a: bits(&self.a),
            minus: order.iter().map(|m| (m.contact, bits(&m.sets))).collect(),
            full: self.full,
            equal: order.iter().map(|m| m.equal).collect(),
        }
    }
}

/// Recomputes the whole state from scratch with earliest-arrival sweeps.
pub fn naive_accessibility(g: &TemporalGraph) -> AccessibilityState<Bits> {
    let n = g.n();
    let columns = |rows: &dyn Fn(usize, usize) -> bool| -> Vec<Bits> {
        (0..n)
            .map(|v| {
                let mut b = FixedBitSet::with_capacity(n);
                for u in (0..n).filter(|&u| rows(u, v)) {
                    b.insert(u);
                }
                Bits(b)
            })
            .collect()
    };
    let r = reachability_graph(g);
    let a = columns(&|u, v| r.reaches(u, v));
    let minus = g
        .contacts()
        .into_iter()
        .map(|c| {
            let rc = reachability_without(g, c);
            let sets = columns(&|u, v| rc.reaches(u, v));
            let equal = (0..n).filter(|&v| sets[v] == a[v]).count();
            Minus {
                contact: c,
                sets,
                equal,
            }
        })
        .collect();
    let full = a.iter().filter(|s| s.count(n) == n).count();
    AccessibilityState { n, a, full, minus }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::parity;
    use crate::ptgen::reach::Arc;

    #[test]
    fn first_contact() {
        let mut s = AccessibilityState::<Bits>::new(3);
        s.apply(&[(0, 1)], 1);
        assert_eq!(s.reach(0).0.ones().collect::<Vec<_>>(), [0, 1]);
        assert_eq!(s.reach(1).0.ones().collect::<Vec<_>>(), [0, 1]);
        assert_eq!(s.reach(2).0.ones().collect::<Vec<_>>(), [2]);
        assert_eq!(s.redundant_contact(), None);
    }

    #[test]
    fn parity_replay_is_connected() {
        let g = parity(8).unwrap().graph;
        let mut s = AccessibilityState::<Arc>::new(8);
        let cs = g.contacts();
        for l in 1..=g.max_label().unwrap() {
            let m: Vec<Edge> = cs
                .iter()
                .filter(|c| c.label == l)
                .map(|c| c.edge())
                .collect();
            s.apply(&m, l);
        }
        assert!(s.is_connected());
        assert_eq!(s.redundant_contact(), None);
        assert_eq!(s.snapshot(), naive_accessibility(&g).snapshot());
    }
}
