use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::graph::{Contact, TemporalGraph, Vertex};
use super::journey::{
    arrival_times, check_contact, earliest_arrival, is_temporally_connected, reachability_graph,
    reachability_without,
};
use crate::error::{Error, Result};

/// Deleting exactly `c` changes the reachability matrix.
pub fn is_label_necessary(g: &TemporalGraph, c: Contact) -> Result<bool> {
    check_contact(g, c)?;
    Ok(reachability_graph(g) != reachability_without(g, c))
}

const ROOT: usize = 0;

/// Contacts that are necessary for at least one ordered pair `(s, t)`.
///
/// For every source the foremost-reachable directed contacts form a DAG
/// (wait chains per vertex plus one node per directed contact); a contact is
/// necessary for `s` iff its node dominates the sink of some vertex.
pub fn necessary_contacts(g: &TemporalGraph) -> BTreeSet<Contact> {
    let sorted = g.contacts();
    let mut necessary = vec![false; sorted.len()];
    for s in 0..g.n() {
        necessary_for_source(g.n(), &sorted, s, &mut necessary);
    }
    sorted
        .into_iter()
        .zip(necessary)
        .filter_map(|(c, keep)| keep.then_some(c))
        .collect()
}

fn necessary_for_source(n: usize, sorted: &[Contact], s: Vertex, necessary: &mut [bool]) {
    let arr = arrival_times(n, sorted, s);
    // Active directed contacts: (from, to, index into `sorted`), already in label order.
    let mut active: Vec<(Vertex, Vertex, usize)> = Vec::new();
    for (i, c) in sorted.iter().enumerate() {
        for (x, y) in [(c.u, c.v), (c.v, c.u)] {
            if arr[x].is_some_and(|a| a < c.label) {
                active.push((x, y, i));
            }
        }
    }
    if active.is_empty() {
        return;
    }
    // Node layout: root, then for every active directed contact k a wait node
    // 1 + 2k ("at `from`, may still take contact k") and a contact node 2 + 2k,
    // then one sink per vertex.
    let na = active.len();
    let wait = |k: usize| 1 + 2 * k;
    let cnode = |k: usize| 2 + 2 * k;
    let sink = |v: Vertex| 1 + 2 * na + v;
    let total = 1 + 2 * na + n;

    let mut out_lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, &(x, _, _)) in active.iter().enumerate() {
        out_lists[x].push(k);
    }
    let label_of = |k: usize| sorted[active[k].2].label;
    let mut next_wait = vec![usize::MAX; na];
    for list in &out_lists {
        for w in list.windows(2) {
            next_wait[w[0]] = w[1];
        }
    }

    // `active` is sorted by label and a wait node precedes its contact node,
    // so node index order is a topological order: each node's idom is final
    // once reached, and is pushed forward to its successors.
    let mut idom = vec![usize::MAX; total];
    idom[ROOT] = ROOT;
    let link = |idom: &mut [usize], from: usize, to: usize| {
        idom[to] = if idom[to] == usize::MAX {
            from
        } else {
            intersect(idom, idom[to], from)
        };
    };
    if let Some(&first) = out_lists[s].first() {
        link(&mut idom, ROOT, wait(first));
    }
    for k in 0..na {
        if idom[wait(k)] == usize::MAX {
            continue;
        }
        link(&mut idom, wait(k), cnode(k));
        if next_wait[k] != usize::MAX {
            link(&mut idom, wait(k), wait(next_wait[k]));
        }
        let (_, y, _) = active[k];
        let list = &out_lists[y];
        let l = label_of(k);
        let j = list.partition_point(|&kk| label_of(kk) <= l);
        if j < list.len() {
            link(&mut idom, cnode(k), wait(list[j]));
        }
        if y != s {
            link(&mut idom, cnode(k), sink(y));
        }
    }

    let mut flag = vec![false; total];
    for v in (1..total).rev() {
        if idom[v] == usize::MAX {
            continue;
        }
        if v >= sink(0) {
            flag[v] = true;
        }
        if flag[v] {
            flag[idom[v]] = true;
        }
    }
    for k in 0..na {
        // a node dominating a sink is a strict ancestor of it, hence flagged
        if flag[cnode(k)] {
            necessary[active[k].2] = true;
        }
    }
}

fn intersect(idom: &[usize], mut a: usize, mut b: usize) -> usize {
    while a != b {
        while a > b {
            a = idom[a];
        }
        while b > a {
            b = idom[b];
        }
    }
    a
}

pub fn redundant_contacts(g: &TemporalGraph) -> Vec<Contact> {
    let nec = necessary_contacts(g);
    g.contacts()
        .into_iter()
        .filter(|c| !nec.contains(c))
        .collect()
}

pub fn is_minimal(g: &TemporalGraph) -> bool {
    necessary_contacts(g).len() == g.total_labels()
}

/// Definitional minimality check: one deletion and matrix comparison per contact.
pub fn is_minimal_by_deletion(g: &TemporalGraph) -> bool {
    let r = reachability_graph(g);
    g.contacts()
        .into_iter()
        .all(|c| reachability_without(g, c) != r)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum RemovalOrder {
    /// Largest label first, ties by lexicographic edge.
    #[default]
    DescendingLabel,
    AscendingLabel,
    /// Edge by edge in lexicographic order, labels ascending.
    Lexicographic,
}

/// Removes redundant contacts one at a time in the given order until minimal.
///
/// One pass is enough: deleting a redundant contact keeps the matrix, and a
/// contact necessary for some pair stays necessary in every sub-labelling with
/// the same matrix.
pub fn minimalize(g: &TemporalGraph, order: RemovalOrder) -> TemporalGraph {
    let mut cur = g.clone();
    let mut candidates = g.contacts();
    match order {
        RemovalOrder::DescendingLabel => {
            candidates.sort_by(|a, b| b.label.cmp(&a.label).then(a.edge().cmp(&b.edge())))
        }
        RemovalOrder::AscendingLabel => {}
        RemovalOrder::Lexicographic => candidates.sort_by_key(|c| (c.edge(), c.label)),
    }
    let mut nec = necessary_contacts(&cur);
    for c in candidates {
        if !nec.contains(&c) {
            cur.remove_label(c.u, c.v, c.label)
                .expect("candidate present");
            nec = necessary_contacts(&cur);
        }
    }
    cur
}

/// Whether the foremost branchings of all roots together use every contact.
pub fn spanning_branchings_union_check(g: &TemporalGraph) -> Result<bool> {
    if !is_temporally_connected(g) || !is_minimal(g) {
        return Err(Error::NotMinimalTc);
    }
    let mut union = BTreeSet::new();
    for s in 0..g.n() {
        union.extend(earliest_arrival(g, s).contacts());
    }
    Ok(union.len() == g.total_labels())
}
