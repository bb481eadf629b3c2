use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Label = u32;

/// Unordered edge stored with `0 < 1`.
pub type Edge = (Vertex, Vertex);

pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// One presence of an edge at one time step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Contact {
    pub u: Vertex,
    pub v: Vertex,
    pub label: Label,
}

impl Contact {
    pub fn new(u: Vertex, v: Vertex, label: Label) -> Self {
        let (u, v) = edge(u, v);
        Contact { u, v, label }
    }

    pub fn edge(&self) -> Edge {
        (self.u, self.v)
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: Vertex) -> Option<Vertex> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Contact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}, {}}}, {})", self.u, self.v, self.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Proper,
    Happy,
    Strict,
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(Class::Proper),
            "happy" => Ok(Class::Happy),
            "strict" => Ok(Class::Strict),
            _ => Err(Error::Param(format!("unknown labelling class `{s}`"))),
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Proper => "proper",
            Class::Happy => "happy",
            Class::Strict => "strict",
        })
    }
}

/// An undirected simple graph on vertices `0..n` with a set of labels per edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TemporalGraph {
    n: usize,
    edges: BTreeMap<Edge, Vec<Label>>,
}

impl TemporalGraph {
    pub fn new(n: usize) -> Self {
        TemporalGraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    /// Footprint only, every edge unlabelled.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = TemporalGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<Edge> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange(x, self.n));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(edge(u, v))
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let e = self.check_pair(u, v)?;
        if self.edges.contains_key(&e) {
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        self.edges.insert(e, Vec::new());
        Ok(())
    }

    pub fn ensure_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let e = self.check_pair(u, v)?;
        self.edges.entry(e).or_default();
        Ok(())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains_key(&edge(u, v))
    }

    /// Adds `label` to edge `{u, v}`, creating the edge when absent.
    /// Adding a label that is already present is a no-op.
    pub fn add_label(&mut self, u: Vertex, v: Vertex, label: Label) -> Result<()> {
        if label == 0 {
            return Err(Error::ZeroLabel);
        }
        let e = self.check_pair(u, v)?;
        let ls = self.edges.entry(e).or_default();
        if let Err(pos) = ls.binary_search(&label) {
            ls.insert(pos, label);
        }
        Ok(())
    }

    pub fn add_labels(&mut self, u: Vertex, v: Vertex, labels: &[Label]) -> Result<()> {
        self.ensure_edge(u, v)?;
        for &l in labels {
            self.add_label(u, v, l)?;
        }
        Ok(())
    }

    pub fn remove_label(&mut self, u: Vertex, v: Vertex, label: Label) -> Result<()> {
        let e = edge(u, v);
        let ls = self
            .edges
            .get_mut(&e)
            .ok_or(Error::NoSuchContact(e.0, e.1, label))?;
        match ls.binary_search(&label) {
            Ok(pos) => {
                ls.remove(pos);
                Ok(())
            }
            Err(_) => Err(Error::NoSuchContact(e.0, e.1, label)),
        }
    }

    pub fn without_contact(&self, c: Contact) -> Result<Self> {
        let mut g = self.clone();
        g.remove_label(c.u, c.v, c.label)?;
        Ok(g)
    }

    pub fn clear_labels(&mut self, u: Vertex, v: Vertex) {
        if let Some(ls) = self.edges.get_mut(&edge(u, v)) {
            ls.clear();
        }
    }

    pub fn labels(&self, u: Vertex, v: Vertex) -> Option<&[Label]> {
        self.edges.get(&edge(u, v)).map(|l| l.as_slice())
    }

    pub fn has_contact(&self, c: Contact) -> bool {
        self.labels(c.u, c.v)
            .is_some_and(|ls| ls.binary_search(&c.label).is_ok())
    }

    /// Edges in ascending endpoint order with their labels.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, &[Label])> + '_ {
        self.edges.iter().map(|(e, l)| (*e, l.as_slice()))
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges.keys().copied().collect()
    }

    /// All contacts sorted by (label, u, v).
    pub fn contacts(&self) -> Vec<Contact> {
        let mut cs: Vec<Contact> = self
            .edges
            .iter()
            .flat_map(|(&(u, v), ls)| ls.iter().map(move |&label| Contact { u, v, label }))
            .collect();
        cs.sort_by_key(|c| (c.label, c.u, c.v));
        cs
    }

    pub fn total_labels(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.edges.values().filter_map(|l| l.last().copied()).max()
    }

    pub fn temporality(&self) -> usize {
        self.edges.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.edges.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .keys()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Same footprint, labels mapped by `f` (which must be strictly increasing).
    pub fn map_labels(&self, mut f: impl FnMut(Label) -> Label) -> Self {
        let mut g = self.clone();
        for ls in g.edges.values_mut() {
            for l in ls.iter_mut() {
                *l = f(*l);
            }
        }
        g
    }

    /// Order-preserving relabelling onto `1..=k` where `k` is the number of
    /// distinct label values.
    pub fn compact(&self) -> Self {
        let mut values: Vec<Label> = self.edges.values().flatten().copied().collect();
        values.sort_unstable();
        values.dedup();
        self.map_labels(|l| values.binary_search(&l).unwrap() as Label + 1)
    }

    /// Whether every label between 1 and the largest label is used.
    pub fn is_incremental(&self) -> bool {
        let mut values: Vec<Label> = self.edges.values().flatten().copied().collect();
        values.sort_unstable();
        values.dedup();
        values.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
    }

    pub fn is_connected_footprint(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two incident edges share a label.
    SharedLabel { e1: Edge, e2: Edge, label: Label },
    /// A happy labelling allows at most one label per edge.
    MultipleLabels { edge: Edge, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SharedLabel { e1, e2, label } => write!(
                f,
                "incident edges {{{}, {}}} and {{{}, {}}} share label {}",
                e1.0, e1.1, e2.0, e2.1, label
            ),
            Violation::MultipleLabels { edge, count } => write!(
                f,
                "edge {{{}, {}}} carries {} labels",
                edge.0, edge.1, count
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate(g: &TemporalGraph, class: Class) -> ValidationReport {
    let mut violations = Vec::new();
    if class == Class::Strict {
        return ValidationReport { violations };
    }
    // Per vertex: label -> first edge seen carrying it.
    let mut seen: Vec<BTreeMap<Label, Edge>> = vec![BTreeMap::new(); g.n()];
    for (e, ls) in g.edges() {
        if class == Class::Happy && ls.len() > 1 {
            violations.push(Violation::MultipleLabels {
                edge: e,
                count: ls.len(),
            });
        }
        for &l in ls {
            for x in [e.0, e.1] {
                match seen[x].get(&l) {
                    Some(&other) => {
                        let v = Violation::SharedLabel {
                            e1: other,
                            e2: e,
                            label: l,
                        };
                        if !violations.contains(&v) {
                            violations.push(v);
                        }
                    }
                    None => {
                        seen[x].insert(l, e);
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}
