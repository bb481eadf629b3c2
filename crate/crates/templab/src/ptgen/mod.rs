//! Exhaustive generation of minimal temporally connected proper (or strict)
//! labellings of a footprint, labelling one matching (or edge subset) per
//! time step and cutting branches as soon as they become non-minimal or
//! temporally connected.

mod canon;
mod reach;
mod state;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

pub use canon::{canonical_cyclic, canonicalize, Canonical};
pub use reach::{Arc, Bits, ReachSet};
pub use state::{naive_accessibility, AccessibilityState, Snapshot};

use crate::cycle::CycleView;
use crate::error::{Error, Result};
use crate::temporal::{edge, Edge, Label, TemporalGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Proper,
    Strict,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(Mode::Proper),
            "strict" => Ok(Mode::Strict),
            _ => Err(Error::Param(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Open,
    CutNonminimal,
    CutConnected,
}

/// The footprint in working coordinates. Cycles are renumbered so that
/// vertex `i` is position `i` and edge `i` is `{i, i+1}`.
#[derive(Clone, Debug)]
pub struct Footprint {
    n: usize,
    edges: Vec<Edge>,
    /// Indices of the other edges sharing an endpoint, per edge.
    touching: Vec<Vec<usize>>,
    /// Original vertex at each working vertex.
    original: Vec<Vertex>,
    cyclic: bool,
    name: String,
}

impl Footprint {
    pub fn new(g: &TemporalGraph) -> Result<Self> {
        if !g.is_connected_footprint() {
            return Err(Error::Disconnected);
        }
        let n = g.n();
        let (edges, original, cyclic) = match CycleView::new(g) {
            Ok(view) => (
                (0..n).map(|i| edge(i, (i + 1) % n)).collect(),
                view.order().to_vec(),
                true,
            ),
            Err(_) => (g.edge_list(), (0..n).collect(), false),
        };
        let touching = edges
            .iter()
            .map(|&(a, b)| {
                (0..edges.len())
                    .filter(|&j| {
                        let (c, d) = edges[j];
                        (a, b) != (c, d) && (a == c || a == d || b == c || b == d)
                    })
                    .collect()
            })
            .collect();
        let name = if cyclic {
            format!("cycle:{n}")
        } else {
            format!("graph:{n}:{}", edges.len())
        };
        Ok(Footprint {
            n,
            edges,
            touching,
            original,
            cyclic,
            name,
        })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Param(format!("cycle needs n >= 3, got {n}")));
        }
        let g = TemporalGraph::from_edges(
            n,
            &(0..n).map(|i| edge(i, (i + 1) % n)).collect::<Vec<_>>(),
        )?;
        Footprint::new(&g)
    }

    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Param(format!("path needs n >= 2, got {n}")));
        }
        let g =
            TemporalGraph::from_edges(n, &(0..n - 1).map(|i| edge(i, i + 1)).collect::<Vec<_>>())?;
        let mut f = Footprint::new(&g)?;
        f.name = format!("path:{n}");
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_cycle(&self) -> bool {
        self.cyclic
    }

    /// Builds the labelled graph on the original vertex ids.
    pub fn graph(&self, labels: &[Vec<Label>]) -> TemporalGraph {
        let mut g = TemporalGraph::new(self.n);
        for (&(u, v), ls) in self.edges.iter().zip(labels) {
            let (a, b) = (self.original[u], self.original[v]);
            g.add_edge(a, b).unwrap();
            g.add_labels(a, b, ls).unwrap();
        }
        g
    }

    pub fn canonical(&self, labels: &[Vec<Label>]) -> Canonical {
        if self.cyclic {
            canonical_cyclic(labels)
        } else {
            labels.to_vec()
        }
    }
}

/// A node of the generation tree: labels `1..next_label` are placed.
#[derive(Clone, Debug)]
pub struct GenerationNode<S> {
    labels: Vec<Vec<Label>>,
    next_label: Label,
    state: AccessibilityState<S>,
    verdict: Verdict,
}

impl<S: ReachSet> GenerationNode<S> {
    pub fn root(fp: &Footprint) -> Self {
        let state = AccessibilityState::new(fp.n);
        let mut node = GenerationNode {
            labels: vec![Vec::new(); fp.edges.len()],
            next_label: 1,
            state,
            verdict: Verdict::Open,
        };
        node.verdict = classify(&node.state);
        node
    }

    pub fn labels(&self) -> &[Vec<Label>] {
        &self.labels
    }

    pub fn next_label(&self) -> Label {
        self.next_label
    }

    pub fn state(&self) -> &AccessibilityState<S> {
        &self.state
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    /// The node obtained by giving the next label to the edges `subset` (edge indices).
    pub fn child(&self, fp: &Footprint, subset: &[usize]) -> Self {
        let l = self.next_label;
        let mut labels = self.labels.clone();
        for &i in subset {
            labels[i].push(l);
        }
        let mut state = self.state.clone();
        let edges: Vec<Edge> = subset.iter().map(|&i| fp.edges[i]).collect();
        state.apply(&edges, l);
        let verdict = classify(&state);
        GenerationNode {
            labels,
            next_label: l + 1,
            state,
            verdict,
        }
    }
}

pub fn classify<S: ReachSet>(state: &AccessibilityState<S>) -> Verdict {
    if state.redundant_contact().is_some() {
        Verdict::CutNonminimal
    } else if state.is_connected() {
        Verdict::CutConnected
    } else {
        Verdict::Open
    }
}

fn holds(node_labels: &[Vec<Label>], i: usize, l: Label) -> bool {
    node_labels[i].last() == Some(&l)
}

/// Edge subsets that may receive the next label, in lexicographic order.
///
/// Proper mode: matchings in which every edge touches another edge holding
/// the previous label. Strict mode: any edge subset in which every connected
/// piece holds or touches the previous label. Subsets failing the filter
/// can always be shifted one step down into an equivalent labelling.
pub fn candidate_subsets<S>(
    fp: &Footprint,
    node: &GenerationNode<S>,
    mode: Mode,
) -> Vec<Vec<usize>> {
    let l = node.next_label;
    let m = fp.edges.len();
    let lowerable = |i: usize| {
        l > 1
            && !fp.touching[i]
                .iter()
                .any(|&j| holds(&node.labels, j, l - 1))
    };
    let mut out = Vec::new();
    match mode {
        Mode::Proper => {
            let allowed: Vec<usize> = (0..m).filter(|&i| !lowerable(i)).collect();
            let mut used = vec![false; fp.n];
            let mut cur = Vec::new();
            matchings(fp, &allowed, 0, &mut used, &mut cur, &mut out);
        }
        Mode::Strict => {
            let mut cur = Vec::new();
            subsets(m, 0, &mut cur, &mut out);
            if l > 1 {
                out.retain(|s| strict_pieces_ok(fp, node, s));
            }
        }
    }
    out
}

fn matchings(
    fp: &Footprint,
    allowed: &[usize],
    from: usize,
    used: &mut [bool],
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for k in from..allowed.len() {
        let i = allowed[k];
        let (u, v) = fp.edges[i];
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        cur.push(i);
        out.push(cur.clone());
        matchings(fp, allowed, k + 1, used, cur, out);
        cur.pop();
        used[u] = false;
        used[v] = false;
    }
}

fn subsets(m: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for i in from..m {
        cur.push(i);
        out.push(cur.clone());
        subsets(m, i + 1, cur, out);
        cur.pop();
    }
}

fn strict_pieces_ok<S>(fp: &Footprint, node: &GenerationNode<S>, subset: &[usize]) -> bool {
    let l = node.next_label;
    let mut piece = vec![usize::MAX; fp.edges.len()];
    for (p, &start) in subset.iter().enumerate() {
        if piece[start] != usize::MAX {
            continue;
        }
        piece[start] = p;
        let mut stack = vec![start];
        let mut anchored = false;
        while let Some(i) = stack.pop() {
            anchored |= holds(&node.labels, i, l - 1)
                || fp.touching[i]
                    .iter()
                    .any(|&j| holds(&node.labels, j, l - 1));
            for &j in &fp.touching[i] {
                if piece[j] == usize::MAX && subset.contains(&j) {
                    piece[j] = p;
                    stack.push(j);
                }
            }
        }
        if !anchored {
            return false;
        }
    }
    true
}

/// Children of an open node, with isomorphic siblings merged when `symmetry` is on.
pub fn children<S: ReachSet>(
    fp: &Footprint,
    node: &GenerationNode<S>,
    mode: Mode,
    symmetry: bool,
) -> Vec<GenerationNode<S>> {
    let mut seen = std::collections::HashSet::new();
    candidate_subsets(fp, node, mode)
        .into_iter()
        .filter_map(|s| {
            if symmetry && fp.cyclic {
                let mut labels = node.labels.clone();
                for &i in &s {
                    labels[i].push(node.next_label);
                }
                if !seen.insert(canonical_cyclic(&labels)) {
                    return None;
                }
            }
            Some(node.child(fp, &s))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Config {
    pub mode: Mode,
    pub symmetry: bool,
    pub threads: usize,
    pub node_budget: Option<u64>,
    /// Depth at which the tree is split into independent subtrees.
    pub split_depth: usize,
    /// Stop once a labelling with at least this temporality is stored.
    pub target_temporality: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            mode: Mode::Proper,
            symmetry: true,
            threads: 1,
            node_budget: None,
            split_depth: 3,
            target_temporality: None,
        }
    }
}

/// A stored labelling, in working coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub labels: Vec<Vec<Label>>,
    pub canonical: Canonical,
}

impl Found {
    pub fn total(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn temporality(&self) -> usize {
        self.labels.iter().map(Vec::len).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GenStats {
    pub footprint: String,
    pub mode: Option<Mode>,
    pub nodes: u64,
    pub stored: u64,
    pub max_total: usize,
    pub max_temporality: usize,
    /// Stored labellings per `(T, tau)`.
    #[serde(serialize_with = "counts_as_list")]
    pub counts: BTreeMap<(usize, usize), u64>,
    pub complete: bool,
    pub reached_target: bool,
}

fn counts_as_list<S: serde::Serializer>(
    counts: &BTreeMap<(usize, usize), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row {
        #[serde(rename = "T")]
        total: usize,
        tau: usize,
        count: u64,
    }
    s.collect_seq(
        counts
            .iter()
            .map(|(&(total, tau), &count)| Row { total, tau, count }),
    )
}

impl GenStats {
    fn record(&mut self, f: &Found) {
        let (t, tau) = (f.total(), f.temporality());
        self.stored += 1;
        self.max_total = self.max_total.max(t);
        self.max_temporality = self.max_temporality.max(tau);
        *self.counts.entry((t, tau)).or_default() += 1;
    }

    fn merge(&mut self, other: GenStats) {
        self.nodes += other.nodes;
        self.stored += other.stored;
        self.max_total = self.max_total.max(other.max_total);
        self.max_temporality = self.max_temporality.max(other.max_temporality);
        for (k, c) in other.counts {
            *self.counts.entry(k).or_default() += c;
        }
    }
}

struct Budget {
    used: AtomicU64,
    limit: Option<u64>,
    exhausted: AtomicBool,
    target: AtomicBool,
}

impl Budget {
    fn halted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed) || self.target.load(Ordering::Relaxed)
    }

    fn take(&self, k: u64) -> bool {
        let before = self.used.fetch_add(k, Ordering::Relaxed);
        match self.limit {
            Some(limit) if before + k > limit => {
                self.exhausted.store(true, Ordering::Relaxed);
                false
            }
            _ => true,
        }
    }
}

enum Task<S> {
    Stored(Found),
    Subtree(GenerationNode<S>),
}

struct Search<'a> {
    fp: &'a Footprint,
    cfg: &'a Config,
    budget: &'a Budget,
}

impl Search<'_> {
    fn store<S>(&self, node: &GenerationNode<S>) -> Found {
        Found {
            labels: node.labels.clone(),
            canonical: self.fp.canonical(&node.labels),
        }
    }

    /// Expands `node` until `depth` labels are placed, in depth-first order.
    fn frontier<S: ReachSet>(
        &self,
        node: GenerationNode<S>,
        depth: usize,
        stats: &mut GenStats,
        out: &mut Vec<Task<S>>,
    ) {
        match node.verdict {
            Verdict::CutNonminimal => {}
            Verdict::CutConnected => out.push(Task::Stored(self.store(&node))),
            Verdict::Open if node.next_label as usize > depth => out.push(Task::Subtree(node)),
            Verdict::Open => {
                let kids = children(self.fp, &node, self.cfg.mode, self.cfg.symmetry);
                stats.nodes += kids.len() as u64;
                if !self.budget.take(kids.len() as u64) {
                    return;
                }
                for k in kids {
                    self.frontier(k, depth, stats, out);
                }
            }
        }
    }

    fn explore<S: ReachSet>(
        &self,
        node: &GenerationNode<S>,
        stats: &mut GenStats,
        out: &mut Vec<Found>,
    ) {
        match node.verdict {
            Verdict::CutNonminimal => {}
            Verdict::CutConnected => {
                let f = self.store(node);
                stats.record(&f);
                if self
                    .cfg
                    .target_temporality
                    .is_some_and(|t| f.temporality() >= t)
                {
                    self.budget.target.store(true, Ordering::Relaxed);
                }
                out.push(f);
            }
            Verdict::Open => {
                if self.budget.halted() {
                    return;
                }
                let kids = children(self.fp, node, self.cfg.mode, self.cfg.symmetry);
                stats.nodes += kids.len() as u64;
                if !self.budget.take(kids.len() as u64) {
                    return;
                }
                for k in &kids {
                    if self.budget.halted() {
                        return;
                    }
                    self.explore(k, stats, out);
                }
            }
        }
    }

    fn run<S: ReachSet>(&self, sink: &mut dyn FnMut(&Found)) -> GenStats {
        let mut stats = GenStats {
            footprint: self.fp.name.clone(),
            mode: Some(self.cfg.mode),
            nodes: 1,
            ..GenStats::default()
        };
        self.budget.take(1);
        let mut tasks = Vec::new();
        self.frontier(
            GenerationNode::<S>::root(self.fp),
            self.cfg.split_depth,
            &mut stats,
            &mut tasks,
        );
        let work = || {
            tasks
                .par_iter()
                .map(|t| {
                    let mut st = GenStats::default();
                    let mut found = Vec::new();
                    match t {
                        _ if self.budget.halted() => {}
                        Task::Stored(f) => {
                            st.record(f);
                            if self
                                .cfg
                                .target_temporality
                                .is_some_and(|t| f.temporality() >= t)
                            {
                                self.budget.target.store(true, Ordering::Relaxed);
                            }
                            found.push(f.clone());
                        }
                        Task::Subtree(node) => self.explore(node, &mut st, &mut found),
                    }
                    (st, found)
                })
                .collect::<Vec<_>>()
        };
        let results = match rayon::ThreadPoolBuilder::new()
            .num_threads(self.cfg.threads.max(1))
            .build()
        {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        };
        for (st, found) in results {
            stats.merge(st);
            for f in &found {
                sink(f);
            }
        }
        stats.reached_target = self.budget.target.load(Ordering::Relaxed);
        stats.complete = !self.budget.halted();
        stats
    }
}

/// Runs the generator, passing every stored labelling to `sink` in a fixed
/// depth-first order that does not depend on the thread count.
pub fn generate(fp: &Footprint, cfg: &Config, mut sink: impl FnMut(&Found)) -> GenStats {
    let budget = Budget {
        used: AtomicU64::new(0),
        limit: cfg.node_budget,
        exhausted: AtomicBool::new(false),
        target: AtomicBool::new(false),
    };
    let search = Search {
        fp,
        cfg,
        budget: &budget,
    };
    if fp.cyclic {
        search.run::<Arc>(&mut sink)
    } else {
        search.run::<Bits>(&mut sink)
    }
}

/// Runs the generator and collects everything it stores.
pub fn generate_all(fp: &Footprint, cfg: &Config) -> (Vec<Found>, GenStats) {
    let mut found = Vec::new();
    let stats = generate(fp, cfg, |f| found.push(f.clone()));
    (found, stats)
}
