use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use templab::constructions::generator_cycle;
use templab::ptgen::*;
use templab::temporal::{
    check_global_bounds, density, is_minimal, is_temporally_connected, validate, Class, Label,
    TemporalGraph,
};

fn random_prefix<S: ReachSet>(
    fp: &Footprint,
    mode: Mode,
    rng: &mut ChaCha8Rng,
    steps: usize,
) -> Vec<GenerationNode<S>> {
    let mut path = vec![GenerationNode::<S>::root(fp)];
    for _ in 0..steps {
        let node = path.last().unwrap();
        if node.verdict() != Verdict::Open {
            break;
        }
        let cands = candidate_subsets(fp, node, mode);
        if cands.is_empty() {
            break;
        }
        let pick = &cands[rng.gen_range(0..cands.len())];
        let next = node.child(fp, pick);
        path.push(next);
    }
    path
}

#[test]
fn incremental_state_matches_naive() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let footprints = [
        Footprint::cycle(6).unwrap(),
        Footprint::cycle(8).unwrap(),
        Footprint::path(5).unwrap(),
    ];
    let mut checked = 0;
    for round in 0..1200 {
        let fp = &footprints[round % 3];
        let mode = if round % 2 == 0 {
            Mode::Proper
        } else {
            Mode::Strict
        };
        let steps = rng.gen_range(1..12);
        let path = random_prefix::<Bits>(fp, mode, &mut rng, steps);
        let node = path.last().unwrap();
        let g = fp.graph(node.labels());
        assert_eq!(
            node.state().snapshot(),
            naive_accessibility(&g).snapshot(),
            "{:?}",
            node.labels()
        );
        checked += 1;
    }
    assert!(checked >= 1000);
}

#[test]
fn arcs_match_bitsets_on_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for round in 0..400 {
        let fp = Footprint::cycle(if round % 2 == 0 { 6 } else { 8 }).unwrap();
        let mode = if round % 3 == 0 {
            Mode::Strict
        } else {
            Mode::Proper
        };
        let seed: u64 = rng.gen();
        let a = random_prefix::<Arc>(&fp, mode, &mut ChaCha8Rng::seed_from_u64(seed), 12);
        let b = random_prefix::<Bits>(&fp, mode, &mut ChaCha8Rng::seed_from_u64(seed), 12);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.labels(), y.labels());
            assert_eq!(x.state().snapshot(), y.state().snapshot());
            assert_eq!(x.verdict(), y.verdict());
        }
    }
}

#[test]
fn reachability_grows_along_surviving_steps() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for round in 0..300 {
        let fp = Footprint::cycle(4 + round % 5).unwrap();
        let mode = if round % 2 == 0 {
            Mode::Proper
        } else {
            Mode::Strict
        };
        let path = random_prefix::<Arc>(&fp, mode, &mut rng, 30);
        for w in path.windows(2) {
            if w[1].verdict() != Verdict::CutNonminimal {
                assert!(w[1].state().volume() > w[0].state().volume());
            }
        }
    }
}

#[test]
fn single_edge_footprint() {
    let (found, stats) = generate_all(&Footprint::path(2).unwrap(), &Config::default());
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].labels, vec![vec![1]]);
    assert_eq!((stats.max_total, stats.max_temporality), (1, 1));
    assert!(stats.complete);
}

#[test]
fn c4_first_level() {
    let fp = Footprint::cycle(4).unwrap();
    let root = GenerationNode::<Arc>::root(&fp);
    assert_eq!(children(&fp, &root, Mode::Proper, false).len(), 6);
    assert_eq!(children(&fp, &root, Mode::Proper, true).len(), 2);
    assert!(children(&fp, &root, Mode::Proper, false)
        .iter()
        .all(|c| c.verdict() == Verdict::Open));
}

#[test]
fn completed_generator_is_stored() {
    let g = generator_cycle(8).unwrap().graph;
    let fp = Footprint::cycle(8).unwrap();
    let mut node = GenerationNode::<Arc>::root(&fp);
    for l in 1..=g.max_label().unwrap() {
        assert_eq!(node.verdict(), Verdict::Open);
        let subset: Vec<usize> = (0..8)
            .filter(|&i| g.labels(i, (i + 1) % 8).unwrap().contains(&l))
            .collect();
        assert!(candidate_subsets(&fp, &node, Mode::Proper).contains(&subset));
        node = node.child(&fp, &subset);
    }
    assert_eq!(node.verdict(), Verdict::CutConnected);
}

fn respects_colouring(labels: &[Vec<Label>], fp_edges: &[(usize, usize)], mode: Mode) -> bool {
    let touching = |i: usize, j: usize| {
        let ((a, b), (c, d)) = (fp_edges[i], fp_edges[j]);
        i != j && (a == c || a == d || b == c || b == d)
    };
    let max = labels.iter().flatten().copied().max().unwrap_or(0);
    (2..=max).all(|l| {
        let on: Vec<usize> = (0..labels.len())
            .filter(|&i| labels[i].contains(&l))
            .collect();
        let prev = |i: usize| labels[i].contains(&(l - 1));
        match mode {
            Mode::Proper => on
                .iter()
                .all(|&i| (0..labels.len()).any(|j| touching(i, j) && prev(j))),
            Mode::Strict => {
                // every connected piece of the edges holding l must hold or touch l - 1
                let mut seen = BTreeSet::new();
                on.iter().all(|&s| {
                    if seen.contains(&s) {
                        return true;
                    }
                    let mut stack = vec![s];
                    seen.insert(s);
                    let mut ok = false;
                    while let Some(i) = stack.pop() {
                        ok |= prev(i) || (0..labels.len()).any(|j| touching(i, j) && prev(j));
                        for &j in &on {
                            if touching(i, j) && seen.insert(j) {
                                stack.push(j);
                            }
                        }
                    }
                    ok
                })
            }
        }
    })
}

/// All incremental labellings (one non-empty edge set per label, matchings in
/// proper mode) that are minimal and temporally connected, checked with the
/// from-scratch verifier. Non-minimal or connected prefixes are not extended:
/// a redundant contact stays redundant when later labels are added.
fn brute_force(
    fp_edges: &[(usize, usize)],
    n: usize,
    mode: Mode,
    cap: Label,
) -> BTreeSet<Vec<Vec<Label>>> {
    fn graph(n: usize, fp_edges: &[(usize, usize)], labels: &[Vec<Label>]) -> TemporalGraph {
        let mut g = TemporalGraph::from_edges(n, fp_edges).unwrap();
        for (&(u, v), ls) in fp_edges.iter().zip(labels) {
            g.add_labels(u, v, ls).unwrap();
        }
        g
    }
    fn rec(
        n: usize,
        fp_edges: &[(usize, usize)],
        mode: Mode,
        cap: Label,
        labels: &mut Vec<Vec<Label>>,
        l: Label,
        out: &mut BTreeSet<Vec<Vec<Label>>>,
    ) {
        if l > cap {
            return;
        }
        let m = fp_edges.len();
        for mask in 1u32..(1 << m) {
            let set: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            if mode == Mode::Proper {
                let mut ends: Vec<usize> = set
                    .iter()
                    .flat_map(|&i| [fp_edges[i].0, fp_edges[i].1])
                    .collect();
                ends.sort_unstable();
                if ends.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
            }
            for &i in &set {
                labels[i].push(l);
            }
            let g = graph(n, fp_edges, labels);
            if is_minimal(&g) {
                if is_temporally_connected(&g) {
                    out.insert(labels.clone());
                } else {
                    rec(n, fp_edges, mode, cap, labels, l + 1, out);
                }
            }
            for &i in &set {
                labels[i].pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(
        n,
        fp_edges,
        mode,
        cap,
        &mut vec![Vec::new(); fp_edges.len()],
        1,
        &mut out,
    );
    out
}

fn exhaustive_case(fp: &Footprint, fp_edges: &[(usize, usize)], mode: Mode) {
    let n = fp.n();
    let cap = (2 * n * (n - 1)) as Label;
    let brute: BTreeSet<Canonical> = brute_force(fp_edges, n, mode, cap)
        .into_iter()
        .filter(|ls| respects_colouring(ls, fp_edges, mode))
        .map(|ls| fp.canonical(&ls))
        .collect();
    for symmetry in [true, false] {
        let cfg = Config {
            mode,
            symmetry,
            ..Config::default()
        };
        let (found, stats) = generate_all(fp, &cfg);
        assert!(stats.complete);
        let got: BTreeSet<Canonical> = found.iter().map(|f| f.canonical.clone()).collect();
        assert_eq!(got, brute, "{} {mode:?} symmetry={symmetry}", fp.name());
        if symmetry {
            assert_eq!(found.len(), got.len(), "duplicate classes stored");
        }
    }
}

#[test]
fn exhaustive_on_tiny_footprints() {
    let p3 = [(0, 1), (1, 2)];
    let c4 = [(0, 1), (1, 2), (2, 3), (0, 3)];
    for mode in [Mode::Proper, Mode::Strict] {
        exhaustive_case(&Footprint::path(3).unwrap(), &p3, mode);
        exhaustive_case(&Footprint::cycle(4).unwrap(), &c4, mode);
    }
}

#[test]
fn stored_labellings_verify() {
    for n in 3..=6 {
        for mode in [Mode::Proper, Mode::Strict] {
            if mode == Mode::Strict && n > 5 {
                continue;
            }
            let fp = Footprint::cycle(n).unwrap();
            let cfg = Config {
                mode,
                ..Config::default()
            };
            let class = if mode == Mode::Proper {
                Class::Proper
            } else {
                Class::Strict
            };
            let (found, stats) = generate_all(&fp, &cfg);
            assert_eq!(stats.stored as usize, found.len());
            assert_eq!(stats.counts.values().sum::<u64>(), stats.stored);
            assert!(stats.max_total >= stats.max_temporality);
            for f in &found {
                let g = fp.graph(&f.labels);
                assert!(validate(&g, class).ok());
                assert!(
                    is_temporally_connected(&g) && is_minimal(&g),
                    "{:?}",
                    f.labels
                );
                if mode == Mode::Proper {
                    assert!(check_global_bounds(&density(&g)));
                }
                assert_eq!(canonicalize(&g), f.canonical);
            }
        }
    }
}

#[test]
fn cycles_reach_the_generator() {
    for n in 3..=7 {
        let fp = Footprint::cycle(n).unwrap();
        let target = canonicalize(&generator_cycle(n).unwrap().graph);
        let mut seen = false;
        let stats = generate(&fp, &Config::default(), |f| seen |= f.canonical == target);
        assert!(seen, "n = {n}");
        assert_eq!(stats.max_temporality, n.div_ceil(2));
        assert_eq!(
            stats.max_total,
            generator_cycle(n).unwrap().graph.total_labels()
        );
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let fp = Footprint::cycle(6).unwrap();
    let one = generate_all(
        &fp,
        &Config {
            threads: 1,
            ..Config::default()
        },
    );
    let four = generate_all(
        &fp,
        &Config {
            threads: 4,
            ..Config::default()
        },
    );
    assert_eq!(one, four);
    let strict = Config {
        mode: Mode::Strict,
        split_depth: 2,
        ..Config::default()
    };
    let a = generate_all(
        &Footprint::cycle(5).unwrap(),
        &Config {
            threads: 1,
            ..strict.clone()
        },
    );
    let b = generate_all(
        &Footprint::cycle(5).unwrap(),
        &Config {
            threads: 3,
            ..strict
        },
    );
    assert_eq!(a, b);
}

#[test]
fn node_budget_marks_incomplete() {
    let fp = Footprint::cycle(7).unwrap();
    let stats = generate(
        &fp,
        &Config {
            node_budget: Some(500),
            ..Config::default()
        },
        |_| {},
    );
    assert!(!stats.complete);
}

#[test]
fn strict_path_beats_proper() {
    let fp = Footprint::path(3).unwrap();
    let (_, proper) = generate_all(&fp, &Config::default());
    let (_, strict) = generate_all(
        &fp,
        &Config {
            mode: Mode::Strict,
            ..Config::default()
        },
    );
    assert_eq!(proper.max_total, 3);
    assert_eq!(strict.max_total, 4);
}
