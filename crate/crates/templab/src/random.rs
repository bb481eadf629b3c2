//! Seeded random footprints for tests and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::temporal::{Edge, TemporalGraph};

pub const SEED_ENV: &str = "TEMPLAB_SEED";

/// Seed from `TEMPLAB_SEED`, or `default` when unset or unparsable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

fn relabel(n: usize, edges: &[Edge], rng: &mut ChaCha8Rng) -> Result<TemporalGraph> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mapped: Vec<Edge> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    TemporalGraph::from_edges(n, &mapped)
}

/// Random tree by random parent attachment, vertex ids shuffled.
pub fn random_tree(n: usize, seed: u64) -> Result<TemporalGraph> {
    if n == 0 {
        return Err(Error::Param("random_tree needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Edge> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    relabel(n, &edges, &mut rng)
}

/// Random cactus on `n` vertices whose largest cycle has exactly `c` vertices
/// (`c = 2` gives a tree). Starts from `C_c` and keeps attaching pendant edges
/// or cycles of length `3..=c` to random existing vertices.
pub fn random_cactus(n: usize, c: usize, seed: u64) -> Result<TemporalGraph> {
    if c < 2 || c > n || (c == 2 && n < 2) {
        return Err(Error::Param(format!("no cactus with n = {n}, c = {c}")));
    }
    if c == 2 {
        return random_tree(n, seed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut used = c;
    while used < n {
        let at = rng.gen_range(0..used);
        let room = n - used;
        // a cycle of length len adds len - 1 vertices
        let max_len = c.min(room + 1);
        if max_len >= 3 && rng.gen_bool(0.5) {
            let len = rng.gen_range(3..=max_len);
            let mut prev = at;
            for _ in 0..len - 1 {
                edges.push((prev, used));
                prev = used;
                used += 1;
            }
            edges.push((prev, at));
        } else {
            edges.push((at, used));
            used += 1;
        }
    }
    relabel(n, &edges, &mut rng)
}
