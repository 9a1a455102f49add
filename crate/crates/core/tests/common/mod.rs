//! Shared corpus builders and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's pruned subset search:
//! dimensions are recomputed by plain lexicographic enumeration over the
//! public generator checks, so solver results are validated by a second path.

#![allow(dead_code)]

use itertools::Itertools;
use lmdim_core::{
    all_pairs_distances, is_connected, is_local_generator, is_metric_generator, DistMatrix, Graph,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Named connected family instances with order at most `max_n`.
pub fn connected_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut graphs = Vec::new();
    let mut push = |name: String, g: Graph| {
        if g.n() <= max_n && is_connected(&g) {
            graphs.push((name, g));
        }
    };
    for n in 2..=max_n {
        push(format!("P{n}"), Graph::path(n).unwrap());
        push(format!("K{n}"), Graph::complete(n).unwrap());
        if n >= 3 {
            push(format!("C{n}"), Graph::cycle(n).unwrap());
        }
    }
    for r in 1..max_n {
        for s in r..=max_n.saturating_sub(r) {
            if r + s >= 2 {
                push(format!("K{r},{s}"), Graph::complete_bipartite(r, s).unwrap());
            }
        }
    }
    for k in 1..=4 {
        if 1usize << k <= max_n {
            push(format!("Q{k}"), Graph::hypercube(k).unwrap());
        }
    }
    if max_n >= 5 {
        push("fan(2,2)".into(), Graph::fan_of_cliques(&[2, 2]).unwrap());
    }
    if max_n >= 6 {
        push("fan(2,3)".into(), Graph::fan_of_cliques(&[2, 3]).unwrap());
    }
    if max_n >= 9 {
        push("fig1".into(), Graph::fig1());
    }
    graphs
}

/// Deterministic stream of random connected graphs on 2..=max_n vertices.
pub fn random_connected_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut graphs = Vec::with_capacity(count);
    while graphs.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.25..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if is_connected(&g) {
            graphs.push(g);
        }
    }
    graphs
}

/// The connected induced subgraphs of the nine-vertex fixture on the vertex
/// prefixes {0..k} for k in 3..=9.
pub fn fig1_prefixes() -> Vec<(String, Graph)> {
    let fig1 = Graph::fig1();
    (3..=9)
        .map(|k| {
            let edges: Vec<(usize, usize)> =
                fig1.edges().filter(|&(u, v)| u < k && v < k).collect();
            (format!("fig1[..{k}]"), Graph::new(k, &edges).unwrap())
        })
        .collect()
}

/// Dimension by plain lexicographic subset enumeration over the public
/// generator checks; independent of the solver's pruning and ordering.
pub fn brute_force_dimension(g: &Graph, local: bool) -> (usize, Vec<usize>) {
    let n = g.n();
    if n <= 1 {
        return (0, Vec::new());
    }
    let dm = all_pairs_distances(g);
    for k in 1..n {
        for subset in (0..n).combinations(k) {
            let valid = if local {
                is_local_generator(g, &dm, &subset).unwrap().is_valid()
            } else {
                is_metric_generator(g, &dm, &subset).unwrap().is_valid()
            };
            if valid {
                return (k, subset);
            }
        }
    }
    (n - 1, (0..n - 1).collect())
}

/// No subset of the given cardinality generates: exhaustive when the
/// binomial count is at most `exhaustive_limit`, otherwise by `samples`
/// random draws.
pub fn no_generator_of_size(
    g: &Graph,
    dm: &DistMatrix,
    size: usize,
    local: bool,
    samples: usize,
    exhaustive_limit: u64,
    seed: u64,
) -> bool {
    let n = g.n();
    if size == 0 {
        return true;
    }
    let is_valid = |subset: &[usize]| {
        if local {
            is_local_generator(g, dm, subset).unwrap().is_valid()
        } else {
            is_metric_generator(g, dm, subset).unwrap().is_valid()
        }
    };
    if binomial(n, size) <= exhaustive_limit {
        return (0..n).combinations(size).all(|s| !is_valid(&s));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let subset = sample_subset(&mut rng, n, size);
        if is_valid(&subset) {
            return false;
        }
    }
    true
}

fn sample_subset(rng: &mut StdRng, n: usize, k: usize) -> Vec<usize> {
    let mut picked = Vec::with_capacity(k);
    while picked.len() < k {
        let v = rng.gen_range(0..n);
        if !picked.contains(&v) {
            picked.push(v);
        }
    }
    picked.sort_unstable();
    picked
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for i in 0..k {
        result = result.saturating_mul((n - i) as u64) / (i + 1) as u64;
    }
    result
}

/// Every shortest x-y path, as vertex sequences from x to y.
pub fn all_shortest_paths(g: &Graph, dm: &DistMatrix, x: usize, y: usize) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    let mut current = vec![x];
    extend_paths(g, dm, y, &mut current, &mut paths);
    paths
}

fn extend_paths(
    g: &Graph,
    dm: &DistMatrix,
    target: usize,
    current: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) {
    let last = *current.last().unwrap();
    if last == target {
        paths.push(current.clone());
        return;
    }
    for &w in g.neighbors(last) {
        if dm.get(last, target) == 1 + dm.get(w, target) {
            current.push(w);
            extend_paths(g, dm, target, current, paths);
            current.pop();
        }
    }
}
