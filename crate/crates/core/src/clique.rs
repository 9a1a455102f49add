//! Exact maximum-clique search for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`clique_number`].
pub const CLIQUE_MAX_N: usize = 30;

/// The order of a largest complete subgraph, by exact branch and bound.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CLIQUE_MAX_N {
        return Err(Error::UnsupportedSize {
            n,
            limit: CLIQUE_MAX_N,
            what: "exact clique search",
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    let mut best = 1;
    // candidates restricted to higher-numbered vertices so each clique is
    // enumerated from its smallest member once
    for v in 0..n {
        let cand = adj[v] & !((1u64 << (v + 1)) - 1);
        extend(&adj, cand, 1, &mut best);
    }
    Ok(best)
}

fn extend(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        extend(adj, rest & adj[v], size + 1, best);
    }
}

/// Whether some single-vertex deletion leaves a complete graph while the
/// graph itself is not complete, i.e. the clique number equals n - 1.
pub fn clique_number_is_n_minus_1(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 || g.is_complete() {
        return false;
    }
    'outer: for v in 0..n {
        for u in 0..n {
            if u == v {
                continue;
            }
            for w in u + 1..n {
                if w == v {
                    continue;
                }
                if !g.has_edge(u, w) {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_cycle() {
        assert_eq!(clique_number(&Graph::complete(5).unwrap()).unwrap(), 5);
        assert_eq!(clique_number(&Graph::cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn fig1_has_clique_number_3() {
        assert_eq!(clique_number(&Graph::fig1()).unwrap(), 3);
    }

    /// Brute force over all vertex subsets, independent of the search above.
    #[cfg(test)]
    fn brute_clique(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u64..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let ok = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if ok {
                best = best.max(verts.len());
            }
        }
        best
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for g in [
            Graph::fig1(),
            Graph::fan_of_cliques(&[2, 3]).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
            Graph::hypercube(3).unwrap(),
            Graph::cycle(7).unwrap(),
        ] {
            assert_eq!(clique_number(&g).unwrap(), brute_clique(&g));
        }
    }

    #[test]
    fn size_limit() {
        let g = Graph::empty(31).unwrap();
        assert!(matches!(
            clique_number(&g),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn near_complete_detection() {
        let k4_minus_edge = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(clique_number_is_n_minus_1(&k4_minus_edge));
        assert!(!clique_number_is_n_minus_1(&Graph::complete(4).unwrap()));
        assert!(!clique_number_is_n_minus_1(&Graph::cycle(6).unwrap()));
        assert!(clique_number_is_n_minus_1(&Graph::path(3).unwrap()));
    }
}
