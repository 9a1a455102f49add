//! Adjacency k-resolvedness: for every edge xy some vertex w lies at
//! distance >= k beyond one endpoint along a shortest path through the other.

use crate::dist::{all_pairs_distances, eccentricity_profile, is_bipartite, is_connected, DistMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn edge_resolved(dm: &DistMatrix, x: usize, y: usize, k: u32) -> bool {
    // x in I[y, w] for adjacent x, y means d(y, w) = 1 + d(x, w).
    (0..dm.n()).any(|w| {
        (dm.get(y, w) >= k && dm.get(y, w) == 1 + dm.get(x, w))
            || (dm.get(x, w) >= k && dm.get(x, w) == 1 + dm.get(y, w))
    })
}

fn k_resolved(g: &Graph, dm: &DistMatrix, k: u32) -> bool {
    if k == 0 {
        return true;
    }
    g.edges().all(|(x, y)| edge_resolved(dm, x, y, k))
}

/// Whether every edge xy admits a witness w with (d(y,w) >= k and x in
/// I[y,w]) or (d(x,w) >= k and y in I[x,w]). k = 0 is vacuously true.
pub fn is_adjacency_k_resolved(g: &Graph, k: u32) -> Result<bool> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(k_resolved(g, &all_pairs_distances(g), k))
}

/// The largest k for which the graph is adjacency k-resolved. Well defined:
/// the predicate is monotone non-increasing in k, always true at k = 1
/// (take w = x), and false beyond the diameter.
pub fn max_adjacency_resolution(g: &Graph) -> Result<u32> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if !g.is_nontrivial() {
        return Err(Error::InvalidArgument(
            "adjacency resolution requires a nontrivial graph".into(),
        ));
    }
    let dm = all_pairs_distances(g);
    let diameter = eccentricity_profile(g, &dm)?.diameter;
    let mut best = 1;
    for k in 2..=diameter {
        if !k_resolved(g, &dm, k) {
            break;
        }
        best = k;
    }
    Ok(best)
}

/// For connected bipartite graphs of order >= 3: whether the graph is
/// adjacency k-resolved for every k in {2, ..., r(G)}.
pub fn bipartite_resolution_check(g: &Graph) -> Result<bool> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.n() < 3 {
        return Err(Error::InvalidArgument(
            "bipartite resolution check requires order >= 3".into(),
        ));
    }
    if !is_bipartite(g).is_bipartite() {
        return Err(Error::InvalidArgument(
            "bipartite resolution check requires a bipartite graph".into(),
        ));
    }
    let dm = all_pairs_distances(g);
    let radius = eccentricity_profile(g, &dm)?.radius;
    Ok((2..=radius).all(|k| k_resolved(g, &dm, k)))
}
