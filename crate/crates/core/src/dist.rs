//! Hop distances and the structural primitives built on them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sentinel distance for unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest-path hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    /// The distance row of a single source vertex.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn is_reachable(&self, i: usize, j: usize) -> bool {
        self.get(i, j) != UNREACHABLE
    }
}

fn bfs_row(g: &Graph, source: usize, dist: &mut [u32]) {
    dist.fill(UNREACHABLE);
    dist[source] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
}

/// BFS-exact hop distances from every vertex; unreachable pairs are marked
/// with [`UNREACHABLE`].
pub fn all_pairs_distances(g: &Graph) -> DistMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    for s in 0..n {
        bfs_row(g, s, &mut d[s * n..(s + 1) * n]);
    }
    DistMatrix { n, d }
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut dist = vec![UNREACHABLE; n];
    bfs_row(g, 0, &mut dist);
    dist.iter().all(|&d| d != UNREACHABLE)
}

/// Per-vertex eccentricities with the derived diameter and radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccProfile {
    pub ecc: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
}

pub fn eccentricity_profile(g: &Graph, dm: &DistMatrix) -> Result<EccProfile> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "eccentricity of the null graph is undefined".into(),
        ));
    }
    let mut ecc = Vec::with_capacity(n);
    for v in 0..n {
        let e = *dm.row(v).iter().max().expect("n >= 1");
        if e == UNREACHABLE {
            return Err(Error::Disconnected);
        }
        ecc.push(e);
    }
    let diameter = *ecc.iter().max().expect("n >= 1");
    let radius = *ecc.iter().min().expect("n >= 1");
    Ok(EccProfile {
        ecc,
        diameter,
        radius,
    })
}

/// The interval I[x, y]: every vertex on some shortest x-y path, i.e. all w
/// with d(x,w) + d(w,y) = d(x,y). Sorted ascending.
pub fn interval(g: &Graph, dm: &DistMatrix, x: usize, y: usize) -> Result<Vec<usize>> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if !dm.is_reachable(x, y) {
        return Err(Error::Disconnected);
    }
    let dxy = dm.get(x, y);
    Ok((0..n)
        .filter(|&w| {
            dm.is_reachable(x, w)
                && dm.is_reachable(w, y)
                && dm.get(x, w) + dm.get(w, y) == dxy
        })
        .collect())
}

/// Outcome of the bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteCheck {
    /// A valid 2-coloring, one side 0 and the other 1 (componentwise).
    TwoColoring(Vec<u8>),
    /// The vertices of an odd cycle, in order.
    OddCycle(Vec<usize>),
}

impl BipartiteCheck {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCheck::TwoColoring(_))
    }
}

/// BFS 2-coloring; on failure returns an odd cycle assembled from the two
/// tree paths to the endpoints of the offending edge.
pub fn is_bipartite(g: &Graph) -> BipartiteCheck {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return BipartiteCheck::OddCycle(odd_cycle(u, v, &parent, &depth));
                }
            }
        }
    }
    BipartiteCheck::TwoColoring(color)
}

fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // left ends at the common ancestor; stitch: u..ancestor, then back down to v.
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
