//! Exact local metric dimension and metric dimension by pruned subset search.
//!
//! Any generator of either kind must contain all but at most one vertex from
//! each true-twin class (two twins are distinguished only by themselves), and
//! swapping which member of a class is excluded never changes whether a set
//! generates. The search therefore enumerates complements with at most one
//! excluded vertex per class, memoizing verdicts per class pattern, starting
//! at cardinality n - t. Complements are visited in the order that makes the
//! surviving candidate sets appear in ascending lexicographic order, so the
//! first generator found is the canonical (lexicographically least) basis.

use std::collections::HashMap;
use std::time::Instant;

use crate::dist::{all_pairs_distances, is_connected, DistMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::twin_partition;

/// Default order cap for the exact solver; override via the `_with_cap`
/// entry points.
pub const DEFAULT_SOLVER_CAP: usize = 26;

/// Hard limit: candidate sets and distinguishing sets are u64 bitmasks.
pub const SOLVER_HARD_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionKind {
    Local,
    Metric,
}

impl DimensionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DimensionKind::Local => "local",
            DimensionKind::Metric => "metric",
        }
    }
}

/// Outcome of checking a candidate set: valid, or a witness pair it fails
/// to distinguish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetCheck {
    Valid,
    FailsAt(usize, usize),
}

impl SetCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, SetCheck::Valid)
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        match self {
            SetCheck::Valid => None,
            SetCheck::FailsAt(u, v) => Some((*u, *v)),
        }
    }
}

/// An exact dimension value with its canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    pub value: usize,
    /// The lexicographically least minimum-cardinality generator, sorted.
    pub basis: Vec<usize>,
    /// Number of vertex pairs the basis was verified to distinguish.
    pub checked_pairs: usize,
}

fn validate_set(g: &Graph, s: &[usize]) -> Result<()> {
    for &v in s {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    Ok(())
}

fn check_pairs<I>(dm: &DistMatrix, s: &[usize], pairs: I) -> SetCheck
where
    I: IntoIterator<Item = (usize, usize)>,
{
    for (u, v) in pairs {
        if !s.iter().any(|&x| dm.get(u, x) != dm.get(v, x)) {
            return SetCheck::FailsAt(u, v);
        }
    }
    SetCheck::Valid
}

/// Whether `s` distinguishes every pair of adjacent vertices; on failure the
/// first undistinguished edge (in lexicographic edge order) is the witness.
pub fn is_local_generator(g: &Graph, dm: &DistMatrix, s: &[usize]) -> Result<SetCheck> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    validate_set(g, s)?;
    Ok(check_pairs(dm, s, g.edges()))
}

/// Whether `s` distinguishes every pair of vertices.
pub fn is_metric_generator(g: &Graph, dm: &DistMatrix, s: &[usize]) -> Result<SetCheck> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    validate_set(g, s)?;
    let n = g.n();
    Ok(check_pairs(
        dm,
        s,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    ))
}

/// Exact local metric dimension with the default order cap.
pub fn local_metric_dimension(g: &Graph) -> Result<DimensionResult> {
    solve(g, DimensionKind::Local, DEFAULT_SOLVER_CAP, None)
}

pub fn local_metric_dimension_with_cap(g: &Graph, cap: usize) -> Result<DimensionResult> {
    solve(g, DimensionKind::Local, cap, None)
}

/// Exact metric dimension with the default order cap.
pub fn metric_dimension(g: &Graph) -> Result<DimensionResult> {
    solve(g, DimensionKind::Metric, DEFAULT_SOLVER_CAP, None)
}

pub fn metric_dimension_with_cap(g: &Graph, cap: usize) -> Result<DimensionResult> {
    solve(g, DimensionKind::Metric, cap, None)
}

/// Per-pair bitmask of the vertices that distinguish the pair.
fn distinguishing_masks(g: &Graph, dm: &DistMatrix, kind: DimensionKind) -> Vec<u64> {
    let n = g.n();
    let mask_for = |u: usize, v: usize| {
        (0..n).fold(0u64, |acc, x| {
            if dm.get(u, x) != dm.get(v, x) {
                acc | 1 << x
            } else {
                acc
            }
        })
    };
    match kind {
        DimensionKind::Local => g.edges().map(|(u, v)| mask_for(u, v)).collect(),
        DimensionKind::Metric => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| mask_for(u, v))
            .collect(),
    }
}

pub(crate) fn solve(
    g: &Graph,
    kind: DimensionKind,
    cap: usize,
    deadline: Option<Instant>,
) -> Result<DimensionResult> {
    let n = g.n();
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if n <= 1 {
        // single vertex (or null graph): dimension 0 by convention
        return Ok(DimensionResult {
            value: 0,
            basis: Vec::new(),
            checked_pairs: 0,
        });
    }
    if n > cap {
        return Err(Error::UnsupportedSize {
            n,
            limit: cap,
            what: "exact dimension solver (cap can be raised)",
        });
    }
    if n > SOLVER_HARD_LIMIT {
        return Err(Error::UnsupportedSize {
            n,
            limit: SOLVER_HARD_LIMIT,
            what: "bitmask subset search",
        });
    }

    let dm = all_pairs_distances(g);
    let masks = distinguishing_masks(g, &dm, kind);
    let partition = twin_partition(g);
    let class_id = partition.class_ids(n);
    let t = partition.t();

    let lower = 1.max(n - t);
    for k in lower..n {
        if let Some(d) = deadline {
            if Instant::now() > d {
                return Err(Error::Timeout);
            }
        }
        let mut search = Search {
            n,
            excl: n - k,
            masks: &masks,
            class_id: &class_id,
            full: mask_of_all(n),
            memo: HashMap::new(),
            deadline,
            leaves: 0,
        };
        if let Some(xmask) = search.run()? {
            let basis: Vec<usize> = (0..n).filter(|&v| xmask >> v & 1 == 0).collect();
            debug_assert_eq!(basis.len(), k);
            return Ok(DimensionResult {
                value: k,
                basis,
                checked_pairs: masks.len(),
            });
        }
    }
    // v = V - {n-1} generates for every kind, so the loop always returns
    Err(Error::VerificationFailed(
        "subset search exhausted without finding a generator".into(),
    ))
}

fn mask_of_all(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Enumerates complements X of size `excl`, at most one vertex per twin
/// class, ordered so induced candidate sets V - X ascend lexicographically.
struct Search<'a> {
    n: usize,
    excl: usize,
    masks: &'a [u64],
    class_id: &'a [usize],
    full: u64,
    /// verdict per set of excluded classes; exclusion choice within a class
    /// does not affect generator-ness
    memo: HashMap<u64, bool>,
    deadline: Option<Instant>,
    leaves: u64,
}

impl Search<'_> {
    fn run(&mut self) -> Result<Option<u64>> {
        self.dfs(0, 0, 0, 0)
    }

    fn dfs(&mut self, level: usize, lo: usize, used: u64, xmask: u64) -> Result<Option<u64>> {
        if level == self.excl {
            self.leaves += 1;
            if self.leaves % (1 << 16) == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() > d {
                        return Err(Error::Timeout);
                    }
                }
            }
            let ok = match self.memo.get(&used) {
                Some(&v) => v,
                None => {
                    let s = self.full ^ xmask;
                    let ok = self.masks.iter().all(|&m| m & s != 0);
                    self.memo.insert(used, ok);
                    ok
                }
            };
            return Ok(ok.then_some(xmask));
        }
        let hi = self.n - 1 - (self.excl - 1 - level);
        let mut v = hi;
        loop {
            let class_bit = 1u64 << self.class_id[v];
            if used & class_bit == 0 {
                if let Some(found) =
                    self.dfs(level + 1, v + 1, used | class_bit, xmask | 1 << v)?
                {
                    return Ok(Some(found));
                }
            }
            if v == lo {
                break;
            }
            v -= 1;
        }
        Ok(None)
    }
}
