//! Immutable simple undirected graphs with dense 0-based vertex ids.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Vertices are `0..n`. Labels are cosmetic metadata only: equality compares
/// structure (order and adjacency) and ignores labels.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges,
    /// and endpoints outside `[0, n)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        Ok(Graph {
            n,
            adj,
            m: edges.len(),
            labels: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// The display label of a vertex: its stored label, or the id itself.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn is_nontrivial(&self) -> bool {
        self.n >= 2
    }

    /// Whether every vertex is adjacent to every other vertex.
    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.m == self.n * (self.n - 1) / 2
    }

    // ---- named families ------------------------------------------------

    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("path requires n >= 1".into()));
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("cycle requires n >= 3".into()));
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("complete requires n >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges)
    }

    /// K_{r,s} with part `{0..r}` and part `{r..r+s}`.
    pub fn complete_bipartite(r: usize, s: usize) -> Result<Self> {
        if r < 1 || s < 1 {
            return Err(Error::InvalidArgument(
                "complete bipartite requires r, s >= 1".into(),
            ));
        }
        let mut edges = Vec::new();
        for u in 0..r {
            for v in 0..s {
                edges.push((u, r + v));
            }
        }
        Graph::new(r + s, &edges)
    }

    /// N_n: n vertices, no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("empty graph requires n >= 1".into()));
        }
        Graph::new(n, &[])
    }

    /// Q_k: vertices are k-bit words, edges join words differing in one bit.
    pub fn hypercube(k: u32) -> Result<Self> {
        if k > 16 {
            return Err(Error::InvalidArgument("hypercube requires k <= 16".into()));
        }
        let n = 1usize << k;
        let mut edges = Vec::new();
        for v in 0..n {
            for b in 0..k {
                let w = v ^ (1usize << b);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        Graph::new(n, &edges)
    }

    /// A hub vertex joined to `l` pairwise-disjoint cliques K_{r_1},...,K_{r_l}.
    /// Requires l >= 2 and every r_i >= 2; the hub is vertex 0.
    pub fn fan_of_cliques(sizes: &[usize]) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::InvalidArgument(
                "fan of cliques requires at least two cliques".into(),
            ));
        }
        if sizes.iter().any(|&r| r < 2) {
            return Err(Error::InvalidArgument(
                "fan of cliques requires every clique size >= 2".into(),
            ));
        }
        let n = 1 + sizes.iter().sum::<usize>();
        let mut edges = Vec::new();
        let mut next = 1;
        for &r in sizes {
            let block: Vec<usize> = (next..next + r).collect();
            next += r;
            for &v in &block {
                edges.push((0, v));
            }
            for i in 0..r {
                for j in i + 1..r {
                    edges.push((block[i], block[j]));
                }
            }
        }
        Graph::new(n, &edges)
    }

    /// The 9-vertex fixture: two triangles {0,1,2} and {6,7,8} bridged by the
    /// path 2-3-6, with pendant vertices 4 and 5 attached to 3. Labels carry
    /// the conventional 1-based numbering.
    pub fn fig1() -> Self {
        let mut g = Graph::new(
            9,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (3, 5),
                (3, 6),
                (6, 7),
                (6, 8),
                (7, 8),
            ],
        )
        .expect("fixture edges are valid");
        g.set_labels((1..=9).map(|i| i.to_string()).collect())
            .expect("fixture labels are valid");
        g
    }
}

/// Parses the plain edge-list format: a header line `n m`, then `m` lines
/// `u v` with 0-based vertex ids. Tolerates CRLF and trailing blank lines.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })
        .map(|(i, l)| (i + 1, l.trim()))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), header_no, "vertex count")?;
    let m: usize = parse_field(it.next(), header_no, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: header_no,
            msg: "expected exactly two fields in header".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("more than {m} edge lines"),
            });
        }
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), line_no, "endpoint")?;
        let v: usize = parse_field(it.next(), line_no, "endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "expected exactly two fields".into(),
            });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex id out of range [0, {n})"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("duplicate edge {} {}", key.0, key.1),
            });
        }
        edges.push(key);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

fn parse_field<T: FromStr>(field: Option<&str>, line: usize, what: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            msg: format!("invalid {what}"),
        })
}

/// A named graph-family descriptor, parsable from compact text like
/// `P5`, `C6`, `K4`, `K2,3`, `N3`, `Q3`, `fan(2,2)`, `fig1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
    Hypercube(u32),
    FanOfCliques(Vec<usize>),
    Fig1,
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => Graph::path(*n),
            Family::Cycle(n) => Graph::cycle(*n),
            Family::Complete(n) => Graph::complete(*n),
            Family::CompleteBipartite(r, s) => Graph::complete_bipartite(*r, *s),
            Family::Empty(n) => Graph::empty(*n),
            Family::Hypercube(k) => Graph::hypercube(*k),
            Family::FanOfCliques(rs) => Graph::fan_of_cliques(rs),
            Family::Fig1 => Ok(Graph::fig1()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "K{r},{s}"),
            Family::Empty(n) => write!(f, "N{n}"),
            Family::Hypercube(k) => write!(f, "Q{k}"),
            Family::FanOfCliques(rs) => {
                write!(f, "fan(")?;
                for (i, r) in rs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, ")")
            }
            Family::Fig1 => write!(f, "fig1"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("unknown family descriptor '{s}'"));
        if s.is_empty() || !s.is_char_boundary(1) {
            return Err(bad());
        }
        if s == "fig1" {
            return Ok(Family::Fig1);
        }
        if let Some(args) = s.strip_prefix("fan(").and_then(|r| r.strip_suffix(')')) {
            let sizes: Vec<usize> = args
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            return Ok(Family::FanOfCliques(sizes));
        }
        let (head, rest) = s.split_at(1);
        match head {
            "K" if rest.contains(',') => {
                let (r, t) = rest.split_once(',').ok_or_else(bad)?;
                Ok(Family::CompleteBipartite(
                    r.trim().parse().map_err(|_| bad())?,
                    t.trim().parse().map_err(|_| bad())?,
                ))
            }
            "P" => Ok(Family::Path(rest.parse().map_err(|_| bad())?)),
            "C" => Ok(Family::Cycle(rest.parse().map_err(|_| bad())?)),
            "K" => Ok(Family::Complete(rest.parse().map_err(|_| bad())?)),
            "N" => Ok(Family::Empty(rest.parse().map_err(|_| bad())?)),
            "Q" => Ok(Family::Hypercube(rest.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Family {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_edge_list_k2() {
        let g = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn parse_edge_list_p4() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g, Graph::path(4).unwrap());
    }

    #[test]
    fn parse_edge_list_c3_is_k3() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(g, Graph::cycle(3).unwrap());
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn parse_edge_list_tolerates_crlf_and_trailing_blank() {
        let g = parse_edge_list("2 1\r\n0 1\r\n\r\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn parse_edge_list_errors_name_lines() {
        match parse_edge_list("3 2\n0 1\n1 3") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_edge_list("3 2\n0 1\n1 1") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_edge_list("3 2\n0 1\n0 1") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_edge_list("3 2\nx 1\n0 1") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn fig1_shape() {
        let g = Graph::fig1();
        assert_eq!(g.n(), 9);
        assert_eq!(g.m(), 10);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        assert!(g.has_edge(6, 7) && g.has_edge(6, 8) && g.has_edge(7, 8));
        assert!(g.has_edge(2, 3) && g.has_edge(3, 6));
        assert!(g.has_edge(3, 4) && g.has_edge(3, 5));
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(8), "9");
    }

    #[test]
    fn hypercube3_shape() {
        let g = Graph::hypercube(3).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn fan_of_cliques_shape() {
        let g = Graph::fan_of_cliques(&[2, 2]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(0), 4);
        assert!(g.has_edge(1, 2) && g.has_edge(3, 4) && !g.has_edge(1, 3));
        assert!(Graph::fan_of_cliques(&[2]).is_err());
        assert!(Graph::fan_of_cliques(&[1, 2]).is_err());
    }

    #[test]
    fn equality_ignores_labels() {
        let a = Graph::fig1();
        let mut b = Graph::fig1();
        b.set_labels((0..9).map(|i| format!("v{i}")).collect()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn family_descriptor_round_trip() {
        for s in ["P5", "C6", "K4", "K2,3", "N3", "Q3", "fan(2,2)", "fig1"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.build().unwrap();
        }
        assert!("X7".parse::<Family>().is_err());
        assert!("P".parse::<Family>().is_err());
    }

    #[test]
    fn invalid_family_parameters() {
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::complete_bipartite(0, 2).is_err());
    }
}
