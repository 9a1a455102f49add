//! Strong and Cartesian products with the fixed row-major pair labeling.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A product graph together with its factor orders and the bijection
/// `index(i, j) = i * n2 + j` between product vertices and factor pairs.
///
/// The labeling is fixed row-major so that bases and reports are reproducible
/// across runs; product vertices render as `"(i,j)"` using factor labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    graph: Graph,
    n1: usize,
    n2: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n2 + j
    }

    #[inline]
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.n2, v % self.n2)
    }
}

fn product_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let mut labels = Vec::with_capacity(g.n() * h.n());
    for i in 0..g.n() {
        for j in 0..h.n() {
            labels.push(format!("({},{})", g.label(i), h.label(j)));
        }
    }
    labels
}

fn build_product(g: &Graph, h: &Graph, strong: bool) -> Result<ProductGraph> {
    let (n1, n2) = (g.n(), h.n());
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidArgument(
            "product factors must be nonempty".into(),
        ));
    }
    let n = n1 * n2;
    let mut edges = Vec::new();
    for a in 0..n1 {
        for b in 0..n2 {
            let u = a * n2 + b;
            for c in a..n1 {
                for d in 0..n2 {
                    let v = c * n2 + d;
                    if v <= u {
                        continue;
                    }
                    let same_a = a == c;
                    let same_b = b == d;
                    let adj_a = g.has_edge(a, c);
                    let adj_b = h.has_edge(b, d);
                    let joined = if strong {
                        (same_a && adj_b) || (same_b && adj_a) || (adj_a && adj_b)
                    } else {
                        (same_a && adj_b) || (same_b && adj_a)
                    };
                    if joined {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    let mut graph = Graph::new(n, &edges)?;
    graph.set_labels(product_labels(g, h))?;
    Ok(ProductGraph { graph, n1, n2 })
}

/// G boxtimes H: pairs are adjacent when each coordinate is equal or
/// adjacent, and not both equal.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    build_product(g, h, true)
}

/// G square H: pairs are adjacent when exactly one coordinate is adjacent and
/// the other is equal. A subgraph of the strong product.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    build_product(g, h, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_strong_k2_is_k4() {
        let k2 = Graph::complete(2).unwrap();
        let p = strong_product(&k2, &k2).unwrap();
        assert_eq!(p.graph(), &Graph::complete(4).unwrap());
    }

    #[test]
    fn p3_strong_p3_center_dominates() {
        let p3 = Graph::path(3).unwrap();
        let p = strong_product(&p3, &p3).unwrap();
        assert_eq!(p.graph().n(), 9);
        let center = p.index(1, 1);
        assert_eq!(p.graph().degree(center), 8);
        // hand oracle for the adjacency rule at a corner: (0,0) ~ (0,1),(1,0),(1,1)
        let corner = p.index(0, 0);
        let nbrs: Vec<(usize, usize)> = p
            .graph()
            .neighbors(corner)
            .iter()
            .map(|&v| p.pair(v))
            .collect();
        assert_eq!(nbrs, vec![(0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn p2_cartesian_p2_is_c4() {
        let p2 = Graph::path(2).unwrap();
        let p = cartesian_product(&p2, &p2).unwrap();
        // a connected 2-regular graph on 4 vertices is the 4-cycle
        assert_eq!(p.graph().n(), 4);
        assert_eq!(p.graph().m(), 4);
        assert!(p.graph().vertices().all(|v| p.graph().degree(v) == 2));
        assert!(crate::dist::is_connected(p.graph()));
    }

    #[test]
    fn grid_edge_count() {
        for (r, t) in [(3, 4), (2, 5), (4, 4)] {
            let p = cartesian_product(&Graph::path(r).unwrap(), &Graph::path(t).unwrap()).unwrap();
            assert_eq!(p.graph().n(), r * t);
            assert_eq!(p.graph().m(), r * (t - 1) + t * (r - 1));
        }
    }

    #[test]
    fn complete_factors_give_complete_product() {
        let p = strong_product(&Graph::complete(3).unwrap(), &Graph::complete(4).unwrap()).unwrap();
        assert_eq!(p.graph().n(), 12);
        assert!(p.graph().is_complete());
        assert!(p.graph().vertices().all(|v| p.graph().degree(v) == 11));
    }

    #[test]
    fn empty_factor_rejected() {
        let g = Graph::path(2).unwrap();
        let empty = Graph::new(0, &[]).unwrap();
        assert!(strong_product(&g, &empty).is_err());
        assert!(cartesian_product(&empty, &g).is_err());
    }

    #[test]
    fn pair_labels_rendered() {
        let p = strong_product(&Graph::fig1(), &Graph::path(2).unwrap()).unwrap();
        assert_eq!(p.graph().label(0), "(1,0)");
        assert_eq!(p.graph().label(p.index(8, 1)), "(9,1)");
    }

    #[test]
    fn index_pair_bijection() {
        let p = strong_product(&Graph::path(4).unwrap(), &Graph::path(3).unwrap()).unwrap();
        for v in 0..12 {
            let (i, j) = p.pair(v);
            assert_eq!(p.index(i, j), v);
        }
    }
}
