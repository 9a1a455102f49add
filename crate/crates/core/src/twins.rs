//! True-twin equivalence classes: u and v are true twins when N[u] = N[v].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::strong_product;

/// Partition of the vertex set into true-twin equivalence classes, in
/// canonical order: classes sorted by minimum element, members ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    /// Number of classes.
    pub fn t(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// The classes with more than one member.
    pub fn non_singletons(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().filter(|c| c.len() > 1)
    }

    /// Map from vertex to its class index.
    pub fn class_ids(&self, n: usize) -> Vec<usize> {
        let mut ids = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                ids[v] = i;
            }
        }
        ids
    }
}

/// Groups vertices by closed neighborhood. Each class induces a clique.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in g.vertices() {
        let mut key = g.neighbors(v).to_vec();
        key.push(v);
        key.sort_unstable();
        groups.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_by_key(|c| c[0]);
    TwinPartition { classes }
}

/// Checks that the twin classes of the strong product are exactly the
/// pairwise products of the factor classes, and that their count is t1 * t2.
pub fn product_twin_partition_check(g: &Graph, h: &Graph) -> Result<bool> {
    if !g.is_nontrivial() || !h.is_nontrivial() {
        return Err(Error::InvalidArgument(
            "both factors must be nontrivial".into(),
        ));
    }
    if !crate::dist::is_connected(g) || !crate::dist::is_connected(h) {
        return Err(Error::Disconnected);
    }
    let tg = twin_partition(g);
    let th = twin_partition(h);
    let product = strong_product(g, h)?;
    let tp = twin_partition(product.graph());
    if tp.t() != tg.t() * th.t() {
        return Ok(false);
    }
    let mut expected: Vec<Vec<usize>> = Vec::with_capacity(tg.t() * th.t());
    for ug in tg.classes() {
        for uh in th.classes() {
            let mut class: Vec<usize> = Vec::with_capacity(ug.len() * uh.len());
            for &i in ug {
                for &j in uh {
                    class.push(product.index(i, j));
                }
            }
            class.sort_unstable();
            expected.push(class);
        }
    }
    expected.sort_by_key(|c| c[0]);
    Ok(expected == tp.classes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::all_pairs_distances;

    #[test]
    fn fig1_classes() {
        let p = twin_partition(&Graph::fig1());
        assert_eq!(p.t(), 7);
        let non_singletons: Vec<&Vec<usize>> = p.non_singletons().collect();
        assert_eq!(non_singletons, vec![&vec![0, 1], &vec![7, 8]]);
    }

    #[test]
    fn complete_graph_single_class() {
        for n in 2..=6 {
            assert_eq!(twin_partition(&Graph::complete(n).unwrap()).t(), 1);
        }
    }

    #[test]
    fn triangle_free_graphs_have_singleton_classes() {
        for g in [
            Graph::cycle(6).unwrap(),
            Graph::path(5).unwrap(),
            Graph::hypercube(3).unwrap(),
        ] {
            let p = twin_partition(&g);
            assert_eq!(p.t(), g.n());
            assert!(p.non_singletons().next().is_none());
        }
    }

    #[test]
    fn classes_induce_cliques() {
        for g in [Graph::fig1(), Graph::fan_of_cliques(&[2, 3]).unwrap()] {
            let p = twin_partition(&g);
            for class in p.classes() {
                for (i, &u) in class.iter().enumerate() {
                    for &v in &class[i + 1..] {
                        assert!(g.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn twins_equidistant_from_outside_vertices() {
        let g = Graph::fig1();
        let dm = all_pairs_distances(&g);
        let p = twin_partition(&g);
        for class in p.non_singletons() {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    for x in g.vertices().filter(|&x| x != u && x != v) {
                        assert_eq!(dm.get(x, u), dm.get(x, v));
                    }
                }
            }
        }
    }

    #[test]
    fn product_partition_agrees_with_factor_products() {
        let p3 = Graph::path(3).unwrap();
        assert!(product_twin_partition_check(&p3, &p3).unwrap());

        let product = strong_product(&p3, &p3).unwrap();
        assert_eq!(twin_partition(product.graph()).t(), 9);

        let k3 = Graph::complete(3).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert!(product_twin_partition_check(&k3, &k2).unwrap());
        let product = strong_product(&k3, &k2).unwrap();
        assert_eq!(twin_partition(product.graph()).t(), 1);

        let fig1 = Graph::fig1();
        assert!(product_twin_partition_check(&fig1, &k2).unwrap());
        let product = strong_product(&fig1, &k2).unwrap();
        assert_eq!(twin_partition(product.graph()).t(), 7);
    }

    #[test]
    fn product_check_preconditions() {
        let p3 = Graph::path(3).unwrap();
        let n1 = Graph::empty(1).unwrap();
        assert!(product_twin_partition_check(&p3, &n1).is_err());
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            product_twin_partition_check(&p3, &split),
            Err(Error::Disconnected)
        ));
    }
}
