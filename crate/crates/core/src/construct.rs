//! Constructive local metric generators for strong products: the union set,
//! the k-resolved column set, the path-pair triple, and the alternating
//! diametral-copy sets along a path or cycle factor.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dist::{all_pairs_distances, eccentricity_profile, is_bipartite, is_connected, DistMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{strong_product, ProductGraph};
use crate::resolved::max_adjacency_resolution;
use crate::solver::is_local_generator;

/// Which construction produced a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Recipe {
    #[serde(rename = "union")]
    Union,
    #[serde(rename = "k-resolved")]
    KResolved,
    #[serde(rename = "path-triple")]
    PathTriple,
    #[serde(rename = "path-balpha")]
    PathBAlpha,
    #[serde(rename = "cycle-balpha")]
    CycleBAlpha,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Recipe::Union => "union",
            Recipe::KResolved => "k-resolved",
            Recipe::PathTriple => "path-triple",
            Recipe::PathBAlpha => "path-balpha",
            Recipe::CycleBAlpha => "cycle-balpha",
        };
        f.write_str(s)
    }
}

/// A constructed set on a strong product, verified as a local metric
/// generator before being returned.
#[derive(Clone, Debug)]
pub struct ConstructedGenerator {
    pub product: ProductGraph,
    /// Product vertex indices, sorted ascending.
    pub set: Vec<usize>,
    pub recipe: Recipe,
    /// The recipe's numeric inputs (factor positions, diametral vertices, ...).
    pub params: BTreeMap<String, usize>,
    /// Always true for a returned value; constructions refuse otherwise.
    pub verified: bool,
}

impl ConstructedGenerator {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// The set as factor pairs `(i, j)`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.set.iter().map(|&v| self.product.pair(v)).collect()
    }
}

fn finish(
    product: ProductGraph,
    mut set: Vec<usize>,
    recipe: Recipe,
    params: BTreeMap<String, usize>,
) -> Result<ConstructedGenerator> {
    set.sort_unstable();
    set.dedup();
    let dm = all_pairs_distances(product.graph());
    match is_local_generator(product.graph(), &dm, &set)? {
        check if check.is_valid() => Ok(ConstructedGenerator {
            product,
            set,
            recipe,
            params,
            verified: true,
        }),
        check => Err(Error::VerificationFailed(format!(
            "{recipe} set fails to distinguish adjacent pair {:?}",
            check.witness().expect("not valid")
        ))),
    }
}

fn require_connected_nontrivial(g: &Graph, role: &str) -> Result<()> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if !g.is_nontrivial() {
        return Err(Error::InvalidArgument(format!(
            "{role} factor must have at least two vertices"
        )));
    }
    Ok(())
}

fn verify_factor_basis(g: &Graph, s: &[usize], role: &str) -> Result<()> {
    let dm = all_pairs_distances(g);
    match is_local_generator(g, &dm, s)? {
        check if check.is_valid() => Ok(()),
        check => Err(Error::InvalidBasis(format!(
            "{role} set is not a local metric generator: adjacent pair {:?} undistinguished",
            check.witness().expect("not valid")
        ))),
    }
}

/// The set (V1 x S2) + (S1 x V2), a local metric generator whenever S1, S2
/// generate their factors; its size is n1|S2| + n2|S1| - |S1||S2|.
pub fn union_generator(
    g: &Graph,
    h: &Graph,
    s1: &[usize],
    s2: &[usize],
) -> Result<ConstructedGenerator> {
    require_connected_nontrivial(g, "first")?;
    require_connected_nontrivial(h, "second")?;
    verify_factor_basis(g, s1, "first factor")?;
    verify_factor_basis(h, s2, "second factor")?;
    let product = strong_product(g, h)?;
    let mut set = Vec::new();
    for i in 0..g.n() {
        for &j in s2 {
            set.push(product.index(i, j));
        }
    }
    for &i in s1 {
        for j in 0..h.n() {
            set.push(product.index(i, j));
        }
    }
    let params = BTreeMap::from([
        ("s1_size".to_string(), s1.len()),
        ("s2_size".to_string(), s2.len()),
    ]);
    let built = finish(product, set, Recipe::Union, params)?;
    debug_assert_eq!(
        built.size(),
        g.n() * s2.len() + h.n() * s1.len() - s1.len() * s2.len()
    );
    Ok(built)
}

/// The set S1 x V2, a local metric generator when the second factor is
/// adjacency k-resolved for some k exceeding the first factor's diameter.
pub fn k_resolved_generator(g: &Graph, h: &Graph, s1: &[usize]) -> Result<ConstructedGenerator> {
    require_connected_nontrivial(g, "first")?;
    require_connected_nontrivial(h, "second")?;
    verify_factor_basis(g, s1, "first factor")?;
    let dm_g = all_pairs_distances(g);
    let diameter_g = eccentricity_profile(g, &dm_g)?.diameter;
    let resolution = max_adjacency_resolution(h)?;
    if resolution <= diameter_g {
        return Err(Error::Precondition(format!(
            "second factor is at most adjacency {resolution}-resolved, \
             which does not exceed the first factor's diameter {diameter_g}"
        )));
    }
    let product = strong_product(g, h)?;
    let set: Vec<usize> = s1
        .iter()
        .flat_map(|&i| (0..h.n()).map(move |j| (i, j)))
        .map(|(i, j)| product.index(i, j))
        .collect();
    let params = BTreeMap::from([
        ("resolution".to_string(), resolution as usize),
        ("diameter_g".to_string(), diameter_g as usize),
        ("s1_size".to_string(), s1.len()),
    ]);
    let built = finish(product, set, Recipe::KResolved, params)?;
    debug_assert_eq!(built.size(), h.n() * s1.len());
    Ok(built)
}

/// The 3-element corner set on P_t x P_t' for t' <= t <= 2t' - 1: the pairs
/// (u1,v1), (u_t', v_t'), (u_t, v1) in 1-based position terms.
pub fn path_path_triple(t: usize, tp: usize) -> Result<ConstructedGenerator> {
    if !(2 <= tp && tp <= t && t <= 2 * tp - 1) {
        return Err(Error::Precondition(format!(
            "path pair triple requires 2 <= t' <= t <= 2t'-1, got t={t}, t'={tp}"
        )));
    }
    let g = Graph::path(t)?;
    let h = Graph::path(tp)?;
    let product = strong_product(&g, &h)?;
    let set = vec![
        product.index(0, 0),
        product.index(tp - 1, tp - 1),
        product.index(t - 1, 0),
    ];
    let params = BTreeMap::from([("t".to_string(), t), ("tp".to_string(), tp)]);
    finish(product, set, Recipe::PathTriple, params)
}

/// The lexicographically least ordered pair (a, b) with d(a, b) = D(G).
pub fn diametral_pair(g: &Graph, dm: &DistMatrix) -> Result<(usize, usize)> {
    let diameter = eccentricity_profile(g, dm)?.diameter;
    for a in 0..g.n() {
        for b in 0..g.n() {
            if a != b && dm.get(a, b) == diameter {
                return Ok((a, b));
            }
        }
    }
    Err(Error::InvalidArgument(
        "diametral pair requires a nontrivial graph".into(),
    ))
}

fn require_bipartite_factor(g: &Graph) -> Result<()> {
    require_connected_nontrivial(g, "second")?;
    if !is_bipartite(g).is_bipartite() {
        return Err(Error::Precondition(
            "the construction requires a bipartite second factor".into(),
        ));
    }
    Ok(())
}

/// The alternating diametral-copy set along P_t x G for bipartite G and
/// t >= 2D(G)+1. With D = D(G) and alpha = floor((t-1)/D), places copies of
/// the diametral vertices a, b alternately at 1-based path positions
/// 1, D+1, 2D+1, ..., alpha*D+1; when D does not divide t-1, one more copy
/// goes at position t, carrying whichever of a, b was not placed last.
/// Size is ceil((t-1)/D) + 1 in every case.
pub fn path_balpha(t: usize, g: &Graph) -> Result<ConstructedGenerator> {
    require_bipartite_factor(g)?;
    let dm = all_pairs_distances(g);
    let diameter = eccentricity_profile(g, &dm)?.diameter as usize;
    if t < 2 * diameter + 1 {
        return Err(Error::Precondition(format!(
            "path construction requires t >= 2D+1 = {}, got t={t}",
            2 * diameter + 1
        )));
    }
    let (a, b) = diametral_pair(g, &dm)?;
    let alpha = (t - 1) / diameter;
    let exact = (t - 1) % diameter == 0;
    let path = Graph::path(t)?;
    let product = strong_product(&path, g)?;
    let mut set = Vec::new();
    for j in 0..=alpha {
        let coord = if j % 2 == 0 { a } else { b };
        set.push(product.index(j * diameter, coord));
    }
    if !exact {
        let coord = if alpha % 2 == 1 { a } else { b };
        set.push(product.index(t - 1, coord));
    }
    let params = BTreeMap::from([
        ("t".to_string(), t),
        ("diameter".to_string(), diameter),
        ("alpha".to_string(), alpha),
        ("a".to_string(), a),
        ("b".to_string(), b),
    ]);
    let built = finish(product, set, Recipe::PathBAlpha, params)?;
    debug_assert_eq!(built.size(), (t - 1).div_ceil(diameter) + 1);
    Ok(built)
}

/// The alternating diametral-copy set along C_t x G for bipartite G and
/// t >= 4D(G). With alpha = ceil(t/D), places copies of a, b alternately at
/// 1-based positions 1, D+1, ..., (alpha-1)D+1; for odd alpha the final
/// position carries both a and b. Size is alpha (even) or alpha + 1 (odd).
pub fn cycle_balpha(t: usize, g: &Graph) -> Result<ConstructedGenerator> {
    require_bipartite_factor(g)?;
    let dm = all_pairs_distances(g);
    let diameter = eccentricity_profile(g, &dm)?.diameter as usize;
    if t < 4 * diameter {
        return Err(Error::Precondition(format!(
            "cycle construction requires t >= 4D = {}, got t={t}",
            4 * diameter
        )));
    }
    let (a, b) = diametral_pair(g, &dm)?;
    let alpha = t.div_ceil(diameter);
    let cycle = Graph::cycle(t)?;
    let product = strong_product(&cycle, g)?;
    let mut set = Vec::new();
    for j in 0..alpha {
        let coord = if j % 2 == 0 { a } else { b };
        set.push(product.index(j * diameter, coord));
    }
    if alpha % 2 == 1 {
        set.push(product.index((alpha - 1) * diameter, b));
    }
    let params = BTreeMap::from([
        ("t".to_string(), t),
        ("diameter".to_string(), diameter),
        ("alpha".to_string(), alpha),
        ("a".to_string(), a),
        ("b".to_string(), b),
    ]);
    let built = finish(product, set, Recipe::CycleBAlpha, params)?;
    let expected = if alpha % 2 == 0 { alpha } else { alpha + 1 };
    debug_assert_eq!(built.size(), expected);
    Ok(built)
}

/// Whether every adjacent pair inside `x` is distinguished by some element
/// of `w`.
pub fn resolves(g: &Graph, dm: &DistMatrix, w: &[usize], x: &[usize]) -> Result<bool> {
    for &v in w.iter().chain(x) {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let inside = {
        let mut flags = vec![false; g.n()];
        for &v in x {
            flags[v] = true;
        }
        flags
    };
    for (u, v) in g.edges() {
        if inside[u] && inside[v] && !w.iter().any(|&s| dm.get(u, s) != dm.get(v, s)) {
            return Ok(false);
        }
    }
    Ok(true)
}
