//! Computing, bounding, and certifying the local metric dimension (and the
//! plain metric dimension) of finite connected graphs, specialized for
//! strong products.
//!
//! The crate is organized around a pipeline:
//!
//! - [`graph`] / [`graph6`]: the [`Graph`] type, named family generators,
//!   and the edge-list and graph6 interchange formats;
//! - [`dist`]: BFS hop distances, eccentricities, intervals, bipartiteness;
//! - [`product`]: strong and Cartesian products with the fixed row-major
//!   pair labeling;
//! - [`twins`] / [`resolved`]: true-twin equivalence classes and adjacency
//!   k-resolvedness, the two structural engines behind the bounds;
//! - [`solver`]: ground truth — exact local metric dimension and metric
//!   dimension with a canonical (lexicographically least) basis;
//! - [`construct`]: the constructive generators (union set, k-resolved
//!   columns, path triple, alternating diametral sets), each verified
//!   before it is returned;
//! - [`bounds`]: closed forms and the certified-interval engine, every
//!   endpoint tagged with the catalog result that justifies it;
//! - [`harness`]: family sweeps with deterministic JSON/CSV reports.
//!
//! Dimensions of the one-vertex graph are defined as 0 by convention; all
//! dimension operations reject disconnected input with
//! [`Error::Disconnected`](error::Error::Disconnected).
//!
//! Graphs and distance matrices are immutable after construction and safe
//! to share across threads.

pub mod bounds;
pub mod clique;
pub mod construct;
pub mod dist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod product;
pub mod resolved;
pub mod solver;
pub mod twins;

pub use bounds::{
    basis_profile_check_cycle, basis_profile_check_path, closed_form_dim_l, grid_metric_dim,
    strong_product_interval, strong_product_interval_with_cap, AppliedBound, BoundSide,
    CertifiedInterval, SkippedBound, TheoremTag,
};
pub use clique::{clique_number, CLIQUE_MAX_N};
pub use construct::{
    cycle_balpha, k_resolved_generator, path_balpha, path_path_triple, resolves, union_generator,
    ConstructedGenerator, Recipe,
};
pub use dist::{
    all_pairs_distances, eccentricity_profile, interval, is_bipartite, is_connected,
    BipartiteCheck, DistMatrix, EccProfile, UNREACHABLE,
};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, Family, Graph};
pub use graph6::{emit_graph6, parse_graph6, GRAPH6_MAX_N};
pub use harness::{
    preset, render_report, run_sweep, ExactValue, Expectations, ReportFormat, RowSpec, Summary,
    SweepOptions, SweepReport, SweepRow, SweepSpec, PRESET_NAMES, REPORT_FORMAT_VERSION,
};
pub use product::{cartesian_product, strong_product, ProductGraph};
pub use resolved::{bipartite_resolution_check, is_adjacency_k_resolved, max_adjacency_resolution};
pub use solver::{
    is_local_generator, is_metric_generator, local_metric_dimension,
    local_metric_dimension_with_cap, metric_dimension, metric_dimension_with_cap, DimensionKind,
    DimensionResult, SetCheck, DEFAULT_SOLVER_CAP, SOLVER_HARD_LIMIT,
};
pub use twins::{product_twin_partition_check, twin_partition, TwinPartition};
