//! Family sweeps that confront exact values, certified intervals, and
//! constructions, emitting deterministic machine-readable reports.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    basis_profile_check_cycle, basis_profile_check_path, closed_form_dim_l,
    strong_product_interval_with_cap, CertifiedInterval,
};
use crate::construct::{
    cycle_balpha, k_resolved_generator, path_balpha, path_path_triple, union_generator,
};
use crate::dist::{all_pairs_distances, eccentricity_profile, is_bipartite, is_connected};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::product::strong_product;
use crate::resolved::max_adjacency_resolution;
use crate::solver::{self, DimensionKind, DEFAULT_SOLVER_CAP};
use crate::twins::{product_twin_partition_check, twin_partition};

/// Bumped whenever the report schema changes.
pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Largest product order on which the sweep cross-checks the product
/// distance law exhaustively.
pub const DISTANCE_LAW_LIMIT: usize = 400;

/// Largest product order on which the sweep cross-checks the product twin
/// partition law.
pub const TWIN_LAW_LIMIT: usize = 200;

const DEFAULT_ROW_BUDGET_SECS: u64 = 120;

fn default_budget() -> u64 {
    DEFAULT_ROW_BUDGET_SECS
}

/// Expected values a sweep row may assert.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twin_classes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_resolution: Option<u32>,
}

/// One sweep row: a single family graph, or a factor pair whose strong
/// product is examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSpec {
    pub g: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Expectations::is_empty")]
    pub expect: Expectations,
}

impl Expectations {
    fn is_empty(&self) -> bool {
        self == &Expectations::default()
    }
}

impl RowSpec {
    pub fn single(g: &str) -> Self {
        RowSpec {
            g: g.to_string(),
            h: None,
            expect: Expectations::default(),
        }
    }

    pub fn pair(g: &str, h: &str) -> Self {
        RowSpec {
            g: g.to_string(),
            h: Some(h.to_string()),
            expect: Expectations::default(),
        }
    }

    pub fn dim_l(mut self, v: usize) -> Self {
        self.expect.dim_l = Some(v);
        self
    }

    pub fn dim(mut self, v: usize) -> Self {
        self.expect.dim = Some(v);
        self
    }

    pub fn twin_classes(mut self, v: usize) -> Self {
        self.expect.twin_classes = Some(v);
        self
    }

    pub fn max_resolution(mut self, v: u32) -> Self {
        self.expect.max_resolution = Some(v);
        self
    }

    /// Canonical identity of the row, used as the resume key.
    pub fn key(&self) -> String {
        match &self.h {
            Some(h) => format!("{} x {}", self.g, h),
            None => self.g.clone(),
        }
    }
}

/// A sweep description: named preset or user-provided row list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub name: String,
    #[serde(default = "default_budget")]
    pub time_budget_secs: u64,
    pub rows: Vec<RowSpec>,
}

impl SweepSpec {
    pub fn parse_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: format!("sweep spec: {e}"),
        })
    }
}

pub const PRESET_NAMES: [&str; 4] = ["paper-core", "grids", "cycles", "twin-families"];

/// Built-in sweep presets.
pub fn preset(name: &str) -> Option<SweepSpec> {
    use RowSpec as R;
    let rows = match name {
        "paper-core" => vec![
            R::single("fig1").dim_l(2).dim(3).twin_classes(7),
            R::single("K5").dim_l(4).twin_classes(1),
            R::single("K6").dim_l(5),
            R::single("C6").dim_l(1).twin_classes(6).max_resolution(3),
            R::single("C5").dim_l(2),
            R::single("P5").dim_l(1).twin_classes(5),
            R::single("P7").max_resolution(4),
            R::single("Q3").dim_l(1).twin_classes(8).max_resolution(3),
            R::single("fan(2,2)").dim_l(2).twin_classes(3),
            R::pair("K2", "K2").dim_l(3),
            R::pair("K3", "K2").dim_l(5),
            R::pair("P4", "P3").dim_l(3),
            R::pair("P3", "P3").dim_l(3),
            R::pair("P3", "P2").dim_l(3).dim(3),
            R::pair("P5", "P3").dim_l(3).dim(3),
            R::pair("P7", "P3").dim_l(4),
            R::pair("C8", "P3").dim_l(4),
            R::pair("C9", "P3"),
            R::pair("C4", "P2").dim_l(4),
            R::pair("K3", "P3").dim_l(6),
            R::pair("K3", "C6").dim_l(12),
            R::pair("K2", "Q3").dim_l(8),
            R::pair("fan(2,2)", "fan(2,2)").dim_l(16),
            R::pair("fan(2,2)", "C4").dim_l(8),
        ],
        "grids" => vec![
            R::pair("P3", "P2").dim_l(3).dim(3),
            R::pair("P4", "P2").dim_l(4).dim(4),
            R::pair("P5", "P2").dim_l(5).dim(5),
            R::pair("P4", "P3").dim_l(3).dim(3),
            R::pair("P5", "P3").dim_l(3).dim(3),
            R::pair("P6", "P3").dim_l(4).dim(4),
            R::pair("P7", "P3").dim_l(4).dim(4),
        ],
        "cycles" => vec![
            R::pair("C4", "P2").dim_l(4),
            R::pair("C6", "P2").dim_l(6),
            R::pair("C8", "P2").dim_l(8),
            R::pair("C8", "P3").dim_l(4),
            R::pair("C9", "P3"),
            R::pair("C10", "P3"),
        ],
        "twin-families" => vec![
            R::single("K4").twin_classes(1),
            R::single("fig1").twin_classes(7),
            R::single("fan(2,2)").dim_l(2).twin_classes(3),
            R::single("fan(2,3)").dim_l(3).twin_classes(3),
            R::pair("K2", "P3").dim_l(3),
            R::pair("K2", "P4").dim_l(4),
            R::pair("K2", "C4").dim_l(4),
            R::pair("K2", "C5").dim_l(5),
            R::pair("K2", "fig1").dim_l(11),
            R::pair("K3", "P3").dim_l(6),
            R::pair("K3", "P4").dim_l(8),
            R::pair("K3", "C4").dim_l(8),
            R::pair("K3", "C5").dim_l(10),
            R::pair("K3", "fig1"),
            R::pair("fan(2,2)", "fan(2,2)").dim_l(16),
            R::pair("fan(2,2)", "C4").dim_l(8),
            R::pair("fan(2,2)", "C6"),
        ],
        _ => return None,
    };
    Some(SweepSpec {
        name: name.to_string(),
        time_budget_secs: DEFAULT_ROW_BUDGET_SECS,
        rows,
    })
}

/// Exact value slot of a row: a solved value or a skip marker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactValue {
    Value(usize),
    Skipped(String),
}

impl ExactValue {
    fn skipped_cap() -> Self {
        ExactValue::Skipped("skipped(cap)".to_string())
    }

    fn skipped_timeout() -> Self {
        ExactValue::Skipped("skipped(timeout)".to_string())
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            ExactValue::Value(v) => Some(*v),
            ExactValue::Skipped(_) => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, ExactValue::Skipped(_))
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Value(v) => write!(f, "{v}"),
            ExactValue::Skipped(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub factors: Vec<String>,
    pub product_order: usize,
    pub exact_value: ExactValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<CertifiedInterval>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub construction_sizes: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    pub all_checks_passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub format_version: u32,
    pub spec_name: String,
    pub rows: Vec<SweepRow>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Exact-solver order cap for every row.
    pub cap: usize,
    /// Append-only results file (one JSON object per line); rows already
    /// present are reused instead of recomputed.
    pub results_path: Option<PathBuf>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            cap: DEFAULT_SOLVER_CAP,
            results_path: None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ResultLine {
    format_version: u32,
    cap: usize,
    key: String,
    row: SweepRow,
}

fn load_results(path: &PathBuf, cap: usize) -> HashMap<String, SweepRow> {
    let mut map = HashMap::new();
    let Ok(file) = std::fs::File::open(path) else {
        return map;
    };
    for line in BufReader::new(file).lines().map_while(|l| l.ok()) {
        if let Ok(entry) = serde_json::from_str::<ResultLine>(&line) {
            if entry.format_version == REPORT_FORMAT_VERSION && entry.cap == cap {
                map.insert(entry.key, entry.row);
            }
        }
    }
    map
}

/// Runs every row of the spec (rows are independent and run on the current
/// rayon pool), producing a report whose rows follow spec order.
pub fn run_sweep(spec: &SweepSpec, opts: &SweepOptions) -> Result<SweepReport> {
    let cached = match &opts.results_path {
        Some(path) => load_results(path, opts.cap),
        None => HashMap::new(),
    };
    let sink = match &opts.results_path {
        Some(path) => Some(Mutex::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::InvalidArgument(format!("results file: {e}")))?,
        )),
        None => None,
    };
    let budget = Duration::from_secs(spec.time_budget_secs);
    let rows: Vec<SweepRow> = spec
        .rows
        .par_iter()
        .map(|row_spec| {
            let key = row_spec.key();
            if let Some(row) = cached.get(&key) {
                return row.clone();
            }
            let row = run_row(row_spec, opts.cap, budget);
            if let Some(sink) = &sink {
                let entry = ResultLine {
                    format_version: REPORT_FORMAT_VERSION,
                    cap: opts.cap,
                    key,
                    row: row.clone(),
                };
                if let Ok(mut f) = sink.lock() {
                    let _ = writeln!(f, "{}", serde_json::to_string(&entry).expect("row is serializable"));
                }
            }
            row
        })
        .collect();
    let summary = Summary {
        pass: rows
            .iter()
            .filter(|r| r.all_checks_passed && !r.exact_value.is_skipped())
            .count(),
        fail: rows.iter().filter(|r| !r.all_checks_passed).count(),
        skip: rows
            .iter()
            .filter(|r| r.all_checks_passed && r.exact_value.is_skipped())
            .count(),
    };
    Ok(SweepReport {
        format_version: REPORT_FORMAT_VERSION,
        spec_name: spec.name.clone(),
        rows,
        summary,
    })
}

struct RowCtx {
    failures: Vec<String>,
    deadline: Instant,
}

impl RowCtx {
    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    fn out_of_time(&self) -> bool {
        Instant::now() > self.deadline
    }
}

fn run_row(spec: &RowSpec, cap: usize, budget: Duration) -> SweepRow {
    let mut ctx = RowCtx {
        failures: Vec::new(),
        deadline: Instant::now() + budget,
    };
    let factors: Vec<String> = match &spec.h {
        Some(h) => vec![spec.g.clone(), h.clone()],
        None => vec![spec.g.clone()],
    };
    let mut row = SweepRow {
        factors,
        product_order: 0,
        exact_value: ExactValue::skipped_cap(),
        interval: None,
        construction_sizes: BTreeMap::new(),
        failures: Vec::new(),
        all_checks_passed: false,
    };

    let build = |name: &str, ctx: &mut RowCtx| -> Option<(Family, Graph)> {
        let family: Family = match name.parse() {
            Ok(f) => f,
            Err(e) => {
                ctx.fail(format!("factor '{name}': {e}"));
                return None;
            }
        };
        match family.build() {
            Ok(g) => Some((family, g)),
            Err(e) => {
                ctx.fail(format!("factor '{name}': {e}"));
                None
            }
        }
    };

    let built_g = build(&spec.g, &mut ctx);
    let built_h = spec.h.as_ref().and_then(|h| build(h, &mut ctx));
    if built_g.is_some() && (spec.h.is_none() || built_h.is_some()) {
        let (family_g, g) = built_g.expect("checked above");
        match built_h {
            None => run_single_row(spec, &g, cap, &mut ctx, &mut row),
            Some((family_h, h)) => {
                run_pair_row(spec, (&family_g, &g), (&family_h, &h), cap, &mut ctx, &mut row)
            }
        }
    }

    row.failures = ctx.failures;
    row.all_checks_passed = row.failures.is_empty();
    row
}

fn solve_exact(
    g: &Graph,
    kind: DimensionKind,
    cap: usize,
    ctx: &mut RowCtx,
) -> (ExactValue, Option<Vec<usize>>) {
    match solver::solve(g, kind, cap, Some(ctx.deadline)) {
        Ok(r) => (ExactValue::Value(r.value), Some(r.basis)),
        Err(Error::UnsupportedSize { .. }) => (ExactValue::skipped_cap(), None),
        Err(Error::Timeout) => (ExactValue::skipped_timeout(), None),
        Err(e) => {
            ctx.fail(format!("{} dimension solve failed: {e}", kind.as_str()));
            (ExactValue::skipped_cap(), None)
        }
    }
}

fn run_single_row(spec: &RowSpec, g: &Graph, cap: usize, ctx: &mut RowCtx, row: &mut SweepRow) {
    row.product_order = g.n();
    if !is_connected(g) {
        ctx.fail("graph is not connected");
        return;
    }
    let partition = twin_partition(g);
    if let Some(expected) = spec.expect.twin_classes {
        if partition.t() != expected {
            ctx.fail(format!(
                "twin classes: expected {expected}, found {}",
                partition.t()
            ));
        }
    }
    if let Some(expected) = spec.expect.max_resolution {
        match max_adjacency_resolution(g) {
            Ok(found) if found == expected => {}
            Ok(found) => ctx.fail(format!(
                "max adjacency resolution: expected {expected}, found {found}"
            )),
            Err(e) => ctx.fail(format!("max adjacency resolution: {e}")),
        }
    }

    let (exact, _basis) = solve_exact(g, DimensionKind::Local, cap, ctx);
    row.exact_value = exact.clone();
    if let Some(value) = exact.value() {
        if value + partition.t() < g.n() {
            ctx.fail(format!(
                "twin-class lower bound violated: {} < n - t = {}",
                value,
                g.n() - partition.t()
            ));
        }
        if g.is_nontrivial() {
            match closed_form_dim_l(g) {
                Ok(Some(cf)) if cf != value => {
                    ctx.fail(format!("closed form {cf} disagrees with exact {value}"))
                }
                Ok(_) => {}
                Err(e) => ctx.fail(format!("closed form: {e}")),
            }
        }
        if let Some(expected) = spec.expect.dim_l {
            if value != expected {
                ctx.fail(format!("dim_l: expected {expected}, found {value}"));
            }
        }
    }
    if let Some(expected) = spec.expect.dim {
        if let (ExactValue::Value(found), _) = solve_exact(g, DimensionKind::Metric, cap, ctx) {
            if found != expected {
                ctx.fail(format!("dim: expected {expected}, found {found}"));
            }
        }
    }
}

fn run_pair_row(
    spec: &RowSpec,
    (family_g, g): (&Family, &Graph),
    (family_h, h): (&Family, &Graph),
    cap: usize,
    ctx: &mut RowCtx,
    row: &mut SweepRow,
) {
    row.product_order = g.n() * h.n();
    for (name, factor) in [(&spec.g, g), (spec.h.as_ref().expect("pair row"), h)] {
        if !is_connected(factor) {
            ctx.fail(format!("factor '{name}' is not connected"));
            return;
        }
        if !factor.is_nontrivial() {
            ctx.fail(format!("factor '{name}' is trivial"));
            return;
        }
    }
    let product = match strong_product(g, h) {
        Ok(p) => p,
        Err(e) => {
            ctx.fail(format!("strong product: {e}"));
            return;
        }
    };
    let order = row.product_order;

    if order <= DISTANCE_LAW_LIMIT {
        let dm = all_pairs_distances(product.graph());
        let dm_g = all_pairs_distances(g);
        let dm_h = all_pairs_distances(h);
        'law: for a in 0..g.n() {
            for b in 0..h.n() {
                for c in 0..g.n() {
                    for d in 0..h.n() {
                        let expected = dm_g.get(a, c).max(dm_h.get(b, d));
                        let found = dm.get(product.index(a, b), product.index(c, d));
                        if found != expected {
                            ctx.fail(format!(
                                "product distance law violated at ({a},{b})-({c},{d}): \
                                 {found} != max({},{})",
                                dm_g.get(a, c),
                                dm_h.get(b, d)
                            ));
                            break 'law;
                        }
                    }
                }
            }
        }
    }

    if order <= TWIN_LAW_LIMIT {
        match product_twin_partition_check(g, h) {
            Ok(true) => {}
            Ok(false) => ctx.fail("product twin partition law violated"),
            Err(e) => ctx.fail(format!("product twin partition check: {e}")),
        }
    }

    let interval = match strong_product_interval_with_cap(g, h, cap) {
        Ok(iv) => {
            row.interval = Some(iv.clone());
            Some(iv)
        }
        Err(e) => {
            ctx.fail(format!("certified interval: {e}"));
            None
        }
    };

    if ctx.out_of_time() {
        row.exact_value = ExactValue::skipped_timeout();
        return;
    }

    let (exact, basis) = solve_exact(product.graph(), DimensionKind::Local, cap, ctx);
    row.exact_value = exact.clone();

    if let (Some(value), Some(iv)) = (exact.value(), &interval) {
        if value < iv.lo || value > iv.hi {
            ctx.fail(format!(
                "exact value {value} outside certified interval [{}, {}]",
                iv.lo, iv.hi
            ));
        }
        if iv.exact && value != iv.lo {
            ctx.fail(format!(
                "interval claims exact {} but solver found {value}",
                iv.lo
            ));
        }
    }
    if let (Some(value), Some(expected)) = (exact.value(), spec.expect.dim_l) {
        if value != expected {
            ctx.fail(format!("dim_l: expected {expected}, found {value}"));
        }
    }
    if let Some(expected) = spec.expect.dim {
        if order <= cap && !ctx.out_of_time() {
            if let (ExactValue::Value(found), _) =
                solve_exact(product.graph(), DimensionKind::Metric, cap, ctx)
            {
                if found != expected {
                    ctx.fail(format!("dim: expected {expected}, found {found}"));
                }
            }
        }
    }

    run_constructions(
        (family_g, g),
        (family_h, h),
        cap,
        exact.value(),
        basis.as_deref(),
        ctx,
        row,
    );
}

fn factor_basis(g: &Graph, cap: usize, ctx: &mut RowCtx) -> Option<Vec<usize>> {
    match solver::solve(g, DimensionKind::Local, cap, Some(ctx.deadline)) {
        Ok(r) => Some(r.basis),
        Err(Error::UnsupportedSize { .. }) | Err(Error::Timeout) => None,
        Err(e) => {
            ctx.fail(format!("factor basis solve failed: {e}"));
            None
        }
    }
}

fn run_constructions(
    (family_g, g): (&Family, &Graph),
    (family_h, h): (&Family, &Graph),
    cap: usize,
    exact: Option<usize>,
    basis: Option<&[usize]>,
    ctx: &mut RowCtx,
    row: &mut SweepRow,
) {
    if ctx.out_of_time() {
        return;
    }
    let dm_g = all_pairs_distances(g);
    let dm_h = all_pairs_distances(h);
    let diameter_g = match eccentricity_profile(g, &dm_g) {
        Ok(p) => p.diameter as usize,
        Err(_) => return,
    };
    let diameter_h = match eccentricity_profile(h, &dm_h) {
        Ok(p) => p.diameter as usize,
        Err(_) => return,
    };
    let h_bipartite = is_bipartite(h).is_bipartite();

    let s1 = factor_basis(g, cap, ctx);
    let s2 = factor_basis(h, cap, ctx);

    if let (Some(s1), Some(s2)) = (&s1, &s2) {
        match union_generator(g, h, s1, s2) {
            Ok(built) => {
                let formula = g.n() * s2.len() + h.n() * s1.len() - s1.len() * s2.len();
                if built.size() != formula {
                    ctx.fail(format!(
                        "union generator size {} differs from formula {formula}",
                        built.size()
                    ));
                }
                row.construction_sizes.insert("union".into(), built.size());
            }
            Err(e) => ctx.fail(format!("union generator: {e}")),
        }
    }

    if let Some(s1) = &s1 {
        let applicable = max_adjacency_resolution(h)
            .map(|k| k as usize > diameter_g)
            .unwrap_or(false);
        if applicable {
            match k_resolved_generator(g, h, s1) {
                Ok(built) => {
                    if built.size() != h.n() * s1.len() {
                        ctx.fail(format!(
                            "k-resolved generator size {} differs from {}",
                            built.size(),
                            h.n() * s1.len()
                        ));
                    }
                    row.construction_sizes
                        .insert("k-resolved".into(), built.size());
                }
                Err(e) => ctx.fail(format!("k-resolved generator: {e}")),
            }
        }
    }

    if let (&Family::Path(a), &Family::Path(b)) = (family_g, family_h) {
        let (t, tp) = (a.max(b), a.min(b));
        if 2 <= tp && t <= 2 * tp - 1 {
            match path_path_triple(t, tp) {
                Ok(built) => {
                    if built.size() != 3 {
                        ctx.fail(format!("path triple size {} instead of 3", built.size()));
                    }
                    row.construction_sizes
                        .insert("path-triple".into(), built.size());
                }
                Err(e) => ctx.fail(format!("path triple: {e}")),
            }
        }
    }

    if let Family::Path(t) = family_g {
        if h_bipartite && *t >= 2 * diameter_h + 1 {
            match path_balpha(*t, h) {
                Ok(built) => {
                    let expected = (*t - 1).div_ceil(diameter_h) + 1;
                    if built.size() != expected {
                        ctx.fail(format!(
                            "path alternating set size {} differs from formula {expected}",
                            built.size()
                        ));
                    }
                    if let Some(value) = exact {
                        if built.size() != value {
                            ctx.fail(format!(
                                "path alternating set size {} is not optimal (exact {value})",
                                built.size()
                            ));
                        }
                    }
                    row.construction_sizes
                        .insert("path-balpha".into(), built.size());
                }
                Err(e) => ctx.fail(format!("path alternating set: {e}")),
            }
        }
        if exact.is_some() {
            if let Some(basis) = basis {
                match basis_profile_check_path(*t, h, basis) {
                    Ok(true) => {}
                    Ok(false) => ctx.fail("path basis profile conditions violated"),
                    Err(e) => ctx.fail(format!("path basis profile: {e}")),
                }
            }
        }
    }

    if let Family::Cycle(t) = family_g {
        if h_bipartite && *t >= 4 * diameter_h {
            let alpha = t.div_ceil(diameter_h);
            match cycle_balpha(*t, h) {
                Ok(built) => {
                    let expected = if alpha % 2 == 0 { alpha } else { alpha + 1 };
                    if built.size() != expected {
                        ctx.fail(format!(
                            "cycle alternating set size {} differs from formula {expected}",
                            built.size()
                        ));
                    }
                    if alpha % 2 == 0 {
                        if let Some(value) = exact {
                            if built.size() != value {
                                ctx.fail(format!(
                                    "cycle alternating set size {} is not optimal (exact {value})",
                                    built.size()
                                ));
                            }
                        }
                    }
                    row.construction_sizes
                        .insert("cycle-balpha".into(), built.size());
                }
                Err(e) => ctx.fail(format!("cycle alternating set: {e}")),
            }
        }
        if exact.is_some() {
            if let Some(basis) = basis {
                match basis_profile_check_cycle(*t, h, basis) {
                    Ok(true) => {}
                    Ok(false) => ctx.fail("cycle basis profile conditions violated"),
                    Err(e) => ctx.fail(format!("cycle basis profile: {e}")),
                }
            }
        }
    }
}

/// Report output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Renders a report with stable field order; byte-identical for identical
/// reports.
pub fn render_report(report: &SweepReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report is serializable");
            s.push('\n');
            s
        }
        ReportFormat::Csv => render_csv(report),
    }
}

const CSV_HEADER: &str =
    "factors,product_order,exact_value,interval_lo,interval_hi,interval_exact,construction_sizes,all_checks_passed";

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(report: &SweepReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let factors = csv_field(&row.factors.join(" x "));
        let (lo, hi, exact) = match &row.interval {
            Some(iv) => (iv.lo.to_string(), iv.hi.to_string(), iv.exact.to_string()),
            None => (String::new(), String::new(), String::new()),
        };
        let sizes = row
            .construction_sizes
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            factors,
            row.product_order,
            csv_field(&row.exact_value.to_string()),
            lo,
            hi,
            exact,
            csv_field(&sizes),
            row.all_checks_passed
        ));
    }
    out
}
