//! Numerical checks of the SO1 deletion and link inequalities and of the
//! SO2–SO6 sandwich and deletion bounds, plus a seeded fuzzer.
//!
//! Every check returns a [`BoundReport`]. Slack is oriented so that a
//! positive value means the claimed inequality holds with room to spare. A
//! report is `tight` when `|slack| <= 1e-9 * max(1, |lhs|, |rhs|, |rhs_upper|)`,
//! otherwise `holds` when the slack is positive (greater than `1e-12` for
//! strict claims) and `violated` otherwise.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BoundError, GraphError};
use crate::families::{complete, cycle, path, star};
use crate::graph::{Graph, Vertex};
use crate::index::{compute, compute_allow_isolated, IndexId};
use crate::ops::{delete_edge, link, point_attach, Identification, LinkSpec};
use crate::report::{ser_g17, ser_g17_opt};

pub const STRICT_EPSILON: f64 = 1e-12;
pub const TIGHT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundId {
    /// SO1(G) > SO1(G-e) + (δ²-Δ²)/2, G non-regular.
    EdgeDelSo1,
    /// SO1 of a link against its monomers, with per-monomer δ_i, Δ_i.
    LinkSo1,
    /// SO1 of a link against its monomers, with δ, Δ of the whole link.
    LinkSo1Uniform,
    SandwichSo2,
    DelSo2,
    SandwichSo3,
    DelSo3,
    SandwichSo4,
    DelSo4,
    SandwichSo5,
    DelSo5,
    UpperSo6,
}

impl BoundId {
    pub const ALL: [BoundId; 12] = [
        BoundId::EdgeDelSo1,
        BoundId::LinkSo1,
        BoundId::LinkSo1Uniform,
        BoundId::SandwichSo2,
        BoundId::DelSo2,
        BoundId::SandwichSo3,
        BoundId::DelSo3,
        BoundId::SandwichSo4,
        BoundId::DelSo4,
        BoundId::SandwichSo5,
        BoundId::DelSo5,
        BoundId::UpperSo6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::EdgeDelSo1 => "edge-del-so1",
            BoundId::LinkSo1 => "link-so1",
            BoundId::LinkSo1Uniform => "link-so1-uniform",
            BoundId::SandwichSo2 => "sandwich-so2",
            BoundId::DelSo2 => "del-so2",
            BoundId::SandwichSo3 => "sandwich-so3",
            BoundId::DelSo3 => "del-so3",
            BoundId::SandwichSo4 => "sandwich-so4",
            BoundId::DelSo4 => "del-so4",
            BoundId::SandwichSo5 => "sandwich-so5",
            BoundId::DelSo5 => "del-so5",
            BoundId::UpperSo6 => "upper-so6",
        }
    }

    /// Strict (`>`) claims: the deletion and link bounds.
    pub fn is_strict(self) -> bool {
        !self.is_sandwich()
    }

    /// The non-strict two-sided bounds and the SO6 upper bound.
    pub fn is_sandwich(self) -> bool {
        matches!(
            self,
            BoundId::SandwichSo2
                | BoundId::SandwichSo3
                | BoundId::SandwichSo4
                | BoundId::SandwichSo5
                | BoundId::UpperSo6
        )
    }

    pub fn is_deletion(self) -> bool {
        matches!(
            self,
            BoundId::EdgeDelSo1 | BoundId::DelSo2 | BoundId::DelSo3 | BoundId::DelSo4 | BoundId::DelSo5
        )
    }

    pub fn is_link(self) -> bool {
        matches!(self, BoundId::LinkSo1 | BoundId::LinkSo1Uniform)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == wanted)
            .ok_or_else(|| format!("unknown bound {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundVerdict {
    Holds,
    Tight,
    Violated,
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundVerdict::Holds => "holds",
            BoundVerdict::Tight => "tight",
            BoundVerdict::Violated => "violated",
        })
    }
}

/// Everything needed to re-run a check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Graph { graph: Graph },
    Edge { graph: Graph, edge: (Vertex, Vertex) },
    Link { spec: LinkSpec },
}

impl Instance {
    pub fn describe(&self) -> String {
        match self {
            Instance::Graph { graph } => format!("graph(n={} m={})", graph.vertex_count(), graph.edge_count()),
            Instance::Edge { graph, edge } => format!(
                "graph(n={} m={}) e={}-{}",
                graph.vertex_count(),
                graph.edge_count(),
                edge.0,
                edge.1
            ),
            Instance::Link { spec } => {
                let sizes: Vec<String> = spec.monomers().iter().map(|g| g.vertex_count().to_string()).collect();
                format!("link(k={} sizes={})", spec.len(), sizes.join("/"))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: BoundId,
    pub instance: String,
    /// The invariant side of the claim.
    #[serde(serialize_with = "ser_g17")]
    pub lhs: f64,
    /// The lower bound, or the upper bound for `upper-so6`.
    #[serde(serialize_with = "ser_g17")]
    pub rhs: f64,
    /// The upper bound of a two-sided sandwich.
    #[serde(serialize_with = "ser_g17_opt")]
    pub rhs_upper: Option<f64>,
    #[serde(serialize_with = "ser_g17")]
    pub slack: f64,
    pub strict: bool,
    pub verdict: BoundVerdict,
    pub preconditions_met: bool,
    pub replay: Instance,
}

impl BoundReport {
    fn new(
        bound: BoundId,
        replay: Instance,
        lhs: f64,
        rhs: f64,
        rhs_upper: Option<f64>,
        preconditions_met: bool,
    ) -> Self {
        let slack = match (bound, rhs_upper) {
            (BoundId::UpperSo6, _) => rhs - lhs,
            (_, Some(upper)) => (lhs - rhs).min(upper - lhs),
            (_, None) => lhs - rhs,
        };
        let strict = bound.is_strict();
        let scale = 1f64.max(lhs.abs()).max(rhs.abs()).max(rhs_upper.map_or(0.0, f64::abs));
        let verdict = if slack.abs() <= TIGHT_TOLERANCE * scale {
            BoundVerdict::Tight
        } else if slack > if strict { STRICT_EPSILON } else { 0.0 } {
            BoundVerdict::Holds
        } else {
            BoundVerdict::Violated
        };
        BoundReport {
            bound,
            instance: replay.describe(),
            lhs,
            rhs,
            rhs_upper,
            slack,
            strict,
            verdict,
            preconditions_met,
            replay,
        }
    }

    /// Replaces the default instance description.
    pub fn described(mut self, description: impl Into<String>) -> Self {
        self.instance = description.into();
        self
    }

    /// A violation of a claim whose hypotheses are satisfied.
    pub fn is_counterexample(&self) -> bool {
        self.verdict == BoundVerdict::Violated && self.preconditions_met
    }
}

fn so(g: &Graph, id: IndexId) -> Result<f64, BoundError> {
    Ok(compute(g, id)?.value)
}

fn require_edge(g: &Graph, (u, v): (Vertex, Vertex)) -> Result<(), BoundError> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(GraphError::NotAnEdge(u, v).into())
    }
}

/// `SO1(G) > SO1(G-e) + (δ²-Δ²)/2`. Regular graphs are rejected.
pub fn check_edge_deletion_so1(g: &Graph, e: (Vertex, Vertex)) -> Result<BoundReport, BoundError> {
    require_edge(g, e)?;
    let ext = g.degree_extremes()?;
    if ext.min == ext.max {
        return Err(BoundError::Precondition(format!("graph is {}-regular", ext.min)));
    }
    let (d, dd) = (ext.min as f64, ext.max as f64);
    let lhs = so(g, IndexId::So1)?;
    let rest = compute_allow_isolated(&delete_edge(g, e.0, e.1)?, IndexId::So1);
    let rhs = rest + 0.5 * (d * d - dd * dd);
    let replay = Instance::Edge {
        graph: g.clone(),
        edge: e,
    };
    Ok(BoundReport::new(BoundId::EdgeDelSo1, replay, lhs, rhs, None, true))
}

/// `G` and every partial link of at least two monomers must be non-regular.
fn link_preconditions(spec: &LinkSpec) -> Result<bool, BoundError> {
    for k in 2..=spec.len() {
        if link(&spec.prefix(k)?).is_regular() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn monomer_so1_sum(spec: &LinkSpec) -> Result<f64, BoundError> {
    spec.monomers().iter().map(|g| so(g, IndexId::So1)).sum()
}

/// `SO1(G) > Σ SO1(G_i) + ½ Σ_{i<k} δ_i² - ½ Σ_{i>1} Δ_i²`, with δ_i and Δ_i
/// taken inside monomer i. A failed hypothesis is recorded, not raised.
pub fn check_link_so1(spec: &LinkSpec) -> Result<BoundReport, BoundError> {
    let g = link(spec);
    let lhs = so(&g, IndexId::So1)?;
    let k = spec.len();
    let mut rhs = monomer_so1_sum(spec)?;
    for (i, m) in spec.monomers().iter().enumerate() {
        let ext = m.degree_extremes()?;
        if i < k - 1 {
            rhs += 0.5 * (ext.min * ext.min) as f64;
        }
        if i > 0 {
            rhs -= 0.5 * (ext.max * ext.max) as f64;
        }
    }
    let met = link_preconditions(spec)?;
    Ok(BoundReport::new(
        BoundId::LinkSo1,
        Instance::Link { spec: spec.clone() },
        lhs,
        rhs,
        None,
        met,
    ))
}

/// `SO1(G) > (k-1)(δ²-Δ²)/2 + Σ SO1(G_i)` with δ, Δ of the whole link.
pub fn check_link_so1_uniform(spec: &LinkSpec) -> Result<BoundReport, BoundError> {
    let g = link(spec);
    let lhs = so(&g, IndexId::So1)?;
    let ext = g.degree_extremes()?;
    let (d, dd) = (ext.min as f64, ext.max as f64);
    let rhs = (spec.len() - 1) as f64 / 2.0 * (d * d - dd * dd) + monomer_so1_sum(spec)?;
    let met = link_preconditions(spec)?;
    Ok(BoundReport::new(
        BoundId::LinkSo1Uniform,
        Instance::Link { spec: spec.clone() },
        lhs,
        rhs,
        None,
        met,
    ))
}

/// Two-sided bounds of SO2..SO5 in terms of SO1, and the SO6 upper bound.
pub fn check_sandwich(g: &Graph, id: BoundId) -> Result<BoundReport, BoundError> {
    let ext = g.degree_extremes()?;
    let (d, dd) = (ext.min as f64, ext.max as f64);
    let m = g.edge_count() as f64;
    let so1 = so(g, IndexId::So1)?;
    let (index, lower, upper) = match id {
        BoundId::SandwichSo2 => (IndexId::So2, so1 / (dd * dd), Some(so1 / (d * d))),
        BoundId::SandwichSo3 => (
            IndexId::So3,
            SQRT_2 * PI * (so1 + m * d * d) / dd,
            Some(SQRT_2 * PI * (so1 + m * dd * dd) / d),
        ),
        BoundId::SandwichSo4 => (
            IndexId::So4,
            PI * d * d / (2.0 * dd * dd) * (m * d * d + so1),
            Some(PI * dd * dd / (2.0 * d * d) * (m * dd * dd + so1)),
        ),
        BoundId::SandwichSo5 => (
            IndexId::So5,
            2.0 * SQRT_2 * PI * so1 / (2.0 * dd + 1.0),
            Some(2.0 * SQRT_2 * PI * so1 / (2.0 * d + 1.0)),
        ),
        BoundId::UpperSo6 => {
            let den = SQRT_2 + 2.0 * d * SQRT_2;
            (IndexId::So6, 2.0 * PI * (dd * dd - d * d) * so1 / (den * den), None)
        }
        other => return Err(BoundError::WrongBound(other.name())),
    };
    let lhs = so(g, index)?;
    Ok(BoundReport::new(
        id,
        Instance::Graph { graph: g.clone() },
        lhs,
        lower,
        upper,
        true,
    ))
}

/// Deletion bounds for SO2..SO5. δ, Δ and m come from `g`; the deleted
/// graph is evaluated on its own degrees. The non-regularity hypothesis of
/// `del-so2` and `del-so5` is recorded, not raised.
pub fn check_deletion(g: &Graph, e: (Vertex, Vertex), id: BoundId) -> Result<BoundReport, BoundError> {
    require_edge(g, e)?;
    let ext = g.degree_extremes()?;
    let (d, dd) = (ext.min as f64, ext.max as f64);
    let m = g.edge_count() as f64;
    let g_e = delete_edge(g, e.0, e.1)?;
    let (index, met) = match id {
        BoundId::DelSo2 => (IndexId::So2, !g.is_regular()),
        BoundId::DelSo3 => (IndexId::So3, true),
        BoundId::DelSo4 => (IndexId::So4, true),
        BoundId::DelSo5 => (IndexId::So5, !g.is_regular()),
        other => return Err(BoundError::WrongBound(other.name())),
    };
    let rest = compute_allow_isolated(&g_e, index);
    let rhs = match id {
        BoundId::DelSo2 => d * d / (dd * dd) * (rest + 0.5 - dd * dd / (2.0 * d * d)),
        BoundId::DelSo3 => d / dd * rest + (2.0 * m + 1.0) * PI / (SQRT_2 * dd) * (d * d - dd * dd),
        BoundId::DelSo4 => rest + (2.0 * m + 1.0) * PI * d * d * (d * d - dd * dd) / (2.0 * dd * dd),
        _ => rest + SQRT_2 * PI / (2.0 * dd + 1.0) * (d * d - dd * dd),
    };
    let lhs = so(g, index)?;
    let replay = Instance::Edge {
        graph: g.clone(),
        edge: e,
    };
    Ok(BoundReport::new(id, replay, lhs, rhs, None, met))
}

/// Runs `bound` on `instance`, which must be of the matching kind.
pub fn check(bound: BoundId, instance: &Instance) -> Result<BoundReport, BoundError> {
    match (bound, instance) {
        (BoundId::EdgeDelSo1, Instance::Edge { graph, edge }) => check_edge_deletion_so1(graph, *edge),
        (BoundId::LinkSo1, Instance::Link { spec }) => check_link_so1(spec),
        (BoundId::LinkSo1Uniform, Instance::Link { spec }) => check_link_so1_uniform(spec),
        (b, Instance::Graph { graph }) if b.is_sandwich() => check_sandwich(graph, b),
        (b, Instance::Edge { graph, edge }) if b.is_deletion() => check_deletion(graph, *edge, b),
        (b, _) => Err(BoundError::WrongBound(b.name())),
    }
}

/// Re-evaluates the instance embedded in `report`.
pub fn replay(report: &BoundReport) -> Result<BoundReport, BoundError> {
    Ok(check(report.bound, &report.replay)?.described(report.instance.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub min_vertices: usize,
    pub max_vertices: usize,
}

impl FuzzConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        FuzzConfig {
            seed,
            count,
            min_vertices: 4,
            max_vertices: 40,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSummary {
    pub bound: BoundId,
    pub evaluated: usize,
    pub holds: usize,
    pub tight: usize,
    pub violated: usize,
    /// Instances where the bound applied but its hypotheses failed.
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzOutcome {
    /// Tight and violated reports, in instance order.
    pub reports: Vec<BoundReport>,
    /// One entry per bound, in [`BoundId::ALL`] order.
    pub summary: Vec<BoundSummary>,
}

impl FuzzOutcome {
    pub fn summary_for(&self, bound: BoundId) -> &BoundSummary {
        &self.summary[BoundId::ALL.iter().position(|&b| b == bound).expect("listed bound")]
    }
}

enum Evaluation {
    Report(BoundReport),
    Skipped(BoundId),
}

fn random_connected_gnp(rng: &mut ChaCha8Rng, n: usize) -> (Graph, f64) {
    let p: f64 = rng.gen_range(0.05..=0.95);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("sampled edges are simple");
        if g.is_connected() {
            return (g, p);
        }
    }
}

fn random_chain_cactus(rng: &mut ChaCha8Rng, max_vertices: usize) -> (Graph, String) {
    let mut polygons = vec![rng.gen_range(3..=8usize.min(max_vertices))];
    let mut total = polygons[0];
    loop {
        let s = rng.gen_range(3..=8);
        if total + s - 1 > max_vertices || (polygons.len() >= 2 && rng.gen_bool(0.2)) {
            break;
        }
        total += s - 1;
        polygons.push(s);
    }
    let monomers: Vec<Graph> = polygons.iter().map(|&s| cycle(s)).collect();
    let ids: Vec<Identification> = (0..polygons.len() - 1)
        .map(|i| Identification::new(i, rng.gen_range(1..polygons[i]), i + 1, 0))
        .collect();
    let g = point_attach(&monomers, &ids).expect("chain identifications form a path");
    let sizes: Vec<String> = polygons.iter().map(|s| s.to_string()).collect();
    (g, format!("cactus polygons={}", sizes.join("/")))
}

fn random_monomer(rng: &mut ChaCha8Rng, budget: usize) -> Graph {
    let cap = budget.clamp(2, 8);
    match rng.gen_range(0..5) {
        0 if cap >= 3 => cycle(rng.gen_range(3..=cap)),
        1 => complete(rng.gen_range(2..=cap.min(6))),
        2 => star(rng.gen_range(1..cap)),
        3 if cap >= 3 => {
            let n = rng.gen_range(3..=cap);
            random_connected_gnp(rng, n).0
        }
        _ => path(rng.gen_range(2..=cap)),
    }
}

fn random_link(rng: &mut ChaCha8Rng, max_vertices: usize) -> LinkSpec {
    let k = rng.gen_range(2..=5usize.min(max_vertices / 2));
    let mut monomers = Vec::with_capacity(k);
    let mut remaining = max_vertices;
    for i in 0..k {
        let reserve = 2 * (k - i - 1);
        let g = random_monomer(rng, remaining - reserve);
        remaining -= g.vertex_count();
        monomers.push(g);
    }
    let anchors = monomers
        .iter()
        .map(|g| (rng.gen_range(0..g.vertex_count()), rng.gen_range(0..g.vertex_count())))
        .collect();
    LinkSpec::new(monomers, anchors).expect("monomers have at least two vertices")
}

fn evaluate(bound: BoundId, instance: Instance, description: &str) -> Result<Evaluation, BoundError> {
    match check(bound, &instance) {
        Ok(r) if r.preconditions_met => Ok(Evaluation::Report(r.described(description))),
        Ok(_) | Err(BoundError::Precondition(_)) => Ok(Evaluation::Skipped(bound)),
        Err(e) => Err(e),
    }
}

fn fuzz_instance(config: &FuzzConfig, i: usize) -> Result<Vec<Evaluation>, BoundError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(i as u64);
    let mut link_spec = None;
    let (g, label) = match i % 5 {
        3 => random_chain_cactus(&mut rng, config.max_vertices),
        4 => {
            let spec = random_link(&mut rng, config.max_vertices);
            let g = link(&spec);
            let label = format!("link k={}", spec.len());
            link_spec = Some(spec);
            (g, label)
        }
        _ => {
            let n = rng.gen_range(config.min_vertices..=config.max_vertices);
            let (g, p) = random_connected_gnp(&mut rng, n);
            (g, format!("gnp n={n} p={p:.4}"))
        }
    };
    let edge = *g.edges().choose(&mut rng).expect("connected graphs have edges");
    let base = format!(
        "seed={} i={i} {label} vertices={} edges={}",
        config.seed,
        g.vertex_count(),
        g.edge_count()
    );
    let with_edge = format!("{base} e={}-{}", edge.0, edge.1);
    let mut out = Vec::new();
    for bound in BoundId::ALL {
        let evaluation = if bound.is_sandwich() {
            evaluate(bound, Instance::Graph { graph: g.clone() }, &base)?
        } else if bound.is_deletion() {
            evaluate(bound, Instance::Edge { graph: g.clone(), edge }, &with_edge)?
        } else if let Some(spec) = &link_spec {
            evaluate(bound, Instance::Link { spec: spec.clone() }, &base)?
        } else {
            continue;
        };
        out.push(evaluation);
    }
    Ok(out)
}

/// Evaluates every applicable bound on `config.count` random instances.
/// Instance `i` draws from its own ChaCha8 stream, so the result does not
/// depend on scheduling.
pub fn fuzz_bounds(config: &FuzzConfig) -> Result<FuzzOutcome, BoundError> {
    if config.count == 0 {
        return Err(BoundError::ZeroCount);
    }
    if config.min_vertices < 3 || config.min_vertices > config.max_vertices {
        return Err(BoundError::BadSizeRange(config.min_vertices, config.max_vertices));
    }
    let evaluations: Vec<Vec<Evaluation>> = (0..config.count)
        .into_par_iter()
        .map(|i| fuzz_instance(config, i))
        .collect::<Result<_, _>>()?;
    let mut summary: Vec<BoundSummary> = BoundId::ALL
        .iter()
        .map(|&b| BoundSummary {
            bound: b,
            evaluated: 0,
            holds: 0,
            tight: 0,
            violated: 0,
            skipped: 0,
        })
        .collect();
    let slot = |b: BoundId| BoundId::ALL.iter().position(|&x| x == b).expect("listed bound");
    let mut reports = Vec::new();
    for evaluation in evaluations.into_iter().flatten() {
        match evaluation {
            Evaluation::Skipped(b) => summary[slot(b)].skipped += 1,
            Evaluation::Report(r) => {
                let s = &mut summary[slot(r.bound)];
                s.evaluated += 1;
                match r.verdict {
                    BoundVerdict::Holds => s.holds += 1,
                    BoundVerdict::Tight => s.tight += 1,
                    BoundVerdict::Violated => s.violated += 1,
                }
                if r.verdict != BoundVerdict::Holds {
                    reports.push(r);
                }
            }
        }
    }
    Ok(FuzzOutcome { reports, summary })
}
