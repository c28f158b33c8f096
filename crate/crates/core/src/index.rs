//! Vertex-degree-based edge-sum invariants `Σ_{uv ∈ E} F(d_u, d_v)`.
//!
//! The seven built-in weights:
//!
//! | id | F(a, b) |
//! |---|---|
//! | SO  | √(a² + b²) |
//! | SO1 | ½·\|a² − b²\| |
//! | SO2 | \|a² − b²\| / (a² + b²) |
//! | SO3 | √2·π·(a² + b²)/(a + b) |
//! | SO4 | (π/2)·((a² + b²)/(a + b))² |
//! | SO5 | 2π·\|a² − b²\| / (√2 + 2√(a² + b²)) |
//! | SO6 | π·((a² − b²) / (√2 + 2√(a² + b²)))² |
//!
//! Global constants such as the ½ of SO1 live inside the per-edge weight so
//! the edge-by-edge and profile routes evaluate one formula table.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, IndexError};
use crate::graph::{DegreePairProfile, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IndexId {
    #[serde(rename = "so")]
    So,
    #[serde(rename = "so1")]
    So1,
    #[serde(rename = "so2")]
    So2,
    #[serde(rename = "so3")]
    So3,
    #[serde(rename = "so4")]
    So4,
    #[serde(rename = "so5")]
    So5,
    #[serde(rename = "so6")]
    So6,
}

impl IndexId {
    pub const ALL: [IndexId; 7] = [
        IndexId::So,
        IndexId::So1,
        IndexId::So2,
        IndexId::So3,
        IndexId::So4,
        IndexId::So5,
        IndexId::So6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexId::So => "so",
            IndexId::So1 => "so1",
            IndexId::So2 => "so2",
            IndexId::So3 => "so3",
            IndexId::So4 => "so4",
            IndexId::So5 => "so5",
            IndexId::So6 => "so6",
        }
    }

    /// Per-edge weight for endpoint degrees `a`, `b`.
    pub fn weight(self, a: usize, b: usize) -> f64 {
        let (a, b) = (a as f64, b as f64);
        let sq_sum = a * a + b * b;
        let sq_diff = (a * a - b * b).abs();
        match self {
            IndexId::So => sq_sum.sqrt(),
            IndexId::So1 => 0.5 * sq_diff,
            IndexId::So2 => sq_diff / sq_sum,
            IndexId::So3 => SQRT_2 * PI * sq_sum / (a + b),
            IndexId::So4 => {
                let r = sq_sum / (a + b);
                0.5 * PI * r * r
            }
            IndexId::So5 => 2.0 * PI * sq_diff / (SQRT_2 + 2.0 * sq_sum.sqrt()),
            IndexId::So6 => {
                let r = sq_diff / (SQRT_2 + 2.0 * sq_sum.sqrt());
                PI * r * r
            }
        }
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexId {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        IndexId::ALL
            .into_iter()
            .find(|id| id.name() == lower)
            .ok_or_else(|| IndexError::UnknownIndex(s.to_string()))
    }
}

/// A symmetric edge weight `F(a, b) = F(b, a)`.
pub trait EdgeWeightFunction {
    fn weight(&self, a: usize, b: usize) -> f64;

    fn label(&self) -> IndexLabel;

    /// When false the engine checks `F(a, b) = F(b, a)` on every degree pair
    /// it evaluates and fails on a mismatch.
    fn symmetry_asserted(&self) -> bool;
}

impl EdgeWeightFunction for IndexId {
    fn weight(&self, a: usize, b: usize) -> f64 {
        IndexId::weight(*self, a, b)
    }

    fn label(&self) -> IndexLabel {
        IndexLabel::Builtin(*self)
    }

    fn symmetry_asserted(&self) -> bool {
        true
    }
}

/// User-supplied weight, e.g. a Zagreb or Albertson style sum.
pub struct CustomWeight<F> {
    name: String,
    f: F,
    symmetric: bool,
}

impl<F: Fn(usize, usize) -> f64> CustomWeight<F> {
    /// Symmetry is spot-checked at evaluation time.
    pub fn new(name: impl Into<String>, f: F) -> Self {
        CustomWeight {
            name: name.into(),
            f,
            symmetric: false,
        }
    }

    /// The caller vouches for symmetry; no spot check is made.
    pub fn assert_symmetric(mut self) -> Self {
        self.symmetric = true;
        self
    }
}

impl<F: Fn(usize, usize) -> f64> EdgeWeightFunction for CustomWeight<F> {
    fn weight(&self, a: usize, b: usize) -> f64 {
        (self.f)(a, b)
    }

    fn label(&self) -> IndexLabel {
        IndexLabel::Custom {
            name: self.name.clone(),
            symmetry: if self.symmetric {
                Symmetry::Asserted
            } else {
                Symmetry::SpotChecked
            },
        }
    }

    fn symmetry_asserted(&self) -> bool {
        self.symmetric
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    Asserted,
    /// Not asserted by the caller; verified only on the pairs evaluated.
    SpotChecked,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexLabel {
    Builtin(IndexId),
    Custom { name: String, symmetry: Symmetry },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexValue {
    pub index: IndexLabel,
    pub value: f64,
}

/// Neumaier compensated summation.
#[derive(Debug, Default, Clone, Copy)]
struct Accumulator {
    sum: f64,
    carry: f64,
}

impl Accumulator {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(self) -> f64 {
        self.sum + self.carry
    }
}

fn checked_weight<W: EdgeWeightFunction + ?Sized>(f: &W, a: usize, b: usize) -> Result<f64, IndexError> {
    let w = f.weight(a, b);
    if !w.is_finite() {
        return Err(IndexError::NonFinite(a, b));
    }
    if !f.symmetry_asserted() {
        let back = f.weight(b, a);
        if (w - back).abs() > 1e-12 * w.abs().max(back.abs()).max(1.0) {
            return Err(IndexError::Asymmetric(a, b));
        }
    }
    Ok(w)
}

fn sum_over_edges<W: EdgeWeightFunction + ?Sized>(g: &Graph, f: &W) -> Result<IndexValue, IndexError> {
    let mut acc = Accumulator::default();
    for &(u, v) in g.edges() {
        acc.add(checked_weight(f, g.degree(u), g.degree(v))?);
    }
    Ok(IndexValue {
        index: f.label(),
        value: acc.total(),
    })
}

/// Edge-by-edge sum of `f` over `g`. Fails if `g` has an isolated vertex.
pub fn edge_sum_index<W: EdgeWeightFunction + ?Sized>(g: &Graph, f: &W) -> Result<IndexValue, IndexError> {
    if let Some(v) = g.first_isolated() {
        return Err(GraphError::IsolatedVertex(v).into());
    }
    sum_over_edges(g, f)
}

pub fn compute(g: &Graph, id: IndexId) -> Result<IndexValue, IndexError> {
    edge_sum_index(g, &id)
}

/// Like [`compute`] but isolated vertices are allowed; they carry no edges and
/// contribute nothing. Used where a graph arises from deleting an edge, and an
/// edgeless graph evaluates to 0.
pub fn compute_allow_isolated(g: &Graph, id: IndexId) -> f64 {
    sum_over_edges(g, &id)
        .expect("built-in weights are finite and symmetric on positive degrees")
        .value
}

/// `Σ count · F(a, b)` over the degree classes of `profile`.
pub fn weighted_profile_sum<W: EdgeWeightFunction + ?Sized>(
    profile: &DegreePairProfile,
    f: &W,
) -> Result<IndexValue, IndexError> {
    if profile.is_empty() {
        return Err(IndexError::EmptyProfile);
    }
    let mut acc = Accumulator::default();
    for ((a, b), count) in profile.iter() {
        acc.add(count as f64 * checked_weight(f, a, b)?);
    }
    Ok(IndexValue {
        index: f.label(),
        value: acc.total(),
    })
}

pub fn index_from_profile(profile: &DegreePairProfile, id: IndexId) -> Result<IndexValue, IndexError> {
    weighted_profile_sum(profile, &id)
}

/// All seven built-ins from a single profile pass.
pub fn all_indices(g: &Graph) -> Result<BTreeMap<IndexId, IndexValue>, IndexError> {
    if let Some(v) = g.first_isolated() {
        return Err(GraphError::IsolatedVertex(v).into());
    }
    let profile = g.degree_pair_profile()?;
    let mut sums = [Accumulator::default(); 7];
    for ((a, b), count) in profile.iter() {
        for (acc, id) in sums.iter_mut().zip(IndexId::ALL) {
            acc.add(count as f64 * id.weight(a, b));
        }
    }
    Ok(IndexId::ALL
        .into_iter()
        .zip(sums)
        .map(|(id, acc)| {
            (
                id,
                IndexValue {
                    index: IndexLabel::Builtin(id),
                    value: acc.total(),
                },
            )
        })
        .collect())
}
