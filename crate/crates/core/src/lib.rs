//! Sombor index and the Sombor-like degree-based invariants SO1–SO6.
//!
//! * [`graph`] and [`ops`]: simple graphs and the constructions used to
//!   build families and polymers (product, join, link, point-attach).
//! * [`families`]: canonical generators for the named families.
//! * [`index`]: the edge-sum engine.
//! * [`closed_forms`]: published closed-form values and their verification.
//! * [`bounds`]: inequality checks and seeded fuzzing.
//! * [`edgelist`] and [`report`]: file formats.

pub mod bounds;
pub mod closed_forms;
pub mod edgelist;
pub mod error;
pub mod families;
pub mod graph;
pub mod index;
pub mod ops;
pub mod report;

pub use error::{FamilyError, GraphError, IndexError};
pub use families::{generate, Family, FamilySpec};
pub use graph::{DegreeExtremes, DegreePairProfile, Graph, Vertex};
pub use index::{all_indices, compute, edge_sum_index, index_from_profile, IndexId, IndexValue};
