use thiserror::Error;

/// Errors raised by graph construction and the graph operations built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("a link needs at least 2 monomers, got {0}")]
    TooFewMonomers(usize),
    #[error("monomer {0} has a single vertex")]
    DegenerateMonomer(usize),
    #[error("anchor {anchor} of monomer {monomer} is out of range")]
    InvalidAnchor { monomer: usize, anchor: usize },
    #[error("expected {expected} anchor pairs, got {got}")]
    AnchorCountMismatch { expected: usize, got: usize },
    #[error("identification {0} refers to a missing monomer or vertex")]
    InvalidIdentification(usize),
    #[error("identification {0} closes a cycle over the monomers")]
    IdentificationCycle(usize),
    #[error("identifications do not connect all {0} monomers")]
    IdentificationsDisconnected(usize),
}

/// Parameter validation failures for the named graph families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: requires {constraint}")]
    OutOfRange {
        family: &'static str,
        constraint: &'static str,
    },
    #[error("{family}: missing parameter {param}")]
    MissingParam { family: &'static str, param: &'static str },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("degree-pair profile is empty")]
    EmptyProfile,
    #[error("weight function is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("weight function returned a non-finite value at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("unknown index {0:?}")]
    UnknownIndex(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("parameters {params} outside the stated range of {cell} ({validity})")]
    OutOfValidity {
        cell: String,
        params: String,
        validity: &'static str,
    },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("bound {0} does not apply to this check")]
    WrongBound(&'static str),
    #[error("fuzz count must be at least 1")]
    ZeroCount,
    #[error("invalid size range {0}..={1}")]
    BadSizeRange(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
