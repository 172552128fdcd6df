use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    Malformed(String),
    #[error("edge {edge}: vertex {vertex} not declared")]
    DanglingVertex { edge: usize, vertex: usize },
    #[error("vertices must be 0..n-1 in order; found {found} at position {position}")]
    BadVertexList { position: usize, found: usize },
    #[error("duplicate vertex identifier {0}")]
    DuplicateVertex(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("map domain mismatch: expected {expected_vertices} vertices / {expected_darts} darts, got {vertices} / {darts}")]
    DomainMismatch {
        expected_vertices: usize,
        expected_darts: usize,
        vertices: usize,
        darts: usize,
    },
    #[error("map is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("map inverts edges {0:?}; subdivide first")]
    InvertsEdges(Vec<usize>),
    #[error("subdivision correspondence does not match the graph")]
    CorrespondenceMismatch,
    #[error("group size exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("cotree order is not a permutation of the cotree edges")]
    BadCotreeOrder,
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("set of maps is not closed under composition")]
    NotClosed,
    #[error("group of order {0} exceeds the isomorphism-test guard")]
    GroupTooLarge(usize),
    #[error("group is not a finite subgroup of SO(3)")]
    NotSO3,
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}
