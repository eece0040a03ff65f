use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("operation is undefined on the empty graph")]
    EmptyGraph,
    #[error("graph is disconnected: vertices {0} and {1} are mutually unreachable")]
    Disconnected(usize, usize),
    #[error("{what} requires n >= {min}, got n = {n}")]
    TooFewVertices { what: &'static str, n: usize, min: usize },
    #[error("{what}: parameters (n = {n}, k = {k}) outside the premise: {reason}")]
    OutOfPremise {
        what: &'static str,
        n: usize,
        k: usize,
        reason: &'static str,
    },
    #[error("p = {p} is not one of (n-2)/2, (n-1)/2, n/2, (n+1)/2, (n+2)/2 for n = {n}")]
    InadmissibleP { n: usize, p: f64 },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("canonical labeling supports n <= {max}, got n = {n}")]
    CanonicalTooLarge { n: usize, max: usize },
    #[error("internal enumeration supports n <= {max}, got n = {n}; generate larger corpora externally (e.g. nauty geng) and ingest them as graph6")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("invalid corpus filter: {0}")]
    InvalidFilter(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("no graph with n = {n} and min degree >= {delta} found after {attempts} attempts")]
    RejectionCapExceeded {
        n: usize,
        delta: usize,
        attempts: usize,
    },
}

/// Errors from decoding graph6 / sparse6 lines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty line")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("long-form size prefix (n > 62) is not supported")]
    LongForm,
    #[error("expected {expected} bytes for n = {n}, got {got}")]
    BadLength { n: usize, expected: usize, got: usize },
    #[error("nonzero padding bits in final byte")]
    NonzeroPadding,
    #[error("sparse6 edge references vertex {vertex} but n = {n}")]
    Sparse6Vertex { vertex: usize, n: usize },
    #[error("sparse6 self-loop at vertex {0}")]
    Sparse6Loop(usize),
    #[error("digraph6 (leading '&') is not supported")]
    Directed,
}
