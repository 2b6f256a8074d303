use thiserror::Error;

/// Errors raised by hypergraph construction, ingestion, measures,
/// tail fitting, generation, and fitting.
#[derive(Debug, Error)]
pub enum Error {
    /// A hyperedge references a node id outside `0..num_nodes`.
    #[error("node id {id} out of range (num_nodes = {num_nodes})")]
    NodeOutOfRange { id: u64, num_nodes: usize },

    /// A hyperedge with zero nodes was encountered.
    #[error("empty hyperedge at index {index}")]
    EmptyEdge { index: usize },

    /// A partition level count outside `1..=floor(log2(num_nodes))`.
    #[error("invalid level count {levels} for {num_nodes} nodes (valid: 1..={max})")]
    InvalidLevelCount {
        levels: u32,
        num_nodes: usize,
        max: u32,
    },

    /// Malformed input at a specific line of a data file.
    #[error("parse error at {path}:{line}: {message}")]
    ParseError {
        path: String,
        line: usize,
        message: String,
    },

    /// No hyperedges survived loading and preprocessing.
    #[error("dataset {path} contains no hyperedges after preprocessing")]
    EmptyDataset { path: String },

    /// Underlying I/O failure.
    #[error("i/o error on {path}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// An empty collection where at least one element is required.
    #[error("empty input: {what}")]
    EmptyInput { what: &'static str },

    /// A non-finite value where a finite one is required.
    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    /// Pair enumeration would exceed the configured capacity.
    #[error("pair enumeration needs {required} entries, capacity is {capacity}")]
    CapacityExceeded { required: u64, capacity: u64 },

    /// Homogeneity lookup for a pair missing from the pair-degree table.
    #[error("pair ({u}, {v}) missing from pair-degree table")]
    MissingPair { u: u32, v: u32 },

    /// Significance denominator is zero (all values equal across both graphs).
    #[error("significance denominator is zero: all {measure} values equal across both graphs")]
    DegenerateDenominator { measure: &'static str },

    /// Fewer tail points than the minimum the fit requires.
    #[error("tail has {actual} points above xmin = {xmin}; at least {required} required")]
    InsufficientTail {
        actual: usize,
        required: usize,
        xmin: f64,
    },

    /// Tail data carries no information to fit (e.g. all values equal).
    #[error("degenerate tail data: {message}")]
    DegenerateData { message: String },

    /// A requested hyperedge size cannot be met by any sampling population.
    #[error("hyperedge size {size} infeasible: {message}")]
    InfeasibleSize { size: usize, message: String },

    /// Distinct-node sampling failed to converge within the retry budget.
    #[error("sampling {size} distinct nodes did not converge within {attempts} draws")]
    NonConvergence { size: usize, attempts: u64 },

    /// A weight vector (level weights or degree weights) that is
    /// negative, non-finite, all-zero, or zero everywhere it matters.
    #[error("invalid weights: {message}")]
    InvalidWeights { message: String },

    /// Structurally incompatible arguments (e.g. a partition built for
    /// a different node count than the configuration).
    #[error("configuration mismatch: {message}")]
    ConfigMismatch { message: String },

    /// An update step with no replaceable hyperedges.
    #[error("no hyperedges eligible for replacement at level {level}")]
    NoEligibleEdges { level: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
