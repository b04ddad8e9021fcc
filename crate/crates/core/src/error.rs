use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("arcs in both directions between {u},{v}")]
    Digon { u: usize, v: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what} exceeds the size limit ({actual} > {limit})")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("inadmissible gauge: edge {u}-{v} violates condition ({condition}): {message}")]
    InadmissibleGauge {
        u: usize,
        v: usize,
        condition: u8,
        message: String,
    },

    #[error("invalid gauge: {0}")]
    Gauge(String),

    #[error("invalid walk: {0}")]
    Walk(String),

    #[error("graph has directed edges; an undirected multigraph is required")]
    NotUndirected,

    #[error("graphs have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("{0}")]
    Domain(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
