use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate node label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown node label `{0}`")]
    UnknownLabel(String),
    #[error("self-loop on node `{0}`")]
    SelfLoop(String),
    #[error("duplicate arc `{from}` -> `{to}`")]
    DuplicateArc { from: String, to: String },
    #[error("weight out of range (0, 1] on arc `{from}` -> `{to}`: {weight}")]
    WeightOutOfRange {
        from: String,
        to: String,
        weight: String,
    },
    #[error("invalid rational `{0}`: expected a decimal such as `0.25` or a fraction such as `1/4`")]
    InvalidRational(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("budget must be a non-negative integer or \"infinite\", got {0}")]
    NegativeBudget(String),
    #[error("cost bound must be non-negative, got {0}")]
    NegativeCostBound(String),
    #[error("negative capacity {capacity} on flow arc {from} -> {to}")]
    NegativeCapacity {
        from: usize,
        to: usize,
        capacity: String,
    },
    #[error("flow network has a source-sink path of unbounded capacity")]
    UnboundedFlow,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit(_))
    }
}
