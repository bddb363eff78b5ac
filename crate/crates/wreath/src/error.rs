use thiserror::Error;

/// Errors produced by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("cover relations create a cycle")]
    CycleDetected,
    #[error("subset {{{0}}} is not ancestral")]
    NotAncestral(String),
    #[error("bad point: {0}")]
    BadPoint(String),
    #[error("loop edge on `{0}`")]
    LoopEdge(String),
    #[error("{what}: size {requested} exceeds cap {cap}")]
    SizeCap {
        what: String,
        requested: String,
        cap: u64,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("point set for index `{0}` must contain at least 2 points")]
    PointSetTooSmall(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("`{0}` is not an identity element")]
    NoIdentity(String),
    #[error("element `{0}` has no two-sided inverse")]
    NoInverse(String),
    #[error("generating set is not symmetric: inverse of `{0}` is missing")]
    NotSymmetric(String),
    #[error("generating set contains the identity element")]
    ContainsIdentity,
    #[error("set generates only {reached} of {order} elements")]
    DoesNotGenerate { reached: usize, order: usize },
    #[error("vertex is not a member of this product: {0}")]
    VertexNotInProduct(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn size_cap(what: &str, requested: impl ToString, cap: u64) -> Error {
        Error::SizeCap {
            what: what.to_string(),
            requested: requested.to_string(),
            cap,
        }
    }
}
