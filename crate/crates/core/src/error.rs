use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex `{0}` has zero membership")]
    ZeroSigmaVertex(String),
    #[error("vertex `{0}` listed more than once")]
    DuplicateVertex(String),
    #[error("edge {{{0}, {1}}} listed more than once")]
    DuplicateEdge(String, String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownEndpoint(String),
    #[error("edge {{{u}, {v}}} has membership {mu} above the endpoint bound {bound}")]
    MembershipBound {
        u: String,
        v: String,
        mu: String,
        bound: String,
    },
    #[error("membership value {0} is outside [0,1]")]
    ValueRange(String),
    #[error("vertex id `{0}` misuses the reserved `~` separator")]
    ReservedCharacter(String),
    #[error("vertex id must be non-empty")]
    EmptyId,

    #[error("vertex selection is empty")]
    EmptySelection,
    #[error("vertex `{0}` is not in the graph")]
    UnknownVertex(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("vertex `{0}` occurs in both operands")]
    VertexCollision(String),

    #[error("graph has {actual} vertices, limit for {what} is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("bad sampling profile: {0}")]
    BadProfile(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("profile `{profile}` does not satisfy the hypothesis of `{property}`")]
    ProfileMismatch { property: String, profile: String },

    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn context(self, context: impl Into<String>) -> Error {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    /// The innermost error, with any context wrappers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
