use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input at line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {0} lies on no edge; graphs without isolated vertices are required")]
    IsolatedVertex(usize),

    #[error("value sequence has length {got}, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("values do not form a {0}-cover")]
    NotACover(u32),

    #[error("search budget exceeded in {operation}: {reason}")]
    SearchBudgetExceeded { operation: &'static str, reason: String },

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("poset is not a lattice")]
    NotALattice,

    #[error("lattice is not distributive")]
    NotDistributive,

    #[error("simplicial complex is not pure")]
    NotPure,

    #[error("{{{0},{1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("cover is not constant on block {0}")]
    NotConstantOnBlock(usize),

    #[error("graph must satisfy the weak square condition and be its own projection")]
    NotWscFixedPoint,

    #[error("graph does not satisfy the weak square condition")]
    NotWsc,

    #[error("order violation: {0}")]
    OrderViolation(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("sequence is not a weakly increasing chain of poset elements")]
    NotAMultichain,

    #[error("sum of a multichain is not a basic cover")]
    SumNotBasic,

    #[error("vertex {0} has no neighbor among the assigned vertices")]
    NotDominating(usize),

    #[error("assigned value {value} at vertex {vertex} exceeds half the level {level}")]
    PartialOutOfRange { vertex: usize, value: u32, level: u32 },

    #[error("completion is not a basic cover")]
    CompletionNotBasic,

    #[error("equivalence violated: {0}")]
    EquivalenceViolation(String),

    #[error("fixture {name} does not match its documented properties: {detail}")]
    FixtureMismatch { name: String, detail: String },
}

impl Error {
    pub(crate) fn budget(operation: &'static str, reason: impl Into<String>) -> Self {
        Error::SearchBudgetExceeded {
            operation,
            reason: reason.into(),
        }
    }

    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        Error::MalformedInput {
            line,
            message: message.into(),
        }
    }

    /// Short machine-readable tag for error documents.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedInput { .. } => "MalformedInput",
            Error::LoopEdge(_) => "LoopEdge",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotACover(_) => "NotACover",
            Error::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
            Error::NotConnected => "NotConnected",
            Error::NotBipartite => "NotBipartite",
            Error::NotALattice => "NotALattice",
            Error::NotDistributive => "NotDistributive",
            Error::NotPure => "NotPure",
            Error::NotAnEdge(..) => "NotAnEdge",
            Error::StructureViolation(_) => "StructureViolation",
            Error::NotConstantOnBlock(_) => "NotConstantOnBlock",
            Error::NotWscFixedPoint => "NotWscFixedPoint",
            Error::NotWsc => "NotWsc",
            Error::OrderViolation(_) => "OrderViolation",
            Error::NotATree => "NotATree",
            Error::NotAMultichain => "NotAMultichain",
            Error::SumNotBasic => "SumNotBasic",
            Error::NotDominating(_) => "NotDominating",
            Error::PartialOutOfRange { .. } => "PartialOutOfRange",
            Error::CompletionNotBasic => "CompletionNotBasic",
            Error::EquivalenceViolation(_) => "EquivalenceViolation",
            Error::FixtureMismatch { .. } => "FixtureMismatch",
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::SearchBudgetExceeded { .. })
    }
}
