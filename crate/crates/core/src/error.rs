use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("factor dimensions {dims:?} do not multiply to {total}")]
    InconsistentFactors { dims: Vec<usize>, total: usize },

    #[error("subsystem index {index} out of range for {factors} factors")]
    SubsystemOutOfRange { index: usize, factors: usize },

    #[error("operator is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("operator is not a projector (max deviation {deviation:e})")]
    NotProjector { deviation: f64 },

    #[error("invalid measurement event: {0}")]
    InvalidMeasurement(String),

    #[error(
        "outcome index {index} out of range for measurement {event} with {available} projectors"
    )]
    OutcomeOutOfRange {
        event: usize,
        index: usize,
        available: usize,
    },

    #[error("expected {expected} outcomes, got {found}")]
    OutcomeCount { expected: usize, found: usize },

    #[error("impossible post-selection: total history weight {weight:e} is zero")]
    ImpossiblePostSelection { weight: f64 },

    #[error("branch has no support (projected norm {norm:e})")]
    NoSupport { norm: f64 },

    #[error("decisions annihilate the state (trace {trace:e})")]
    AnnihilatedState { trace: f64 },

    #[error("history enumeration needs a cap of at least {required} (current cap {cap})")]
    EnumerationCap { required: u128, cap: u128 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("amplitude is not defined for a mixed final boundary")]
    MixedBoundary,
}
