use thiserror::Error;

/// Errors raised by the algebraic layers and the move calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least {min}, got {got}")]
    Genus { min: u32, got: u32 },

    #[error("dimension mismatch: expected genus {expected}, got genus {got}")]
    GenusMismatch { expected: u32, got: u32 },

    #[error("generator index {index} out of range for genus {genus}")]
    GeneratorOutOfRange { index: u32, genus: u32 },

    #[error("unsupported bundle arithmetic: products in pi_1(M) need euler number 0, got {euler}")]
    UnsupportedBundle { euler: i64 },

    #[error("malformed loop: {0}")]
    MalformedLoop(String),

    #[error("not realizable V-transversely; obstruction = {obstruction}")]
    Obstruction { obstruction: i64 },

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("field mismatch between figure-8 terms")]
    FieldMismatch,
}

/// A script failure pinned to the first offending event.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("event {index}: {kind}")]
    Event { index: usize, kind: EventError },

    #[error("invalid script: {0}")]
    Invalid(String),

    #[error(transparent)]
    Algebra(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EventError {
    #[error("unknown component `{0}`")]
    UnknownComponent(String),

    #[error("fib is not available on `{0}`: its class is a power of the fiber, use drag instead")]
    FibOnFiberPower(String),

    #[error("drag needs `{0}` to be homotopic to a power of the fiber")]
    DragOnNonFiber(String),

    #[error("a crossing needs two distinct components, got `{0}` twice")]
    SameComponent(String),

    #[error("`{0}` is already clasped")]
    AlreadyClasped(String),

    #[error("`{0}` has no clasp to undo")]
    NotClasped(String),

    #[error("no kink pair of that type on `{0}` to cancel")]
    NoKinkPair(String),

    #[error("legendrian stabilization count on `{0}` would become negative")]
    NegativeStabilization(String),

    #[error(transparent)]
    Algebra(#[from] Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
