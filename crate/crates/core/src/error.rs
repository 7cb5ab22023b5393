//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by grid construction, operator application, weight
/// geometry, data handling and the variational solver.
#[derive(Debug, Error)]
pub enum Error {
    /// A grid axis violates its construction preconditions.
    #[error("invalid grid axis {axis}: {reason}")]
    InvalidAxis { axis: usize, reason: String },

    /// A parameter is outside its admissible range.
    #[error("parameter `{name}` = {value} is out of range: {requirement}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        requirement: String,
    },

    /// The spatial quadratic form is not positive in some sampled direction.
    #[error("degenerate coefficients: quadratic form = {value} at node {node} in direction {direction:?}")]
    DegenerateCoefficients {
        node: usize,
        direction: Vec<f64>,
        value: f64,
    },

    /// A field does not live on the grid the operation expects.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// The declared operator kind is incompatible with the grid.
    #[error("operator/grid mismatch: {0}")]
    KindMismatch(String),

    /// A norm was requested over a mask whose stencil-admissible part is empty.
    #[error("empty effective mask for the requested norm order")]
    EmptyEffectiveMask,

    /// The level-set subdomain required by the convergence theory is empty.
    #[error("empty subdomain: {0}")]
    EmptySubdomain(String),

    /// Weight evaluation left the domain of its defining formula.
    #[error("weight domain error: {0}")]
    WeightDomain(String),

    /// A diagnostic test field is not compactly supported where required.
    #[error("test field support violation: {0}")]
    SupportViolation(String),

    /// The problem carries no accessible Cauchy data.
    #[error("no accessible Cauchy data: the boundary classification tags zero nodes as accessible")]
    NoAccessibleData,

    /// Explicit time stepping violates its stability bound.
    #[error("stability violation: {0}")]
    Stability(String),

    /// Wave initial data leaks into the trace-extraction collar.
    #[error("support leak: initial condition is nonzero within {cells} cells of the trace boundary")]
    SupportLeak { cells: usize },

    /// Configuration-level validation failure (field-precise).
    #[error("config field `{field}`: {message}")]
    Config { field: String, message: String },

    /// Expression parse/evaluation failure.
    #[error("expression error: {0}")]
    Expr(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
