use thiserror::Error;

/// Errors surfaced by the simulation and solver pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration field violates its documented invariant.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// A matrix expected to be positive definite failed to factor.
    #[error("matrix not positive definite in {0}")]
    NotPositiveDefinite(&'static str),

    /// Too few Monte Carlo blocks were requested for a statistics estimate.
    #[error("{requested} Monte Carlo blocks requested, minimum is {minimum}")]
    TooFewBlocks { requested: usize, minimum: usize },

    /// A UE ended up without any serving AP where one is required.
    #[error("UE {0} has an empty serving set")]
    EmptyServingSet(usize),

    /// The iterative solver produced a non-finite objective.
    #[error("solver diverged at iteration {iteration}: objective {objective}")]
    SolverDiverged { iteration: usize, objective: f64 },

    /// Result aggregation was asked to summarize an empty record set.
    #[error("no records to summarize")]
    EmptyResults,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}
