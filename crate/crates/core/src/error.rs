use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("invalid input: {0}")]
    Input(String),

    #[error(
        "search budget exceeded: {candidates} candidates > limit {limit} (use force to override)"
    )]
    Budget { candidates: u128, limit: u128 },

    /// A solution does not have the shape an encoding requires.
    #[error("structure error: {0}")]
    Structure(String),

    /// The requested prune cannot be applied to these dimensions.
    #[error("incompatible configuration: {0}")]
    Incompatible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
