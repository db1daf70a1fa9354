use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A letter index points past the end of a finite word.
    #[error("letter index {index} lies beyond the finite word of length {len}")]
    IndexBeyondWord { index: usize, len: usize },

    /// The operation needs an eventually periodic sequence but the spec is a
    /// finite word.
    #[error("operation requires an eventually periodic sequence spec")]
    FiniteWordMode,

    /// A window box with no interior.
    #[error("window box is empty in coordinate {coordinate}")]
    EmptyWindow { coordinate: usize },

    /// Internal consistency failure: a pool wall cuts through a tile
    /// footprint. This must never happen for legal addresses.
    #[error("wall in coordinate {coordinate} dissects the tile footprint")]
    WallDissectsTile { coordinate: usize },

    /// The census window does not contain enough cells per coordinate to
    /// exhibit every corona class.
    #[error("census window holds {cells} cells per coordinate, need at least {needed}")]
    WindowTooSmall { cells: u64, needed: u64 },

    /// Not enough census reports (or malformed ones) for a verdict.
    #[error("insufficient census data: {0}")]
    InsufficientData(String),

    /// Rendering model not available in this dimension.
    #[error("rendering model `{model}` is not supported for d = {dim}")]
    UnsupportedDimension { model: String, dim: usize },

    /// Structurally malformed spec document.
    #[error("parse error: {0}")]
    ParseError(String),

    /// Well-formed document with illegal values.
    #[error("invalid spec: {0}")]
    ValidationError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
