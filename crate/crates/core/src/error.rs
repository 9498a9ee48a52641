//! Error type shared by all pipeline stages.

/// Errors produced by the segmentation pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed PGM stream (bad magic, bad token syntax).
    #[error("pgm format error: {0}")]
    PgmFormat(String),

    /// Structurally valid PGM with an out-of-range header value.
    #[error("pgm header error: {0}")]
    PgmHeader(String),

    /// Sample count does not match the header dimensions.
    #[error("pgm truncation error: expected {expected} samples, found {found}")]
    PgmTruncated { expected: usize, found: usize },

    /// A parameter outside its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Image too small for the centered difference stencil.
    #[error("image {width}x{height} too small: gradients need at least 3x3")]
    ImageTooSmall { width: usize, height: usize },

    /// No pixel has a nonzero gradient; segmentation cannot proceed.
    #[error("empty gradient field: no nonzero gradient magnitudes")]
    EmptyField,

    /// A curve with zero-length edges or zero varifold norm.
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),

    /// Non-finite state during integration (momenta too large).
    #[error("divergence: non-finite state at integration step {step}")]
    Divergence { step: usize },

    /// Non-finite energy during optimization.
    #[error("divergence: non-finite energy at iteration {iteration}")]
    NonFiniteEnergy { iteration: usize },

    /// An error with the pipeline stage it occurred in.
    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps an error with a pipeline stage label.
    pub fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// The innermost error, unwrapping stage labels.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root_cause(),
            other => other,
        }
    }

    /// True for numerical failures (divergence, degenerate collapse), as
    /// opposed to input or format problems.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self.root_cause(),
            Error::Divergence { .. } | Error::NonFiniteEnergy { .. } | Error::DegenerateCurve(_)
        )
    }
}
