//! Crate-wide error type.

/// Errors reported by the solver and its verification machinery.
///
/// Numeric payloads are stored as `f64` regardless of the scalar the
/// computation ran in, so the error type stays non-generic.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter file could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A physical parameter violated an invariant.
    #[error("invalid `{field}`: {message}")]
    Validation {
        field: &'static str,
        message: String,
    },

    /// A mathematical function was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The Pekeris-transformed potential has no bound spectrum for this l.
    #[error("no Pekeris bound spectrum for l = {l}: {message}")]
    NoBoundSpectrum { l: u32, message: String },

    /// The requested state lies above the dissociation threshold.
    #[error("state (n = {n}, l = {l}) not bound")]
    Unbound { n: u32, l: u32 },

    /// Requested more eigenvalues than the potential supports.
    #[error("requested {requested} states but only {available} are bound")]
    TooManyStates { requested: usize, available: usize },

    /// A series failed to converge within its term cap.
    #[error("series did not converge within {terms} terms")]
    SeriesDivergence { terms: usize },

    /// Adaptive quadrature stopped before reaching the requested accuracy.
    #[error("quadrature did not converge: estimated error {error_estimate:e}")]
    QuadratureNoConvergence { error_estimate: f64 },

    /// A contour was placed incompatibly with the integrand.
    #[error("contour error: {0}")]
    Contour(String),

    /// Two grid resolutions of the eigensolver disagree beyond threshold.
    #[error("eigensolver unconverged: {0}")]
    Unconverged(String),

    /// Lookup of a shipped molecule failed.
    #[error("unknown molecule `{0}` (built-ins: H2, CO, HCl, LiH)")]
    UnknownMolecule(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
