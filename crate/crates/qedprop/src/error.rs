use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    /// Division by a rational function that is identically zero.
    #[error("division by the zero rational function")]
    DivisionByZeroFn,

    /// Evaluation of a rational function at a zero of its denominator.
    #[error("evaluation at a pole: denominator vanishes at s = {at}")]
    PoleAtPoint { at: String },

    /// A rank-two symbol whose eigen-coefficient vanishes identically cannot
    /// be inverted; this is the degeneracy of a gauge-field operator without
    /// a gauge-averaging term.
    #[error("singular symbol: {0}")]
    SingularSymbol(String),

    /// Two symbols built over different metric signatures were combined.
    #[error("metric mismatch between rank-two symbols")]
    MetricMismatch,

    /// The gauge quadratic form divA^2 + beta^2 A.A came out negative, so the
    /// scalar gauge functional is undefined at this field point.
    #[error("negative quadratic form {value}: gauge functional undefined at this field point")]
    NegativeQuadraticForm { value: String },

    /// The scalar gauge functional vanishes, so the ghost operator (which
    /// divides by it) is undefined.
    #[error("gauge functional vanishes: ghost operator undefined")]
    GaugeFunctionalZero,

    /// Falloff estimation was asked for a coefficient that is identically zero.
    #[error("cannot estimate falloff of an identically zero coefficient")]
    ZeroCoefficient,

    /// A lattice check was requested on a field with no modes.
    #[error("lattice field has no modes")]
    EmptyField,

    /// The momentum-space spectrum cannot be Fourier transformed to a static
    /// potential: {0} explains which precondition failed.
    #[error("spectrum is not integrable: {0}")]
    NonIntegrableSpectrum(String),

    /// The oscillatory quadrature failed to reach its tolerance.
    #[error("sine-transform quadrature did not converge at r = {r}")]
    QuadratureNotConverged { r: f64 },

    /// A constructor or operation received arguments outside its domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A textual value (rational token, coefficient list, config line) could
    /// not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
