use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} is not a power of two in 2..=32")]
    InvalidDimension(usize),

    #[error("matrix is not Hermitian: entry ({row}, {col}) deviates from its conjugate partner by {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("Pauli index {0} out of range (expected 0..=3)")]
    IndexOutOfRange(usize),

    #[error("qubit count {0} out of range (expected 1..=5)")]
    QubitCountOutOfRange(usize),

    #[error("operation requires {expected} qubits, got {found}")]
    WrongQubitCount { expected: usize, found: usize },

    #[error("trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },

    #[error("Pauli coefficient {index} has imaginary residual {imag:e}")]
    NonHermitianResidual { index: usize, imag: f64 },

    #[error("invalid coefficient tensor: {0}")]
    InvalidCoefficients(String),

    #[error("epsilon {0} outside [0, 1]")]
    EpsilonOutOfRange(f64),

    #[error("tolerance {0} outside the accepted range")]
    InvalidTolerance(f64),

    #[error("witness weight {0} outside (0, 1]")]
    InvalidWeight(f64),

    #[error("input is not a physical state (minimum eigenvalue {min_eigenvalue:e})")]
    NonPhysicalInput { min_eigenvalue: f64 },

    #[error("continuous-basis parameter a = {0} must exceed 1")]
    AOutOfRange(f64),

    #[error("ball-bound parameter A = {0} must be positive")]
    InvalidBallParameter(f64),

    #[error("singular linear system at pivot {0}")]
    SingularSystem(usize),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("grid has {points} points, limit is {limit}")]
    GridTooLarge { points: usize, limit: usize },

    #[error("invalid range spec `{0}`")]
    InvalidRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema violation: {0}")]
    SchemaViolation(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
