use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit index {qubit} out of range for {n_qubits} qubits")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    #[error("dense dimension 2^{n_qubits} exceeds the limit of 2^{max}")]
    DimensionGuard { n_qubits: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("negative duration {0}")]
    NegativeDuration(f64),

    #[error("qubit {0} appears twice in one Pauli term")]
    RepeatedQubit(usize),

    #[error("empty qubit selection")]
    EmptySelection,

    #[error("logical bits {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("logical index {index} out of range for width {width}")]
    LogicalOutOfRange { index: usize, width: usize },

    #[error("invalid architecture: {0}")]
    InvalidArchitecture(String),

    #[error("instruction {0} is a measurement; the schedule has no unitary")]
    MeasurementInSchedule(usize),

    #[error("repetition count must be at least 1")]
    InvalidRepetitions,

    #[error("qubits ({star}, {dot}) are not a star-dot pair sharing an interior isolator")]
    PairNotInGroup { star: usize, dot: usize },

    #[error("{0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}
