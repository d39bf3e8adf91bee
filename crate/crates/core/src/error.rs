use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix data has {got} entries, expected {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitIndex { index: usize, n: usize },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("determinant {det} is not 1 within tolerance")]
    NotSpecialUnitary { det: num_complex::Complex64 },

    #[error("matrix is not unitary (deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("qubit count {n} outside supported range {min}..={max}")]
    QubitCount { n: usize, min: usize, max: usize },

    #[error("invalid probabilities: {0}")]
    Probabilities(String),

    #[error("channel composition would produce {0} terms (limit 10000)")]
    TooManyTerms(usize),

    #[error("malformed layout: {0}")]
    Layout(String),

    #[error("zero-ancilla wire {wire} is not in |0>")]
    ZeroAncilla { wire: usize },

    #[error("{0} has no gauge wire")]
    NoGaugeWire(&'static str),

    #[error("gate list does not reproduce the encoder (residual {residual:e})")]
    Synthesis { residual: f64 },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
