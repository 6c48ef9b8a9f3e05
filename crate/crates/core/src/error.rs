use thiserror::Error;

/// Precondition failures raised by the comparison helpers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompareError {
    #[error("approximate comparison needs finite inputs, got {a} and {b}")]
    NonFinite { a: f64, b: f64 },
    #[error("tolerance multiplier must be positive and finite, got {0}")]
    BadTolerance(f64),
}

/// Precondition failures raised by vector and matrix operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("vector orientations differ: {left} vs {right}")]
    OrientationMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("inner product needs a row vector times a column vector, got {left} times {right}")]
    DotOrientation {
        left: &'static str,
        right: &'static str,
    },
    #[error("number of matrix columns must be equal to length of column vector ({cols} columns, vector of length {len})")]
    MatVecMismatch { cols: usize, len: usize },
    #[error("matrix-vector product needs a column vector")]
    MatVecRowVector,
    #[error("index {index} out of range for vector of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("entry ({row}, {col}) out of range for {rows}x{cols} matrix")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("dense storage for {rows}x{cols} needs {expected} entries, got {found}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },
    #[error("scale factor must be finite")]
    NonFiniteScale,
    #[error("malformed CRS structure: {0}")]
    BadCrs(String),
}

/// Configuration and runtime failures of the conjugate-gradient driver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CgError {
    #[error("max_iterations must be at least 1")]
    ZeroIterations,
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("operator is {rows}x{cols}, expected a square operator matching rhs length {len}")]
    OperatorShape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("zero denominator in {0} (converged or degenerate state)")]
    Breakdown(&'static str),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Invalid heat-problem parameters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeatError {
    #[error("diffusivity gamma must be positive and finite, got {0}")]
    BadGamma(f64),
    #[error("domain length must be positive and finite, got {0}")]
    BadLength(f64),
    #[error("number of cells must be at least 1")]
    NoCells,
    #[error("boundary values must be finite")]
    BadBoundary,
    #[error(transparent)]
    Cg(#[from] CgError),
}

/// Test-manifest and pyramid-audit failures. Line numbers are 1-based and
/// count the header.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PyramidError {
    #[error("line {line}: expected header `layer,name,duration_ms,status`")]
    BadHeader { line: u64 },
    #[error("line {line}: expected 4 fields, found {found}")]
    FieldCount { line: u64, found: usize },
    #[error("line {line}: unknown layer `{value}`")]
    UnknownLayer { line: u64, value: String },
    #[error("line {line}: unknown status `{value}`")]
    UnknownStatus { line: u64, value: String },
    #[error("line {line}: test name must not be empty")]
    EmptyName { line: u64 },
    #[error("line {line}: bad duration `{value}`")]
    BadDuration { line: u64, value: String },
    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error("unit-test budget must be positive, got {0} ms")]
    BadBudget(f64),
}
