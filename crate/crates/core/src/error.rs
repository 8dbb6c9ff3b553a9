use crate::algebra::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("invalid arity {0}")]
    InvalidArity(usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("symmetric form is degenerate")]
    DegenerateForm,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("ideal is not coisotropic")]
    NotCoisotropic,
    #[error("ideal is not isotropic")]
    NotIsotropic,
    #[error("matrix is not an isometry of the metric")]
    NotIsometry,
    #[error("validation failed: {0}")]
    Validation(ValidationReport),
    #[error("condition ({condition}) violated: {report}")]
    ExtensionCondition {
        condition: u8,
        report: ValidationReport,
    },
    #[error("mixed bracket data at level {level} disagrees with the metric pairing")]
    PairingInconsistent { level: usize },
    #[error("extension data malformed: {0}")]
    MalformedData(String),
    #[error("algebra is decomposable")]
    Decomposable,
    #[error("algebra is simple")]
    Simple,
    #[error("algebra is one-dimensional")]
    OneDimensional,
    #[error("no subalgebra section found within the search budget")]
    SectionNotFound,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors that signal a bug or a contradiction with the theory
    /// rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}
