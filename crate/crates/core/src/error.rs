use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("filtered complex: {0}")]
    InvalidComplex(String),

    #[error("homogeneity violation in boundary {degree} at ({row}, {col})")]
    Homogeneity { degree: usize, row: usize, col: usize },

    #[error("step {step} out of range (last step is {last})")]
    StepOutOfRange { step: usize, last: usize },

    #[error("empty point set")]
    EmptyPointSet,

    #[error("radii must be strictly increasing")]
    RadiiNotIncreasing,

    #[error("group acts on {group} points but the power has arity {power}")]
    ArityMismatch { group: usize, power: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("enumeration of {needed} items exceeds the cap of {cap}")]
    CapExceeded { needed: String, cap: u64 },

    #[error("invalid module descriptor: {0}")]
    InvalidModule(String),

    #[error("closed form disagrees with enumeration: {0}")]
    ClosedFormMismatch(String),

    #[error("graded and Smith normal form routes disagree in degree {0}")]
    PathMismatch(usize),

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Usage(String),

    #[error("{0} verification check(s) failed")]
    VerificationFailed(usize),
}

impl Error {
    /// Stable short code used in structured CLI errors.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "invalid_field",
            Error::DivisionByZero => "division_by_zero",
            Error::Parse { kind, .. } => kind.code(),
            Error::InvalidComplex(_) => "invalid_complex",
            Error::Homogeneity { .. } => "homogeneity",
            Error::StepOutOfRange { .. } => "step_out_of_range",
            Error::EmptyPointSet => "empty_point_set",
            Error::RadiiNotIncreasing => "radii_not_increasing",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InvalidModule(_) => "invalid_module",
            Error::ClosedFormMismatch(_) => "closed_form_mismatch",
            Error::PathMismatch(_) => "path_mismatch",
            Error::Io(_) => "io",
            Error::Usage(_) => "usage",
            Error::VerificationFailed(_) => "verification_failed",
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("face closure: face {{{face}}} of {{{simplex}}} is not declared earlier")]
    FaceClosure { simplex: String, face: String },
    #[error("birth monotonicity: face {{{face}}} born at {face_birth} after {{{simplex}}} born at {birth}")]
    BirthMonotonicity {
        simplex: String,
        face: String,
        birth: usize,
        face_birth: usize,
    },
    #[error("duplicate simplex {{{0}}}")]
    Duplicate(String),
    #[error("birth {birth} exceeds the last step {last}")]
    BirthOutOfRange { birth: usize, last: usize },
}

impl ParseErrorKind {
    pub fn code(&self) -> &'static str {
        match self {
            ParseErrorKind::Syntax(_) => "syntax",
            ParseErrorKind::FaceClosure { .. } => "face_closure",
            ParseErrorKind::BirthMonotonicity { .. } => "birth_monotonicity",
            ParseErrorKind::Duplicate(_) => "duplicate_simplex",
            ParseErrorKind::BirthOutOfRange { .. } => "birth_out_of_range",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
