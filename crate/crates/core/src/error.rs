use thiserror::Error;

/// Every failure surfaced by the library.
///
/// Variants that correspond to a violated hypothesis name it, so callers can
/// report which assumption of which result the input fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GkzError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("matrix has rank {rank} but {rows} rows; the cone must be full-dimensional")]
    NotFullRank { rank: usize, rows: usize },
    #[error("the cone contains a line; a pointed semigroup is required")]
    NotPointed,
    #[error("normality required by {required_by}; witness {witness} lies in the saturation but not in NA")]
    NotNormal {
        required_by: String,
        witness: String,
    },
    #[error("homogeneity required by the duality theorem: no hyperplane <c, a_i> = 1 contains all columns")]
    NotHomogeneous,
    #[error("parameter is not in CF + Z^d for face {face:?}")]
    NotInCoset { face: Vec<usize> },
    #[error("the empty face has no lattice frame")]
    EmptyFace,
    #[error("face set is not upward closed: {missing:?} lies above a member but is missing")]
    NotUpwardClosed { missing: Vec<usize> },
    #[error("column set {0:?} is not a face")]
    NotAFace(Vec<usize>),
    #[error(
        "no lambda in the coset satisfies both implications at facet {face_facet:?} of the face: \
         facets {natural:?} take values in N while {negative:?} take negative integer values"
    )]
    LambdaUnattainable {
        face_facet: Vec<usize>,
        natural: Vec<Vec<usize>>,
        negative: Vec<Vec<usize>>,
    },
    #[error(
        "no point of ZF is positive on facets {positive:?} and negative on facets {negative:?} of the face"
    )]
    SignPatternUnrealizable {
        positive: Vec<Vec<usize>>,
        negative: Vec<Vec<usize>>,
    },
    #[error("scale limit exceeded: {0}")]
    ScaleLimit(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl GkzError {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            GkzError::InvalidInput(_) => 1,
            GkzError::ScaleLimit(_) => 3,
            GkzError::Internal(_) => 4,
            _ => 2,
        }
    }

    /// The variant name, as used in structured error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            GkzError::InvalidInput(_) => "InvalidInput",
            GkzError::NotFullRank { .. } => "NotFullRank",
            GkzError::NotPointed => "NotPointed",
            GkzError::NotNormal { .. } => "NotNormal",
            GkzError::NotHomogeneous => "NotHomogeneous",
            GkzError::NotInCoset { .. } => "NotInCoset",
            GkzError::EmptyFace => "EmptyFace",
            GkzError::NotUpwardClosed { .. } => "NotUpwardClosed",
            GkzError::NotAFace(_) => "NotAFace",
            GkzError::LambdaUnattainable { .. } => "LambdaUnattainable",
            GkzError::SignPatternUnrealizable { .. } => "SignPatternUnrealizable",
            GkzError::ScaleLimit(_) => "ScaleLimit",
            GkzError::Internal(_) => "Internal",
        }
    }
}
