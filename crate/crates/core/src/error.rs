use exact::ExactError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoreError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("matrix has determinant {0}, not 1")]
    NotSL2(u32),
    #[error("scalar matrix has no cyclic vector")]
    ScalarMatrix,
    #[error("the trivial group has no nontrivial subgroup")]
    TrivialGroup,
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("points lie on different curves")]
    CurveMismatch,
    #[error("singular curve (zero discriminant)")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not {0}-torsion")]
    NotTorsion(u64),
    #[error("field does not contain the full torsion: found {found} of {expected} points")]
    NotDivisionField { found: usize, expected: usize },
    #[error("points do not form a basis of the torsion")]
    NotABasis,
    #[error("every element of the image has order at most 2")]
    FallbackOrder2,
    #[error("the image is trivial; no basis change needed")]
    NoActionNeeded,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not lie in the requested subfield")]
    NotInSubfield,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("field is not an intermediate field of the tower")]
    TowerMismatch,
    #[error("l = {0} exceeds the exhaustive-search limit 13")]
    DeskScaleLimit(u64),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
