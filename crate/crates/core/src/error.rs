use thiserror::Error;

use crate::field::{Field, FieldError};
use crate::point::ProjectivePoint;

/// Errors raised by curve-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoliumError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("the parameter a must be nonzero")]
    ZeroParameter,
    #[error("(0 : 0 : 0) is not a projective point")]
    ZeroVector,
    #[error("(0 : 0 : 0) is not a projective line")]
    ZeroLine,
    #[error("point {0} is not on the curve")]
    NotOnCurve(Box<ProjectivePoint>),
    #[error("point {0} belongs to {1}, curve is over {2}")]
    ForeignPoint(Box<ProjectivePoint>, Field, Field),
    #[error("the node O is not an element of this group")]
    OriginNotInGroup,
    #[error("the node O is not allowed here")]
    OriginNotAllowed,
    #[error("the vertex V is not allowed here")]
    VertexNotAllowed,
    #[error("division by the zero element O")]
    DivisionByZeroPoint,
    #[error("parameter {0} lies over a point at infinity (t^3 = -1)")]
    ParameterAtInfinity(String),
    #[error("point {0} is at infinity, an affine point is required")]
    PointAtInfinity(Box<ProjectivePoint>),
    #[error("{0} has cube roots of -1 other than -1; the affine law is not defined")]
    FieldLacksUniqueCubeRoot(Field),
    #[error("the vertex is undefined in characteristic 2 (it coincides with I)")]
    CharacteristicTwo,
    #[error("operation requires a finite field, got {0}")]
    RequiresFiniteField(Field),
    #[error("operation requires the ordered field q, got {0}")]
    UnorderedField(Field),
    #[error("{field} is too large for an exhaustive scan (limit {limit})")]
    FieldTooLargeForScan { field: Field, limit: u64 },
    #[error("the two points coincide; a line needs distinct points")]
    CoincidentPoints,
    #[error("no unique tangent at the singular point {0}")]
    SingularPoint(Box<ProjectivePoint>),
    #[error("the line passes through the node O")]
    LineThroughOrigin,
    #[error("invalid point literal `{0}` (expected `(x : y : z)` or `(x, y)`)")]
    InvalidPointLiteral(String),
}

pub type Result<T, E = FoliumError> = std::result::Result<T, E>;
