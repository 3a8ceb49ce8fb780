use thiserror::Error;

use crate::triangle::DegeneracyClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("homogeneous triple is identically zero")]
    ZeroTriple,
    #[error("points coincide, no line through them is determined")]
    IdenticalPoints,
    #[error("lines coincide, no intersection point is determined")]
    IdenticalLines,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("ratio is undefined for the given points")]
    UndefinedRatio,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("point at infinity where an ordinary point is required")]
    InfiniteInput,
    #[error("triangle vertices are collinear")]
    DegenerateTriangle,
    #[error("point lies on a side line of the reference triangle")]
    PointOnSideline,
    #[error("point is a vertex of the reference triangle")]
    IsVertex,
    #[error("perspector does not determine a proper triangle")]
    DegeneratePerspector,
    #[error("trace circle is degenerate")]
    DegenerateCircle,
    #[error("cevians through the second trace points are not concurrent")]
    NonConcurrent,
    #[error("composite map degenerates at stage `{stage}`")]
    ChainDegenerate { stage: &'static str },
    #[error("triangles are not perspective")]
    NotPerspective,
    #[error("source points are collinear")]
    CollinearSource,
    #[error("target points are collinear")]
    CollinearTarget,
    #[error("half-turn center must be an ordinary point")]
    InfiniteCenter,
    #[error("points are collinear")]
    CollinearPoints,
    #[error("point set does not determine a unique conic")]
    UnderDetermined,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("parameter is excluded: {0}")]
    BadParameter(&'static str),
    #[error("configuration hypothesis violated: {0}")]
    HypothesisViolated(DegeneracyClass),
    #[error("sampler exhausted its retry budget")]
    SamplerExhausted,
    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
