use thiserror::Error;

use crate::geometry::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point `{0}`")]
    DuplicatePoint(Point),
    #[error("point `{point}` is not in the {role}")]
    UnknownPoint { point: Point, role: &'static str },
    #[error("map is not total: point `{0}` has no image")]
    NotTotal(Point),
    #[error("cannot compose: target of the first map differs from source of the second")]
    Composition,
    #[error("maps do not share a target")]
    TargetMismatch,
    #[error("maps do not share a source")]
    SourceMismatch,
    #[error("bundle is based on a different space than required")]
    BaseMismatch,
    #[error("vector bundle rank mismatch: expected {expected}, found {found} at `{point}`")]
    RankMismatch {
        point: Point,
        expected: usize,
        found: usize,
    },
    #[error("map is not smooth (relative dimension is not constant)")]
    NotSmooth,
    #[error("elements live on different pairs of spaces: {0}")]
    SpaceMismatch(&'static str),
    #[error("isomorphism search refused: {0} points exceeds the limit of {1}")]
    TooLarge(usize, usize),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("invalid trial configuration: {0}")]
    InvalidConfig(String),
    #[error("{0}")]
    Theory(String),
}
