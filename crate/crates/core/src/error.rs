use thiserror::Error;

use crate::diagram::PassId;

/// Hypotheses whose failure blocks an operation (as opposed to being a verdict).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum Hypothesis {
    Connected,
    Alternating,
    Cellular,
    Reduced,
    OrientableSurface,
    PositiveGenus,
    Sphere,
    FourValent,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Hypothesis::Connected => "projection is connected",
            Hypothesis::Alternating => "diagram is alternating",
            Hypothesis::Cellular => "projection is cellular on the declared surface",
            Hypothesis::Reduced => "diagram is reduced",
            Hypothesis::OrientableSurface => "surface is orientable",
            Hypothesis::PositiveGenus => "surface has positive genus (surface is sphere)",
            Hypothesis::Sphere => "surface is the sphere",
            Hypothesis::FourValent => "every vertex has degree 4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("no alternating assignment exists (inconsistent cycle of {} passes)", .cycle.len())]
    NotAlternatable { cycle: Vec<PassId> },
    #[error("declared surface (chi = {declared}) has larger Euler characteristic than the derived surface (chi = {derived})")]
    DeclaredSurfaceSmaller { declared: i64, derived: i64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(Hypothesis),
    #[error("quotient graph has no perfect matching")]
    NoPerfectMatching,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("semantic error: {0}")]
    Semantic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
