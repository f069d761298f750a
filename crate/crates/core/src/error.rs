use thiserror::Error;

use crate::generalized::GeneralizedWitness;
use crate::metric::Violation;
use crate::topology::TopologyViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("ground sets are limited to {max} points, got {0}", max = crate::ground::MAX_POINTS)]
    GroundTooLarge(usize),
    #[error("documents are over different ground sets")]
    GroundMismatch,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not square: {points} points but {rows} rows (or a ragged row)")]
    NotSquare { points: usize, rows: usize },
    #[error("not a topology: {message}")]
    InvalidTopology {
        message: String,
        violation: TopologyViolation,
    },
    #[error("not an R.O-metric: {} violation(s)", .0.len())]
    RoAxioms(Vec<Violation>),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(String),
    #[error("the ground set is empty")]
    EmptyGround,
    #[error("space is not T0: `{first}` and `{second}` lie in the same open sets")]
    NotT0 { first: String, second: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("center `{center}` is not in the image of map `{map}`")]
    CenterNotInImage { center: String, map: String },
    #[error("invalid map family: {0}")]
    InvalidFamily(String),
    #[error("generalized axiom fails: {0}")]
    GeneralizedAxiom(Box<GeneralizedWitness>),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
