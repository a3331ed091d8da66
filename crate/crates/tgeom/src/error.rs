//! Error type shared by geometry construction and evaluation.

use thiserror::Error;

/// Everything that can go wrong while building a geometry or evaluating
/// sigma-based quantities over it. Point-indexed variants report the position
/// of the offending point in the argument list or tuple.
#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("point {index}: expected {expected} coordinates, got {got}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("point {index}: expected a coordinate point")]
    ExpectedCoordinate { index: usize },

    #[error("point {index}: expected a discrete point id")]
    ExpectedDiscrete { index: usize },

    #[error("point {index}: id {id} out of range for a table of {count} points")]
    IdOutOfRange {
        index: usize,
        id: usize,
        count: usize,
    },

    #[error("point {index}: ({x}, {y}) lies outside the closed region")]
    OutsideRegion { index: usize, x: f64, y: f64 },

    #[error("point {index}: zero-length vector has no projection onto the sphere")]
    ZeroVector { index: usize },

    #[error("magnitude undefined: sigma = {sigma} is negative")]
    NegativeSigma { sigma: f64 },

    #[error("{which} vector is degenerate (magnitude below 1e-12)")]
    DegenerateVector { which: &'static str },

    #[error("point tuple must not be empty")]
    EmptyTuple,

    #[error("base point equals probe {index}")]
    BaseAmongProbes { index: usize },

    #[error("{operation} requires a coordinate geometry")]
    CoordinateGeometryRequired { operation: &'static str },

    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },

    #[error("unknown predicate {name:?}")]
    UnknownPredicate { name: String },

    #[error("predicate {name:?} is already registered")]
    DuplicatePredicate { name: String },

    #[error("predicate {name:?} takes {expected} points, got {got}")]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("table row {row} has {got} values, expected {expected}")]
    NonSquareTable {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("table diagonal [{index}][{index}] = {value} exceeds 1e-12")]
    NonzeroDiagonal { index: usize, value: f64 },

    #[error("table line {line}: {detail}")]
    Table { line: usize, detail: String },

    #[error("geometry config: {detail}")]
    Config { detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
