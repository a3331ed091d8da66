//! Points, point tuples, and point-pair vectors.
//!
//! A geometry's ground set is either a coordinate space or a finite set of
//! ids backed by a table. Nothing here knows how separations are measured;
//! that is the world function's job.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// A location in a geometry's ground set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Point {
    /// Index into a tabulated geometry's point set.
    Discrete(usize),
    /// Coordinates in an n-dimensional space.
    Coordinate(Vec<f64>),
}

impl Point {
    pub fn coordinate(coords: impl Into<Vec<f64>>) -> Self {
        Point::Coordinate(coords.into())
    }

    pub fn discrete(id: usize) -> Self {
        Point::Discrete(id)
    }

    pub fn coords(&self) -> Option<&[f64]> {
        match self {
            Point::Coordinate(c) => Some(c),
            Point::Discrete(_) => None,
        }
    }

    pub fn id(&self) -> Option<usize> {
        match self {
            Point::Discrete(id) => Some(*id),
            Point::Coordinate(_) => None,
        }
    }
}

/// Non-empty ordered tuple of points: the argument block a predicate consumes.
#[derive(Clone, Debug, PartialEq)]
pub struct PointTuple(Vec<Point>);

impl PointTuple {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(GeometryError::EmptyTuple);
        }
        Ok(PointTuple(points))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Point> {
        self.0.get(index)
    }
}

/// Ordered point pair, read as the vector from `tail` to `head`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorPQ {
    pub tail: Point,
    pub head: Point,
}

impl VectorPQ {
    pub fn new(tail: Point, head: Point) -> Self {
        VectorPQ { tail, head }
    }
}
