//! The world-function catalog.
//!
//! A world function assigns to every ordered point pair its sigma value, half
//! the squared separation. It is the only input any operation in this crate
//! reads: change the world function and every downstream quantity (lengths,
//! angles, parallelism, tubes) changes with it while the formulas stay fixed.
//! The single unconditional requirement is sigma(P, P) = 0; symmetry is
//! tracked per geometry and may be dropped by tabulated data.

mod config;
mod region;

pub use config::{load_geometry, parse_geometry};
pub use region::RegionSpec;

use crate::error::{GeometryError, Result};
use crate::matrix::SigmaMatrix;
use crate::point::Point;

use region::RegionData;

/// Ground set of a geometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    /// Points are coordinate vectors of the given dimension.
    Coordinate { dimension: usize },
    /// Points are ids 0..count into a table.
    Discrete { count: usize },
}

/// Strength of a sigma deformation. Non-negative; zero is the identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistortionParams {
    d: f64,
}

impl DistortionParams {
    pub fn new(d: f64) -> Result<Self> {
        if !d.is_finite() || d < 0.0 {
            return Err(GeometryError::InvalidParameter {
                what: format!("distortion d must be finite and >= 0, got {d}"),
            });
        }
        Ok(DistortionParams { d })
    }

    pub fn d(&self) -> f64 {
        self.d
    }
}

#[derive(Clone, Debug)]
enum Kind {
    Euclidean,
    Distorted { base: Box<WorldFunction>, d: f64 },
    Sphere { radius: f64 },
    Region(RegionData),
    Tabulated { table: SigmaMatrix },
}

/// A geometry, given entirely by its sigma evaluator over a domain.
#[derive(Clone, Debug)]
pub struct WorldFunction {
    name: String,
    domain: Domain,
    symmetric: bool,
    kind: Kind,
}

impl WorldFunction {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn dimension(&self) -> Option<usize> {
        match self.domain {
            Domain::Coordinate { dimension } => Some(dimension),
            Domain::Discrete { .. } => None,
        }
    }

    /// Validates that a point belongs to this geometry's domain. `index` is
    /// the point's position in the caller's argument list, echoed in errors.
    pub fn check_point(&self, index: usize, p: &Point) -> Result<()> {
        match (&self.domain, p) {
            (Domain::Coordinate { dimension }, Point::Coordinate(c)) => {
                if c.len() != *dimension {
                    return Err(GeometryError::DimensionMismatch {
                        index,
                        expected: *dimension,
                        got: c.len(),
                    });
                }
                if let Kind::Sphere { radius } = &self.kind {
                    let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
                    if norm.is_nan() || norm < 1e-9 * radius {
                        return Err(GeometryError::ZeroVector { index });
                    }
                }
                if let Kind::Region(data) = &self.kind {
                    if !data.contains([c[0], c[1]]) {
                        return Err(GeometryError::OutsideRegion {
                            index,
                            x: c[0],
                            y: c[1],
                        });
                    }
                }
                if let Kind::Distorted { base, .. } = &self.kind {
                    base.check_point(index, p)?;
                }
                Ok(())
            }
            (Domain::Coordinate { .. }, Point::Discrete(_)) => {
                Err(GeometryError::ExpectedCoordinate { index })
            }
            (Domain::Discrete { count }, Point::Discrete(id)) => {
                if id >= count {
                    Err(GeometryError::IdOutOfRange {
                        index,
                        id: *id,
                        count: *count,
                    })
                } else {
                    Ok(())
                }
            }
            (Domain::Discrete { .. }, Point::Coordinate(_)) => {
                Err(GeometryError::ExpectedDiscrete { index })
            }
        }
    }

    /// sigma(p, q) in written argument order, after domain validation.
    pub fn sigma(&self, p: &Point, q: &Point) -> Result<f64> {
        self.check_point(0, p)?;
        self.check_point(1, q)?;
        Ok(self.sigma_unchecked(p, q))
    }

    /// Evaluator body; callers must have validated both points.
    pub(crate) fn sigma_unchecked(&self, p: &Point, q: &Point) -> f64 {
        match &self.kind {
            Kind::Euclidean => {
                let a = p.coords().expect("validated coordinate point");
                let b = q.coords().expect("validated coordinate point");
                0.5 * a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum::<f64>()
            }
            Kind::Distorted { base, d } => {
                let s = base.sigma_unchecked(p, q);
                s * (1.0 + d * s)
            }
            Kind::Sphere { radius } => {
                let a = p.coords().expect("validated coordinate point");
                let b = q.coords().expect("validated coordinate point");
                let na = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
                let nb = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
                let (ux, uy, uz) = (a[0] / na, a[1] / na, a[2] / na);
                let (vx, vy, vz) = (b[0] / nb, b[1] / nb, b[2] / nb);
                let cx = uy * vz - uz * vy;
                let cy = uz * vx - ux * vz;
                let cz = ux * vy - uy * vx;
                let cross = (cx * cx + cy * cy + cz * cz).sqrt();
                let dot = ux * vx + uy * vy + uz * vz;
                let angle = cross.atan2(dot);
                let arc = radius * angle;
                0.5 * arc * arc
            }
            Kind::Region(data) => {
                let a = p.coords().expect("validated coordinate point");
                let b = q.coords().expect("validated coordinate point");
                let len = data.shortest_path_len([a[0], a[1]], [b[0], b[1]]);
                0.5 * len * len
            }
            Kind::Tabulated { table } => {
                let i = p.id().expect("validated discrete point");
                let k = q.id().expect("validated discrete point");
                table.get(i, k)
            }
        }
    }
}

/// Flat geometry: sigma is half the squared coordinate distance.
pub fn euclidean_sigma(dimension: usize) -> Result<WorldFunction> {
    if dimension == 0 {
        return Err(GeometryError::InvalidParameter {
            what: "dimension must be at least 1".into(),
        });
    }
    Ok(WorldFunction {
        name: format!("euclidean-{dimension}"),
        domain: Domain::Coordinate { dimension },
        symmetric: true,
        kind: Kind::Euclidean,
    })
}

/// Deformation of a coordinate geometry: sigma_d = sigma * (1 + d * sigma).
///
/// Keeps sigma(P, P) = 0 exactly, is the identity at d = 0, and is symmetric
/// iff the base is. The correction is convex in sigma, which is what lets
/// straight-line point sets thicken into tubes for d > 0.
pub fn distorted_sigma(base: WorldFunction, params: DistortionParams) -> Result<WorldFunction> {
    if base.dimension().is_none() {
        return Err(GeometryError::CoordinateGeometryRequired {
            operation: "distorted_sigma",
        });
    }
    Ok(WorldFunction {
        name: format!("distorted-d{}-{}", params.d(), base.name()),
        domain: base.domain.clone(),
        symmetric: base.symmetric,
        kind: Kind::Distorted {
            base: Box::new(base),
            d: params.d(),
        },
    })
}

/// Geometry of a sphere surface in three coordinates: sigma is half the
/// squared great-circle arc. Points are radially projected onto the sphere,
/// so samplers may pass arbitrary nonzero ambient vectors; vectors shorter
/// than 1e-9 * radius have no projection and are rejected.
pub fn sphere_sigma(radius: f64) -> Result<WorldFunction> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(GeometryError::InvalidParameter {
            what: format!("sphere radius must be finite and > 0, got {radius}"),
        });
    }
    Ok(WorldFunction {
        name: format!("sphere-r{radius}"),
        domain: Domain::Coordinate { dimension: 3 },
        symmetric: true,
        kind: Kind::Sphere { radius },
    })
}

/// Geometry of a closed polygonal region: sigma is half the squared length
/// of the shortest path between two points that stays inside the region
/// (boundary included). Paths are exact, routed through region vertices.
pub fn polygon_region_sigma(region: RegionSpec) -> WorldFunction {
    let n = region.vertices().len();
    WorldFunction {
        name: format!("region-{n}v"),
        domain: Domain::Coordinate { dimension: 2 },
        symmetric: true,
        kind: Kind::Region(RegionData::new(region)),
    }
}

/// Geometry given by an explicit sigma table over ids 0..n. Symmetry is
/// inferred from the table. Values are served bit-for-bit as stored.
pub fn tabulated_sigma(table: SigmaMatrix) -> WorldFunction {
    let n = table.n();
    WorldFunction {
        name: format!("tabulated-{n}"),
        domain: Domain::Discrete { count: n },
        symmetric: !table.is_ordered(),
        kind: Kind::Tabulated { table },
    }
}
