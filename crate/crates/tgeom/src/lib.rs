//! Geometry from a single ingredient.
//!
//! `tgeom` treats a geometry as nothing but a **world function**: a map
//! sigma(P, Q) over point pairs equal to half the squared separation, with
//! sigma(P, P) = 0 as the only unconditional law. Lengths, scalar products,
//! angles, right angles, straightness, and parallelism are all algebraic
//! combinations of sigma values ([`calculus`]), so the same formulas apply
//! verbatim to every geometry in the catalog ([`world`]): flat space, a
//! deformation of it, a sphere surface, a polygonal region with
//! shortest-path distances, and explicit sigma tables.
//!
//! Two consequences of taking that seriously are checkable by machine and
//! drive the design:
//!
//! * **Substitution.** A geometric statement is a function of the sigma
//!   values over a point tuple and nothing else ([`predicate`]); evaluating
//!   it on live points or on a stored table of the same values gives
//!   bit-identical answers ([`matrix`]).
//! * **Familiar notions come apart.** Straight point sets thicken into
//!   tubes under deformation, parallelism can fail to chain, and separations
//!   measured inside a nonconvex region can refuse to embed into flat space
//!   of *any* dimension ([`explorer`], [`gram`]).
//!
//! ```
//! use tgeom::{euclidean_sigma, magnitude, scalar_product, Point};
//!
//! let flat = euclidean_sigma(2)?;
//! let a = Point::coordinate([0.0, 0.0]);
//! let b = Point::coordinate([3.0, 0.0]);
//! let c = Point::coordinate([0.0, 4.0]);
//! assert_eq!(magnitude(&flat, &b, &c)?, 5.0);
//! // the angle at `a` is right: the scalar product of its legs vanishes
//! assert_eq!(scalar_product(&flat, &a, &b, &c)?, 0.0);
//! # Ok::<(), tgeom::GeometryError>(())
//! ```

pub mod calculus;
pub mod eigen;
pub mod error;
pub mod explorer;
pub mod gram;
pub mod matrix;
pub mod point;
pub mod predicate;
pub mod world;

pub use calculus::{
    collinearity_residual, cosine_angle, is_parallel, is_right_angle, magnitude, scalar_product,
    scalar_product_general, AngleResult, Orientation, ParallelCheck, DEGENERATE_MAGNITUDE,
};
pub use eigen::symmetric_eigenvalues;
pub use error::{GeometryError, Result};
pub use explorer::{
    convexity_demo, find_intransitivity, sample_tube, CounterexampleReport, GridSpec, SearchSpec,
    TubeReport, TubeSample, Witness, MAX_TUBE_SAMPLES,
};
pub use gram::{gram_report, GramReport, DEFAULT_EMBED_TOL_FRACTION};
pub use matrix::{build_sigma_matrix, SigmaMatrix, DIAGONAL_TOLERANCE};
pub use point::{Point, PointTuple, VectorPQ};
pub use predicate::{PredicateRegistry, SigmaPredicate};
pub use world::{
    distorted_sigma, euclidean_sigma, load_geometry, parse_geometry, polygon_region_sigma,
    sphere_sigma, tabulated_sigma, DistortionParams, Domain, RegionSpec, WorldFunction,
};
