//! Geometric statements as functions of a sigma table.
//!
//! A predicate takes nothing but the matrix of sigma values over a point
//! tuple and returns a residual that vanishes when the statement holds.
//! Because the matrix is the *entire* input, a predicate cannot tell
//! whether the values came from a live geometry or from a stored table:
//! evaluating against a geometry and evaluating against the tabulation of
//! that geometry over the same tuple give bit-identical results. That
//! substitution property is what makes every statement here portable
//! across the whole geometry catalog.
//!
//! Built-in residuals (point positions refer to tuple indices):
//!
//! | name              | arity | meaning of residual                          |
//! |-------------------|-------|----------------------------------------------|
//! | `right_angle`     | 3     | scalar product of vectors 0->1 and 0->2      |
//! | `collinear`       | 3     | straightness defect of point 2 against 0->1  |
//! | `parallel`        | 4     | 1 - |cos| between vectors 0->1 and 2->3      |
//! | `cosine_identity` | 3     | defect of rebuilding sigma(1,2) from angle 0 |

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::calculus::{
    collinearity_residual_raw, cosine_identity_residual_raw, general_scalar_raw,
    parallel_residual_raw,
};
use crate::error::{GeometryError, Result};
use crate::matrix::{build_sigma_matrix, SigmaMatrix};
use crate::point::PointTuple;
use crate::world::WorldFunction;

type ResidualFn = Arc<dyn Fn(&SigmaMatrix) -> f64 + Send + Sync>;

/// A named residual over sigma tables of a fixed tuple size.
#[derive(Clone)]
pub struct SigmaPredicate {
    name: String,
    arity: usize,
    residual: ResidualFn,
}

impl fmt::Debug for SigmaPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SigmaPredicate")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .finish_non_exhaustive()
    }
}

impl SigmaPredicate {
    pub fn new(
        name: impl Into<String>,
        arity: usize,
        residual: impl Fn(&SigmaMatrix) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(GeometryError::InvalidParameter {
                what: "predicate name must not be empty".into(),
            });
        }
        if arity < 2 {
            return Err(GeometryError::InvalidParameter {
                what: format!("predicate arity must be at least 2, got {arity}"),
            });
        }
        Ok(SigmaPredicate {
            name,
            arity,
            residual: Arc::new(residual),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Evaluates the residual on a sigma table of matching size.
    pub fn evaluate(&self, matrix: &SigmaMatrix) -> Result<f64> {
        if matrix.n() != self.arity {
            return Err(GeometryError::ArityMismatch {
                name: self.name.clone(),
                expected: self.arity,
                got: matrix.n(),
            });
        }
        Ok((self.residual)(matrix))
    }
}

/// A name-indexed collection of predicates, preloaded with the built-ins.
pub struct PredicateRegistry {
    predicates: BTreeMap<String, SigmaPredicate>,
}

impl Default for PredicateRegistry {
    fn default() -> Self {
        Self::new()
    }
}

impl PredicateRegistry {
    pub fn new() -> Self {
        let mut registry = PredicateRegistry {
            predicates: BTreeMap::new(),
        };
        let builtins = [
            SigmaPredicate::new("right_angle", 3, |m: &SigmaMatrix| {
                general_scalar_raw(m.get(0, 2), m.get(1, 0), m.get(0, 0), m.get(1, 2))
            })
            .expect("valid built-in"),
            SigmaPredicate::new("collinear", 3, |m: &SigmaMatrix| {
                collinearity_residual_raw(m.get(0, 1), m.get(0, 2), m.get(1, 2))
            })
            .expect("valid built-in"),
            SigmaPredicate::new("parallel", 4, |m: &SigmaMatrix| {
                let scalar =
                    general_scalar_raw(m.get(0, 3), m.get(1, 2), m.get(0, 2), m.get(1, 3));
                let mu2 = general_scalar_raw(m.get(0, 1), m.get(1, 0), m.get(0, 0), m.get(1, 1));
                let mw2 = general_scalar_raw(m.get(2, 3), m.get(3, 2), m.get(2, 2), m.get(3, 3));
                parallel_residual_raw(scalar, mu2, mw2)
            })
            .expect("valid built-in"),
            SigmaPredicate::new("cosine_identity", 3, |m: &SigmaMatrix| {
                cosine_identity_residual_raw(m.get(0, 1), m.get(0, 2), m.get(1, 2))
            })
            .expect("valid built-in"),
        ];
        for p in builtins {
            registry
                .register(p)
                .expect("built-in names are distinct");
        }
        registry
    }

    /// Adds a predicate; names are unique across built-ins and additions.
    pub fn register(&mut self, predicate: SigmaPredicate) -> Result<()> {
        if self.predicates.contains_key(predicate.name()) {
            return Err(GeometryError::DuplicatePredicate {
                name: predicate.name().to_owned(),
            });
        }
        self.predicates
            .insert(predicate.name().to_owned(), predicate);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&SigmaPredicate> {
        self.predicates.get(name)
    }

    /// Registered names in sorted order.
    pub fn names(&self) -> Vec<&str> {
        self.predicates.keys().map(String::as_str).collect()
    }

    /// Evaluates a named predicate on live points of a geometry: the sigma
    /// table over the tuple is built first, then handed to the residual.
    pub fn evaluate(&self, name: &str, wf: &WorldFunction, tuple: &PointTuple) -> Result<f64> {
        let predicate = self
            .predicates
            .get(name)
            .ok_or_else(|| GeometryError::UnknownPredicate {
                name: name.to_owned(),
            })?;
        if tuple.len() != predicate.arity() {
            return Err(GeometryError::ArityMismatch {
                name: name.to_owned(),
                expected: predicate.arity(),
                got: tuple.len(),
            });
        }
        let matrix = build_sigma_matrix(wf, tuple)?;
        predicate.evaluate(&matrix)
    }

    /// Evaluates a named predicate directly on a sigma table.
    pub fn evaluate_matrix(&self, name: &str, matrix: &SigmaMatrix) -> Result<f64> {
        let predicate = self
            .predicates
            .get(name)
            .ok_or_else(|| GeometryError::UnknownPredicate {
                name: name.to_owned(),
            })?;
        predicate.evaluate(matrix)
    }
}
