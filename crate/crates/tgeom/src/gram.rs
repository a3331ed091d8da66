//! Flat-embeddability analysis of point families.
//!
//! Fix a base point and a family of probe points. The scalar products of
//! the vectors from the base to each probe form a symmetric matrix, and a
//! classical fact says the family embeds isometrically into some Euclidean
//! space exactly when that matrix is positive semidefinite — in which case
//! the number of strictly positive eigenvalues is the dimension needed.
//! A negative eigenvalue is a certificate that *no* flat space of any
//! dimension can reproduce these separations.

use serde::Serialize;

use crate::calculus::general_scalar_raw;
use crate::eigen::symmetric_eigenvalues;
use crate::error::{GeometryError, Result};
use crate::point::Point;
use crate::world::WorldFunction;

/// Fraction of the largest eigenvalue magnitude used as the default
/// threshold separating genuine negativity from rounding noise.
pub const DEFAULT_EMBED_TOL_FRACTION: f64 = 1e-8;

/// Result of a flat-embeddability test.
#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    /// The common tail of the probe vectors.
    pub base: Point,
    /// Scalar products (base->probe_i . base->probe_k), symmetrized when
    /// the geometry itself is not symmetric.
    pub matrix: Vec<Vec<f64>>,
    /// Spectrum in ascending order.
    pub eigenvalues: Vec<f64>,
    pub min_eigenvalue: f64,
    /// Eigenvalues below -tol_embed.
    pub negative_count: usize,
    /// True when no eigenvalue is below -tol_embed.
    pub embeddable: bool,
    /// Eigenvalues above +tol_embed: the flat dimension the family needs
    /// when it is embeddable.
    pub rank: usize,
    /// The threshold actually used.
    pub tol_embed: f64,
}

/// Tests whether the separations from `base` to `others` (and among the
/// `others`) can be realized by points of a flat space of any dimension.
///
/// `tol_embed` overrides the noise threshold; by default it is
/// [`DEFAULT_EMBED_TOL_FRACTION`] of the largest eigenvalue magnitude.
pub fn gram_report(
    wf: &WorldFunction,
    base: &Point,
    others: &[Point],
    tol_embed: Option<f64>,
) -> Result<GramReport> {
    if others.is_empty() {
        return Err(GeometryError::InvalidParameter {
            what: "embeddability needs at least one probe point".into(),
        });
    }
    if let Some(t) = tol_embed {
        if !t.is_finite() || t < 0.0 {
            return Err(GeometryError::InvalidParameter {
                what: format!("tol_embed must be finite and >= 0, got {t}"),
            });
        }
    }
    wf.check_point(0, base)?;
    for (i, p) in others.iter().enumerate() {
        wf.check_point(i + 1, p)?;
        if p == base {
            return Err(GeometryError::BaseAmongProbes { index: i });
        }
    }

    let n = others.len();
    let mut matrix = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for k in 0..n {
            matrix[i][k] = general_scalar_raw(
                wf.sigma_unchecked(base, &others[k]),
                wf.sigma_unchecked(&others[i], base),
                0.0,
                wf.sigma_unchecked(&others[i], &others[k]),
            );
        }
    }
    if !wf.symmetric() {
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for k in (i + 1)..n {
                let mean = 0.5 * (matrix[i][k] + matrix[k][i]);
                matrix[i][k] = mean;
                matrix[k][i] = mean;
            }
        }
    }

    let eigenvalues = symmetric_eigenvalues(&matrix);
    let max_abs = eigenvalues
        .iter()
        .fold(0.0f64, |acc, e| acc.max(e.abs()));
    let tol = tol_embed.unwrap_or(DEFAULT_EMBED_TOL_FRACTION * max_abs);
    let negative_count = eigenvalues.iter().filter(|&&e| e < -tol).count();
    let rank = eigenvalues.iter().filter(|&&e| e > tol).count();
    let min_eigenvalue = eigenvalues[0];
    Ok(GramReport {
        base: base.clone(),
        matrix,
        eigenvalues,
        min_eigenvalue,
        negative_count,
        embeddable: negative_count == 0,
        rank,
        tol_embed: tol,
    })
}
