//! Lengths, angles, straightness, and parallelism from sigma alone.
//!
//! Every quantity here is an algebraic combination of sigma values, so it is
//! defined the same way in every geometry of the catalog. The magnitude of
//! the vector from P to Q is sqrt(2 sigma(P, Q)); the scalar product of two
//! vectors sharing a tail A is sigma(A,B) + sigma(A,C) - sigma(B,C); the
//! scalar product of two detached vectors P0->P1 and Q0->Q1 is
//! sigma(P0,Q1) + sigma(P1,Q0) - sigma(P0,Q0) - sigma(P1,Q1). Angles,
//! right-angle and straightness tests all reduce to these.

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::point::{Point, VectorPQ};
use crate::world::WorldFunction;

/// Vectors with magnitude below this are treated as directionless.
pub const DEGENERATE_MAGNITUDE: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Raw forms on already-evaluated sigma values. These are the single source
// of truth shared by the point-level API below and the table predicates, so
// the two paths agree bit for bit.
// ---------------------------------------------------------------------------

/// Scalar product of vectors AB and AC from the sigma values of the three
/// point pairs; zero exactly when the angle at A is right.
pub(crate) fn same_tail_scalar_raw(sab: f64, sac: f64, sbc: f64) -> f64 {
    sab + sac - sbc
}

/// Scalar product of detached vectors P0->P1 and Q0->Q1. The evaluation
/// order is fixed so that for a symmetric sigma the same-tail case
/// (Q0 = P0) reproduces [`same_tail_scalar_raw`] bit for bit.
pub(crate) fn general_scalar_raw(s_p0q1: f64, s_p1q0: f64, s_p0q0: f64, s_p1q1: f64) -> f64 {
    s_p0q1 + s_p1q0 - s_p0q0 - s_p1q1
}

/// Straightness defect of probe R against the segment P0->P1:
/// |P0P1|^2 |P0R|^2 - (P0P1.P0R)^2, which vanishes on straight reaches
/// and has no sign guarantee elsewhere.
pub(crate) fn collinearity_residual_raw(s01: f64, s0r: f64, s1r: f64) -> f64 {
    let scalar = same_tail_scalar_raw(s01, s0r, s1r);
    4.0 * s01 * s0r - scalar * scalar
}

/// Defect of reconstructing sigma(B, C) from the two legs at A and the
/// angle between them. Algebraically zero in every geometry; in floating
/// point it measures rounding only, which is what makes it a useful
/// self-consistency probe.
pub(crate) fn cosine_identity_residual_raw(sab: f64, sac: f64, sbc: f64) -> f64 {
    let scalar = same_tail_scalar_raw(sab, sac, sbc);
    let m = (2.0 * sab).max(0.0).sqrt() * (2.0 * sac).max(0.0).sqrt();
    let cosine = if m > 0.0 { scalar / m } else { 0.0 };
    let reconstructed = sab + sac - m * cosine;
    reconstructed - sbc
}

/// 1 - |cos| between two detached vectors given their scalar product and
/// squared magnitudes; 1.0 when either magnitude squared is not positive.
pub(crate) fn parallel_residual_raw(scalar: f64, mu2: f64, mw2: f64) -> f64 {
    if mu2 <= 0.0 || mw2 <= 0.0 {
        return 1.0;
    }
    1.0 - scalar.abs() / (mu2.sqrt() * mw2.sqrt())
}

// ---------------------------------------------------------------------------
// Point-level API.
// ---------------------------------------------------------------------------

/// Length of the vector from `p` to `q`: sqrt(2 sigma(p, q)).
pub fn magnitude(wf: &WorldFunction, p: &Point, q: &Point) -> Result<f64> {
    let s = wf.sigma(p, q)?;
    if s < 0.0 {
        return Err(GeometryError::NegativeSigma { sigma: s });
    }
    Ok((2.0 * s).sqrt())
}

/// Scalar product (AB.AC) of the two vectors leaving `tail`.
pub fn scalar_product(
    wf: &WorldFunction,
    tail: &Point,
    head_b: &Point,
    head_c: &Point,
) -> Result<f64> {
    wf.check_point(0, tail)?;
    wf.check_point(1, head_b)?;
    wf.check_point(2, head_c)?;
    let sab = wf.sigma_unchecked(tail, head_b);
    let sac = wf.sigma_unchecked(tail, head_c);
    let sbc = wf.sigma_unchecked(head_b, head_c);
    Ok(same_tail_scalar_raw(sab, sac, sbc))
}

/// Scalar product of two vectors that need not share a tail.
pub fn scalar_product_general(wf: &WorldFunction, v: &VectorPQ, w: &VectorPQ) -> Result<f64> {
    wf.check_point(0, &v.tail)?;
    wf.check_point(1, &v.head)?;
    wf.check_point(2, &w.tail)?;
    wf.check_point(3, &w.head)?;
    let s_p0q1 = wf.sigma_unchecked(&v.tail, &w.head);
    let s_p1q0 = wf.sigma_unchecked(&v.head, &w.tail);
    let s_p0q0 = wf.sigma_unchecked(&v.tail, &w.tail);
    let s_p1q1 = wf.sigma_unchecked(&v.head, &w.head);
    Ok(general_scalar_raw(s_p0q1, s_p1q0, s_p0q0, s_p1q1))
}

/// Angle information at a vertex. `cosine` is the raw ratio and may leave
/// [-1, 1] in deformed geometries; `angle_radians` comes from the clamped
/// value and `clamp_excess` records how far the clamp had to reach.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AngleResult {
    pub cosine: f64,
    pub angle_radians: f64,
    pub clamp_excess: f64,
    pub degenerate: bool,
}

/// Cosine and angle between the vectors `tail`->`head_b` and `tail`->`head_c`.
///
/// When either leg is shorter than [`DEGENERATE_MAGNITUDE`] the direction is
/// meaningless: the result is flagged degenerate with cosine 0 and a right
/// angle by convention. Negative sigma on a leg has no real magnitude and is
/// an error.
pub fn cosine_angle(
    wf: &WorldFunction,
    tail: &Point,
    head_b: &Point,
    head_c: &Point,
) -> Result<AngleResult> {
    wf.check_point(0, tail)?;
    wf.check_point(1, head_b)?;
    wf.check_point(2, head_c)?;
    let sab = wf.sigma_unchecked(tail, head_b);
    let sac = wf.sigma_unchecked(tail, head_c);
    let sbc = wf.sigma_unchecked(head_b, head_c);
    for s in [sab, sac] {
        if s < 0.0 {
            return Err(GeometryError::NegativeSigma { sigma: s });
        }
    }
    let mab = (2.0 * sab).sqrt();
    let mac = (2.0 * sac).sqrt();
    if mab < DEGENERATE_MAGNITUDE || mac < DEGENERATE_MAGNITUDE {
        return Ok(AngleResult {
            cosine: 0.0,
            angle_radians: std::f64::consts::FRAC_PI_2,
            clamp_excess: 0.0,
            degenerate: true,
        });
    }
    let cosine = same_tail_scalar_raw(sab, sac, sbc) / (mab * mac);
    Ok(AngleResult {
        cosine,
        angle_radians: cosine.clamp(-1.0, 1.0).acos(),
        clamp_excess: (cosine.abs() - 1.0).max(0.0),
        degenerate: false,
    })
}

/// Whether the angle at `tail` is right: the scalar product must vanish
/// relative to the size of the two legs.
pub fn is_right_angle(
    wf: &WorldFunction,
    tail: &Point,
    head_b: &Point,
    head_c: &Point,
    tol: f64,
) -> Result<bool> {
    wf.check_point(0, tail)?;
    wf.check_point(1, head_b)?;
    wf.check_point(2, head_c)?;
    let sab = wf.sigma_unchecked(tail, head_b);
    let sac = wf.sigma_unchecked(tail, head_c);
    let sbc = wf.sigma_unchecked(head_b, head_c);
    let residual = same_tail_scalar_raw(sab, sac, sbc);
    Ok(residual.abs() <= tol * (sab + sac).abs().max(1e-30))
}

/// Straightness defect of `probe` against the segment `p0`->`p1`. Zero
/// means `probe` lies on the straight reach through the two points; the
/// residual has no sign guarantee away from it.
pub fn collinearity_residual(
    wf: &WorldFunction,
    p0: &Point,
    p1: &Point,
    probe: &Point,
) -> Result<f64> {
    wf.check_point(0, p0)?;
    wf.check_point(1, p1)?;
    wf.check_point(2, probe)?;
    let s01 = wf.sigma_unchecked(p0, p1);
    let s0r = wf.sigma_unchecked(p0, probe);
    let s1r = wf.sigma_unchecked(p1, probe);
    Ok(collinearity_residual_raw(s01, s0r, s1r))
}

/// Relative direction of two parallel vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Same,
    Opposite,
}

/// Outcome of a parallelism test.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParallelCheck {
    pub parallel: bool,
    pub cosine: f64,
    /// Direction agreement, reported only when the vectors are parallel.
    pub orientation: Option<Orientation>,
}

/// Tests |(v.w)| >= (1 - tol) |v||w|, the sigma form of "the directions
/// agree up to tol". Degenerate vectors cannot be compared and error out.
pub fn is_parallel(
    wf: &WorldFunction,
    v: &VectorPQ,
    w: &VectorPQ,
    tol: f64,
) -> Result<ParallelCheck> {
    wf.check_point(0, &v.tail)?;
    wf.check_point(1, &v.head)?;
    wf.check_point(2, &w.tail)?;
    wf.check_point(3, &w.head)?;
    let scalar = general_scalar_raw(
        wf.sigma_unchecked(&v.tail, &w.head),
        wf.sigma_unchecked(&v.head, &w.tail),
        wf.sigma_unchecked(&v.tail, &w.tail),
        wf.sigma_unchecked(&v.head, &w.head),
    );
    let mu2 = general_scalar_raw(
        wf.sigma_unchecked(&v.tail, &v.head),
        wf.sigma_unchecked(&v.head, &v.tail),
        0.0,
        0.0,
    );
    let mw2 = general_scalar_raw(
        wf.sigma_unchecked(&w.tail, &w.head),
        wf.sigma_unchecked(&w.head, &w.tail),
        0.0,
        0.0,
    );
    for (mag2, which) in [(mu2, "first"), (mw2, "second")] {
        if mag2 < 0.0 {
            return Err(GeometryError::NegativeSigma { sigma: 0.5 * mag2 });
        }
        if mag2.sqrt() < DEGENERATE_MAGNITUDE {
            return Err(GeometryError::DegenerateVector { which });
        }
    }
    let norm = mu2.sqrt() * mw2.sqrt();
    let cosine = scalar / norm;
    let parallel = scalar.abs() >= (1.0 - tol) * norm;
    let orientation = if parallel {
        Some(if cosine >= 0.0 {
            Orientation::Same
        } else {
            Orientation::Opposite
        })
    } else {
        None
    };
    Ok(ParallelCheck {
        parallel,
        cosine,
        orientation,
    })
}
