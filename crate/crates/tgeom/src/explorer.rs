//! Numeric experiments that make a geometry's character visible: the set
//! of points that are "straight" with a segment, and the search for
//! failures of parallelism transitivity.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::calculus::{collinearity_residual_raw, is_parallel};
use crate::error::{GeometryError, Result};
use crate::gram::{gram_report, GramReport};
use crate::point::{Point, VectorPQ};
use crate::world::{polygon_region_sigma, RegionSpec, WorldFunction};

/// Hard cap on lattice size so a careless spacing cannot exhaust memory.
pub const MAX_TUBE_SAMPLES: usize = 4_000_000;

/// Sampling lattice around a segment: the box reaches `extent` beyond each
/// endpoint along the axis and `extent` sideways, stepped by `spacing`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub extent: f64,
    pub spacing: f64,
}

impl GridSpec {
    pub fn new(extent: f64, spacing: f64) -> Result<Self> {
        if !extent.is_finite() || extent <= 0.0 {
            return Err(GeometryError::InvalidParameter {
                what: format!("grid extent must be finite and > 0, got {extent}"),
            });
        }
        if !spacing.is_finite() || spacing <= 0.0 {
            return Err(GeometryError::InvalidParameter {
                what: format!("grid spacing must be finite and > 0, got {spacing}"),
            });
        }
        Ok(GridSpec { extent, spacing })
    }
}

/// One lattice point of a tube scan.
#[derive(Clone, Debug, Serialize)]
pub struct TubeSample {
    /// Coordinates of the sampled point.
    pub point: Vec<f64>,
    /// Position along the segment axis (0 at the first endpoint).
    pub axial: f64,
    /// Distance from the segment axis in the sampling frame.
    pub radial: f64,
    /// Straightness defect at this point.
    pub residual: f64,
    /// Whether the defect clears the membership threshold.
    pub member: bool,
}

/// Scan of the straightness defect around a segment.
#[derive(Clone, Debug, Serialize)]
pub struct TubeReport {
    pub geometry: String,
    pub p0: Vec<f64>,
    pub p1: Vec<f64>,
    pub extent: f64,
    pub spacing: f64,
    pub tol: f64,
    /// sigma between the two segment endpoints.
    pub sigma01: f64,
    /// Residuals at or below this count as members: tol * (2 sigma01)^2.
    pub threshold: f64,
    /// Lattice points that belong to the geometry's ground set.
    pub sample_count: usize,
    /// Lattice points rejected by the geometry (outside a region, too close
    /// to a sphere's center) and therefore not scanned.
    pub skipped: usize,
    pub member_count: usize,
    /// Largest radial offset among members; 0.0 when there are none.
    pub width: f64,
    /// The samples themselves, in scan order (not serialized).
    #[serde(skip)]
    pub samples: Vec<TubeSample>,
}

/// Maps a raw 64-bit draw to [0, 1). Written out explicitly so the sample
/// lattice is a stable function of the seed alone.
fn unit_from_u64(x: u64) -> f64 {
    (x >> 11) as f64 / (1u64 << 53) as f64
}

/// Scans the straightness defect of every lattice point around the segment
/// `p0`->`p1` and reports which points are "straight with" the segment.
///
/// The lattice is axis-aligned to the segment: rows step along it, columns
/// step sideways in an orthonormal frame of the coordinates. The first and
/// last rows sit exactly on the box faces; interior rows are jittered along
/// the axis by up to a quarter spacing so the scan does not inherit lattice
/// artifacts. Sideways offsets are never jittered: member radii then fall
/// on exact lattice multiples and the reported width is reproducible.
pub fn sample_tube(
    wf: &WorldFunction,
    p0: &Point,
    p1: &Point,
    grid: &GridSpec,
    tol: f64,
    seed: u64,
) -> Result<TubeReport> {
    let dim = wf
        .dimension()
        .ok_or(GeometryError::CoordinateGeometryRequired {
            operation: "sample_tube",
        })?;
    if !tol.is_finite() || tol < 0.0 {
        return Err(GeometryError::InvalidParameter {
            what: format!("tube tol must be finite and >= 0, got {tol}"),
        });
    }
    wf.check_point(0, p0)?;
    wf.check_point(1, p1)?;
    let a0 = p0.coords().expect("validated coordinate point");
    let a1 = p1.coords().expect("validated coordinate point");

    let diff: Vec<f64> = a1.iter().zip(a0).map(|(x, y)| x - y).collect();
    let seg_len = diff.iter().map(|x| x * x).sum::<f64>().sqrt();
    if seg_len < 1e-12 {
        return Err(GeometryError::InvalidParameter {
            what: "tube endpoints must be distinct".into(),
        });
    }
    let axis: Vec<f64> = diff.iter().map(|x| x / seg_len).collect();

    // Orthonormal sideways frame from the standard basis.
    let mut frame: Vec<Vec<f64>> = vec![axis.clone()];
    for basis in 0..dim {
        if frame.len() == dim {
            break;
        }
        let mut v = vec![0.0; dim];
        v[basis] = 1.0;
        for f in &frame {
            let proj: f64 = v.iter().zip(f).map(|(x, y)| x * y).sum();
            for (vi, fi) in v.iter_mut().zip(f) {
                *vi -= proj * fi;
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            for vi in &mut v {
                *vi /= norm;
            }
            frame.push(v);
        }
    }
    debug_assert_eq!(frame.len(), dim);

    let row_count = ((seg_len + 2.0 * grid.extent) / grid.spacing + 1e-9).floor() as usize + 1;
    let side_steps = (grid.extent / grid.spacing + 1e-9).floor() as i64;
    let side_per_axis = 2 * side_steps as usize + 1;
    let per_row = side_per_axis
        .checked_pow((dim - 1) as u32)
        .unwrap_or(usize::MAX);
    let total = row_count.saturating_mul(per_row);
    if total > MAX_TUBE_SAMPLES {
        return Err(GeometryError::InvalidParameter {
            what: format!(
                "grid would produce {total} samples, above the cap of {MAX_TUBE_SAMPLES}; \
                 increase spacing or decrease extent"
            ),
        });
    }

    let sigma01 = wf.sigma_unchecked(p0, p1);
    let threshold = tol * (2.0 * sigma01) * (2.0 * sigma01);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(total);
    let mut skipped = 0usize;
    let mut member_count = 0usize;
    let mut width = 0.0f64;

    let side_axes = dim - 1;
    let mut offsets = vec![-side_steps; side_axes];
    for row in 0..row_count {
        let axial = if row == 0 {
            -grid.extent
        } else if row == row_count - 1 {
            seg_len + grid.extent
        } else {
            let jitter = (unit_from_u64(rng.next_u64()) - 0.5) * 0.5 * grid.spacing;
            -grid.extent + row as f64 * grid.spacing + jitter
        };
        for o in &mut offsets {
            *o = -side_steps;
        }
        loop {
            let mut coords: Vec<f64> = (0..dim).map(|i| a0[i] + axial * axis[i]).collect();
            let mut radial2 = 0.0;
            for (ax, &k) in offsets.iter().enumerate() {
                let t = k as f64 * grid.spacing;
                radial2 += t * t;
                for i in 0..dim {
                    coords[i] += t * frame[ax + 1][i];
                }
            }
            let radial = radial2.sqrt();
            let point = Point::coordinate(coords.clone());
            if wf.check_point(0, &point).is_err() {
                skipped += 1;
            } else {
                let s0r = wf.sigma_unchecked(p0, &point);
                let s1r = wf.sigma_unchecked(p1, &point);
                let residual = collinearity_residual_raw(sigma01, s0r, s1r);
                let member = residual <= threshold;
                if member {
                    member_count += 1;
                    width = width.max(radial);
                }
                samples.push(TubeSample {
                    point: coords,
                    axial,
                    radial,
                    residual,
                    member,
                });
            }
            // odometer over sideways offsets, last axis fastest
            let mut axis_idx = side_axes;
            loop {
                if axis_idx == 0 {
                    break;
                }
                axis_idx -= 1;
                offsets[axis_idx] += 1;
                if offsets[axis_idx] <= side_steps {
                    break;
                }
                offsets[axis_idx] = -side_steps;
            }
            if side_axes == 0 || (axis_idx == 0 && offsets[0] == -side_steps) {
                break;
            }
        }
    }

    Ok(TubeReport {
        geometry: wf.name().to_owned(),
        p0: a0.to_vec(),
        p1: a1.to_vec(),
        extent: grid.extent,
        spacing: grid.spacing,
        tol,
        sigma01,
        threshold,
        sample_count: samples.len(),
        skipped,
        member_count,
        width,
        samples,
    })
}

/// Budget and scale of a transitivity search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchSpec {
    pub trials: usize,
    pub box_half: f64,
}

impl SearchSpec {
    pub fn new(trials: usize, box_half: f64) -> Result<Self> {
        if trials == 0 {
            return Err(GeometryError::InvalidParameter {
                what: "search needs at least one trial".into(),
            });
        }
        if !box_half.is_finite() || box_half <= 0.0 {
            return Err(GeometryError::InvalidParameter {
                what: format!("search box half-width must be finite and > 0, got {box_half}"),
            });
        }
        Ok(SearchSpec { trials, box_half })
    }
}

/// A triple of vectors with u parallel to v and v parallel to w while u is
/// not parallel to w — direct evidence that parallelism fails to chain.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub u: [Vec<f64>; 2],
    pub v: [Vec<f64>; 2],
    pub w: [Vec<f64>; 2],
    pub cos_uv: f64,
    pub cos_vw: f64,
    pub cos_uw: f64,
}

/// Outcome of a transitivity search.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub geometry: String,
    pub tol: f64,
    pub found: bool,
    /// Trials consumed (the full budget when nothing was found).
    pub trials: usize,
    pub witness: Option<Witness>,
}

fn random_point(rng: &mut ChaCha8Rng, dim: usize, half: f64) -> Vec<f64> {
    (0..dim)
        .map(|_| (2.0 * unit_from_u64(rng.next_u64()) - 1.0) * half)
        .collect()
}

fn shift(p: &[f64], delta: &[f64], scale: f64) -> Vec<f64> {
    p.iter().zip(delta).map(|(x, d)| x + scale * d).collect()
}

fn to_vector(tail: Vec<f64>, head: Vec<f64>) -> VectorPQ {
    VectorPQ::new(Point::coordinate(tail), Point::coordinate(head))
}

/// Searches for vector triples where parallelism fails to be transitive.
///
/// Proposals alternate three shapes: unconstrained random triples (these
/// almost never satisfy the premise and keep the search honest), chains of
/// translated-and-rescaled copies, and chains of short translated copies.
/// In flat space every translated copy stays parallel to its original, so
/// the premise fires constantly while the conclusion never fails and the
/// search correctly comes up empty; geometries that bend or tear are caught
/// by the same proposals.
pub fn find_intransitivity(
    wf: &WorldFunction,
    spec: &SearchSpec,
    tol: f64,
    seed: u64,
) -> Result<CounterexampleReport> {
    let dim = wf
        .dimension()
        .ok_or(GeometryError::CoordinateGeometryRequired {
            operation: "find_intransitivity",
        })?;
    if !tol.is_finite() || tol <= 0.0 || tol >= 1.0 {
        return Err(GeometryError::InvalidParameter {
            what: format!("search tol must lie strictly between 0 and 1, got {tol}"),
        });
    }
    let half = spec.box_half;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for trial in 0..spec.trials {
        let (u, v, w) = match trial % 3 {
            0 => {
                let u = to_vector(
                    random_point(&mut rng, dim, half),
                    random_point(&mut rng, dim, half),
                );
                let v = to_vector(
                    random_point(&mut rng, dim, half),
                    random_point(&mut rng, dim, half),
                );
                let w = to_vector(
                    random_point(&mut rng, dim, half),
                    random_point(&mut rng, dim, half),
                );
                (u, v, w)
            }
            1 => {
                let tail = random_point(&mut rng, dim, half);
                let dir = random_point(&mut rng, dim, 0.5 * half);
                let head = shift(&tail, &dir, 1.0);
                let scale1 = 0.25 + 1.5 * unit_from_u64(rng.next_u64());
                let offset1 = random_point(&mut rng, dim, half);
                let v_tail = shift(&tail, &offset1, 1.0);
                let v_head = shift(&v_tail, &dir, scale1);
                let scale2 = 0.25 + 1.5 * unit_from_u64(rng.next_u64());
                let offset2 = random_point(&mut rng, dim, half);
                let w_tail = shift(&v_tail, &offset2, 1.0);
                let w_head = shift(&w_tail, &dir, scale1 * scale2);
                (
                    to_vector(tail, head),
                    to_vector(v_tail, v_head),
                    to_vector(w_tail, w_head),
                )
            }
            _ => {
                let tail = random_point(&mut rng, dim, half);
                let dir = random_point(&mut rng, dim, 0.15 * half);
                let head = shift(&tail, &dir, 1.0);
                let offset1 = random_point(&mut rng, dim, half);
                let v_tail = shift(&tail, &offset1, 1.0);
                let v_head = shift(&v_tail, &dir, 1.0);
                let offset2 = random_point(&mut rng, dim, half);
                let w_tail = shift(&v_tail, &offset2, 1.0);
                let w_head = shift(&w_tail, &dir, 1.0);
                (
                    to_vector(tail, head),
                    to_vector(v_tail, v_head),
                    to_vector(w_tail, w_head),
                )
            }
        };

        let Ok(check_uv) = is_parallel(wf, &u, &v, tol) else {
            continue;
        };
        let Ok(check_vw) = is_parallel(wf, &v, &w, tol) else {
            continue;
        };
        let Ok(check_uw) = is_parallel(wf, &u, &w, tol) else {
            continue;
        };
        if check_uv.parallel && check_vw.parallel && !check_uw.parallel {
            let ends = |vec: &VectorPQ| -> [Vec<f64>; 2] {
                [
                    vec.tail.coords().expect("coordinate search").to_vec(),
                    vec.head.coords().expect("coordinate search").to_vec(),
                ]
            };
            return Ok(CounterexampleReport {
                geometry: wf.name().to_owned(),
                tol,
                found: true,
                trials: trial + 1,
                witness: Some(Witness {
                    u: ends(&u),
                    v: ends(&v),
                    w: ends(&w),
                    cos_uv: check_uv.cosine,
                    cos_vw: check_vw.cosine,
                    cos_uw: check_uw.cosine,
                }),
            });
        }
    }

    Ok(CounterexampleReport {
        geometry: wf.name().to_owned(),
        tol,
        found: false,
        trials: spec.trials,
        witness: None,
    })
}

/// Convenience wrapper for the region embeddability demonstration: builds
/// the region geometry and reports on the probe family in one call.
pub fn convexity_demo(
    region: RegionSpec,
    base: [f64; 2],
    probes: &[[f64; 2]],
    tol_embed: Option<f64>,
) -> Result<GramReport> {
    let wf = polygon_region_sigma(region);
    let base = Point::coordinate(base.as_slice());
    let others: Vec<Point> = probes
        .iter()
        .map(|c| Point::coordinate(c.as_slice()))
        .collect();
    gram_report(&wf, &base, &others, tol_embed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::SigmaMatrix;
    use crate::world::{
        distorted_sigma, euclidean_sigma, sphere_sigma, tabulated_sigma, DistortionParams,
    };

    fn p(coords: &[f64]) -> Point {
        Point::coordinate(coords)
    }

    fn distorted(d: f64) -> WorldFunction {
        distorted_sigma(euclidean_sigma(2).unwrap(), DistortionParams::new(d).unwrap()).unwrap()
    }

    #[test]
    fn flat_tube_members_sit_exactly_on_the_line() {
        let wf = euclidean_sigma(2).unwrap();
        let grid = GridSpec::new(0.5, 0.05).unwrap();
        let report =
            sample_tube(&wf, &p(&[0.0, 0.0]), &p(&[1.0, 0.0]), &grid, 1e-9, 0).unwrap();
        assert_eq!(report.width, 0.0);
        assert!(report.member_count > 0);
        assert_eq!(report.skipped, 0);
        // rows * columns: axial [-0.5, 1.5] stepped by 0.05 -> 41 rows,
        // sideways -0.5..=0.5 -> 21 columns
        assert_eq!(report.sample_count, 41 * 21);
        for s in &report.samples {
            assert_eq!(s.member, s.residual <= report.threshold);
            if s.member {
                assert_eq!(s.radial, 0.0);
            }
        }
    }

    #[test]
    fn deformed_tube_gains_thickness() {
        let wf = distorted(0.2);
        let grid = GridSpec::new(0.5, 0.05).unwrap();
        let report =
            sample_tube(&wf, &p(&[0.0, 0.0]), &p(&[1.0, 0.0]), &grid, 1e-9, 0).unwrap();
        assert!(report.width > 0.1, "width {}", report.width);
        assert!(report.member_count > 20);
    }

    #[test]
    fn tube_width_grows_with_the_deformation() {
        let grid = GridSpec::new(0.5, 0.05).unwrap();
        let mut widths = Vec::new();
        for d in [0.0, 0.05, 0.1, 0.2] {
            let wf = distorted(d);
            let report =
                sample_tube(&wf, &p(&[0.0, 0.0]), &p(&[1.0, 0.0]), &grid, 1e-9, 0).unwrap();
            widths.push(report.width);
        }
        for pair in widths.windows(2) {
            assert!(pair[0] <= pair[1], "{widths:?}");
        }
        assert_eq!(widths[0], 0.0);
        assert!(widths[3] > 0.0);
    }

    #[test]
    fn tube_scan_is_deterministic_per_seed() {
        let wf = distorted(0.1);
        let grid = GridSpec::new(0.5, 0.05).unwrap();
        let a = sample_tube(&wf, &p(&[0.0, 0.0]), &p(&[1.0, 0.0]), &grid, 1e-9, 7).unwrap();
        let b = sample_tube(&wf, &p(&[0.0, 0.0]), &p(&[1.0, 0.0]), &grid, 1e-9, 7).unwrap();
        assert_eq!(a.samples.len(), b.samples.len());
        for (x, y) in a.samples.iter().zip(&b.samples) {
            assert_eq!(x.axial.to_bits(), y.axial.to_bits());
            assert_eq!(x.residual.to_bits(), y.residual.to_bits());
        }
        // a different seed moves interior rows but keeps the pinned ones
        let c = sample_tube(&wf, &p(&[0.0, 0.0]), &p(&[1.0, 0.0]), &grid, 1e-9, 8).unwrap();
        assert_eq!(a.samples[0].axial, c.samples[0].axial);
        assert_ne!(
            a.samples[a.samples.len() / 2].axial,
            c.samples[c.samples.len() / 2].axial
        );
    }

    #[test]
    fn sphere_tube_scans_projected_lattice_points() {
        let wf = sphere_sigma(1.0).unwrap();
        let grid = GridSpec::new(1.5, 0.5).unwrap();
        let report = sample_tube(
            &wf,
            &p(&[0.0, 0.0, 1.0]),
            &p(&[1.0, 0.0, 0.0]),
            &grid,
            1e-9,
            0,
        )
        .unwrap();
        // rows: floor((sqrt(2) + 3) / 0.5) + 1 = 9; columns: 7 x 7
        assert_eq!(report.sample_count + report.skipped, 9 * 49);
        assert!(report.sample_count > 0);
        assert!(report.member_count > 0);
    }

    #[test]
    fn region_tube_skips_lattice_points_outside_the_region() {
        use crate::world::polygon_region_sigma;
        let region = RegionSpec::new(vec![[0.0, 0.0], [3.0, 0.0], [3.0, 1.0], [0.0, 1.0]])
            .unwrap();
        let wf = polygon_region_sigma(region);
        let grid = GridSpec::new(1.0, 0.5).unwrap();
        let report =
            sample_tube(&wf, &p(&[0.5, 0.5]), &p(&[2.5, 0.5]), &grid, 1e-9, 0).unwrap();
        // the box reaches x in [-0.5, 3.5] and y in [-0.5, 1.5], far past
        // the 3 x 1 rectangle, so a good share of the lattice is skipped
        assert!(report.skipped > 0, "nothing was skipped");
        assert!(report.sample_count > 0);
        assert_eq!(report.sample_count, report.samples.len());
        // the straight reach between the endpoints is all members
        assert!(report.member_count > 0);
        assert_eq!(report.width, 0.0);
    }

    #[test]
    fn tube_guardrails_hold() {
        let wf = euclidean_sigma(2).unwrap();
        let a = p(&[0.0, 0.0]);
        let b = p(&[1.0, 0.0]);
        let grid = GridSpec::new(0.5, 0.05).unwrap();
        assert!(matches!(
            sample_tube(&wf, &a, &a, &grid, 1e-9, 0),
            Err(GeometryError::InvalidParameter { .. })
        ));
        let fine = GridSpec::new(100.0, 1e-4).unwrap();
        assert!(matches!(
            sample_tube(&wf, &a, &b, &fine, 1e-9, 0),
            Err(GeometryError::InvalidParameter { .. })
        ));
        let table = SigmaMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let discrete = tabulated_sigma(table);
        assert!(matches!(
            sample_tube(
                &discrete,
                &Point::discrete(0),
                &Point::discrete(1),
                &grid,
                1e-9,
                0
            ),
            Err(GeometryError::CoordinateGeometryRequired { .. })
        ));
        assert!(GridSpec::new(0.0, 0.1).is_err());
        assert!(GridSpec::new(1.0, -0.1).is_err());
    }

    #[test]
    fn flat_space_has_no_transitivity_failures() {
        let wf = euclidean_sigma(2).unwrap();
        let spec = SearchSpec::new(3000, 3.0).unwrap();
        let report = find_intransitivity(&wf, &spec, 1e-9, 0).unwrap();
        assert!(!report.found);
        assert_eq!(report.trials, 3000);
        assert!(report.witness.is_none());
    }

    #[test]
    fn search_parameters_are_validated() {
        let wf = euclidean_sigma(2).unwrap();
        assert!(SearchSpec::new(0, 3.0).is_err());
        assert!(SearchSpec::new(10, f64::NAN).is_err());
        let spec = SearchSpec::new(10, 3.0).unwrap();
        assert!(matches!(
            find_intransitivity(&wf, &spec, 0.0, 0),
            Err(GeometryError::InvalidParameter { .. })
        ));
        assert!(matches!(
            find_intransitivity(&wf, &spec, 1.5, 0),
            Err(GeometryError::InvalidParameter { .. })
        ));
        let table = SigmaMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let discrete = tabulated_sigma(table);
        assert!(matches!(
            find_intransitivity(&discrete, &spec, 1e-3, 0),
            Err(GeometryError::CoordinateGeometryRequired { .. })
        ));
    }

    #[test]
    fn curved_and_deformed_spaces_yield_witnesses() {
        let sphere = sphere_sigma(1.0).unwrap();
        let spec = SearchSpec::new(10_000, 3.0).unwrap();
        let report = find_intransitivity(&sphere, &spec, 0.05, 0).unwrap();
        assert!(report.found, "sphere search found nothing");
        let witness = report.witness.unwrap();
        assert!(witness.cos_uv.abs() >= 1.0 - 0.05);
        assert!(witness.cos_vw.abs() >= 1.0 - 0.05);
        assert!(witness.cos_uw.abs() < 1.0 - 0.05);

        let bent = distorted(0.2);
        let report = find_intransitivity(&bent, &spec, 0.05, 0).unwrap();
        assert!(report.found, "deformed-plane search found nothing");
    }

    #[test]
    fn convexity_demo_reports_on_region_probes() {
        let region = RegionSpec::new(vec![
            [0.0, 0.0],
            [3.0, 0.0],
            [3.0, 3.0],
            [1.6, 3.0],
            [1.6, 1.0],
            [1.4, 1.0],
            [1.4, 3.0],
            [0.0, 3.0],
        ])
        .unwrap();
        let report = convexity_demo(
            region,
            [1.5, 0.5],
            &[[1.2, 2.8], [1.8, 2.8], [1.2, 1.2], [1.8, 1.2]],
            None,
        )
        .unwrap();
        assert!(!report.embeddable);
        assert!(report.min_eigenvalue < -0.2);
    }
}
