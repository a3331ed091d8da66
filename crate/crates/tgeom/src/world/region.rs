//! Closed polygonal regions with shortest-path separations.
//!
//! Distances between points of a region are lengths of the shortest path
//! that stays inside the closed region (boundary included). Inside a convex
//! region this is the straight-line distance; around concavities the path
//! bends at region vertices, so it is found exactly on the visibility graph
//! over the two query points and the polygon vertices.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{GeometryError, Result};

/// Orientation signs with magnitude at or below this count as collinear.
const ORIENT_EPS: f64 = 1e-12;
/// Points within this distance of the boundary count as inside.
const BOUNDARY_EPS: f64 = 1e-9;
/// Slack on segment parameters when collecting boundary contacts.
const PARAM_EPS: f64 = 1e-9;

/// A validated simple polygon. Construction rejects self-intersecting or
/// degenerate boundaries and normalizes the vertex order to counterclockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionSpec {
    vertices: Vec<[f64; 2]>,
}

impl RegionSpec {
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::InvalidParameter {
                what: format!("a region needs at least 3 vertices, got {n}"),
            });
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v[0].is_finite() || !v[1].is_finite() {
                return Err(GeometryError::InvalidParameter {
                    what: format!("region vertex {i} has non-finite coordinates"),
                });
            }
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if dist(a, b) <= 1e-12 {
                return Err(GeometryError::InvalidParameter {
                    what: format!(
                        "region vertices {i} and {} coincide; drop the duplicate \
                         (the boundary closes back to the first vertex implicitly)",
                        (i + 1) % n
                    ),
                });
            }
        }
        // A vertex where the boundary doubles back over itself makes the
        // interior ill-defined even though no two edges properly cross.
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let folds_back = osign(prev, cur, next) == 0
                && (prev[0] - cur[0]) * (next[0] - cur[0])
                    + (prev[1] - cur[1]) * (next[1] - cur[1])
                    > ORIENT_EPS;
            if folds_back {
                return Err(GeometryError::InvalidParameter {
                    what: format!("region boundary folds back on itself at vertex {i}"),
                });
            }
        }
        for i in 0..n {
            for k in (i + 1)..n {
                let adjacent = k == i + 1 || (i == 0 && k == n - 1);
                if adjacent {
                    continue;
                }
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                let (c, d) = (vertices[k], vertices[(k + 1) % n]);
                if segments_touch(a, b, c, d) {
                    return Err(GeometryError::InvalidParameter {
                        what: format!(
                            "region boundary self-intersects: edge {i} touches edge {k}"
                        ),
                    });
                }
            }
        }
        let doubled_area: f64 = (0..n)
            .map(|i| {
                let a = vertices[i];
                let b = vertices[(i + 1) % n];
                a[0] * b[1] - b[0] * a[1]
            })
            .sum();
        if doubled_area.abs() <= 1e-12 {
            return Err(GeometryError::InvalidParameter {
                what: "region encloses no area".into(),
            });
        }
        let mut vertices = vertices;
        if doubled_area < 0.0 {
            vertices.reverse();
        }
        Ok(RegionSpec { vertices })
    }

    /// Vertices in counterclockwise order.
    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }
}

/// A region prepared for repeated queries: vertex-to-vertex visibility is
/// computed once and reused by every shortest-path evaluation.
#[derive(Clone, Debug)]
pub(crate) struct RegionData {
    vertices: Vec<[f64; 2]>,
    vertex_visible: Vec<Vec<bool>>,
}

impl RegionData {
    pub(crate) fn new(spec: RegionSpec) -> Self {
        let vertices = spec.vertices;
        let n = vertices.len();
        let mut data = RegionData {
            vertices,
            vertex_visible: vec![vec![false; n]; n],
        };
        for i in 0..n {
            data.vertex_visible[i][i] = true;
            for k in (i + 1)..n {
                let seen = data.visible(data.vertices[i], data.vertices[k]);
                data.vertex_visible[i][k] = seen;
                data.vertex_visible[k][i] = seen;
            }
        }
        data
    }

    /// Boundary-inclusive membership.
    pub(crate) fn contains(&self, p: [f64; 2]) -> bool {
        if !p[0].is_finite() || !p[1].is_finite() {
            return false;
        }
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if dist_point_segment(p, a, b) <= BOUNDARY_EPS {
                return true;
            }
        }
        let mut inside = false;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (a[1] > p[1]) != (b[1] > p[1]) {
                let x_cross = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
                if p[0] < x_cross {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// True when the segment from `u` to `v` stays inside the closed region.
    fn visible(&self, u: [f64; 2], v: [f64; 2]) -> bool {
        let dx = v[0] - u[0];
        let dy = v[1] - u[1];
        let len2 = dx * dx + dy * dy;
        if len2 == 0.0 {
            return self.contains(u);
        }
        let n = self.vertices.len();
        for i in 0..n {
            let c = self.vertices[i];
            let d = self.vertices[(i + 1) % n];
            let s1 = osign(u, v, c);
            let s2 = osign(u, v, d);
            let s3 = osign(c, d, u);
            let s4 = osign(c, d, v);
            if s1 * s2 < 0 && s3 * s4 < 0 {
                return false;
            }
        }
        // The segment may still graze the boundary at vertices or run along
        // edges. Collect every parameter where it meets the boundary and
        // confirm the stretch between consecutive contacts stays inside.
        let mut ts = vec![0.0f64, 1.0];
        for i in 0..n {
            let c = self.vertices[i];
            let d = self.vertices[(i + 1) % n];
            let ex = d[0] - c[0];
            let ey = d[1] - c[1];
            let denom = dx * ey - dy * ex;
            if denom.abs() <= ORIENT_EPS {
                if osign(u, v, c) == 0 {
                    for q in [c, d] {
                        let t = ((q[0] - u[0]) * dx + (q[1] - u[1]) * dy) / len2;
                        if (-PARAM_EPS..=1.0 + PARAM_EPS).contains(&t) {
                            ts.push(t.clamp(0.0, 1.0));
                        }
                    }
                }
            } else {
                let t = ((c[0] - u[0]) * ey - (c[1] - u[1]) * ex) / denom;
                let s = ((c[0] - u[0]) * dy - (c[1] - u[1]) * dx) / denom;
                if (-PARAM_EPS..=1.0 + PARAM_EPS).contains(&t)
                    && (-PARAM_EPS..=1.0 + PARAM_EPS).contains(&s)
                {
                    ts.push(t.clamp(0.0, 1.0));
                }
            }
        }
        ts.sort_by(f64::total_cmp);
        for w in ts.windows(2) {
            if w[1] - w[0] <= 1e-12 {
                continue;
            }
            let tm = 0.5 * (w[0] + w[1]);
            let mid = [u[0] + tm * dx, u[1] + tm * dy];
            if !self.contains(mid) {
                return false;
            }
        }
        true
    }

    /// Exact shortest in-region path length between two contained points.
    /// The endpoints are put in a canonical order first, so swapping the
    /// arguments returns bit-identical results despite floating-point
    /// summation order along the path.
    pub(crate) fn shortest_path_len(&self, a: [f64; 2], b: [f64; 2]) -> f64 {
        if a == b {
            return 0.0;
        }
        let (a, b) = if b[0].total_cmp(&a[0]).then(b[1].total_cmp(&a[1])) == Ordering::Less {
            (b, a)
        } else {
            (a, b)
        };
        if self.visible(a, b) {
            return dist(a, b);
        }
        let n = self.vertices.len();
        let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n + 2];
        for i in 0..n {
            let vi = self.vertices[i];
            if self.visible(a, vi) {
                let w = dist(a, vi);
                adjacency[0].push((2 + i, w));
                adjacency[2 + i].push((0, w));
            }
            if self.visible(b, vi) {
                let w = dist(b, vi);
                adjacency[1].push((2 + i, w));
                adjacency[2 + i].push((1, w));
            }
            for k in (i + 1)..n {
                if self.vertex_visible[i][k] {
                    let w = dist(vi, self.vertices[k]);
                    adjacency[2 + i].push((2 + k, w));
                    adjacency[2 + k].push((2 + i, w));
                }
            }
        }
        dijkstra(&adjacency, 0, 1)
            .expect("every pair of region points is joined through region vertices")
    }
}

#[derive(PartialEq)]
struct HeapItem {
    cost: f64,
    node: usize,
}

impl Eq for HeapItem {}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed so the std max-heap pops the cheapest node first.
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(adjacency: &[Vec<(usize, f64)>], src: usize, dst: usize) -> Option<f64> {
    let mut best = vec![f64::INFINITY; adjacency.len()];
    best[src] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapItem {
        cost: 0.0,
        node: src,
    });
    while let Some(HeapItem { cost, node }) = heap.pop() {
        if node == dst {
            return Some(cost);
        }
        if cost > best[node] {
            continue;
        }
        for &(next, weight) in &adjacency[node] {
            let next_cost = cost + weight;
            if next_cost < best[next] {
                best[next] = next_cost;
                heap.push(HeapItem {
                    cost: next_cost,
                    node: next,
                });
            }
        }
    }
    None
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    (dx * dx + dy * dy).sqrt()
}

fn dist_point_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let abx = b[0] - a[0];
    let aby = b[1] - a[1];
    let len2 = abx * abx + aby * aby;
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * abx + (p[1] - a[1]) * aby) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let cx = a[0] + t * abx - p[0];
    let cy = a[1] + t * aby - p[1];
    (cx * cx + cy * cy).sqrt()
}

fn osign(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> i32 {
    let x = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    if x > ORIENT_EPS {
        1
    } else if x < -ORIENT_EPS {
        -1
    } else {
        0
    }
}

/// Whether segments ab and cd share any point (crossing or touching).
fn segments_touch(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let d1 = osign(c, d, a);
    let d2 = osign(c, d, b);
    let d3 = osign(a, b, c);
    let d4 = osign(a, b, d);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && in_box(a, c, d))
        || (d2 == 0 && in_box(b, c, d))
        || (d3 == 0 && in_box(c, a, b))
        || (d4 == 0 && in_box(d, a, b))
}

/// Whether `p` lies in the bounding box of segment ab (used only after a
/// collinearity test, where box membership means segment membership).
fn in_box(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0]) - ORIENT_EPS
        && p[0] <= a[0].max(b[0]) + ORIENT_EPS
        && p[1] >= a[1].min(b[1]) - ORIENT_EPS
        && p[1] <= a[1].max(b[1]) + ORIENT_EPS
}

#[cfg(test)]
mod tests {
    use super::super::polygon_region_sigma;
    use super::*;
    use crate::error::GeometryError;
    use crate::point::Point;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// A U-shaped room: a 3 x 3 square with a slit (1.4 < x < 1.6, y > 1)
    /// removed, leaving two arms joined along the bottom.
    fn u_vertices() -> Vec<[f64; 2]> {
        vec![
            [0.0, 0.0],
            [3.0, 0.0],
            [3.0, 3.0],
            [1.6, 3.0],
            [1.6, 1.0],
            [1.4, 1.0],
            [1.4, 3.0],
            [0.0, 3.0],
        ]
    }

    fn u_region() -> RegionData {
        RegionData::new(RegionSpec::new(u_vertices()).unwrap())
    }

    #[test]
    fn straight_reach_uses_direct_distance() {
        let r = u_region();
        let d = r.shortest_path_len([0.5, 2.5], [0.5, 0.5]);
        assert_eq!(d, 2.0);
        // across the bottom of the slit, partly along the boundary
        let d = r.shortest_path_len([1.3, 1.0], [1.7, 1.0]);
        assert!((d - 0.4).abs() < 1e-15, "{d}");
    }

    #[test]
    fn paths_bend_around_the_slit() {
        let r = u_region();
        let d = r.shortest_path_len([0.5, 2.5], [2.5, 2.5]);
        let expected = 2.0 * 3.06f64.sqrt() + 0.2;
        assert!((d - expected).abs() < 1e-12, "{d} vs {expected}");
        assert!((d - 3.6985711369071805).abs() < 1e-12);

        let d = r.shortest_path_len([1.2, 1.2], [1.8, 1.2]);
        let expected = 2.0 * 0.08f64.sqrt() + 0.2;
        assert!((d - expected).abs() < 1e-12, "{d} vs {expected}");

        let d = r.shortest_path_len([1.2, 2.8], [1.2, 1.2]);
        assert!((d - 1.6).abs() < 1e-15, "{d}");
    }

    #[test]
    fn region_sigma_matches_frozen_example() {
        let wf = polygon_region_sigma(RegionSpec::new(u_vertices()).unwrap());
        assert_eq!(wf.name(), "region-8v");
        let s = wf
            .sigma(
                &Point::coordinate([0.5, 2.5]),
                &Point::coordinate([2.5, 2.5]),
            )
            .unwrap();
        assert!((s - 6.839714227381437).abs() < 1e-12, "{s}");
    }

    #[test]
    fn points_outside_are_rejected_with_their_index() {
        let wf = polygon_region_sigma(RegionSpec::new(u_vertices()).unwrap());
        let inside = Point::coordinate([0.5, 0.5]);
        let in_slit = Point::coordinate([1.5, 2.0]);
        match wf.sigma(&inside, &in_slit) {
            Err(GeometryError::OutsideRegion { index: 1, x, y }) => {
                assert_eq!((x, y), (1.5, 2.0));
            }
            other => panic!("expected OutsideRegion, got {other:?}"),
        }
        assert!(matches!(
            wf.sigma(&Point::coordinate([-5.0, 0.0]), &inside),
            Err(GeometryError::OutsideRegion { index: 0, .. })
        ));
    }

    #[test]
    fn boundary_points_belong_to_the_region() {
        let r = u_region();
        assert!(r.contains([0.0, 0.0]));
        assert!(r.contains([1.5, 0.0]));
        assert!(r.contains([1.5, 1.0]));
        assert!(r.contains([1.4, 2.0]));
        assert!(!r.contains([1.5, 1.1]));
        assert!(!r.contains([3.1, 0.5]));
        assert!(!r.contains([f64::NAN, 0.5]));
    }

    #[test]
    fn swapping_endpoints_changes_nothing_bitwise() {
        let r = u_region();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut checked = 0;
        while checked < 300 {
            let a = [rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0)];
            let b = [rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0)];
            if !r.contains(a) || !r.contains(b) {
                continue;
            }
            let ab = r.shortest_path_len(a, b);
            let ba = r.shortest_path_len(b, a);
            assert_eq!(ab.to_bits(), ba.to_bits());
            assert!(ab >= dist(a, b) - 1e-12);
            checked += 1;
        }
    }

    #[test]
    fn convex_region_reduces_to_straight_lines() {
        let square = RegionSpec::new(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]);
        let r = RegionData::new(square.unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let a = [rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0)];
            let b = [rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0)];
            let d = r.shortest_path_len(a, b);
            assert!((d - dist(a, b)).abs() <= 1e-12 * (1.0 + d));
        }
    }

    #[test]
    fn clockwise_input_is_normalized() {
        let mut rev = u_vertices();
        rev.reverse();
        let spec = RegionSpec::new(rev).unwrap();
        let ccw = RegionSpec::new(u_vertices()).unwrap();
        let ra = RegionData::new(spec);
        let rb = RegionData::new(ccw);
        let d1 = ra.shortest_path_len([0.5, 2.5], [2.5, 2.5]);
        let d2 = rb.shortest_path_len([0.5, 2.5], [2.5, 2.5]);
        assert_eq!(d1.to_bits(), d2.to_bits());
    }

    #[test]
    fn bad_polygons_are_rejected() {
        // bowtie: two edges cross
        assert!(RegionSpec::new(vec![[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]]).is_err());
        // too few vertices
        assert!(RegionSpec::new(vec![[0.0, 0.0], [1.0, 0.0]]).is_err());
        // duplicate consecutive vertex
        assert!(RegionSpec::new(vec![
            [0.0, 0.0],
            [1.0, 0.0],
            [1.0, 0.0],
            [1.0, 1.0]
        ])
        .is_err());
        // explicit closing vertex repeats the first one
        assert!(RegionSpec::new(vec![
            [0.0, 0.0],
            [1.0, 0.0],
            [1.0, 1.0],
            [0.0, 0.0]
        ])
        .is_err());
        // collinear sliver encloses nothing
        assert!(RegionSpec::new(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]).is_err());
        // non-finite coordinate
        assert!(RegionSpec::new(vec![[0.0, 0.0], [1.0, 0.0], [f64::NAN, 1.0]]).is_err());
    }

    #[test]
    fn same_point_has_zero_separation() {
        let r = u_region();
        assert_eq!(r.shortest_path_len([2.5, 2.5], [2.5, 2.5]), 0.0);
        assert_eq!(r.shortest_path_len([0.0, 0.0], [0.0, 0.0]), 0.0);
    }
}
