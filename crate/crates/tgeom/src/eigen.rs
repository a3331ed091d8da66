//! Eigenvalues of small symmetric matrices.
//!
//! Implemented as cyclic Jacobi rotations: each sweep annihilates every
//! off-diagonal entry in turn, and the diagonal converges to the spectrum.
//! The matrices this crate diagonalizes are scalar-product tables over a
//! handful of probe points, so a dense O(n^3)-per-sweep method with
//! quadratic convergence is the right tool; no external solver is needed.

// Rotations address rows and columns by index pairs; ranged loops are the
// clearest way to write them.
#![allow(clippy::needless_range_loop)]

/// Eigenvalues of a symmetric matrix, in ascending order.
///
/// The input must be square and symmetric; symmetry is the caller's
/// responsibility (only the symmetric part is meaningful to the rotations).
///
/// # Panics
/// Panics if the rows do not form a square matrix.
pub fn symmetric_eigenvalues(rows: &[Vec<f64>]) -> Vec<f64> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(
            row.len(),
            n,
            "symmetric_eigenvalues needs a square matrix; row {i} has {} of {n} entries",
            row.len()
        );
    }
    if n == 0 {
        return Vec::new();
    }
    let mut a: Vec<Vec<f64>> = rows.to_vec();

    let frobenius: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt();
    let target = 1e-15 * frobenius;

    for _sweep in 0..64 {
        let off: f64 = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |k| (i, k)))
            .map(|(i, k)| a[i][k] * a[i][k])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                // Entries too small to move the diagonal are flushed to
                // zero instead of rotated, avoiding overflow in theta.
                let guard = 100.0 * apq.abs();
                if a[p][p].abs() + guard == a[p][p].abs()
                    && a[q][q].abs() + guard == a[q][q].abs()
                {
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    continue;
                }
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[p][i] = a[i][p];
                    a[i][q] = s * aip + c * aiq;
                    a[q][i] = a[i][q];
                }
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    eigenvalues
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn analytic_small_matrices() {
        let eigs = symmetric_eigenvalues(&[vec![5.0]]);
        assert_eq!(eigs, vec![5.0]);

        let eigs = symmetric_eigenvalues(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!((eigs[0] - 1.0).abs() < 1e-14);
        assert!((eigs[1] - 3.0).abs() < 1e-14);

        // second-difference matrix: eigenvalues 2 - sqrt(2), 2, 2 + sqrt(2)
        let eigs = symmetric_eigenvalues(&[
            vec![2.0, -1.0, 0.0],
            vec![-1.0, 2.0, -1.0],
            vec![0.0, -1.0, 2.0],
        ]);
        let root2 = 2.0f64.sqrt();
        assert!((eigs[0] - (2.0 - root2)).abs() < 1e-14);
        assert!((eigs[1] - 2.0).abs() < 1e-14);
        assert!((eigs[2] - (2.0 + root2)).abs() < 1e-14);
    }

    #[test]
    fn diagonal_matrices_are_passed_through_sorted() {
        let eigs = symmetric_eigenvalues(&[
            vec![3.0, 0.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ]);
        assert_eq!(eigs, vec![-1.0, 2.0, 3.0]);
        assert_eq!(symmetric_eigenvalues(&[]), Vec::<f64>::new());
        assert_eq!(
            symmetric_eigenvalues(&[vec![0.0, 0.0], vec![0.0, 0.0]]),
            vec![0.0, 0.0]
        );
    }

    #[test]
    fn trace_and_frobenius_are_preserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 1..=10usize {
            for _ in 0..20 {
                let mut a = vec![vec![0.0f64; n]; n];
                for i in 0..n {
                    for k in i..n {
                        let v = rng.gen_range(-3.0..3.0);
                        a[i][k] = v;
                        a[k][i] = v;
                    }
                }
                let trace: f64 = (0..n).map(|i| a[i][i]).sum();
                let frob2: f64 = a.iter().flat_map(|r| r.iter()).map(|x| x * x).sum();
                let eigs = symmetric_eigenvalues(&a);
                assert_eq!(eigs.len(), n);
                let sum: f64 = eigs.iter().sum();
                let sq: f64 = eigs.iter().map(|x| x * x).sum();
                let scale = 1.0 + frob2;
                assert!((sum - trace).abs() <= 1e-10 * scale, "n={n}");
                assert!((sq - frob2).abs() <= 1e-10 * scale, "n={n}");
                assert!(eigs.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn gram_of_known_vectors_has_known_spectrum() {
        // Gram matrix of orthogonal vectors of lengths 1, 2, 3 has
        // eigenvalues 1, 4, 9 (plus a zero for a repeated vector).
        let v = [
            vec![1.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, 3.0],
            vec![0.0, 0.0, 3.0],
        ];
        let n = v.len();
        let mut g = vec![vec![0.0; n]; n];
        for i in 0..n {
            for k in 0..n {
                g[i][k] = v[i].iter().zip(&v[k]).map(|(x, y)| x * y).sum();
            }
        }
        let eigs = symmetric_eigenvalues(&g);
        assert!(eigs[0].abs() < 1e-12);
        assert!((eigs[1] - 1.0).abs() < 1e-12);
        assert!((eigs[2] - 4.0).abs() < 1e-12);
        assert!((eigs[3] - 18.0).abs() < 1e-12);
    }

    #[test]
    fn rank_one_updates_match_hand_count() {
        // A = x x^T has one eigenvalue |x|^2, all others zero.
        let x = [0.5, -1.5, 2.0, 0.25];
        let n = x.len();
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for k in 0..n {
                a[i][k] = x[i] * x[k];
            }
        }
        let eigs = symmetric_eigenvalues(&a);
        let norm2: f64 = x.iter().map(|v| v * v).sum();
        for e in &eigs[..n - 1] {
            assert!(e.abs() < 1e-12);
        }
        assert!((eigs[n - 1] - norm2).abs() < 1e-12);
    }
}
