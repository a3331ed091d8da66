//! Square tables of world-function values over an ordered point tuple.

use crate::error::{GeometryError, Result};
use crate::point::PointTuple;
use crate::world::WorldFunction;

/// Largest |sigma(P, P)| accepted from a raw table before rejection.
pub const DIAGONAL_TOLERANCE: f64 = 1e-12;

/// n x n table of sigma values over an ordered point tuple.
///
/// Entry (i, k) holds sigma(P_i, P_k) in written argument order. The stored
/// diagonal is exactly zero. `ordered` is true when the table came from an
/// asymmetric sigma, in which case (i, k) and (k, i) carry independent values.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaMatrix {
    n: usize,
    ordered: bool,
    values: Vec<f64>,
}

impl SigmaMatrix {
    /// Builds a table from rows, inferring `ordered` from exact asymmetry.
    ///
    /// Rejects non-square or non-finite input and any diagonal entry with
    /// |value| > 1e-12, naming the offending index. Accepted diagonals are
    /// stored as exact zero; off-diagonal values are stored bit-for-bit.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GeometryError::InvalidParameter {
                what: "table must have at least one row".into(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GeometryError::NonSquareTable {
                    row: i,
                    expected: n,
                    got: row.len(),
                });
            }
        }
        let mut values = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(GeometryError::InvalidParameter {
                        what: format!("table entry [{i}][{k}] is not finite"),
                    });
                }
                if i == k {
                    if v.abs() > DIAGONAL_TOLERANCE {
                        return Err(GeometryError::NonzeroDiagonal { index: i, value: v });
                    }
                    values.push(0.0);
                } else {
                    values.push(v);
                }
            }
        }
        let mut ordered = false;
        'scan: for i in 0..n {
            for k in (i + 1)..n {
                if values[i * n + k] != values[k * n + i] {
                    ordered = true;
                    break 'scan;
                }
            }
        }
        Ok(SigmaMatrix { n, ordered, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    /// sigma(P_i, P_k). Out-of-range indices are a programming error.
    pub fn get(&self, i: usize, k: usize) -> f64 {
        assert!(i < self.n && k < self.n, "sigma index out of range");
        self.values[i * self.n + k]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.values[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// CSV form: `n=<count>` header, then n rows of n comma-separated values.
    pub fn to_csv(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|k| format!("{:?}", self.get(i, k))).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses the CSV form. The `n=<count>` header line is optional; without
    /// it the row count determines n. Errors carry 1-based line numbers.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut expected: Option<usize> = None;
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if rows.is_empty() && expected.is_none() {
                if let Some(rest) = line.strip_prefix("n=") {
                    expected = Some(rest.trim().parse::<usize>().map_err(|e| {
                        GeometryError::Table {
                            line: lineno + 1,
                            detail: format!("bad point count {rest:?}: {e}"),
                        }
                    })?);
                    continue;
                }
            }
            let mut row = Vec::new();
            for (field, cell) in line.split(',').enumerate() {
                let v = cell.trim().parse::<f64>().map_err(|e| GeometryError::Table {
                    line: lineno + 1,
                    detail: format!("field {}: invalid value {:?}: {e}", field + 1, cell.trim()),
                })?;
                row.push(v);
            }
            rows.push(row);
        }
        if let Some(n) = expected {
            if rows.len() != n {
                return Err(GeometryError::Table {
                    line: text.lines().count(),
                    detail: format!("header says n={n} but found {} rows", rows.len()),
                });
            }
        }
        Self::from_rows(rows)
    }
}

/// Evaluates sigma over every ordered pair of the tuple.
///
/// Points are validated against the geometry's domain first; a failure names
/// the tuple index. For a symmetric world function only pairs i < k are
/// evaluated and the value is mirrored bit-for-bit. The diagonal is exact
/// zero without consulting the evaluator (whose own sigma(P, P) drift is
/// covered by tests, not absorbed here).
pub fn build_sigma_matrix(wf: &WorldFunction, tuple: &PointTuple) -> Result<SigmaMatrix> {
    let pts = tuple.points();
    for (i, p) in pts.iter().enumerate() {
        wf.check_point(i, p)?;
    }
    let n = pts.len();
    let mut values = vec![0.0; n * n];
    if wf.symmetric() {
        for i in 0..n {
            for k in (i + 1)..n {
                let v = wf.sigma_unchecked(&pts[i], &pts[k]);
                values[i * n + k] = v;
                values[k * n + i] = v;
            }
        }
    } else {
        for i in 0..n {
            for k in 0..n {
                if i != k {
                    values[i * n + k] = wf.sigma_unchecked(&pts[i], &pts[k]);
                }
            }
        }
    }
    Ok(SigmaMatrix {
        n,
        ordered: !wf.symmetric(),
        values,
    })
}
